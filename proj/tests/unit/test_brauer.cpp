#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "adlab/arith.hpp"
#include "adlab/brauer.hpp"
#include "adlab/error.hpp"
#include "adlab/groups/presets.hpp"

using namespace adlab::brauer;
using adlab::fields::RelativeExtensionData;
using adlab::fields::RelativePrimeRecord;
using u64 = std::uint64_t;

namespace {

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const adlab::Error& e) {
    return e.kind();
  }
  return "";
}

PrimeSlot slot(const std::string& s) { return PrimeSlot::parse(s); }
Invariant inv(std::int64_t a, u64 m) { return Invariant::make(a, m); }

// Existence of a sum-zero class of exact order n supported on slots with the given
// local degrees, by dynamic programming over (sum mod n, lcm of orders so far).
bool adequacy_oracle(const std::vector<u64>& degrees, u64 n) {
  std::set<std::pair<u64, u64>> states{{0, 1}};
  for (u64 deg : degrees) {
    std::set<std::pair<u64, u64>> next;
    for (auto [sum, ord] : states) {
      for (u64 a = 0; a < n; ++a) {
        const u64 o = n / std::gcd(a, n);
        if (deg % o != 0) continue;
        next.insert({(sum + a) % n, std::lcm(ord, o)});
      }
    }
    states = std::move(next);
  }
  return states.count({0, n}) > 0;
}

// Lexicographically least assignment by plain nested enumeration.
std::optional<std::vector<u64>> naive_feasible(const std::vector<u64>& max_order,
                                               const std::vector<std::optional<u64>>& exact,
                                               const std::vector<std::pair<std::size_t, std::size_t>>& equal,
                                               bool sum_zero, u64 l) {
  const std::size_t k = max_order.size();
  std::vector<u64> a(k, 0);
  for (;;) {
    bool ok = true;
    u64 sum = 0;
    for (std::size_t i = 0; i < k && ok; ++i) {
      const u64 o = l / std::gcd(a[i], l);
      if (max_order[i] % o != 0) ok = false;
      if (exact[i] && *exact[i] != o) ok = false;
      sum += a[i];
    }
    for (auto [x, y] : equal)
      if (a[x] != a[y]) ok = false;
    if (sum_zero && sum % l != 0) ok = false;
    if (ok) return a;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++a[i] < l) break;
      a[i] = 0;
      if (i == 0) return std::nullopt;
    }
    if (k == 0) return std::nullopt;
  }
}

RelativeExtensionData rel_with(u64 degree, const std::vector<std::tuple<u64, u64, u64>>& recs) {
  RelativeExtensionData rel;
  rel.base_field = "K";
  rel.top_field = "M";
  rel.degree = degree;
  for (auto [q, g, n] : recs) {
    RelativePrimeRecord r;
    r.prime = q;
    r.g_rel = g;
    r.n_rel = n;
    rel.records.push_back(r);
  }
  return rel;
}

}  // namespace

TEST(Brauer, InvariantArithmetic) {
  EXPECT_EQ(inv(-1, 27), inv(26, 27));
  EXPECT_EQ(inv(3, 9), inv(1, 3));
  EXPECT_EQ(inv(5, 5), Invariant{});
  EXPECT_EQ(inv(1, 3) + inv(2, 3), Invariant{});
  EXPECT_EQ(-inv(1, 9), inv(8, 9));
  EXPECT_EQ(inv(1, 27).scaled(3), inv(1, 9));
  EXPECT_EQ(Invariant::parse("-1/9"), inv(8, 9));
  EXPECT_EQ(Invariant::parse("0"), Invariant{});
  EXPECT_EQ(inv(2, 6).to_string(), "1/3");
  EXPECT_LT(inv(1, 3), inv(1, 2));
  EXPECT_EQ(kind_of([] { inv(1, 0); }), "InvalidInvariant");
}

TEST(Brauer, MakeClassAndIndex) {
  const auto d = BrauerClass::make("M", {{slot("3:0"), inv(1, 27)}, {slot("3:1"), inv(26, 27)}});
  EXPECT_EQ(index(d), 27u);
  EXPECT_EQ(index(BrauerClass::make("K", {})), 1u);
  EXPECT_TRUE(BrauerClass::make("K", {}).is_zero());
  EXPECT_EQ(kind_of([] { BrauerClass::make("K", {{slot("v:0"), inv(1, 2)}}); }), "NonZeroSum");
  EXPECT_EQ(kind_of([] { BrauerClass::make("K", {{slot("5:0"), inv(1, 2)}, {slot("5:0"), inv(1, 2)}}); }),
            "DuplicateSlot");
  EXPECT_EQ(index(BrauerClass::make("K", {{slot("a:0"), inv(1, 2)}, {slot("b:0"), inv(1, 3)}, {slot("c:0"), inv(1, 6)}})),
            6u);
}

TEST(Brauer, RestrictionExampleFour) {
  const auto d0 = BrauerClass::make("K", {{slot("3:0"), inv(1, 27)}, {slot("7:0"), inv(26, 27)}});
  const auto rel = rel_with(3, {{3, 3, 1}, {7, 1, 3}});
  const auto d = restrict(d0, rel);
  EXPECT_EQ(d.at(slot("3:0")), inv(1, 27));
  EXPECT_EQ(d.at(slot("3:1")), inv(1, 27));
  EXPECT_EQ(d.at(slot("3:2")), inv(1, 27));
  EXPECT_EQ(d.at(slot("7:0")), inv(-1, 9));
  EXPECT_EQ(d.invariants().size(), 4u);
  EXPECT_TRUE(constant_on_fibers(d, rel));
  EXPECT_EQ(restrict(d0, rel_with(1, {{3, 1, 1}, {7, 1, 1}})).invariants(), d0.invariants());
  const auto order3 = BrauerClass::make("K", {{slot("3:0"), inv(1, 3)}, {slot("7:0"), inv(2, 3)}});
  EXPECT_TRUE(restrict(order3, rel_with(3, {{3, 1, 3}, {7, 1, 3}})).is_zero());
  EXPECT_EQ(kind_of([&] { restrict(d0, rel_with(3, {{3, 3, 1}})); }), "MissingRelativeData");
}

TEST(Brauer, RestrictionPropertiesRandomized) {
  std::mt19937 rng(5);
  const std::vector<u64> primes = {2, 3, 5, 7, 11};
  for (int trial = 0; trial < 200; ++trial) {
    const u64 deg = std::vector<u64>{2, 3, 4, 6, 9}[trial % 5];
    const auto divs = adlab::arith::divisors(deg);
    std::vector<std::tuple<u64, u64, u64>> recs;
    for (u64 q : primes) {
      const u64 n = divs[rng() % divs.size()];
      recs.push_back({q, deg / n, n});
    }
    const auto rel = rel_with(deg, recs);
    // random sum-zero class over K with denominators dividing 36
    std::vector<std::pair<PrimeSlot, Invariant>> a;
    std::int64_t total = 0;
    for (std::size_t k = 0; k + 1 < primes.size(); ++k) {
      const std::int64_t x = static_cast<std::int64_t>(rng() % 36);
      total += x;
      a.push_back({PrimeSlot{primes[k], "", 0}, inv(x, 36)});
    }
    a.push_back({PrimeSlot{primes.back(), "", 0}, inv(-total, 36)});
    const auto d = BrauerClass::make("K", a);
    const auto r = restrict(d, rel);  // make() enforces sum zero
    EXPECT_EQ(index(d) % index(r), 0u);
    bool all_split = true;
    for (const auto& [s, v] : d.invariants()) {
      if (rel.find(s.prime, "")->n_rel == 1)
        EXPECT_EQ(index(r) % v.order(), 0u);
      else
        all_split = false;
    }
    if (all_split) EXPECT_EQ(index(r), index(d));
    EXPECT_TRUE(constant_on_fibers(r, rel));
    // round trip through the preimage search
    std::vector<PrimeSlot> pool;
    for (u64 q : primes) pool.push_back(PrimeSlot{q, "", 0});
    const auto pre = restriction_preimage(r, rel, pool);
    ASSERT_TRUE(pre.has_value());
    EXPECT_EQ(restrict(*pre, rel), r);
  }
}

TEST(Brauer, FiberConstancy) {
  const auto rel = rel_with(2, {{5, 2, 1}, {7, 1, 2}});
  const auto bad = BrauerClass::make("M", {{slot("5:0"), inv(1, 9)}, {slot("5:1"), inv(2, 9)}, {slot("7:0"), inv(6, 9)}});
  EXPECT_FALSE(constant_on_fibers(bad, rel));
  EXPECT_TRUE(constant_on_fibers(BrauerClass::make("M", {}), rel));
  auto nongalois = rel;
  nongalois.galois = false;
  EXPECT_EQ(kind_of([&] { constant_on_fibers(bad, nongalois); }), "NotGalois");
  EXPECT_FALSE(restriction_preimage(bad, rel, {}).has_value());
}

TEST(Brauer, SplitsAndTameSplits) {
  const auto d = BrauerClass::make("M", {{slot("3:0"), inv(1, 27)}, {slot("3:1"), inv(26, 27)}});
  EXPECT_TRUE(splits(d, {{slot("3:0"), 27}, {slot("3:1"), 27}}));
  EXPECT_FALSE(splits(d, {{slot("3:0"), 9}, {slot("3:1"), 27}}));
  EXPECT_TRUE(splits(BrauerClass::make("M", {}), {}));
  EXPECT_EQ(kind_of([&] { splits(d, {{slot("3:0"), 27}}); }), "MissingData");
  const auto o3 = BrauerClass::make("K", {{slot("3:0"), inv(1, 3)}, {slot("7:0"), inv(2, 3)}});
  EXPECT_FALSE(tame_splits(o3, {{slot("3:0"), {3, 1, 3}}, {slot("7:0"), {3, 1, 7}}}));
  EXPECT_TRUE(tame_splits(o3, {{slot("3:0"), {1, 3, 3}}, {slot("7:0"), {3, 1, 7}}}));
}

TEST(Brauer, AdequacyMatchesBruteForce) {
  EXPECT_TRUE(adequacy({3125, 3125}, 3125));
  EXPECT_FALSE(adequacy({27}, 27));
  EXPECT_TRUE(adequacy({}, 1));
  for (u64 n = 1; n <= 27; ++n) {
    const auto divs = adlab::arith::divisors(n);
    for (std::size_t size = 1; size <= 4; ++size) {
      std::vector<std::size_t> idx(size, 0);
      for (;;) {
        std::vector<u64> deg;
        for (auto i : idx) deg.push_back(divs[i]);
        EXPECT_EQ(adequacy(deg, n), adequacy_oracle(deg, n)) << "n=" << n;
        // nondecreasing index tuples only
        std::size_t k = size;
        while (k > 0 && idx[k - 1] == divs.size() - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < size; ++j) idx[j] = idx[k - 1];
      }
    }
  }
}

TEST(Brauer, FeasibilityExamples) {
  for (u64 p : {3u, 5u}) {
    const u64 p2 = p * p, p3 = p2 * p;
    FeasibilitySpec two;
    two.base_field = "M";
    two.slots = {{PrimeSlot{p, "", 0}, p3, p3}, {PrimeSlot{p, "", 1}, p3, p3}};
    const auto w = feasibility_solve(two);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ((*w)[0], inv(1, p3));
    EXPECT_EQ((*w)[1], inv(-1, p3));
    EXPECT_EQ(index(witness_class(two, *w)), p3);

    FeasibilitySpec eq = two;
    eq.equal_groups = {{PrimeSlot{p, "", 0}, PrimeSlot{p, "", 1}}};
    for (u64 k = 0; k < 3; ++k) eq.slots.push_back({PrimeSlot{0, "u", k}, p2, std::nullopt});
    EXPECT_FALSE(feasibility_solve(eq).has_value());
  }
  FeasibilitySpec one;
  one.slots = {{slot("v:0"), 1, 1}};
  const auto z = feasibility_solve(one);
  ASSERT_TRUE(z.has_value());
  EXPECT_TRUE(witness_class(one, *z).is_zero());
  FeasibilitySpec dup;
  dup.slots = {{slot("v:0"), 3, std::nullopt}, {slot("v:0"), 3, std::nullopt}};
  EXPECT_EQ(kind_of([&] { feasibility_solve(dup); }), "InvalidSpec");
}

TEST(Brauer, FeasibilityMatchesNaiveEnumeration) {
  std::mt19937 rng(17);
  const std::vector<u64> bounds = {1, 2, 3, 4, 6, 9, 12};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 1 + rng() % 4;
    FeasibilitySpec spec;
    spec.sum_zero = rng() % 4 != 0;
    std::vector<u64> maxo;
    std::vector<std::optional<u64>> exact;
    for (std::size_t i = 0; i < k; ++i) {
      const u64 m = bounds[rng() % bounds.size()];
      std::optional<u64> e;
      if (rng() % 3 == 0) {
        const auto ds = adlab::arith::divisors(m);
        e = ds[rng() % ds.size()];
      }
      maxo.push_back(m);
      exact.push_back(e);
      spec.slots.push_back({PrimeSlot{0, "s", i}, m, e});
    }
    std::vector<std::pair<std::size_t, std::size_t>> equal;
    if (k >= 2 && rng() % 3 == 0) {
      equal.push_back({0, 1});
      spec.equal_groups = {{spec.slots[0].slot, spec.slots[1].slot}};
    }
    u64 l = 1;
    for (u64 m : maxo) l = std::lcm(l, m);
    const auto expect = naive_feasible(maxo, exact, equal, spec.sum_zero, l);
    const auto got = feasibility_solve(spec);
    ASSERT_EQ(got.has_value(), expect.has_value()) << feasibility_from_json(to_json(spec)).slots.size();
    if (got) {
      for (std::size_t i = 0; i < k; ++i) EXPECT_EQ((*got)[i], inv(static_cast<std::int64_t>((*expect)[i]), l));
    }
  }
}

TEST(Brauer, PreimageUsesPool) {
  // the K-class needs a balancing slot that restricts to zero
  const auto rel = rel_with(3, {{3, 3, 1}, {7, 1, 3}});
  const auto target =
      BrauerClass::make("M", {{slot("3:0"), inv(1, 3)}, {slot("3:1"), inv(1, 3)}, {slot("3:2"), inv(1, 3)}});
  EXPECT_FALSE(restriction_preimage(target, rel, {}).has_value());
  const auto pre = restriction_preimage(target, rel, {slot("7:0")});
  ASSERT_TRUE(pre.has_value());
  EXPECT_EQ(pre->at(slot("7:0")), inv(2, 3));
  EXPECT_EQ(restrict(*pre, rel), target);
}

TEST(Brauer, Schacher) {
  const auto g = adlab::groups::build_group("cyclic:6");
  const auto whole = adlab::groups::Subgroup::whole(g);
  const auto two = adlab::groups::Subgroup::generated(g, std::vector<adlab::groups::Element>{g.pow(g.evaluate_word("e1"), 3)});
  EXPECT_TRUE(schacher_check(g, {whole, whole}));
  EXPECT_FALSE(schacher_check(g, {whole, two}));
  EXPECT_FALSE(schacher_check(g, {whole}));
  EXPECT_TRUE(schacher_check(adlab::groups::build_group("cyclic:1"), {}));
}

TEST(Brauer, JsonRoundTrip) {
  const auto d = BrauerClass::make("M", {{slot("3:0"), inv(1, 27)}, {slot("w:1"), inv(26, 27)}});
  EXPECT_EQ(class_from_json(to_json(d)), d);
  FeasibilitySpec s;
  s.slots = {{slot("3:0"), 27, 27}, {slot("3:1"), 9, std::nullopt}};
  s.equal_groups = {{slot("3:0"), slot("3:1")}};
  EXPECT_EQ(to_json(feasibility_from_json(to_json(s))), to_json(s));
}
