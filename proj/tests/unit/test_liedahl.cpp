#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "adlab/error.hpp"
#include "adlab/groups/algorithms.hpp"
#include "adlab/groups/presets.hpp"
#include "adlab/liedahl.hpp"

using namespace adlab;
using adlab::groups::build_group;
using adlab::liedahl::Status;
using adlab::liedahl::TameVerdict;
using u64 = std::uint64_t;

namespace {

// sigma_{t,n} fixes K meet Q(mu_n) iff t has a lift in (Z/lcm)^* lying in the fixing group of K.
bool sigma_oracle(u64 t, u64 n, const fields::AbelianNumberField& k) {
  const u64 l = std::lcm(k.conductor(), n);
  for (u64 x : k.fixing_subgroup_mod(l))
    if (x % n == t % n) return true;
  return false;
}

fields::AbelianNumberField random_field(std::mt19937& rng) {
  const u64 n = 1 + rng() % 200;
  std::vector<u64> h;
  std::vector<u64> units;
  for (u64 x = 1; x <= n; ++x)
    if (std::gcd(x, n) == 1) units.push_back(x % n);
  const u64 g = units[rng() % units.size()];
  u64 y = 1 % n;
  do {
    h.push_back(y);
    y = y * g % n;
  } while (y != 1 % n);
  std::sort(h.begin(), h.end());
  return fields::AbelianNumberField::from_fixing_subgroup(n, h);
}

const std::vector<std::string> kSmall = {"cyclic:8",     "cyclic:25",     "cyclic:27",   "abelian:5,5",
                                         "abelian:9,3",  "elab:5:2",      "heis:3",      "heis:5",
                                         "meta:5:25:0:6", "meta:3:9:0:4", "meta:4:4:0:3", "meta:8:2:0:1",
                                         "meta:2:4:2:3", "elab:2:3",      "meta:4:8:0:5", "wreath:3"};

}  // namespace

TEST(Liedahl, Examples) {
  const auto g = build_group("meta:5:25:0:6");
  const auto v = liedahl::liedahl_check(g, fields::parse_field("Q(zeta:5)"));
  ASSERT_EQ(v.status, Status::Satisfied);
  EXPECT_EQ(v.witness->tuple(), std::tuple(5, 25, 0, 6));
  EXPECT_EQ(*v.meet, fields::parse_field("Q(zeta:5)"));
  const auto f = liedahl::liedahl_check(g, fields::parse_field("Q(zeta:100)"));
  EXPECT_EQ(f.status, Status::Failed);
  EXPECT_EQ(f.presentations, groups::metacyclic_presentations(g).size());
  const auto c = liedahl::liedahl_check(build_group("cyclic:8"), fields::parse_field("Q"));
  EXPECT_EQ(c.status, Status::Satisfied);
  EXPECT_EQ(c.witness->t, 1u);
  EXPECT_EQ(liedahl::liedahl_check(build_group("elab:5:3"), fields::parse_field("Q")).status, Status::NotMetacyclic);
}

TEST(Liedahl, FailedMeansEveryPresentationFails) {
  const auto g = build_group("meta:5:25:0:6");
  const auto k = fields::parse_field("Q(zeta:100)");
  for (const auto& pr : groups::metacyclic_presentations(g)) EXPECT_FALSE(sigma_oracle(pr.t, pr.n, k));
}

TEST(Liedahl, WitnessesReplayOverRandomFields) {
  std::mt19937 rng(31);
  for (const auto& spec : kSmall) {
    const auto g = build_group(spec);
    ASSERT_LE(g.order(), 125u);
    const auto pres = groups::metacyclic_presentations(g);
    for (int trial = 0; trial < 12; ++trial) {
      const auto k = random_field(rng);
      const auto v = liedahl::liedahl_check(g, k);
      if (pres.empty()) {
        EXPECT_EQ(v.status, Status::NotMetacyclic) << spec;
        continue;
      }
      // the first presentation in search order that passes the oracle
      std::optional<groups::MetacyclicPresentation> first;
      for (const auto& pr : pres)
        if (sigma_oracle(pr.t, pr.n, k)) {
          first = pr;
          break;
        }
      ASSERT_EQ(v.status == Status::Satisfied, first.has_value()) << spec;
      if (first) {
        EXPECT_EQ(v.witness->tuple(), first->tuple());
        EXPECT_TRUE(groups::verify_presentation(g, *v.witness));
        EXPECT_EQ(*v.meet, fields::intersect_with_cyclotomic(k, v.witness->n));
      }
    }
  }
}

TEST(Liedahl, CyclicAlwaysSatisfied) {
  std::mt19937 rng(8);
  for (const std::string spec : {"cyclic:2", "cyclic:9", "cyclic:16", "cyclic:49", "cyclic:125"}) {
    const auto g = build_group(spec);
    for (int trial = 0; trial < 10; ++trial) {
      const auto v = liedahl::liedahl_check(g, random_field(rng));
      EXPECT_EQ(v.status, Status::Satisfied) << spec;
    }
  }
}

TEST(Liedahl, Monotonicity) {
  EXPECT_TRUE(liedahl::subfield_monotonicity(build_group("meta:5:25:0:6"), fields::parse_field("Q"),
                                             fields::parse_field("Q(zeta:5)")));
  EXPECT_TRUE(liedahl::subfield_monotonicity(build_group("meta:3:9:0:4"), fields::parse_field("Q"),
                                             fields::parse_field("Q(zeta:9)")));
  EXPECT_TRUE(liedahl::subfield_monotonicity(build_group("heis:3"), fields::parse_field("Q(i)"),
                                             fields::parse_field("Q(i)")));
  try {
    liedahl::subfield_monotonicity(build_group("cyclic:9"), fields::parse_field("Q(i)"), fields::parse_field("Q(sqrt:5)"));
    FAIL() << "expected NotSubfield";
  } catch (const adlab::Error& e) {
    EXPECT_EQ(e.kind(), "NotSubfield");
  }
  std::mt19937 rng(12);
  for (const auto& spec : kSmall) {
    const auto g = build_group(spec);
    for (int trial = 0; trial < 6; ++trial) {
      const auto k = random_field(rng);
      const auto m = fields::compositum(k, random_field(rng));
      const bool over_m = liedahl::liedahl_check(g, m).status == Status::Satisfied;
      const bool over_k = liedahl::liedahl_check(g, k).status == Status::Satisfied;
      if (over_m) EXPECT_TRUE(over_k) << spec;
      EXPECT_TRUE(liedahl::subfield_monotonicity(g, k, m));
    }
  }
}

TEST(Liedahl, TameVerdicts) {
  const auto yes = liedahl::tame_admissibility_verdict(build_group("meta:5:25:0:6"), fields::parse_field("Q(zeta:5)"));
  EXPECT_EQ(yes.verdict, TameVerdict::Yes);
  bool cited = false;
  for (const auto& b : yes.basis) cited = cited || b.kind == "CITED";
  EXPECT_TRUE(cited);
  for (const std::string f : {"Q", "Q(i)", "Q(zeta:5)"}) {
    const auto no = liedahl::tame_admissibility_verdict(build_group("elab:5:3"), fields::parse_field(f));
    EXPECT_EQ(no.verdict, TameVerdict::No);
    for (const auto& b : no.basis) EXPECT_EQ(b.kind, "CHECKED");
  }
  EXPECT_EQ(liedahl::tame_admissibility_verdict(build_group("cyclic:12"), fields::parse_field("Q")).verdict,
            TameVerdict::Yes);
  EXPECT_EQ(liedahl::tame_admissibility_verdict(build_group("meta:5:25:0:6"), fields::parse_field("Q(zeta:100)")).verdict,
            TameVerdict::No);
  const auto nonnilpotent = liedahl::tame_admissibility_verdict(build_group("meta:2:3:0:2"), fields::parse_field("Q"));
  EXPECT_TRUE(nonnilpotent.unknown_structure);
  EXPECT_EQ(nonnilpotent.verdict, TameVerdict::Unknown);
}

TEST(Liedahl, Json) {
  const auto j = liedahl::to_json(liedahl::liedahl_check(build_group("meta:5:25:0:6"), fields::parse_field("Q(zeta:5)")));
  EXPECT_EQ(j["status"], "satisfied");
}
