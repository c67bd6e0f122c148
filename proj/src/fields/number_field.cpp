#include "adlab/fields.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "adlab/arith.hpp"
#include "adlab/error.hpp"

namespace adlab::fields {

namespace {

using arith::u64;

constexpr u64 kMaxModulus = u64{1} << 22;

void check_modulus(u64 n) {
  if (n == 0 || n > kMaxModulus) {
    throw Error("ConductorTooLarge", "modulus " + std::to_string(n) + " outside supported range");
  }
}

std::vector<u64> units(u64 n) {
  std::vector<u64> out;
  for (u64 x = 0; x < n; ++x) {
    if (std::gcd(x, n) == 1) out.push_back(x);
  }
  return out;
}

std::vector<bool> mask_of(u64 n, const std::vector<u64>& elems) {
  std::vector<bool> m(n, false);
  for (u64 x : elems) m[x % n] = true;
  return m;
}

// Subgroup of (Z/n)^* generated by gens.
std::vector<u64> generate(u64 n, const std::vector<u64>& gens) {
  std::vector<bool> seen(n, false);
  std::vector<u64> out{1 % n};
  seen[1 % n] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (u64 g : gens) {
      const u64 h = arith::mulmod(out[i], g % n, n);
      if (!seen[h]) {
        seen[h] = true;
        out.push_back(h);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_common(const std::vector<bool>& a, const std::vector<u64>& b) {
  return static_cast<std::size_t>(std::count_if(b.begin(), b.end(), [&](u64 x) { return a[x]; }));
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_int(std::string_view s, std::string_view context) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error("ParseError", "bad integer in field expression '" + std::string(context) + "'");
  }
  return v;
}

AbelianNumberField parse_term(std::string_view term, std::string_view whole) {
  const std::string t = trim(term);
  if (t == "Q") return AbelianNumberField::rationals();
  if (t == "Q(i)") return AbelianNumberField::quadratic(-1);
  auto inner = [&](std::string_view prefix) -> std::optional<std::string_view> {
    std::string_view v(t);
    if (v.size() > prefix.size() + 1 && v.substr(0, prefix.size()) == prefix && v.back() == ')') {
      return v.substr(prefix.size(), v.size() - prefix.size() - 1);
    }
    return std::nullopt;
  };
  if (auto arg = inner("Q(zeta:")) {
    const auto n = parse_int<u64>(*arg, whole);
    if (n == 0) throw Error("ParseError", "zeta:0 is not a root of unity order");
    return AbelianNumberField::cyclotomic(n);
  }
  if (auto arg = inner("Q(sqrt:")) return AbelianNumberField::quadratic(parse_int<std::int64_t>(*arg, whole));
  throw Error("ParseError", "cannot parse field term '" + t + "' in '" + std::string(whole) + "'");
}

}  // namespace

AbelianNumberField AbelianNumberField::from_fixing_subgroup(std::uint64_t modulus,
                                                            std::vector<std::uint64_t> fixing) {
  check_modulus(modulus);
  for (auto& x : fixing) {
    x %= modulus;
    if (std::gcd(x, modulus) != 1) throw Error("InvalidSubgroup", "fixing set contains a non-unit");
  }
  const auto h = generate(modulus, fixing);
  const auto in_h = mask_of(modulus, h);
  const auto all = units(modulus);
  for (u64 d : arith::divisors(modulus)) {
    // K lies in Q(mu_d) iff H contains the kernel of (Z/modulus)^* -> (Z/d)^*
    const bool contains_kernel = std::all_of(all.begin(), all.end(), [&](u64 x) {
      return x % d != 1 % d || in_h[x];
    });
    if (!contains_kernel) continue;
    std::vector<u64> image;
    for (u64 x : h) image.push_back(x % d);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return AbelianNumberField(d, std::move(image));
  }
  throw Error("LogicError", "no conductor found");  // d = modulus always qualifies
}

AbelianNumberField AbelianNumberField::rationals() { return AbelianNumberField(1, {0}); }

AbelianNumberField AbelianNumberField::cyclotomic(std::uint64_t n) {
  check_modulus(n);
  return from_fixing_subgroup(n, {1 % n});
}

AbelianNumberField AbelianNumberField::quadratic(std::int64_t d) {
  if (!arith::is_squarefree(d)) {
    throw Error("NotSquarefree", std::to_string(d) + " is not a nonzero squarefree integer");
  }
  if (d == 1) return rationals();
  const std::int64_t disc = arith::mod(d, 4) == 1 ? d : 4 * d;
  const u64 n = static_cast<u64>(disc < 0 ? -disc : disc);
  check_modulus(n);
  std::vector<u64> kernel;
  for (u64 a : units(n)) {
    if (arith::kronecker(disc, static_cast<std::int64_t>(a)) == 1) kernel.push_back(a);
  }
  return from_fixing_subgroup(n, std::move(kernel));
}

std::uint64_t AbelianNumberField::degree() const { return arith::euler_phi(conductor_) / fixing_.size(); }

std::vector<std::uint64_t> AbelianNumberField::fixing_subgroup_mod(std::uint64_t modulus) const {
  if (modulus % conductor_ != 0) {
    throw Error("LogicError", "modulus is not a multiple of the conductor");
  }
  check_modulus(modulus);
  const auto in_h = mask_of(conductor_, fixing_);
  std::vector<u64> out;
  for (u64 x : units(modulus)) {
    if (in_h[x % conductor_]) out.push_back(x);
  }
  return out;
}

AbelianNumberField parse_field(std::string_view expr) {
  AbelianNumberField acc = AbelianNumberField::rationals();
  std::size_t start = 0;
  bool any = false;
  for (;;) {
    const auto pos = expr.find('*', start);
    const auto term = expr.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    acc = any ? compositum(acc, parse_term(term, expr)) : parse_term(term, expr);
    any = true;
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return acc;
}

AbelianNumberField compositum(const AbelianNumberField& a, const AbelianNumberField& b) {
  const u64 l = std::lcm(a.conductor(), b.conductor());
  const auto ha = a.fixing_subgroup_mod(l);
  const auto mb = mask_of(l, b.fixing_subgroup_mod(l));
  std::vector<u64> both;
  for (u64 x : ha) {
    if (mb[x]) both.push_back(x);
  }
  return AbelianNumberField::from_fixing_subgroup(l, std::move(both));
}

bool is_subfield(const AbelianNumberField& k, const AbelianNumberField& m) {
  const u64 l = std::lcm(k.conductor(), m.conductor());
  const auto hk = mask_of(l, k.fixing_subgroup_mod(l));
  const auto hm = m.fixing_subgroup_mod(l);
  return std::all_of(hm.begin(), hm.end(), [&](u64 x) { return hk[x]; });
}

SplittingDatum splitting(const AbelianNumberField& k, std::uint64_t q) {
  if (!arith::is_prime(q)) throw Error("NotPrime", std::to_string(q) + " is not prime");
  const u64 n = k.conductor();
  const u64 qa = arith::p_part(n, q);
  const u64 m = n / qa;
  const auto& h = k.fixing_subgroup();
  const auto in_h = mask_of(n, h);

  // inertia: the (Z/q^a)^* factor, i.e. units congruent to 1 mod m
  std::vector<u64> inertia;
  for (u64 x : units(n)) {
    if (x % m == 1 % m) inertia.push_back(x);
  }
  const u64 frob = qa == 1 ? q % n : (m == 1 ? 1 % n : arith::crt(q % m, m, 1 % qa, qa));
  auto decomposition = inertia;
  decomposition.push_back(frob);
  decomposition = generate(n, decomposition);

  // |A H| / |H| = |A| / |A meet H|
  const u64 e = inertia.size() / count_common(in_h, inertia);
  const u64 ef = decomposition.size() / count_common(in_h, decomposition);
  const u64 f = ef / e;
  return {e, f, k.degree() / ef};
}

AbelianNumberField intersect_with_cyclotomic(const AbelianNumberField& k, std::uint64_t n) {
  check_modulus(n);
  const u64 l = std::lcm(k.conductor(), n);
  // the fixing group of K meet Q(mu_n) in (Z/n)^* is the image of K's fixing group
  std::vector<u64> image;
  for (u64 x : k.fixing_subgroup_mod(l)) image.push_back(x % n);
  return AbelianNumberField::from_fixing_subgroup(n, std::move(image));
}

bool sigma_fixes(std::int64_t t, std::uint64_t n, const AbelianNumberField& k) {
  const u64 r = arith::mod(t, n);
  if (std::gcd(r, n) != 1) {
    throw Error("NotCoprime", "gcd(" + std::to_string(t) + ", " + std::to_string(n) + ") != 1");
  }
  const auto meet = intersect_with_cyclotomic(k, n);
  const auto& h = meet.fixing_subgroup();
  return std::binary_search(h.begin(), h.end(), r % meet.conductor());
}

const RelativePrimeRecord* RelativeExtensionData::find(std::uint64_t prime, std::string_view label) const {
  for (const auto& r : records) {
    if (label.empty() ? (r.label.empty() && r.prime == prime) : r.label == label) return &r;
  }
  return nullptr;
}

void RelativeExtensionData::validate() const {
  for (const auto& r : records) {
    if (r.g_rel == 0 || r.n_rel == 0) throw Error("InvalidRelativeData", "zero fiber size or degree");
    if (r.e_rel && r.f_rel && *r.e_rel * *r.f_rel != r.n_rel) {
      throw Error("InvalidRelativeData", "e_rel * f_rel != n_rel");
    }
    if (galois && degree && r.g_rel * r.n_rel != *degree) {
      throw Error("InvalidRelativeData", "g_rel * n_rel != [M:K] for a Galois extension");
    }
  }
}

RelativeExtensionData relative_splitting(const AbelianNumberField& k, const AbelianNumberField& m,
                                         const std::vector<std::uint64_t>& primes,
                                         std::string base_name, std::string top_name) {
  if (!is_subfield(k, m)) throw Error("NotSubfield", "base field is not contained in the top field");
  RelativeExtensionData rel;
  rel.base_field = std::move(base_name);
  rel.top_field = std::move(top_name);
  rel.galois = true;
  rel.degree = m.degree() / k.degree();
  for (u64 q : primes) {
    const auto sk = splitting(k, q);
    const auto sm = splitting(m, q);
    RelativePrimeRecord r;
    r.prime = q;
    r.g_rel = sm.g / sk.g;
    r.n_rel = (sm.e * sm.f) / (sk.e * sk.f);
    r.e_rel = sm.e / sk.e;
    r.f_rel = sm.f / sk.f;
    rel.records.push_back(r);
  }
  rel.validate();
  return rel;
}

nlohmann::json to_json(const AbelianNumberField& k) {
  return {{"conductor", k.conductor()}, {"fixing_subgroup", k.fixing_subgroup()}, {"degree", k.degree()}};
}

nlohmann::json to_json(const SplittingDatum& s) { return {{"e", s.e}, {"f", s.f}, {"g", s.g}}; }

nlohmann::json to_json(const RelativeExtensionData& rel) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : rel.records) {
    nlohmann::json j = {{"g_rel", r.g_rel}, {"n_rel", r.n_rel}};
    if (r.label.empty()) {
      j["prime"] = r.prime;
    } else {
      j["label"] = r.label;
    }
    if (r.e_rel) j["e_rel"] = *r.e_rel;
    if (r.f_rel) j["f_rel"] = *r.f_rel;
    records.push_back(std::move(j));
  }
  nlohmann::json out = {{"base_field", rel.base_field}, {"top_field", rel.top_field},
                        {"galois", rel.galois}, {"records", std::move(records)}};
  if (rel.degree) out["degree"] = *rel.degree;
  return out;
}

RelativeExtensionData relative_from_json(const nlohmann::json& j) {
  try {
    RelativeExtensionData rel;
    rel.base_field = j.value("base_field", "K");
    rel.top_field = j.value("top_field", "M");
    rel.galois = j.value("galois", true);
    if (j.contains("degree")) rel.degree = j.at("degree").get<u64>();
    for (const auto& r : j.at("records")) {
      RelativePrimeRecord rec;
      if (r.contains("label")) {
        rec.label = r.at("label").get<std::string>();
      } else {
        rec.prime = r.at("prime").get<u64>();
      }
      rec.g_rel = r.at("g_rel").get<u64>();
      rec.n_rel = r.at("n_rel").get<u64>();
      if (r.contains("e_rel")) rec.e_rel = r.at("e_rel").get<u64>();
      if (r.contains("f_rel")) rec.f_rel = r.at("f_rel").get<u64>();
      rel.records.push_back(std::move(rec));
    }
    rel.validate();
    return rel;
  } catch (const nlohmann::json::exception& e) {
    throw Error("ParseError", std::string("relative extension data: ") + e.what());
  }
}

}  // namespace adlab::fields
