#include "adlab/brauer.hpp"

#include <charconv>
#include <numeric>
#include <set>

#include "adlab/arith.hpp"
#include "adlab/error.hpp"
#include "adlab/groups/algorithms.hpp"

namespace adlab::brauer {

using arith::u64;

Invariant Invariant::make(std::int64_t num, u64 den) {
  if (den == 0) throw Error("InvalidInvariant", "zero denominator");
  const u64 r = arith::mod(num, den);
  if (r == 0) return {};
  const u64 g = std::gcd(r, den);
  return Invariant(r / g, den / g);
}

Invariant Invariant::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::int64_t num = 0;
  u64 den = 1;
  auto bad = [&] { return Error("ParseError", "bad invariant '" + std::string(text) + "'"); };
  const auto num_text = text.substr(0, slash);
  auto [p1, e1] = std::from_chars(num_text.data(), num_text.data() + num_text.size(), num);
  if (num_text.empty() || e1 != std::errc{} || p1 != num_text.data() + num_text.size()) throw bad();
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    auto [p2, e2] = std::from_chars(den_text.data(), den_text.data() + den_text.size(), den);
    if (den_text.empty() || e2 != std::errc{} || p2 != den_text.data() + den_text.size() || den == 0) {
      throw bad();
    }
  }
  return make(num, den);
}

Invariant Invariant::operator+(const Invariant& o) const {
  const u64 l = std::lcm(den_, o.den_);
  const u64 a = arith::mulmod(num_, l / den_, l);
  const u64 b = arith::mulmod(o.num_, l / o.den_, l);
  return make(static_cast<std::int64_t>((a + b) % l), l);
}

Invariant Invariant::operator-() const { return num_ == 0 ? *this : Invariant(den_ - num_, den_); }

Invariant Invariant::scaled(u64 k) const {
  return make(static_cast<std::int64_t>(arith::mulmod(num_, k % den_, den_)), den_);
}

std::string Invariant::to_string() const {
  return num_ == 0 ? "0" : std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering Invariant::operator<=>(const Invariant& o) const {
  const unsigned __int128 lhs = static_cast<unsigned __int128>(num_) * o.den_;
  const unsigned __int128 rhs = static_cast<unsigned __int128>(o.num_) * den_;
  if (lhs != rhs) return lhs <=> rhs;
  return den_ <=> o.den_;
}

PrimeSlot PrimeSlot::parse(std::string_view text) {
  PrimeSlot out;
  auto key = text;
  const auto colon = text.rfind(':');
  if (colon != std::string_view::npos) {
    key = text.substr(0, colon);
    const auto f = text.substr(colon + 1);
    auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), out.fiber);
    if (f.empty() || ec != std::errc{} || ptr != f.data() + f.size()) {
      throw Error("ParseError", "bad fiber index in slot '" + std::string(text) + "'");
    }
  }
  if (key.empty()) throw Error("ParseError", "empty slot name");
  const bool numeric = key.find_first_not_of("0123456789") == std::string_view::npos;
  if (numeric) {
    std::from_chars(key.data(), key.data() + key.size(), out.prime);
    if (!arith::is_prime(out.prime)) throw Error("NotPrime", std::string(key) + " is not prime");
  } else {
    out.label = std::string(key);
  }
  return out;
}

std::string PrimeSlot::key() const { return label.empty() ? std::to_string(prime) : label; }

std::string PrimeSlot::to_string() const { return key() + ":" + std::to_string(fiber); }

BrauerClass BrauerClass::make(std::string base_field,
                              const std::vector<std::pair<PrimeSlot, Invariant>>& assignments) {
  BrauerClass out;
  out.base_field_ = std::move(base_field);
  std::set<PrimeSlot> seen;
  Invariant sum;
  for (const auto& [slot, inv] : assignments) {
    if (!seen.insert(slot).second) throw Error("DuplicateSlot", "slot " + slot.to_string() + " repeated");
    sum = sum + inv;
    if (!inv.is_zero()) out.invariants_.emplace(slot, inv);
  }
  if (!sum.is_zero()) {
    throw Error("NonZeroSum", "invariants sum to " + sum.to_string() + ", not 0 in Q/Z");
  }
  return out;
}

Invariant BrauerClass::at(const PrimeSlot& slot) const {
  const auto it = invariants_.find(slot);
  return it == invariants_.end() ? Invariant{} : it->second;
}

u64 index(const BrauerClass& d) {
  u64 out = 1;
  for (const auto& [slot, inv] : d.invariants()) out = std::lcm(out, inv.order());
  return out;
}

namespace {

const fields::RelativePrimeRecord& record_for(const fields::RelativeExtensionData& rel, const PrimeSlot& s) {
  const auto* rec = rel.find(s.prime, s.label);
  if (!rec) throw Error("MissingRelativeData", "no relative data for " + s.key());
  return *rec;
}

}  // namespace

BrauerClass restrict(const BrauerClass& d, const fields::RelativeExtensionData& rel) {
  std::vector<std::pair<PrimeSlot, Invariant>> out;
  for (const auto& [slot, inv] : d.invariants()) {
    const auto& rec = record_for(rel, slot);
    for (u64 k = 0; k < rec.g_rel; ++k) {
      out.push_back({PrimeSlot{slot.prime, slot.label, slot.fiber * rec.g_rel + k}, inv.scaled(rec.n_rel)});
    }
  }
  return BrauerClass::make(rel.top_field, out);
}

bool splits(const BrauerClass& d, const std::map<PrimeSlot, u64>& local_degree) {
  bool ok = true;
  for (const auto& [slot, inv] : d.invariants()) {
    const auto it = local_degree.find(slot);
    if (it == local_degree.end()) throw Error("MissingData", "no local degree for " + slot.to_string());
    ok = ok && it->second % inv.order() == 0;
  }
  return ok;
}

bool tame_splits(const BrauerClass& d, const std::map<PrimeSlot, TameLocal>& local) {
  bool ok = true;
  for (const auto& [slot, inv] : d.invariants()) {
    const auto it = local.find(slot);
    if (it == local.end()) throw Error("MissingData", "no local data for " + slot.to_string());
    const auto& t = it->second;
    const u64 tame = t.f * (t.e / arith::p_part(t.e, t.prime));
    ok = ok && tame % inv.order() == 0;
  }
  return ok;
}

bool adequacy(const std::vector<u64>& local_degrees, u64 n) {
  if (n == 0) throw Error("InvalidArgument", "target order must be positive");
  for (const auto& [l, a] : arith::factorize(n)) {
    const u64 la = arith::ipow(l, a);
    const auto hits = std::count_if(local_degrees.begin(), local_degrees.end(),
                                    [&](u64 deg) { return deg % la == 0; });
    if (hits < 2) return false;
  }
  return true;
}

bool schacher_check(const groups::FiniteGroup& g, const std::vector<groups::Subgroup>& decomposition) {
  for (u64 l : arith::prime_divisors(g.order())) {
    const auto hits = std::count_if(decomposition.begin(), decomposition.end(),
                                    [&](const groups::Subgroup& h) { return groups::contains_p_sylow(g, h, l); });
    if (hits < 2) return false;
  }
  return true;
}

bool constant_on_fibers(const BrauerClass& d, const fields::RelativeExtensionData& rel) {
  if (!rel.galois) throw Error("NotGalois", "fiber constancy needs a Galois extension");
  for (const auto& [slot, inv] : d.invariants()) {
    const auto& rec = record_for(rel, slot);
    const u64 base = slot.fiber / rec.g_rel * rec.g_rel;
    for (u64 k = 0; k < rec.g_rel; ++k) {
      if (d.at(PrimeSlot{slot.prime, slot.label, base + k}) != inv) return false;
    }
  }
  return true;
}

nlohmann::json to_json(const Invariant& v) { return {{"num", v.num()}, {"den", v.den()}}; }

nlohmann::json to_json(const BrauerClass& d) {
  nlohmann::json inv = nlohmann::json::array();
  for (const auto& [slot, v] : d.invariants()) {
    inv.push_back({{"slot", slot.to_string()}, {"num", v.num()}, {"den", v.den()}});
  }
  return {{"base_field", d.base_field()}, {"invariants", std::move(inv)}};
}

namespace {

Invariant invariant_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Invariant::parse(j.get<std::string>());
  if (j.contains("value")) return Invariant::parse(j.at("value").get<std::string>());
  return Invariant::make(j.at("num").get<std::int64_t>(), j.value("den", u64{1}));
}

}  // namespace

BrauerClass class_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::pair<PrimeSlot, Invariant>> assignments;
    const auto& inv = j.at("invariants");
    if (inv.is_object()) {
      for (const auto& [slot, v] : inv.items()) assignments.push_back({PrimeSlot::parse(slot), invariant_from_json(v)});
    } else {
      for (const auto& e : inv) {
        assignments.push_back({PrimeSlot::parse(e.at("slot").get<std::string>()), invariant_from_json(e)});
      }
    }
    return BrauerClass::make(j.value("base_field", "K"), assignments);
  } catch (const nlohmann::json::exception& e) {
    throw Error("ParseError", std::string("Brauer class: ") + e.what());
  }
}

}  // namespace adlab::brauer
