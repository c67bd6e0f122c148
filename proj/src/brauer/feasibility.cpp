#include <algorithm>
#include <map>
#include <numeric>

#include "adlab/arith.hpp"
#include "adlab/brauer.hpp"
#include "adlab/error.hpp"

namespace adlab::brauer {

using arith::u64;

namespace {

constexpr u64 kMaxModulus = 1'000'000;
constexpr u64 kMaxWork = 400'000'000;

u64 lcm_checked(u64 a, u64 b) {
  const u64 l = arith::checked_mul(a / std::gcd(a, b), b);
  if (l > kMaxModulus) throw Error("SearchTooLarge", "common denominator exceeds " + std::to_string(kMaxModulus));
  return l;
}

// Picks one numerator (over l) per variable so that sum weight*value is 0 mod l
// when sum_zero is set. Candidate lists are ascending; the result is the
// lexicographically least choice.
std::optional<std::vector<u64>> choose(const std::vector<std::vector<u64>>& cand, const std::vector<u64>& weight,
                                       u64 l, bool sum_zero) {
  const std::size_t v = cand.size();
  for (const auto& c : cand) {
    if (c.empty()) return std::nullopt;
  }
  if (!sum_zero) {
    std::vector<u64> out;
    for (const auto& c : cand) out.push_back(c.front());
    return out;
  }
  u64 work = 0;
  for (const auto& c : cand) work += c.size() * l;
  if (work > kMaxWork) throw Error("SearchTooLarge", "feasibility search space too large");

  // reach[k][r]: variables k.. can contribute r mod l
  std::vector<std::vector<char>> reach(v + 1, std::vector<char>(l, 0));
  reach[v][0] = 1;
  for (std::size_t k = v; k-- > 0;) {
    for (u64 a : cand[k]) {
      const u64 step = arith::mulmod(weight[k] % l, a, l);
      for (u64 r = 0; r < l; ++r) {
        if (reach[k + 1][r]) reach[k][(r + step) % l] = 1;
      }
    }
  }
  if (!reach[0][0]) return std::nullopt;
  std::vector<u64> out;
  u64 need = 0;
  for (std::size_t k = 0; k < v; ++k) {
    for (u64 a : cand[k]) {
      const u64 step = arith::mulmod(weight[k] % l, a, l);
      const u64 rest = (need + l - step) % l;
      if (reach[k + 1][rest]) {
        out.push_back(a);
        need = rest;
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<Invariant>> feasibility_solve(const FeasibilitySpec& spec) {
  const std::size_t n = spec.slots.size();
  std::map<PrimeSlot, std::size_t> pos;
  u64 l = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& s = spec.slots[k];
    if (!pos.emplace(s.slot, k).second) throw Error("InvalidSpec", "slot " + s.slot.to_string() + " repeated");
    if (s.max_order == 0 || (s.exact_order && *s.exact_order == 0)) {
      throw Error("InvalidSpec", "orders must be positive");
    }
    l = lcm_checked(l, s.max_order);
    if (s.exact_order) l = lcm_checked(l, *s.exact_order);
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& group : spec.equal_groups) {
    for (const auto& s : group) {
      const auto it = pos.find(s);
      if (it == pos.end()) throw Error("InvalidSpec", "equality group names unknown slot " + s.to_string());
      const std::size_t a = find(pos.at(group.front())), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  // one variable per equality class, in order of first slot
  std::vector<std::size_t> var_of(n);
  std::map<std::size_t, std::size_t> var_index;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t k = 0; k < n; ++k) {
    const auto [it, fresh] = var_index.emplace(find(k), members.size());
    if (fresh) members.emplace_back();
    var_of[k] = it->second;
    members[it->second].push_back(k);
  }

  std::vector<std::vector<u64>> cand(members.size());
  std::vector<u64> weight(members.size());
  for (std::size_t v = 0; v < members.size(); ++v) {
    weight[v] = members[v].size();
    for (u64 a = 0; a < l; ++a) {
      const u64 order = l / std::gcd(a, l);
      bool ok = true;
      for (std::size_t k : members[v]) {
        const auto& s = spec.slots[k];
        ok = ok && s.max_order % order == 0 && (!s.exact_order || *s.exact_order == order);
      }
      if (ok) cand[v].push_back(a);
    }
  }

  const auto picked = choose(cand, weight, l, spec.sum_zero);
  if (!picked) return std::nullopt;
  std::vector<Invariant> out;
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(Invariant::make(static_cast<std::int64_t>((*picked)[var_of[k]]), l));
  }
  return out;
}

BrauerClass witness_class(const FeasibilitySpec& spec, const std::vector<Invariant>& witness) {
  if (witness.size() != spec.slots.size()) throw Error("InvalidSpec", "witness length mismatch");
  std::vector<std::pair<PrimeSlot, Invariant>> assignments;
  for (std::size_t k = 0; k < witness.size(); ++k) assignments.push_back({spec.slots[k].slot, witness[k]});
  return BrauerClass::make(spec.base_field, assignments);
}

std::optional<BrauerClass> restriction_preimage(const BrauerClass& d, const fields::RelativeExtensionData& rel,
                                                const std::vector<PrimeSlot>& pool) {
  if (!rel.galois) throw Error("NotGalois", "preimage search needs a Galois extension");
  auto record = [&](const PrimeSlot& s) -> const fields::RelativePrimeRecord& {
    const auto* rec = rel.find(s.prime, s.label);
    if (!rec) throw Error("MissingRelativeData", "no relative data for " + s.key());
    return *rec;
  };

  // K-slot -> the invariant its restriction must carry on every fiber
  std::map<PrimeSlot, Invariant> target;
  for (const auto& [slot, inv] : d.invariants()) {
    const auto& rec = record(slot);
    const PrimeSlot below{slot.prime, slot.label, slot.fiber / rec.g_rel};
    for (u64 k = 0; k < rec.g_rel; ++k) {
      if (d.at(PrimeSlot{slot.prime, slot.label, below.fiber * rec.g_rel + k}) != inv) return std::nullopt;
    }
    target[below] = inv;
  }
  for (const auto& s : pool) {
    record(s);
    target.emplace(s, Invariant{});
  }

  // candidates c with n_rel * c = target, i.e. c = (a + k) / n_rel for a = target
  u64 l = 1;
  std::vector<std::vector<Invariant>> options;
  std::vector<PrimeSlot> slots;
  for (const auto& [slot, inv] : target) {
    const u64 n_rel = record(slot).n_rel;
    std::vector<Invariant> opts;
    const u64 den = arith::checked_mul(inv.den(), n_rel);
    for (u64 k = 0; k < n_rel; ++k) {
      opts.push_back(Invariant::make(static_cast<std::int64_t>(inv.num() + k * inv.den()), den));
    }
    std::sort(opts.begin(), opts.end());
    l = lcm_checked(l, den);
    options.push_back(std::move(opts));
    slots.push_back(slot);
  }
  std::vector<std::vector<u64>> cand;
  for (const auto& opts : options) {
    std::vector<u64> nums;
    for (const auto& o : opts) nums.push_back(o.num() * (l / o.den()));
    cand.push_back(std::move(nums));
  }
  const auto picked = choose(cand, std::vector<u64>(cand.size(), 1), l, true);
  if (!picked) return std::nullopt;
  std::vector<std::pair<PrimeSlot, Invariant>> assignments;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    assignments.push_back({slots[k], Invariant::make(static_cast<std::int64_t>((*picked)[k]), l)});
  }
  return BrauerClass::make(rel.base_field, assignments);
}

nlohmann::json to_json(const FeasibilitySpec& spec) {
  nlohmann::json slots = nlohmann::json::array();
  for (const auto& s : spec.slots) {
    nlohmann::json j = {{"slot", s.slot.to_string()}, {"max_order", s.max_order}};
    if (s.exact_order) j["exact_order"] = *s.exact_order;
    slots.push_back(std::move(j));
  }
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : spec.equal_groups) {
    nlohmann::json names = nlohmann::json::array();
    for (const auto& s : g) names.push_back(s.to_string());
    groups.push_back(std::move(names));
  }
  return {{"base_field", spec.base_field}, {"slots", std::move(slots)}, {"equal", std::move(groups)},
          {"sum_zero", spec.sum_zero}};
}

FeasibilitySpec feasibility_from_json(const nlohmann::json& j) {
  try {
    FeasibilitySpec spec;
    spec.base_field = j.value("base_field", "K");
    spec.sum_zero = j.value("sum_zero", true);
    for (const auto& s : j.at("slots")) {
      FeasibilitySpec::Slot slot;
      slot.slot = PrimeSlot::parse(s.at("slot").get<std::string>());
      if (s.contains("exact_order")) slot.exact_order = s.at("exact_order").get<u64>();
      slot.max_order = s.value("max_order", slot.exact_order.value_or(1));
      spec.slots.push_back(std::move(slot));
    }
    if (j.contains("equal")) {
      for (const auto& g : j.at("equal")) {
        std::vector<PrimeSlot> group;
        for (const auto& s : g) group.push_back(PrimeSlot::parse(s.get<std::string>()));
        if (!group.empty()) spec.equal_groups.push_back(std::move(group));
      }
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw Error("ParseError", std::string("feasibility spec: ") + e.what());
  }
}

}  // namespace adlab::brauer
