#include "adlab/liedahl.hpp"

#include "adlab/arith.hpp"
#include "adlab/error.hpp"
#include "adlab/groups/algorithms.hpp"
#include "adlab/groups/subgroup.hpp"

namespace adlab::liedahl {

using arith::u64;

LiedahlVerdict liedahl_check(const groups::FiniteGroup& g, const fields::AbelianNumberField& k,
                             groups::Exec exec) {
  LiedahlVerdict out;
  const auto pres = groups::metacyclic_presentations(g, exec);
  out.presentations = pres.size();
  if (pres.empty()) return out;
  for (const auto& p : pres) {
    if (fields::sigma_fixes(static_cast<std::int64_t>(p.t), p.n, k)) {
      out.status = Status::Satisfied;
      out.witness = p;
      out.meet = fields::intersect_with_cyclotomic(k, p.n);
      return out;
    }
  }
  out.status = Status::Failed;
  return out;
}

bool subfield_monotonicity(const groups::FiniteGroup& g, const fields::AbelianNumberField& k,
                           const fields::AbelianNumberField& m) {
  if (!fields::is_subfield(k, m)) throw Error("NotSubfield", "base field is not contained in the top field");
  const auto over_m = liedahl_check(g, m);
  if (over_m.status != Status::Satisfied) return true;
  return liedahl_check(g, k).status == Status::Satisfied;
}

TameReport tame_admissibility_verdict(const groups::FiniteGroup& g, const fields::AbelianNumberField& k) {
  TameReport report;
  // Sylow subgroups as the sets of elements of prime-power order; G is their
  // direct product exactly when each set has the full p-part as its size.
  std::vector<std::pair<u64, groups::Subgroup>> sylows;
  for (u64 l : arith::prime_divisors(g.order())) {
    std::vector<groups::Element> elems;
    for (groups::Element x = 0; x < g.order(); ++x) {
      if (arith::prime_power_base(g.element_order(x)) == l || x == g.identity()) elems.push_back(x);
    }
    auto h = groups::Subgroup::generated(g, elems);
    if (h.order() != arith::p_part(g.order(), l)) {
      report.unknown_structure = true;
      report.basis.push_back({"CHECKED", "the " + std::to_string(l) + "-Sylow subgroup is not normal"});
      return report;
    }
    sylows.emplace_back(l, std::move(h));
  }

  bool cited = false;
  for (const auto& [l, h] : sylows) {
    const auto sub = groups::subgroup_as_group(g, h, g.name() + "_" + std::to_string(l));
    const auto v = liedahl_check(sub, k);
    const std::string who = std::to_string(l) + "-Sylow subgroup";
    switch (v.status) {
      case Status::NotMetacyclic:
        report.verdict = TameVerdict::No;
        report.basis.push_back({"CHECKED", who + " is not metacyclic"});
        return report;
      case Status::Failed:
        report.verdict = TameVerdict::No;
        report.basis.push_back({"CHECKED", who + " fails Liedahl's condition over all " +
                                               std::to_string(v.presentations) + " presentations"});
        return report;
      case Status::Satisfied: {
        const auto& w = *v.witness;
        report.basis.push_back({"CHECKED", who + " satisfies Liedahl's condition with (m,n,i,t) = (" +
                                               std::to_string(w.m) + "," + std::to_string(w.n) + "," +
                                               std::to_string(w.i) + "," + std::to_string(w.t) + ")"});
        cited = true;
        break;
      }
    }
  }
  report.verdict = TameVerdict::Yes;
  if (cited) {
    report.basis.push_back({"CITED", "metacyclic Sylow subgroups satisfying Liedahl's condition give a tamely "
                                     "admissible group (existence theorem)"});
  }
  return report;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Satisfied:
      return "satisfied";
    case Status::Failed:
      return "failed";
    case Status::NotMetacyclic:
      break;
  }
  return "not_metacyclic";
}

std::string to_string(TameVerdict v) {
  switch (v) {
    case TameVerdict::Yes:
      return "yes";
    case TameVerdict::No:
      return "no";
    case TameVerdict::Unknown:
      break;
  }
  return "unknown";
}

nlohmann::json to_json(const groups::MetacyclicPresentation& p) {
  return {{"m", p.m}, {"n", p.n}, {"i", p.i}, {"t", p.t}};
}

nlohmann::json to_json(const LiedahlVerdict& v) {
  nlohmann::json out = {{"status", to_string(v.status)}, {"presentations", v.presentations}};
  if (v.witness) out["witness"] = to_json(*v.witness);
  if (v.meet) out["meet"] = fields::to_json(*v.meet);
  return out;
}

nlohmann::json to_json(const TameReport& r) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& b : r.basis) basis.push_back({{"kind", b.kind}, {"step", b.description}});
  return {{"verdict", to_string(r.verdict)}, {"basis", std::move(basis)}, {"unknown_structure", r.unknown_structure}};
}

}  // namespace adlab::liedahl
