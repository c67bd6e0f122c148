#include "adlab/groups/algorithms.hpp"

#include <algorithm>
#include <map>

#include "adlab/arith.hpp"
#include "adlab/error.hpp"

namespace adlab::groups {

namespace {

std::uint64_t require_p_group(const FiniteGroup& g) {
  const auto p = g.prime();
  if (!p) {
    throw Error("NotPGroup", g.name() + " has order " + std::to_string(g.order()) +
                                 ", not a prime power");
  }
  return *p;
}

std::uint32_t log_p(std::uint64_t n, std::uint64_t p) { return arith::valuation(n, p); }

}  // namespace

std::vector<Element> reduce_generators(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<Element> kept;
  Subgroup span(g);
  for (Element x : gens) {
    if (span.contains(x)) continue;
    kept.push_back(x);
    span = Subgroup::generated(g, kept);
  }
  return kept;
}

Subgroup frattini_by_maximal_subgroups(const FiniteGroup& g, std::uint64_t p, Exec exec) {
  const auto gens = reduce_generators(g, g.generator_elements());
  const auto mask = exec == Exec::Serial ? kernels::hom_kernel_intersection_serial(g, p, gens)
                                         : kernels::hom_kernel_intersection_parallel(g, p, gens);
  std::vector<Element> members;
  for (Element x = 0; x < g.order(); ++x) {
    if (mask[x]) members.push_back(x);
  }
  // the mask is an intersection of subgroups, so its elements generate exactly it
  return Subgroup::generated(g, members);
}

Subgroup frattini_by_powers_and_commutators(const FiniteGroup& g, std::uint64_t p) {
  const auto gens = g.generator_elements();
  std::vector<Element> seeds;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    seeds.push_back(g.pow(gens[a], static_cast<std::int64_t>(p)));
    for (std::size_t b = a + 1; b < gens.size(); ++b) seeds.push_back(g.commutator(gens[a], gens[b]));
  }
  return Subgroup::normal_closure(g, seeds);
}

FrattiniReport frattini(const FiniteGroup& g, Exec exec) {
  if (g.order() == 1) return {0, 0, 1};
  const auto p = require_p_group(g);
  const Subgroup by_max = frattini_by_maximal_subgroups(g, p, exec);
  const Subgroup by_pc = frattini_by_powers_and_commutators(g, p);
  if (!(by_max == by_pc)) {
    throw Error("LogicError", g.name() + ": Frattini routes disagree (" +
                                  std::to_string(by_max.order()) + " vs " +
                                  std::to_string(by_pc.order()) + ")");
  }
  return {p, log_p(g.order() / by_pc.order(), p), by_pc.order()};
}

std::uint32_t frattini_quotient_rank(const FiniteGroup& g) { return frattini(g).rank; }

Subgroup derived_subgroup(const FiniteGroup& g) {
  const auto gens = g.generator_elements();
  std::vector<Element> seeds;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) seeds.push_back(g.commutator(gens[a], gens[b]));
  }
  return Subgroup::normal_closure(g, seeds);
}

std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& g) {
  const Subgroup derived = derived_subgroup(g);
  const std::uint64_t ab_order = g.order() / derived.order();
  // per prime l: counts |A[l^k]| give the number of cyclic factors of order >= l^k
  std::vector<std::uint64_t> factors;
  for (auto [l, e] : arith::factorize(ab_order)) {
    std::vector<std::uint32_t> at_least;  // at_least[k-1] = #factors with order >= l^k
    std::uint64_t prev = 1;
    std::uint64_t lk = 1;
    while (prev < arith::ipow(l, e)) {
      lk *= l;
      std::uint64_t count = 0;
      for (Element x = 0; x < g.order(); ++x) {
        if (derived.contains(g.pow(x, static_cast<std::int64_t>(lk)))) ++count;
      }
      count /= derived.order();
      count = arith::p_part(count, l);  // elements killed by l^k lie in the l-part
      at_least.push_back(log_p(count / prev, l));
      prev = count;
    }
    // partition conjugate: j-th largest factor exponent = #{k : at_least[k] > j}
    const std::uint32_t parts = at_least.empty() ? 0 : at_least.front();
    if (factors.size() < parts) factors.resize(parts, 1);
    for (std::uint32_t j = 0; j < parts; ++j) {
      unsigned exp = 0;
      for (auto c : at_least) {
        if (c > j) ++exp;
      }
      factors[j] *= arith::ipow(l, exp);
    }
  }
  std::sort(factors.rbegin(), factors.rend());
  return factors;
}

std::vector<MetacyclicPresentation> metacyclic_presentations(const FiniteGroup& g, Exec exec) {
  return exec == Exec::Serial ? kernels::presentation_search_serial(g)
                              : kernels::presentation_search_parallel(g);
}

bool verify_presentation(const FiniteGroup& g, const MetacyclicPresentation& pres) {
  const Element x = pres.x, y = pres.y;
  if (g.element_order(y) != pres.n) return false;
  if (g.pow(x, static_cast<std::int64_t>(pres.m)) != g.pow(y, static_cast<std::int64_t>(pres.i))) return false;
  if (g.pow(y, static_cast<std::int64_t>(pres.n)) != g.identity()) return false;
  if (g.conj(y, x) != g.pow(y, static_cast<std::int64_t>(pres.t))) return false;
  if (pres.m * pres.n != g.order()) return false;
  const Element gens[] = {x, y};
  if (Subgroup::generated(g, gens).order() != g.order()) return false;
  const Element ygen[] = {y};
  const Subgroup cyc = Subgroup::generated(g, ygen);
  for (const auto& gen : g.generators()) {
    if (!cyc.contains(g.conj(y, gen.element))) return false;
  }
  return true;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, Exec exec) {
  auto all = exec == Exec::Serial ? kernels::principal_normal_subgroups_serial(g)
                                  : kernels::principal_normal_subgroups_parallel(g);
  // every normal subgroup is a product of principal ones; close under joins
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (all[a].is_subgroup_of(all[b]) || all[b].is_subgroup_of(all[a])) continue;
      std::vector<Element> gens(all[a].generators().begin(), all[a].generators().end());
      gens.insert(gens.end(), all[b].generators().begin(), all[b].generators().end());
      Subgroup join = Subgroup::generated(g, gens);
      if (std::none_of(all.begin(), all.end(), [&](const Subgroup& s) { return s == join; })) {
        all.push_back(std::move(join));
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                        b.elements().begin(), b.elements().end());
  });
  return all;
}

bool proper_quotients_abelian(const FiniteGroup& g, Exec exec) {
  const Subgroup derived = derived_subgroup(g);
  for (const auto& n : normal_subgroups(g, exec)) {
    if (n.order() == 1) continue;
    if (!derived.is_subgroup_of(n)) return false;
  }
  return true;
}

bool contains_p_sylow(const FiniteGroup& g, const Subgroup& h, std::uint64_t p) {
  if (!arith::is_prime(p)) throw Error("NotPrime", std::to_string(p) + " is not prime");
  return arith::p_part(h.order(), p) == arith::p_part(g.order(), p);
}

}  // namespace adlab::groups
