#pragma once

#include <cstdint>
#include <vector>

#include "adlab/groups/finite_group.hpp"
#include "adlab/groups/kernels.hpp"
#include "adlab/groups/subgroup.hpp"

namespace adlab::groups {

/// Frattini data of a p-group, computed along two independent routes.
struct FrattiniReport {
  std::uint64_t prime = 0;
  std::uint32_t rank = 0;            // dim_Fp G / Phi(G)
  std::uint32_t frattini_order = 0;  // |Phi(G)|
};

/// Computes Phi(G) as the intersection of maximal subgroups and as G^p[G,G];
/// throws LogicError if they differ. Errors: NotPGroup.
FrattiniReport frattini(const FiniteGroup& g, Exec exec = Exec::Parallel);

std::uint32_t frattini_quotient_rank(const FiniteGroup& g);

/// Intersection of the maximal subgroups of a p-group. Maximal subgroups of a
/// p-group are exactly the kernels of nonzero homomorphisms onto Z/p.
Subgroup frattini_by_maximal_subgroups(const FiniteGroup& g, std::uint64_t p,
                                       Exec exec = Exec::Parallel);

/// G^p[G,G], as the normal closure of generator p-th powers and generator commutators.
Subgroup frattini_by_powers_and_commutators(const FiniteGroup& g, std::uint64_t p);

Subgroup derived_subgroup(const FiniteGroup& g);

/// Drops generators already contained in the span of the ones kept before them.
std::vector<Element> reduce_generators(const FiniteGroup& g, const std::vector<Element>& gens);

/// Invariant factors of G/[G,G], largest first; empty for a perfect group.
std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& g);

std::vector<MetacyclicPresentation> metacyclic_presentations(const FiniteGroup& g,
                                                             Exec exec = Exec::Parallel);

/// Replays the relations and the generation/order conditions of a presentation.
bool verify_presentation(const FiniteGroup& g, const MetacyclicPresentation& pres);

/// All normal subgroups, ordered by order then by element list.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, Exec exec = Exec::Parallel);

/// True iff G/N is abelian for every nontrivial normal subgroup N.
bool proper_quotients_abelian(const FiniteGroup& g, Exec exec = Exec::Parallel);

/// True iff the p-part of |H| equals the p-part of |G|. Errors: NotPrime.
bool contains_p_sylow(const FiniteGroup& g, const Subgroup& h, std::uint64_t p);

}  // namespace adlab::groups
