#pragma once

#include <cstdint>
#include <vector>

#include "adlab/groups/finite_group.hpp"
#include "adlab/groups/subgroup.hpp"

namespace adlab::groups {

/// Execution policy for the enumeration kernels. Both policies return identical
/// results in identical order; Serial is the reference used by the tests.
enum class Exec { Serial, Parallel };

/// A witness pair (x, y) for <x, y | x^m = y^i, y^n = 1, x^-1 y x = y^t>.
struct MetacyclicPresentation {
  std::uint64_t m = 0, n = 0, i = 0, t = 0;
  Element x = 0, y = 0;

  auto tuple() const { return std::tuple(m, n, i, t); }
};

namespace kernels {

/// Membership mask of the intersection of kernels of all nonzero homomorphisms
/// G -> Z/p, enumerated over generator assignments. gens must generate G.
std::vector<bool> hom_kernel_intersection_serial(const FiniteGroup& g, std::uint64_t p,
                                                 const std::vector<Element>& gens);
std::vector<bool> hom_kernel_intersection_parallel(const FiniteGroup& g, std::uint64_t p,
                                                   const std::vector<Element>& gens);

/// Every (m, n, i, t) realized by a witness pair, first witness per tuple, sorted by
/// n descending then (m, i, t) ascending.
std::vector<MetacyclicPresentation> presentation_search_serial(const FiniteGroup& g);
std::vector<MetacyclicPresentation> presentation_search_parallel(const FiniteGroup& g);

/// Distinct normal closures of single elements, ordered by smallest generating element.
std::vector<Subgroup> principal_normal_subgroups_serial(const FiniteGroup& g);
std::vector<Subgroup> principal_normal_subgroups_parallel(const FiniteGroup& g);

}  // namespace kernels
}  // namespace adlab::groups
