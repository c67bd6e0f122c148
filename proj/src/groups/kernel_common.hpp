#pragma once

// Shared pieces of the serial and parallel kernels. Each function handles one
// independent work item so the two drivers differ only in how they iterate.

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "adlab/groups/kernels.hpp"

namespace adlab::groups::kernels::detail {

/// Right-multiplication table by generators plus a BFS spanning tree.
struct CayleyGraph {
  std::uint32_t order = 0;
  std::size_t k = 0;
  std::vector<Element> bfs;     // bfs[0] is the identity
  std::vector<Element> parent;  // parent in the spanning tree
  std::vector<std::uint32_t> via;
  std::vector<Element> rmul;  // rmul[g * k + s] = g * gens[s]
};

CayleyGraph build_cayley_graph(const FiniteGroup& g, const std::vector<Element>& gens);

/// Labels of the homomorphism fixed by the assignment with index idx (base-p digits),
/// or nullopt when the assignment does not extend to a homomorphism.
bool hom_labels(const CayleyGraph& cg, std::uint64_t p, std::uint64_t idx,
                std::vector<std::uint32_t>& labels);

/// Presentations contributed by candidate y. Returns an empty list when <y> is not
/// normal or G/<y> is not cyclic.
std::vector<MetacyclicPresentation> presentations_for(const FiniteGroup& g, Element y,
                                                      std::uint32_t max_element_order);

/// Sorts and keeps the first witness per tuple (input in candidate order).
std::vector<MetacyclicPresentation> finalize_presentations(
    std::vector<std::vector<MetacyclicPresentation>> per_candidate);

std::vector<Subgroup> dedupe_subgroups(std::vector<std::optional<Subgroup>> per_element);

}  // namespace adlab::groups::kernels::detail
