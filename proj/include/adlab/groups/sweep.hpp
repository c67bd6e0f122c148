#pragma once

#include <cstdint>
#include <map>

#include "adlab/groups/kernels.hpp"

namespace adlab::groups {

/// Frattini ranks of F_p^3 x|_phi F_p^3 over every homomorphism phi from F_p^3 into the
/// unitriangular group U_3(F_p).
///
/// The rank is computed for each phi via G^p[G,G]. Precomposing phi with an automorphism
/// of the acting factor gives an isomorphic product, so phi with the same image subgroup
/// yield isomorphic groups; one representative per image additionally runs the
/// maximal-subgroup route, and the sweep checks that ranks are constant on image classes.
struct SemidirectSweep {
  std::uint64_t prime = 0;
  std::size_t homomorphisms = 0;
  std::size_t image_classes = 0;
  std::uint32_t min_rank = 0;
  std::uint32_t max_rank = 0;
  std::map<std::uint32_t, std::size_t> rank_histogram;  // rank -> number of phi
  bool constant_on_classes = true;
};

SemidirectSweep semidirect_square_sweep(std::uint64_t p, Exec exec = Exec::Parallel);

}  // namespace adlab::groups
