#include <omp.h>

#include "adlab/arith.hpp"
#include "kernel_common.hpp"

namespace adlab::groups::kernels {

std::vector<bool> hom_kernel_intersection_parallel(const FiniteGroup& g, std::uint64_t p,
                                                   const std::vector<Element>& gens) {
  const auto cg = detail::build_cayley_graph(g, gens);
  const auto total = static_cast<std::int64_t>(arith::ipow(p, static_cast<unsigned>(gens.size())));
  std::vector<char> acc(g.order(), 1);
#pragma omp parallel
  {
    std::vector<char> local(g.order(), 1);
    std::vector<std::uint32_t> labels;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t idx = 1; idx < total; ++idx) {
      if (!detail::hom_labels(cg, p, static_cast<std::uint64_t>(idx), labels)) continue;
      for (Element x = 0; x < g.order(); ++x) {
        if (labels[x] != 0) local[x] = 0;
      }
    }
#pragma omp critical
    for (Element x = 0; x < g.order(); ++x) acc[x] = static_cast<char>(acc[x] & local[x]);
  }
  return std::vector<bool>(acc.begin(), acc.end());
}

std::vector<MetacyclicPresentation> presentation_search_parallel(const FiniteGroup& g) {
  const std::uint32_t exp = g.exponent();
  const auto order = static_cast<std::int64_t>(g.order());
  std::vector<std::vector<MetacyclicPresentation>> per(g.order());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t y = 0; y < order; ++y) {
    per[y] = detail::presentations_for(g, static_cast<Element>(y), exp);
  }
  return detail::finalize_presentations(std::move(per));
}

std::vector<Subgroup> principal_normal_subgroups_parallel(const FiniteGroup& g) {
  const auto order = static_cast<std::int64_t>(g.order());
  std::vector<std::optional<Subgroup>> per(g.order());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t x = 0; x < order; ++x) {
    const Element gens[] = {static_cast<Element>(x)};
    per[x] = Subgroup::normal_closure(g, gens);
  }
  return detail::dedupe_subgroups(std::move(per));
}

}  // namespace adlab::groups::kernels
