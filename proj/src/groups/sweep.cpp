#include "adlab/groups/sweep.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "adlab/arith.hpp"
#include "adlab/error.hpp"
#include "adlab/groups/algorithms.hpp"
#include "adlab/groups/presets.hpp"

namespace adlab::groups {

namespace {

Matrix3 unitriangular(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return Matrix3{{{1, a, c}, {0, 1, b}, {0, 0, 1}}};
}

std::uint32_t code(const Matrix3& m, std::uint32_t p) { return m[0][1] + p * (m[1][2] + p * m[0][2]); }

// Codes of the subgroup of U_3(F_p) generated by the three matrices.
std::vector<std::uint32_t> image_of(const std::array<Matrix3, 3>& phi, std::uint32_t p) {
  std::set<std::uint32_t> seen{code(identity_matrix(), p)};
  std::vector<Matrix3> queue{identity_matrix()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : phi) {
      Matrix3 h = matmul(queue[i], g, p);
      if (seen.insert(code(h, p)).second) queue.push_back(h);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

SemidirectSweep semidirect_square_sweep(std::uint64_t p, Exec exec) {
  if (!arith::is_prime(p) || p == 2) throw Error("NotPrime", "sweep needs an odd prime");
  const auto q = static_cast<std::uint32_t>(p);

  std::vector<Matrix3> elements;
  for (std::uint32_t c = 0; c < q; ++c)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t a = 0; a < q; ++a) elements.push_back(unitriangular(a, b, c));
  auto commute = [&](const Matrix3& x, const Matrix3& y) { return matmul(x, y, p) == matmul(y, x, p); };

  // for p odd every unitriangular matrix has order dividing p, so homomorphisms
  // from F_p^3 are exactly the pairwise commuting triples
  std::vector<std::array<Matrix3, 3>> homs;
  for (const auto& x : elements)
    for (const auto& y : elements) {
      if (!commute(x, y)) continue;
      for (const auto& z : elements) {
        if (commute(x, z) && commute(y, z)) homs.push_back({x, y, z});
      }
    }

  const auto count = static_cast<std::int64_t>(homs.size());
  std::vector<std::uint32_t> ranks(homs.size());
  auto rank_of = [&](std::int64_t idx) {
    const FiniteGroup g = semidirect_square(p, homs[idx], "double-sweep", {false, true});
    const Subgroup phi = frattini_by_powers_and_commutators(g, p);
    ranks[idx] = arith::valuation(g.order() / phi.order(), p);
  };
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < count; ++i) rank_of(i);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) rank_of(i);
  }

  SemidirectSweep out;
  out.prime = p;
  out.homomorphisms = homs.size();
  std::map<std::vector<std::uint32_t>, std::pair<std::size_t, std::uint32_t>> classes;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    ++out.rank_histogram[ranks[i]];
    auto key = image_of(homs[i], q);
    auto [it, fresh] = classes.emplace(std::move(key), std::pair{i, ranks[i]});
    if (!fresh && it->second.second != ranks[i]) out.constant_on_classes = false;
  }
  out.image_classes = classes.size();
  for (const auto& [image, rep] : classes) {
    const FiniteGroup g = semidirect_square(p, homs[rep.first], "double-sweep-rep");
    if (frattini(g, exec).rank != rep.second) out.constant_on_classes = false;
  }
  out.min_rank = out.rank_histogram.begin()->first;
  out.max_rank = out.rank_histogram.rbegin()->first;
  return out;
}

}  // namespace adlab::groups
