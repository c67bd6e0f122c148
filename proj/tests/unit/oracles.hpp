#pragma once

// Brute-force reference computations used only by the tests. They work on the
// raw multiplication oracle and share no code with the library algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "adlab/groups/finite_group.hpp"

namespace oracle {

using adlab::groups::Element;
using adlab::groups::FiniteGroup;

inline std::vector<char> closure(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> queue{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (Element s : gens) {
      const Element h = g.mul(queue[k], s);
      if (!in[h]) {
        in[h] = 1;
        queue.push_back(h);
      }
    }
  }
  return in;
}

inline std::size_t count(const std::vector<char>& mask) {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), 1));
}

inline bool generates(const FiniteGroup& g, const std::vector<Element>& gens) {
  return count(closure(g, gens)) == g.order();
}

/// Smallest k such that some k-tuple generates G (exhaustive, for small groups).
inline std::uint32_t min_generators(const FiniteGroup& g, std::uint32_t kmax) {
  if (g.order() == 1) return 0;
  for (std::uint32_t k = 1; k <= kmax; ++k) {
    std::vector<Element> t(k, 0);
    for (;;) {
      if (generates(g, t)) return k;
      std::size_t i = 0;
      while (i < k && ++t[i] == g.order()) t[i++] = 0;
      if (i == k) break;
    }
  }
  return kmax + 1;
}

/// Subgroup generated by every commutator and every p-th power.
inline std::vector<char> commutators_and_powers(const FiniteGroup& g, std::uint64_t p) {
  std::vector<Element> gens;
  for (Element a = 0; a < g.order(); ++a) {
    gens.push_back(g.pow(a, static_cast<std::int64_t>(p)));
    for (Element b = 0; b < g.order(); ++b) gens.push_back(g.commutator(a, b));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return closure(g, gens);
}

inline std::vector<char> derived(const FiniteGroup& g) {
  std::vector<Element> gens;
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) gens.push_back(g.commutator(a, b));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return closure(g, gens);
}

inline std::vector<char> normal_closure(const FiniteGroup& g, Element x) {
  std::vector<Element> conj;
  for (Element h = 0; h < g.order(); ++h) conj.push_back(g.mul(g.inv(h), g.mul(x, h)));
  return closure(g, conj);
}

/// A generating tuple of size k found by seeded random search, if any.
inline bool random_generating_tuple(const FiniteGroup& g, std::uint32_t k, int tries, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<Element> pick(0, g.order() - 1);
  for (int t = 0; t < tries; ++t) {
    std::vector<Element> gens(k);
    for (auto& x : gens) x = pick(rng);
    if (generates(g, gens)) return true;
  }
  return false;
}

inline std::uint32_t log_base(std::uint64_t n, std::uint64_t p) {
  std::uint32_t k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace oracle
