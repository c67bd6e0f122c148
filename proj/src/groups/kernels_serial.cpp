#include <algorithm>
#include <numeric>
#include <set>

#include "adlab/arith.hpp"
#include "kernel_common.hpp"

namespace adlab::groups::kernels {

namespace detail {

CayleyGraph build_cayley_graph(const FiniteGroup& g, const std::vector<Element>& gens) {
  CayleyGraph cg;
  cg.order = g.order();
  cg.k = gens.size();
  cg.rmul.resize(static_cast<std::size_t>(cg.order) * cg.k);
  for (Element x = 0; x < cg.order; ++x) {
    for (std::size_t s = 0; s < cg.k; ++s) cg.rmul[x * cg.k + s] = g.mul(x, gens[s]);
  }
  std::vector<bool> seen(cg.order, false);
  cg.parent.assign(cg.order, 0);
  cg.via.assign(cg.order, 0);
  cg.bfs.push_back(g.identity());
  seen[g.identity()] = true;
  for (std::size_t i = 0; i < cg.bfs.size(); ++i) {
    const Element x = cg.bfs[i];
    for (std::size_t s = 0; s < cg.k; ++s) {
      const Element y = cg.rmul[x * cg.k + s];
      if (seen[y]) continue;
      seen[y] = true;
      cg.parent[y] = x;
      cg.via[y] = static_cast<std::uint32_t>(s);
      cg.bfs.push_back(y);
    }
  }
  return cg;
}

bool hom_labels(const CayleyGraph& cg, std::uint64_t p, std::uint64_t idx,
                std::vector<std::uint32_t>& labels) {
  std::vector<std::uint32_t> value(cg.k);
  for (auto& v : value) {
    v = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  labels.assign(cg.order, 0);
  for (std::size_t i = 1; i < cg.bfs.size(); ++i) {
    const Element x = cg.bfs[i];
    labels[x] = static_cast<std::uint32_t>((labels[cg.parent[x]] + value[cg.via[x]]) % p);
  }
  for (Element x = 0; x < cg.order; ++x) {
    for (std::size_t s = 0; s < cg.k; ++s) {
      if (labels[cg.rmul[x * cg.k + s]] != (labels[x] + value[s]) % p) return false;
    }
  }
  return true;
}

std::vector<MetacyclicPresentation> presentations_for(const FiniteGroup& g, Element y,
                                                      std::uint32_t max_element_order) {
  std::vector<MetacyclicPresentation> out;
  const std::uint64_t n = g.element_order(y);
  const std::uint64_t m = g.order() / n;
  if (m > max_element_order) return out;

  // discrete log table on <y>
  std::vector<std::int64_t> log(g.order(), -1);
  Element pw = g.identity();
  for (std::uint64_t k = 0; k < n; ++k) {
    log[pw] = static_cast<std::int64_t>(k);
    pw = g.mul(pw, y);
  }
  for (const auto& gen : g.generators()) {
    if (log[g.conj(y, gen.element)] < 0) return out;  // <y> not normal
  }
  const auto m_primes = arith::prime_divisors(m);
  for (Element x = 0; x < g.order(); ++x) {
    const Element xm = g.pow(x, static_cast<std::int64_t>(m));
    if (log[xm] < 0) continue;
    bool generates_quotient = true;
    for (auto l : m_primes) {
      if (log[g.pow(x, static_cast<std::int64_t>(m / l))] >= 0) {
        generates_quotient = false;
        break;
      }
    }
    if (!generates_quotient) continue;
    MetacyclicPresentation pres;
    pres.m = m;
    pres.n = n;
    pres.i = static_cast<std::uint64_t>(log[xm]);
    pres.t = n == 1 ? 1 : static_cast<std::uint64_t>(log[g.conj(y, x)]);
    pres.x = x;
    pres.y = y;
    out.push_back(pres);
  }
  return out;
}

std::vector<MetacyclicPresentation> finalize_presentations(
    std::vector<std::vector<MetacyclicPresentation>> per_candidate) {
  std::vector<MetacyclicPresentation> all;
  std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>> seen;
  for (auto& list : per_candidate) {
    for (auto& p : list) {
      if (seen.insert(p.tuple()).second) all.push_back(p);
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.n != b.n) return a.n > b.n;
    return std::tie(a.m, a.i, a.t) < std::tie(b.m, b.i, b.t);
  });
  return all;
}

std::vector<Subgroup> dedupe_subgroups(std::vector<std::optional<Subgroup>> per_element) {
  std::vector<Subgroup> out;
  for (auto& s : per_element) {
    if (!s) continue;
    if (std::none_of(out.begin(), out.end(), [&](const Subgroup& t) { return t == *s; })) {
      out.push_back(std::move(*s));
    }
  }
  return out;
}

}  // namespace detail

std::vector<bool> hom_kernel_intersection_serial(const FiniteGroup& g, std::uint64_t p,
                                                 const std::vector<Element>& gens) {
  const auto cg = detail::build_cayley_graph(g, gens);
  const std::uint64_t total = arith::ipow(p, static_cast<unsigned>(gens.size()));
  std::vector<bool> acc(g.order(), true);
  std::vector<std::uint32_t> labels;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    if (!detail::hom_labels(cg, p, idx, labels)) continue;
    for (Element x = 0; x < g.order(); ++x) {
      if (labels[x] != 0) acc[x] = false;
    }
  }
  return acc;
}

std::vector<MetacyclicPresentation> presentation_search_serial(const FiniteGroup& g) {
  const std::uint32_t exp = g.exponent();
  std::vector<std::vector<MetacyclicPresentation>> per(g.order());
  for (Element y = 0; y < g.order(); ++y) per[y] = detail::presentations_for(g, y, exp);
  return detail::finalize_presentations(std::move(per));
}

std::vector<Subgroup> principal_normal_subgroups_serial(const FiniteGroup& g) {
  std::vector<std::optional<Subgroup>> per(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    const Element gens[] = {x};
    per[x] = Subgroup::normal_closure(g, gens);
  }
  return detail::dedupe_subgroups(std::move(per));
}

}  // namespace adlab::groups::kernels
