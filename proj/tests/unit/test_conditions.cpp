#include <gtest/gtest.h>

#include <array>
#include <set>

#include "adlab/conditions.hpp"
#include "adlab/error.hpp"

using namespace adlab::conditions;
using Kind = ImplicationVerdict::Kind;

namespace {

using Reach = std::array<std::array<bool, 11>, 11>;

// Warshall closure of hand-typed edges; independent of the library lattice.
Reach warshall(const std::vector<std::pair<int, int>>& edges) {
  Reach r{};
  for (int c = 1; c <= 10; ++c) r[c][c] = true;
  for (auto [a, b] : edges) r[a][b] = true;
  for (int k = 1; k <= 10; ++k)
    for (int i = 1; i <= 10; ++i)
      for (int j = 1; j <= 10; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

const std::vector<std::pair<int, int>> kGeneral = {{6, 5}, {6, 7}, {7, 4}, {7, 8}, {7, 9}, {4, 3},
                                                   {8, 3}, {3, 1}, {2, 1}, {5, 1}, {9, 1}, {10, 6}, {6, 10}};

// (example, holds, fails, galois)
struct Claims {
  std::string id;
  std::vector<int> holds, fails;
  bool galois;
};
const std::vector<Claims> kClaims = {{"nogal", {6}, {2}, false},   {"ex1", {2, 9, 5}, {3}, true},
                                     {"ex2", {8, 2}, {9, 4}, true}, {"ex3", {4}, {9, 8, 5}, true},
                                     {"ex4", {5}, {9}, true},       {"ex5", {7, 2}, {5}, true}};

bool refuted_by_oracle(int x, int y, const Reach& r, const std::string& skip = "") {
  for (const auto& c : kClaims) {
    if (c.id == skip) continue;
    for (int a : c.holds)
      for (int b : c.fails)
        if (r[a][x] && r[y][b]) return true;
  }
  return false;
}

}  // namespace

TEST(Conditions, ParseAndNames) {
  EXPECT_EQ(parse_condition("5"), 5);
  EXPECT_EQ(parse_condition("C7"), 7);
  EXPECT_EQ(parse_condition("3*"), 3);
  EXPECT_EQ(parse_condition("CX"), kCX);
  EXPECT_EQ(condition_name(kCX), "CX");
  EXPECT_EQ(condition_name(4, Mode::Tame), "4*");
  EXPECT_EQ(parse_mode("galois"), Mode::GaloisMK);
  EXPECT_THROW(parse_condition("12"), adlab::Error);
  EXPECT_THROW(parse_condition("abc"), adlab::Error);
}

TEST(Conditions, GeneralClosureMatchesWarshall) {
  const Lattice lat(Mode::General);
  const auto r = warshall(kGeneral);
  for (int x = 1; x <= 10; ++x)
    for (int y = 1; y <= 10; ++y) EXPECT_EQ(lat.reaches(x, y), r[x][y]) << x << "->" << y;
  EXPECT_TRUE(lat.reaches(6, 1));
  EXPECT_FALSE(lat.reaches(3, 2));
}

TEST(Conditions, GaloisClosureAddsThreeToTwo) {
  auto edges = kGeneral;
  edges.push_back({3, 2});
  const auto r = warshall(edges);
  const Lattice lat(Mode::GaloisMK);
  for (int x = 1; x <= 10; ++x)
    for (int y = 1; y <= 10; ++y) EXPECT_EQ(lat.reaches(x, y), r[x][y]);
  EXPECT_TRUE(lat.reaches(7, 2));
  const auto path = lat.path(7, 2);
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(path->size(), 3u);
}

TEST(Conditions, PathsReplay) {
  for (auto mode : {Mode::General, Mode::GaloisMK, Mode::Tame}) {
    const Lattice lat(mode);
    const auto edges = base_edges(mode);
    const std::set<Edge> edge_set(edges.begin(), edges.end());
    for (int x = 1; x <= 10; ++x) {
      for (int y = 1; y <= 10; ++y) {
        const auto p = lat.path(x, y);
        ASSERT_EQ(p.has_value(), lat.reaches(x, y));
        if (!p) continue;
        int at = x;
        for (const auto& e : *p) {
          EXPECT_EQ(e.from, at);
          EXPECT_TRUE(edge_set.count(e));
          at = e.to;
        }
        EXPECT_EQ(at, y);
      }
    }
  }
}

TEST(Conditions, GeneralMatrixCountsAgreeWithOracle) {
  const Lattice lat(Mode::General);
  const auto r = warshall(kGeneral);
  std::size_t proved = 0, refuted = 0;
  for (int x = 1; x <= 9; ++x)
    for (int y = 1; y <= 9; ++y) {
      if (x == y) continue;
      if (r[x][y])
        ++proved;
      else if (refuted_by_oracle(x, y, r))
        ++refuted;
    }
  const auto m = implication_matrix(lat, default_registry());
  EXPECT_EQ(m.proved, proved);
  EXPECT_EQ(m.refuted, refuted);
  EXPECT_EQ(m.proved, 20u);
  EXPECT_EQ(m.refuted, 52u);
  EXPECT_EQ(m.undecided, 0u);
  EXPECT_TRUE(m.undecided_pairs.empty());
  EXPECT_TRUE(m.contradictions.empty());
}

TEST(Conditions, VerdictsReplay) {
  const auto reg = default_registry();
  for (auto mode : {Mode::General, Mode::GaloisMK, Mode::Tame}) {
    const Lattice lat(mode);
    for (int x = 1; x <= 9; ++x)
      for (int y = 1; y <= 9; ++y) {
        const auto v = implies(x, y, lat, reg);
        EXPECT_TRUE(replay(v, x, y, lat, reg));
        if (v.kind == Kind::Refuted) EXPECT_FALSE(lat.reaches(x, y));
      }
  }
}

TEST(Conditions, NamedExamples) {
  const Lattice lat(Mode::General);
  const auto reg = default_registry();
  EXPECT_EQ(implies(6, 5, lat, reg).kind, Kind::Proved);
  const auto v95 = implies(9, 5, lat, reg);
  EXPECT_EQ(v95.kind, Kind::Refuted);
  EXPECT_EQ(v95.example, "ex5");
  EXPECT_EQ(v95.base, (Edge{7, 5}));
  const auto v62 = implies(6, 2, lat, reg);
  EXPECT_EQ(v62.kind, Kind::Refuted);
  EXPECT_EQ(v62.base, (Edge{6, 2}));
  EXPECT_EQ(implies(3, 1, lat, Registry{}).kind, Kind::Proved);
  EXPECT_EQ(implies(1, 3, lat, Registry{}).kind, Kind::Undecided);
}

TEST(Conditions, GaloisModeExcludesNonGaloisExample) {
  const Lattice lat(Mode::GaloisMK);
  const auto reg = default_registry();
  EXPECT_EQ(implies(6, 2, lat, reg).kind, Kind::Proved);
  const auto m = implication_matrix(lat, reg);
  EXPECT_TRUE(m.contradictions.empty());
  for (const auto& ex : reg.examples) {
    if (!ex.galois) continue;
    for (const auto& bp : ex.base_pairs()) EXPECT_FALSE(lat.reaches(bp.from, bp.to)) << ex.id;
  }
}

TEST(Conditions, AblationEachExampleIsNeeded) {
  const auto r = warshall(kGeneral);
  const auto abl = ablation(default_registry());
  ASSERT_EQ(abl.size(), 6u);
  for (const auto& [id, pairs] : abl) {
    EXPECT_FALSE(pairs.empty()) << id;
    std::size_t expect = 0;
    for (int x = 1; x <= 9; ++x)
      for (int y = 1; y <= 9; ++y)
        if (x != y && !r[x][y] && !refuted_by_oracle(x, y, r, id)) ++expect;
    EXPECT_EQ(pairs.size(), expect) << id;
  }
  const Lattice lat(Mode::General);
  const auto without4 = implication_matrix(lat, default_registry().without("ex4"));
  bool has59 = false;
  for (const auto& e : without4.undecided_pairs) has59 = has59 || e == Edge{5, 9};
  EXPECT_TRUE(has59);
  const auto empty = implication_matrix(lat, Registry{});
  EXPECT_EQ(empty.proved, 20u);
  EXPECT_EQ(empty.refuted, 0u);
  EXPECT_EQ(empty.undecided, 52u);
}

TEST(Conditions, TameClique) {
  const Lattice lat(Mode::Tame);
  const auto reg = default_registry();
  const std::vector<int> clique = {1, 3, 4, 5, 6, 7, 8, 9};
  for (int x : clique)
    for (int y : clique) EXPECT_EQ(implies(x, y, lat, reg).kind, Kind::Proved) << x << "*->" << y << "*";
  EXPECT_NE(implies(1, 2, lat, reg).kind, Kind::Proved);
  EXPECT_EQ(implies(2, 1, lat, reg).kind, Kind::Proved);
  EXPECT_EQ(condition_name(implies(1, 2, lat, reg).kind == Kind::Undecided ? 2 : 0, Mode::Tame), "2*");
}

TEST(Conditions, RegistryJsonRoundTrip) {
  const auto reg = default_registry();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& ex : reg.examples) arr.push_back(to_json(ex));
  const auto back = registry_from_json(arr);
  ASSERT_EQ(back.examples.size(), reg.examples.size());
  for (std::size_t k = 0; k < reg.examples.size(); ++k) {
    EXPECT_EQ(back.examples[k].id, reg.examples[k].id);
    EXPECT_EQ(back.examples[k].holds, reg.examples[k].holds);
    EXPECT_EQ(back.examples[k].fails, reg.examples[k].fails);
    EXPECT_EQ(back.examples[k].galois, reg.examples[k].galois);
  }
  const auto wrapped = registry_from_json({{"certificates", arr}});
  EXPECT_EQ(wrapped.examples.size(), reg.examples.size());
  const Lattice lat(Mode::General);
  EXPECT_EQ(implication_matrix(lat, back).undecided, 0u);
}
