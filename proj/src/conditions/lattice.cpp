#include <algorithm>
#include <deque>

#include "adlab/conditions.hpp"
#include "adlab/error.hpp"

namespace adlab::conditions {

Mode parse_mode(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "general") return Mode::General;
  if (t == "galoismk" || t == "galois") return Mode::GaloisMK;
  if (t == "tame") return Mode::Tame;
  throw Error("ParseError", "unknown mode '" + std::string(text) + "'");
}

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::General:
      return "General";
    case Mode::GaloisMK:
      return "GaloisMK";
    case Mode::Tame:
      break;
  }
  return "Tame";
}

Condition parse_condition(std::string_view text) {
  auto t = text;
  if (!t.empty() && t.back() == '*') t.remove_suffix(1);
  if (!t.empty() && (t.front() == 'C' || t.front() == 'c')) t.remove_prefix(1);
  if (t == "X" || t == "x") return kCX;
  if (t.size() == 1 && t[0] >= '1' && t[0] <= '9') return t[0] - '0';
  throw Error("ParseError", "unknown condition '" + std::string(text) + "'");
}

std::string condition_name(Condition c, Mode mode) {
  std::string out = c == kCX ? "CX" : std::to_string(c);
  if (mode == Mode::Tame) out += "*";
  return out;
}

std::string edge_name(const Edge& e, Mode mode) {
  return condition_name(e.from, mode) + "->" + condition_name(e.to, mode);
}

std::vector<Edge> base_edges(Mode mode) {
  std::vector<Edge> edges = {{6, 5}, {6, 7}, {7, 4}, {7, 8}, {7, 9}, {4, 3}, {8, 3},
                             {3, 1}, {2, 1}, {5, 1}, {9, 1}, {kCX, 6}, {6, kCX}};
  if (mode == Mode::GaloisMK) edges.push_back({3, 2});
  if (mode == Mode::Tame) edges.push_back({1, 6});
  std::sort(edges.begin(), edges.end());
  return edges;
}

Lattice::Lattice(Mode mode) : mode_(mode), edges_(base_edges(mode)) {
  for (Condition c = 1; c <= kCX; ++c) reach_[c][c] = true;
  for (const auto& e : edges_) reach_[e.from][e.to] = true;
  for (Condition k = 1; k <= kCX; ++k) {
    for (Condition i = 1; i <= kCX; ++i) {
      for (Condition j = 1; j <= kCX; ++j) {
        if (reach_[i][k] && reach_[k][j]) reach_[i][j] = true;
      }
    }
  }
}

std::optional<std::vector<Edge>> Lattice::path(Condition x, Condition y) const {
  if (!reach_[x][y]) return std::nullopt;
  std::array<int, kCX + 1> parent{};
  parent.fill(-1);
  parent[x] = x;
  std::deque<Condition> queue{x};
  while (!queue.empty() && parent[y] < 0) {
    const Condition c = queue.front();
    queue.pop_front();
    for (const auto& e : edges_) {
      if (e.from == c && parent[e.to] < 0) {
        parent[e.to] = c;
        queue.push_back(e.to);
      }
    }
  }
  std::vector<Edge> out;
  for (Condition c = y; c != x; c = parent[c]) out.push_back({parent[c], c});
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Edge> Lattice::closure() const {
  std::vector<Edge> out;
  for (Condition i = 1; i <= kCX; ++i) {
    for (Condition j = 1; j <= kCX; ++j) {
      if (reach_[i][j]) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<Condition> Lattice::reachable_from(Condition x) const {
  std::vector<Condition> out;
  for (Condition j = 1; j <= kCX; ++j) {
    if (reach_[x][j]) out.push_back(j);
  }
  return out;
}

std::vector<Edge> ExampleClaims::base_pairs() const {
  std::vector<Edge> out;
  for (Condition a : holds) {
    for (Condition b : fails) out.push_back({a, b});
  }
  return out;
}

Registry Registry::without(std::string_view id) const {
  Registry out;
  for (const auto& e : examples) {
    if (e.id != id) out.examples.push_back(e);
  }
  return out;
}

Registry default_registry() {
  return {{
      {"nogal", {6}, {2}, false},
      {"ex1", {2, 9, 5}, {3}, true},
      {"ex2", {8, 2}, {9, 4}, true},
      {"ex3", {4}, {9, 8, 5}, true},
      {"ex4", {5}, {9}, true},
      {"ex5", {7, 2}, {5}, true},
      {"cyclic", {1, 3, 4, 5, 6, 7, 8, 9}, {}, true},
  }};
}

namespace {

std::vector<Condition> conditions_from_json(const nlohmann::json& j) {
  std::vector<Condition> out;
  for (const auto& c : j) {
    out.push_back(c.is_number_integer() ? c.get<int>() : parse_condition(c.get<std::string>()));
    if (out.back() < 1 || out.back() > kCX) throw Error("ParseError", "condition out of range");
  }
  return out;
}

}  // namespace

Registry registry_from_json(const nlohmann::json& j) {
  try {
    Registry out;
    const nlohmann::json* docs = &j;
    if (j.is_object() && j.contains("certificates")) docs = &j.at("certificates");
    auto add = [&](const nlohmann::json& d) {
      ExampleClaims c;
      c.id = d.at("id").get<std::string>();
      c.holds = conditions_from_json(d.value("holds", nlohmann::json::array()));
      c.fails = conditions_from_json(d.value("fails", nlohmann::json::array()));
      c.galois = d.value("galois", true);
      out.examples.push_back(std::move(c));
    };
    if (docs->is_array()) {
      for (const auto& d : *docs) add(d);
    } else {
      add(*docs);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error("ParseError", std::string("registry: ") + e.what());
  }
}

nlohmann::json to_json(const ExampleClaims& claims) {
  return {{"id", claims.id}, {"holds", claims.holds}, {"fails", claims.fails}, {"galois", claims.galois}};
}

namespace {

bool applies(const ExampleClaims& e, Mode mode) {
  return mode == Mode::General || (mode == Mode::GaloisMK && e.galois);
}

}  // namespace

ImplicationVerdict implies(Condition x, Condition y, const Lattice& lattice, const Registry& registry) {
  ImplicationVerdict v;
  if (auto p = lattice.path(x, y)) {
    v.kind = ImplicationVerdict::Kind::Proved;
    v.path = std::move(*p);
    return v;
  }
  for (const auto& e : registry.examples) {
    if (!applies(e, lattice.mode())) continue;
    for (const auto& b : e.base_pairs()) {
      if (lattice.reaches(b.from, x) && lattice.reaches(y, b.to)) {
        v.kind = ImplicationVerdict::Kind::Refuted;
        v.example = e.id;
        v.base = b;
        v.left = *lattice.path(b.from, x);
        v.right = *lattice.path(y, b.to);
        return v;
      }
    }
  }
  return v;
}

namespace {

bool chain(const std::vector<Edge>& path, Condition from, Condition to, const Lattice& lattice) {
  const auto edges = base_edges(lattice.mode());
  Condition at = from;
  for (const auto& e : path) {
    if (e.from != at || !std::binary_search(edges.begin(), edges.end(), e)) return false;
    at = e.to;
  }
  return at == to;
}

}  // namespace

bool replay(const ImplicationVerdict& v, Condition x, Condition y, const Lattice& lattice,
            const Registry& registry) {
  switch (v.kind) {
    case ImplicationVerdict::Kind::Proved:
      return chain(v.path, x, y, lattice);
    case ImplicationVerdict::Kind::Refuted: {
      const auto it = std::find_if(registry.examples.begin(), registry.examples.end(),
                                   [&](const ExampleClaims& e) { return e.id == v.example; });
      if (it == registry.examples.end() || !applies(*it, lattice.mode())) return false;
      const auto pairs = it->base_pairs();
      return std::find(pairs.begin(), pairs.end(), v.base) != pairs.end() &&
             chain(v.left, v.base.from, x, lattice) && chain(v.right, y, v.base.to, lattice);
    }
    case ImplicationVerdict::Kind::Undecided:
      break;
  }
  return true;
}

MatrixReport implication_matrix(const Lattice& lattice, const Registry& registry) {
  MatrixReport r;
  r.mode = lattice.mode();
  for (Condition x = 1; x <= kNumConditions; ++x) {
    for (Condition y = 1; y <= kNumConditions; ++y) {
      auto& cell = r.cells[x][y] = implies(x, y, lattice, registry);
      if (x == y) continue;
      switch (cell.kind) {
        case ImplicationVerdict::Kind::Proved:
          ++r.proved;
          break;
        case ImplicationVerdict::Kind::Refuted:
          ++r.refuted;
          break;
        case ImplicationVerdict::Kind::Undecided:
          ++r.undecided;
          r.undecided_pairs.push_back({x, y});
          break;
      }
    }
  }
  for (const auto& e : registry.examples) {
    if (!applies(e, lattice.mode())) continue;
    for (const auto& b : e.base_pairs()) {
      if (lattice.reaches(b.from, b.to)) r.contradictions.push_back(b);
    }
  }
  return r;
}

std::vector<std::pair<std::string, std::vector<Edge>>> ablation(const Registry& registry) {
  const Lattice lattice(Mode::General);
  std::vector<std::pair<std::string, std::vector<Edge>>> out;
  for (const auto& e : registry.examples) {
    if (e.base_pairs().empty()) continue;
    out.emplace_back(e.id, implication_matrix(lattice, registry.without(e.id)).undecided_pairs);
  }
  return out;
}

namespace {

nlohmann::json path_json(const std::vector<Edge>& path, Mode mode) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : path) out.push_back(edge_name(e, mode));
  return out;
}

std::string kind_name(ImplicationVerdict::Kind k) {
  switch (k) {
    case ImplicationVerdict::Kind::Proved:
      return "proved";
    case ImplicationVerdict::Kind::Refuted:
      return "refuted";
    case ImplicationVerdict::Kind::Undecided:
      break;
  }
  return "undecided";
}

}  // namespace

nlohmann::json to_json(const ImplicationVerdict& v, Mode mode) {
  nlohmann::json out = {{"verdict", kind_name(v.kind)}};
  if (v.kind == ImplicationVerdict::Kind::Proved) out["path"] = path_json(v.path, mode);
  if (v.kind == ImplicationVerdict::Kind::Refuted) {
    out["example"] = v.example;
    out["base"] = {condition_name(v.base.from, mode), condition_name(v.base.to, mode)};
    out["left"] = path_json(v.left, mode);
    out["right"] = path_json(v.right, mode);
  }
  return out;
}

nlohmann::json to_json(const MatrixReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json table = nlohmann::json::array();
  for (Condition x = 1; x <= kNumConditions; ++x) {
    std::string row;
    for (Condition y = 1; y <= kNumConditions; ++y) {
      const auto k = r.cells[x][y].kind;
      row += k == ImplicationVerdict::Kind::Proved ? 'P' : k == ImplicationVerdict::Kind::Refuted ? 'R' : '?';
    }
    table.push_back(row);
  }
  nlohmann::json undecided = nlohmann::json::array();
  for (const auto& e : r.undecided_pairs) undecided.push_back(edge_name(e, r.mode));
  nlohmann::json contradictions = nlohmann::json::array();
  for (const auto& e : r.contradictions) contradictions.push_back(edge_name(e, r.mode));
  return {{"mode", to_string(r.mode)},
          {"table", std::move(table)},
          {"proved", r.proved},
          {"refuted", r.refuted},
          {"undecided", r.undecided},
          {"undecided_pairs", std::move(undecided)},
          {"contradictions", std::move(contradictions)}};
}

}  // namespace adlab::conditions
