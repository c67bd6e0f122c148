#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace adlab::conditions {

/// Conditions 1..9, plus kCX for the alias of condition 6.
using Condition = int;
constexpr Condition kCX = 10;
constexpr int kNumConditions = 9;

enum class Mode { General, GaloisMK, Tame };

Mode parse_mode(std::string_view text);
std::string to_string(Mode mode);

/// Accepts "5", "C5", "5*", "CX", "X". Errors: ParseError.
Condition parse_condition(std::string_view text);
/// "5", "CX"; starred in Tame mode.
std::string condition_name(Condition c, Mode mode = Mode::General);

struct Edge {
  Condition from = 0;
  Condition to = 0;
  auto operator<=>(const Edge&) const = default;
};

std::string edge_name(const Edge& e, Mode mode = Mode::General);

std::vector<Edge> base_edges(Mode mode);

/// Reflexive-transitive closure of the base edges of one mode.
class Lattice {
 public:
  explicit Lattice(Mode mode);

  Mode mode() const { return mode_; }
  bool reaches(Condition x, Condition y) const { return reach_[x][y]; }
  /// A shortest edge path x -> y (empty for x = y); nothing when not in the closure.
  std::optional<std::vector<Edge>> path(Condition x, Condition y) const;
  /// Every closure pair, reflexive ones included.
  std::vector<Edge> closure() const;
  /// Conditions reachable from x, ascending.
  std::vector<Condition> reachable_from(Condition x) const;

 private:
  Mode mode_;
  std::vector<Edge> edges_;
  std::array<std::array<bool, kCX + 1>, kCX + 1> reach_{};
};

/// Claims of one example: the conditions it satisfies and violates.
struct ExampleClaims {
  std::string id;
  std::vector<Condition> holds;
  std::vector<Condition> fails;
  bool galois = true;  // whether M/K is Galois in the example
  /// Non-implications (A, B): A holds and B fails.
  std::vector<Edge> base_pairs() const;
};

struct Registry {
  std::vector<ExampleClaims> examples;

  Registry without(std::string_view id) const;
};

/// The seven built-in examples.
Registry default_registry();

/// Reads certificate or claims documents: one object, an array, or {"certificates": [...]}.
Registry registry_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExampleClaims& claims);

struct ImplicationVerdict {
  enum class Kind { Proved, Refuted, Undecided } kind = Kind::Undecided;
  std::vector<Edge> path;  // Proved
  std::string example;     // Refuted: source of the base pair
  Edge base;               // Refuted: (A, B) with A =>* x and y =>* B
  std::vector<Edge> left;  // A =>* x
  std::vector<Edge> right; // y =>* B
};

/// Proved if (x, y) is in the closure; Refuted if some base pair (A, B) of an
/// applicable example has A =>* x and y =>* B; Undecided otherwise. Examples with
/// non-Galois M/K only refute in General mode; Tame mode uses no examples.
ImplicationVerdict implies(Condition x, Condition y, const Lattice& lattice, const Registry& registry);

/// Replays a verdict's path or deduction against the lattice and registry.
bool replay(const ImplicationVerdict& v, Condition x, Condition y, const Lattice& lattice,
            const Registry& registry);

struct MatrixReport {
  Mode mode = Mode::General;
  std::array<std::array<ImplicationVerdict, kNumConditions + 1>, kNumConditions + 1> cells{};
  std::size_t proved = 0;     // off-diagonal
  std::size_t refuted = 0;
  std::size_t undecided = 0;
  std::vector<Edge> undecided_pairs;
  std::vector<Edge> contradictions;  // base pairs lying in the closure
};

MatrixReport implication_matrix(const Lattice& lattice, const Registry& registry);

/// Per example: the pairs left undecided in General mode once its base pairs are removed.
std::vector<std::pair<std::string, std::vector<Edge>>> ablation(const Registry& registry);

nlohmann::json to_json(const ImplicationVerdict& v, Mode mode);
nlohmann::json to_json(const MatrixReport& r);

}  // namespace adlab::conditions
