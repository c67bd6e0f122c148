#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "adlab/fields.hpp"
#include "adlab/groups/finite_group.hpp"
#include "adlab/groups/subgroup.hpp"

namespace adlab::brauer {

/// An element a/m of Q/Z in lowest terms with 0 <= a < m.
class Invariant {
 public:
  Invariant() = default;
  /// Reduces num/den mod 1; num may be negative. Errors: InvalidInvariant (den = 0).
  static Invariant make(std::int64_t num, std::uint64_t den);
  /// "a/m", "-a/m" or "0".
  static Invariant parse(std::string_view text);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }
  std::uint64_t order() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Invariant operator+(const Invariant& o) const;
  Invariant operator-() const;
  Invariant scaled(std::uint64_t k) const;
  std::string to_string() const;

  bool operator==(const Invariant&) const = default;
  /// Orders by value in [0, 1).
  std::strong_ordering operator<=>(const Invariant& o) const;

 private:
  Invariant(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {}
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

/// A prime of the base field: fiber j above the rational prime q, or fiber j of a
/// symbolically labelled prime with user-supplied data. Written "q:j" or "label:j".
struct PrimeSlot {
  std::uint64_t prime = 0;
  std::string label;
  std::uint64_t fiber = 0;

  static PrimeSlot parse(std::string_view text);
  std::string to_string() const;
  /// The rational prime or the label, without the fiber.
  std::string key() const;

  auto operator<=>(const PrimeSlot&) const = default;
};

/// A Brauer class of a number field given by its Hasse invariants.
class BrauerClass {
 public:
  BrauerClass() = default;
  /// Zero invariants are dropped; repeated slots are rejected.
  /// Errors: NonZeroSum, DuplicateSlot.
  static BrauerClass make(std::string base_field,
                          const std::vector<std::pair<PrimeSlot, Invariant>>& assignments);

  const std::string& base_field() const { return base_field_; }
  const std::map<PrimeSlot, Invariant>& invariants() const { return invariants_; }
  Invariant at(const PrimeSlot& slot) const;
  bool is_zero() const { return invariants_.empty(); }

  bool operator==(const BrauerClass&) const = default;

 private:
  std::string base_field_ = "K";
  std::map<PrimeSlot, Invariant> invariants_;
};

/// Index = exponent = lcm of the local orders.
std::uint64_t index(const BrauerClass& d);

/// Restriction to M: a K-slot with data (g_rel, n_rel) becomes g_rel M-slots
/// (fibers j*g_rel .. j*g_rel + g_rel - 1) carrying n_rel times its invariant.
/// Errors: MissingRelativeData, NonZeroSum.
BrauerClass restrict(const BrauerClass& d, const fields::RelativeExtensionData& rel);

/// Local splitting: the order of every invariant divides the local degree there.
/// Errors: MissingData.
bool splits(const BrauerClass& d, const std::map<PrimeSlot, std::uint64_t>& local_degree);

struct TameLocal {
  std::uint64_t e = 1;
  std::uint64_t f = 1;
  std::uint64_t prime = 2;  // residue characteristic
};

/// Splitting by the maximal tame subextension: the order divides f times the
/// prime-to-p part of e. Errors: MissingData.
bool tame_splits(const BrauerClass& d, const std::map<PrimeSlot, TameLocal>& local);

/// Whether some sum-zero class of order n is split by fields with the given local
/// degrees: each exact prime power of n must divide at least two local degrees.
bool adequacy(const std::vector<std::uint64_t>& local_degrees, std::uint64_t n);

/// Schacher: for every prime l dividing |G|, at least two of the decomposition
/// groups contain an l-Sylow subgroup of G.
bool schacher_check(const groups::FiniteGroup& g, const std::vector<groups::Subgroup>& decomposition);

/// True iff the invariants agree across every fiber of rel. Errors: NotGalois.
bool constant_on_fibers(const BrauerClass& d, const fields::RelativeExtensionData& rel);

struct FeasibilitySpec {
  struct Slot {
    PrimeSlot slot;
    std::uint64_t max_order = 1;                // the local order must divide this
    std::optional<std::uint64_t> exact_order;  // the local order must equal this
  };
  std::string base_field = "K";
  std::vector<Slot> slots;
  std::vector<std::vector<PrimeSlot>> equal_groups;
  bool sum_zero = true;
};

/// Exhaustive search over invariant assignments meeting the constraints. Returns the
/// lexicographically least witness (one invariant per slot, in slot order), or
/// nothing when the constraints are infeasible. Errors: InvalidSpec, SearchTooLarge.
std::optional<std::vector<Invariant>> feasibility_solve(const FeasibilitySpec& spec);

/// The witness as a class; requires spec.sum_zero.
BrauerClass witness_class(const FeasibilitySpec& spec, const std::vector<Invariant>& witness);

/// Searches for a K-class whose restriction is d. K-primes under the support of d
/// are forced; the extra candidate slots come from pool (they must restrict to 0).
/// Returns the lexicographically least preimage, or nothing.
/// Errors: MissingRelativeData, NotGalois.
std::optional<BrauerClass> restriction_preimage(const BrauerClass& d,
                                                const fields::RelativeExtensionData& rel,
                                                const std::vector<PrimeSlot>& pool);

nlohmann::json to_json(const Invariant& v);
nlohmann::json to_json(const BrauerClass& d);
BrauerClass class_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FeasibilitySpec& spec);
FeasibilitySpec feasibility_from_json(const nlohmann::json& j);

}  // namespace adlab::brauer
