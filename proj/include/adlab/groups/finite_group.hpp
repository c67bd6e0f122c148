#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace adlab::groups {

/// Elements are dense normal-form codes in [0, order).
using Element = std::uint32_t;

/// Multiplication oracle for one concrete element representation.
class GroupLaw {
 public:
  virtual ~GroupLaw() = default;
  virtual std::uint32_t order() const = 0;
  virtual Element identity() const = 0;
  virtual Element multiply(Element a, Element b) const = 0;
  virtual Element inverse(Element a) const = 0;
};

struct Generator {
  std::string name;
  Element element;
};

/// An enumerable finite group with a distinguished generating sequence.
///
/// Construction validates the group axioms (identity and inverses exhaustively
/// up to order 10^4, associativity on a deterministic sample of triples) and
/// that the generators reach every element. Instances are immutable and safe
/// to share across threads.
class FiniteGroup {
 public:
  struct Options {
    bool cayley_table = true;  // cache the full table when order <= kTableLimit
    bool validate = true;
  };
  static constexpr std::uint32_t kTableLimit = 1024;

  FiniteGroup(std::string name, std::shared_ptr<const GroupLaw> law,
              std::vector<Generator> generators);
  FiniteGroup(std::string name, std::shared_ptr<const GroupLaw> law,
              std::vector<Generator> generators, Options options);

  const std::string& name() const { return name_; }
  std::uint32_t order() const { return order_; }
  Element identity() const { return identity_; }

  Element mul(Element a, Element b) const {
    return table_.empty() ? law_->multiply(a, b)
                          : table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inv(Element a) const { return inverses_[a]; }
  Element pow(Element a, std::int64_t k) const;
  /// g^-1 a g
  Element conj(Element a, Element g) const { return mul(inv(g), mul(a, g)); }
  /// a^-1 b^-1 a b
  Element commutator(Element a, Element b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  std::uint32_t element_order(Element a) const;

  std::span<const Generator> generators() const { return generators_; }
  std::vector<Element> generator_elements() const;

  bool is_abelian() const;
  /// The prime p when the order is p^k with k >= 1.
  std::optional<std::uint64_t> prime() const;
  std::uint32_t exponent() const;

  /// Evaluates a word such as "x*y^2*u^-1" in the generator names.
  Element evaluate_word(std::string_view word) const;

 private:
  void validate() const;

  std::string name_;
  std::shared_ptr<const GroupLaw> law_;
  std::vector<Generator> generators_;
  std::uint32_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> inverses_;
  std::vector<Element> table_;
};

}  // namespace adlab::groups
