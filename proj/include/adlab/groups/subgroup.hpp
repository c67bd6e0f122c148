#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "adlab/groups/finite_group.hpp"

namespace adlab::groups {

/// A subgroup of an ambient FiniteGroup, stored as a membership mask.
class Subgroup {
 public:
  /// The trivial subgroup.
  explicit Subgroup(const FiniteGroup& group);

  static Subgroup generated(const FiniteGroup& group, std::span<const Element> gens);
  static Subgroup normal_closure(const FiniteGroup& group, std::span<const Element> gens);
  static Subgroup whole(const FiniteGroup& group);

  bool contains(Element g) const { return member_[g]; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(elements_.size()); }
  /// Elements in ascending order.
  std::span<const Element> elements() const { return elements_; }
  /// A generating set (the one it was built from, possibly with extras).
  std::span<const Element> generators() const { return gens_; }

  bool is_subgroup_of(const Subgroup& other) const;
  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }

  /// Intersection with another subgroup of the same ambient group.
  Subgroup intersect(const FiniteGroup& group, const Subgroup& other) const;

 private:
  Subgroup() = default;
  static Subgroup from_mask(std::vector<bool> mask, std::vector<Element> gens);

  std::vector<bool> member_;
  std::vector<Element> elements_;
  std::vector<Element> gens_;
};

/// The subgroup as a group in its own right, elements renumbered in ascending
/// ambient order, generators named g1, g2, ...
FiniteGroup subgroup_as_group(const FiniteGroup& group, const Subgroup& h, std::string name);

}  // namespace adlab::groups
