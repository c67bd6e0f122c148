#include "adlab/groups/subgroup.hpp"

#include <algorithm>
#include <memory>

namespace adlab::groups {

namespace {

// Extends the mask in place to the subgroup generated by its current elements and gens.
void close_under(const FiniteGroup& group, std::vector<bool>& mask, std::vector<Element>& elems,
                 std::span<const Element> gens) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Element g : gens) {
      const Element h = group.mul(elems[i], g);
      if (!mask[h]) {
        mask[h] = true;
        elems.push_back(h);
      }
    }
  }
}

}  // namespace

Subgroup::Subgroup(const FiniteGroup& group)
    : member_(group.order(), false), elements_{group.identity()} {
  member_[group.identity()] = true;
}

Subgroup Subgroup::from_mask(std::vector<bool> mask, std::vector<Element> gens) {
  Subgroup s;
  s.member_ = std::move(mask);
  for (Element g = 0; g < s.member_.size(); ++g) {
    if (s.member_[g]) s.elements_.push_back(g);
  }
  s.gens_ = std::move(gens);
  return s;
}

Subgroup Subgroup::generated(const FiniteGroup& group, std::span<const Element> gens) {
  std::vector<bool> mask(group.order(), false);
  std::vector<Element> elems{group.identity()};
  mask[group.identity()] = true;
  close_under(group, mask, elems, gens);
  return from_mask(std::move(mask), std::vector<Element>(gens.begin(), gens.end()));
}

Subgroup Subgroup::normal_closure(const FiniteGroup& group, std::span<const Element> gens) {
  std::vector<Element> current(gens.begin(), gens.end());
  std::vector<bool> mask(group.order(), false);
  std::vector<Element> elems{group.identity()};
  mask[group.identity()] = true;
  close_under(group, mask, elems, current);

  const auto ambient = group.generator_elements();
  for (std::size_t i = 0; i < current.size(); ++i) {
    for (Element g : ambient) {
      const Element c = group.conj(current[i], g);
      if (mask[c]) continue;
      current.push_back(c);
      // the grown set is closed again under all generators collected so far
      close_under(group, mask, elems, std::span<const Element>(current));
    }
  }
  return from_mask(std::move(mask), std::move(current));
}

Subgroup Subgroup::whole(const FiniteGroup& group) {
  std::vector<bool> mask(group.order(), true);
  return from_mask(std::move(mask), group.generator_elements());
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Element g) { return other.contains(g); });
}

Subgroup Subgroup::intersect(const FiniteGroup& group, const Subgroup& other) const {
  std::vector<bool> mask(group.order(), false);
  for (Element g : elements_) mask[g] = other.contains(g);
  return from_mask(std::move(mask), {});
}

namespace {

class SubgroupLaw final : public GroupLaw {
 public:
  SubgroupLaw(const FiniteGroup& group, const Subgroup& h)
      : group_(group), elems_(h.elements().begin(), h.elements().end()), code_(group.order(), 0) {
    for (std::uint32_t k = 0; k < elems_.size(); ++k) code_[elems_[k]] = k;
  }
  std::uint32_t order() const override { return static_cast<std::uint32_t>(elems_.size()); }
  Element identity() const override { return code_[group_.identity()]; }
  Element multiply(Element a, Element b) const override { return code_[group_.mul(elems_[a], elems_[b])]; }
  Element inverse(Element a) const override { return code_[group_.inv(elems_[a])]; }
  Element encode(Element ambient) const { return code_[ambient]; }

 private:
  FiniteGroup group_;
  std::vector<Element> elems_;
  std::vector<Element> code_;
};

}  // namespace

FiniteGroup subgroup_as_group(const FiniteGroup& group, const Subgroup& h, std::string name) {
  auto law = std::make_shared<SubgroupLaw>(group, h);
  std::vector<Generator> gens;
  for (Element g : h.generators()) {
    if (g == group.identity()) continue;
    gens.push_back({"g" + std::to_string(gens.size() + 1), law->encode(g)});
  }
  FiniteGroup::Options options;
  options.validate = false;  // inherited from the ambient group
  return FiniteGroup(std::move(name), std::move(law), std::move(gens), options);
}

}  // namespace adlab::groups
