#include "adlab/groups/finite_group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>

#include "adlab/arith.hpp"
#include "adlab/error.hpp"

namespace adlab::groups {

FiniteGroup::FiniteGroup(std::string name, std::shared_ptr<const GroupLaw> law,
                         std::vector<Generator> generators)
    : FiniteGroup(std::move(name), std::move(law), std::move(generators), Options{}) {}

FiniteGroup::FiniteGroup(std::string name, std::shared_ptr<const GroupLaw> law,
                         std::vector<Generator> generators, Options options)
    : name_(std::move(name)),
      law_(std::move(law)),
      generators_(std::move(generators)),
      order_(law_->order()),
      identity_(law_->identity()) {
  inverses_.resize(order_);
  for (Element a = 0; a < order_; ++a) inverses_[a] = law_->inverse(a);
  if (options.cayley_table && order_ <= kTableLimit) {
    table_.resize(static_cast<std::size_t>(order_) * order_);
    for (Element a = 0; a < order_; ++a) {
      for (Element b = 0; b < order_; ++b) {
        table_[static_cast<std::size_t>(a) * order_ + b] = law_->multiply(a, b);
      }
    }
  }
  if (options.validate) validate();
}

void FiniteGroup::validate() const {
  for (const auto& g : generators_) {
    if (g.element >= order_) throw Error("InvalidGroup", "generator outside the element domain");
  }
  // generators must reach every element
  std::vector<bool> seen(order_, false);
  std::vector<Element> queue{identity_};
  seen[identity_] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : generators_) {
      const Element h = mul(queue[i], g.element);
      if (!seen[h]) {
        seen[h] = true;
        queue.push_back(h);
      }
    }
  }
  if (queue.size() != order_) {
    throw Error("InvalidGroup", name_ + ": generators reach " + std::to_string(queue.size()) +
                                    " of " + std::to_string(order_) + " elements");
  }
  if (order_ <= 10000) {
    for (Element a = 0; a < order_; ++a) {
      if (mul(identity_, a) != a || mul(a, identity_) != a || mul(a, inverses_[a]) != identity_) {
        throw Error("InvalidGroup", name_ + ": identity or inverse axiom fails");
      }
    }
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Element> pick(0, order_ - 1);
  for (int k = 0; k < 256; ++k) {
    const Element a = pick(rng), b = pick(rng), c = pick(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw Error("InvalidGroup", name_ + ": multiplication is not associative");
    }
  }
}

Element FiniteGroup::pow(Element a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element result = identity_;
  while (k > 0) {
    if (k & 1) result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

std::uint32_t FiniteGroup::element_order(Element a) const {
  std::uint32_t k = 1;
  for (Element x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::vector<Element> FiniteGroup::generator_elements() const {
  std::vector<Element> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.element);
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      const Element a = generators_[i].element, b = generators_[j].element;
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::optional<std::uint64_t> FiniteGroup::prime() const {
  const auto p = arith::prime_power_base(order_);
  if (p == 0) return std::nullopt;
  return p;
}

std::uint32_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (Element a = 0; a < order_; ++a) e = std::lcm(e, static_cast<std::uint64_t>(element_order(a)));
  return static_cast<std::uint32_t>(e);
}

Element FiniteGroup::evaluate_word(std::string_view word) const {
  Element result = identity_;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == '*' || c == ' ' || c == '\t'; };
  while (pos < word.size()) {
    while (pos < word.size() && is_sep(word[pos])) ++pos;
    if (pos >= word.size()) break;
    std::size_t end = pos;
    while (end < word.size() && !is_sep(word[end])) ++end;
    std::string_view token = word.substr(pos, end - pos);
    pos = end;

    std::string_view name = token;
    std::int64_t exp = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      std::string_view digits = token.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exp);
      if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw Error("ParseError", "bad exponent in word token '" + std::string(token) + "'");
      }
    }
    if (name == "1" || name == "e") continue;
    auto it = std::find_if(generators_.begin(), generators_.end(),
                           [&](const Generator& g) { return g.name == name; });
    if (it == generators_.end()) {
      throw Error("ParseError", "unknown generator '" + std::string(name) + "' in " + name_);
    }
    result = mul(result, pow(it->element, exp));
  }
  return result;
}

}  // namespace adlab::groups
