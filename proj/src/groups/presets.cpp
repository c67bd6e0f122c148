#include "adlab/groups/presets.hpp"

#include <charconv>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <string>

#include "adlab/arith.hpp"
#include "adlab/error.hpp"

namespace adlab::groups {

namespace {

using arith::u64;

void check_bound(u64 order, u64 max_order, const std::string& name) {
  if (order > max_order) {
    throw Error("OrderTooLarge", name + " has order " + std::to_string(order) +
                                     ", above the enumeration bound " + std::to_string(max_order));
  }
  if (order > 0xFFFFFFFFull) throw Error("OrderTooLarge", name + ": order exceeds 32 bits");
}

// Mixed-radix vectors Z/a1 x ... x Z/ak, first coordinate least significant.
class AbelianLaw final : public GroupLaw {
 public:
  explicit AbelianLaw(std::vector<u64> factors) : factors_(std::move(factors)) {
    order_ = 1;
    for (u64 f : factors_) order_ *= static_cast<std::uint32_t>(f);
  }
  std::uint32_t order() const override { return order_; }
  Element identity() const override { return 0; }
  Element multiply(Element a, Element b) const override {
    Element out = 0, scale = 1;
    for (u64 f : factors_) {
      const Element ra = a % f, rb = b % f;
      out += scale * static_cast<Element>((ra + rb) % f);
      a /= f;
      b /= f;
      scale *= static_cast<Element>(f);
    }
    return out;
  }
  Element inverse(Element a) const override {
    Element out = 0, scale = 1;
    for (u64 f : factors_) {
      const Element r = a % f;
      out += scale * static_cast<Element>((f - r) % f);
      a /= f;
      scale *= static_cast<Element>(f);
    }
    return out;
  }

 private:
  std::vector<u64> factors_;
  std::uint32_t order_ = 1;
};

// (a, b, c) <-> [[1,a,c],[0,1,b],[0,0,1]], code a + p b + p^2 c.
class HeisenbergLaw final : public GroupLaw {
 public:
  explicit HeisenbergLaw(u64 p) : p_(static_cast<std::uint32_t>(p)) {}
  std::uint32_t order() const override { return p_ * p_ * p_; }
  Element identity() const override { return 0; }
  Element multiply(Element x, Element y) const override {
    const auto [a, b, c] = split(x);
    const auto [d, e, f] = split(y);
    return join((a + d) % p_, (b + e) % p_, (c + f + a * e) % p_);
  }
  Element inverse(Element x) const override {
    const auto [a, b, c] = split(x);
    return join((p_ - a) % p_, (p_ - b) % p_, (a * b + p_ - c) % p_);
  }

 private:
  std::array<std::uint32_t, 3> split(Element x) const { return {x % p_, (x / p_) % p_, x / (p_ * p_)}; }
  Element join(std::uint32_t a, std::uint32_t b, std::uint32_t c) const { return a + p_ * (b + p_ * c); }
  std::uint32_t p_;
};

// (v, k) with v in F_p^p and k in Z/p; (v,k)(w,l) = (v + s^k w, k + l), (s w)_i = w_{i-1}.
class WreathLaw final : public GroupLaw {
 public:
  explicit WreathLaw(u64 p) : p_(static_cast<std::uint32_t>(p)) {
    base_ = 1;
    for (u64 i = 0; i < p; ++i) base_ *= p_;
  }
  std::uint32_t order() const override { return base_ * p_; }
  Element identity() const override { return 0; }
  Element multiply(Element x, Element y) const override {
    const std::uint32_t k = x / base_, l = y / base_;
    auto v = digits(x % base_), w = digits(y % base_);
    std::vector<std::uint32_t> out(p_);
    for (std::uint32_t i = 0; i < p_; ++i) out[i] = (v[i] + w[(i + p_ - k) % p_]) % p_;
    return pack(out) + base_ * ((k + l) % p_);
  }
  Element inverse(Element x) const override {
    // (v,k)^-1 = (-s^{-k} v, -k)
    const std::uint32_t k = x / base_;
    auto v = digits(x % base_);
    std::vector<std::uint32_t> out(p_);
    for (std::uint32_t i = 0; i < p_; ++i) out[i] = (p_ - v[(i + k) % p_]) % p_;
    return pack(out) + base_ * ((p_ - k) % p_);
  }

 private:
  std::vector<std::uint32_t> digits(std::uint32_t code) const {
    std::vector<std::uint32_t> d(p_);
    for (auto& x : d) {
      x = code % p_;
      code /= p_;
    }
    return d;
  }
  std::uint32_t pack(const std::vector<std::uint32_t>& d) const {
    std::uint32_t code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * p_ + d[i];
    return code;
  }
  std::uint32_t p_;
  std::uint32_t base_;
};

// x^a y^b with code b + n a; x^a y^b . x^c y^d = x^{a+c} y^{b t^c + d}, folding x^m = y^i.
class MetacyclicLaw final : public GroupLaw {
 public:
  MetacyclicLaw(u64 m, u64 n, u64 i, u64 t) : m_(m), n_(n), i_(i) {
    tpow_.resize(m);
    u64 acc = 1 % n;
    for (u64 c = 0; c < m; ++c) {
      tpow_[c] = acc;
      acc = acc * t % n;
    }
  }
  std::uint32_t order() const override { return static_cast<std::uint32_t>(m_ * n_); }
  Element identity() const override { return 0; }
  Element multiply(Element x, Element y) const override {
    const u64 a = x / n_, b = x % n_, c = y / n_, d = y % n_;
    u64 e = (b * tpow_[c] + d) % n_;
    u64 s = a + c;
    if (s >= m_) {
      s -= m_;
      e = (e + i_) % n_;
    }
    return static_cast<Element>(e + n_ * s);
  }
  Element inverse(Element x) const override {
    // linear search over the coset of x^{-a}; groups here are small enough
    const u64 a = x / n_;
    const u64 c = (m_ - a) % m_;
    for (u64 d = 0; d < n_; ++d) {
      const Element y = static_cast<Element>(d + n_ * c);
      if (multiply(x, y) == 0) return y;
    }
    throw Error("InvalidGroup", "metacyclic element without inverse");
  }

 private:
  u64 m_, n_, i_;
  std::vector<u64> tpow_;
};

// (h, g) in F_p^3 x F_p^3, code h + p^3 g; (h1,g1)(h2,g2) = (h1 + phi(g1) h2, g1 + g2).
class SemidirectSquareLaw final : public GroupLaw {
 public:
  SemidirectSquareLaw(u64 p, const std::array<Matrix3, 3>& action) : p_(static_cast<std::uint32_t>(p)) {
    cube_ = p_ * p_ * p_;
    phi_.resize(cube_);
    for (std::uint32_t g = 0; g < cube_; ++g) {
      Matrix3 m = identity_matrix();
      std::uint32_t code = g;
      for (int k = 0; k < 3; ++k) {
        const std::uint32_t e = code % p_;
        code /= p_;
        for (std::uint32_t r = 0; r < e; ++r) m = matmul(m, action[k], p);
      }
      phi_[g] = m;
    }
  }
  std::uint32_t order() const override { return cube_ * cube_; }
  Element identity() const override { return 0; }
  Element multiply(Element x, Element y) const override {
    const std::uint32_t h1 = x % cube_, g1 = x / cube_, h2 = y % cube_, g2 = y / cube_;
    const auto v = apply(phi_[g1], h2);
    return add(h1, v) + cube_ * add(g1, g2);
  }
  Element inverse(Element x) const override {
    const std::uint32_t h = x % cube_, g = x / cube_;
    const std::uint32_t ng = negate(g);
    return negate(apply(phi_[ng], h)) + cube_ * ng;
  }

 private:
  std::uint32_t apply(const Matrix3& m, std::uint32_t h) const {
    const std::uint32_t v[3] = {h % p_, (h / p_) % p_, h / (p_ * p_)};
    std::uint32_t out[3];
    for (int r = 0; r < 3; ++r) {
      out[r] = (m[r][0] * v[0] + m[r][1] * v[1] + m[r][2] * v[2]) % p_;
    }
    return out[0] + p_ * (out[1] + p_ * out[2]);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0, scale = 1;
    for (int k = 0; k < 3; ++k) {
      out += scale * ((a % p_ + b % p_) % p_);
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }
  std::uint32_t negate(std::uint32_t a) const {
    std::uint32_t out = 0, scale = 1;
    for (int k = 0; k < 3; ++k) {
      out += scale * ((p_ - a % p_) % p_);
      a /= p_;
      scale *= p_;
    }
    return out;
  }
  std::uint32_t p_;
  std::uint32_t cube_;
  std::vector<Matrix3> phi_;
};

u64 parse_uint(std::string_view s, std::string_view spec) {
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error("ParseError", "bad integer '" + std::string(s) + "' in group spec '" +
                                  std::string(spec) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

u64 require_prime(u64 p, std::string_view spec) {
  if (!arith::is_prime(p)) {
    throw Error("ParseError", std::to_string(p) + " is not prime in '" + std::string(spec) + "'");
  }
  return p;
}

}  // namespace

std::uint64_t default_max_order() {
  if (const char* env = std::getenv("ADLAB_MAX_ORDER")) {
    u64 v = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc{} && ptr == s.data() + s.size() && v > 0) return v;
  }
  return u64{1} << 20;
}

Matrix3 identity_matrix() { return Matrix3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Matrix3 matmul(const Matrix3& a, const Matrix3& b, std::uint64_t p) {
  Matrix3 c{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      u64 s = 0;
      for (int k = 0; k < 3; ++k) s += static_cast<u64>(a[i][k]) * b[k][j];
      c[i][j] = static_cast<std::uint32_t>(s % p);
    }
  }
  return c;
}

Matrix3 heisenberg_x(std::uint64_t) { return Matrix3{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}}; }
Matrix3 heisenberg_y(std::uint64_t) { return Matrix3{{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}}; }
Matrix3 heisenberg_u(std::uint64_t) { return Matrix3{{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}}; }

std::array<Matrix3, 3> double_action(std::uint64_t p) {
  return {heisenberg_x(p), heisenberg_u(p), identity_matrix()};
}

FiniteGroup abelian_group(const std::vector<std::uint64_t>& factors, std::string name,
                          std::uint64_t max_order) {
  std::vector<u64> kept;
  u64 order = 1;
  for (u64 f : factors) {
    if (f == 0) throw Error("ParseError", "cyclic factor of order 0 in " + name);
    order = arith::checked_mul(order, f);
    if (f > 1) kept.push_back(f);
  }
  check_bound(order, max_order, name);
  std::vector<Generator> gens;
  Element scale = 1;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    gens.push_back({"e" + std::to_string(k + 1), scale});
    scale *= static_cast<Element>(kept[k]);
  }
  return FiniteGroup(std::move(name), std::make_shared<AbelianLaw>(kept), std::move(gens));
}

FiniteGroup heisenberg_group(std::uint64_t p, std::uint64_t max_order) {
  const std::string name = "heis:" + std::to_string(p);
  check_bound(arith::ipow(p, 3), max_order, name);
  const auto q = static_cast<Element>(p);
  std::vector<Generator> gens{{"x", 1}, {"y", q}, {"u", q * q}};
  return FiniteGroup(name, std::make_shared<HeisenbergLaw>(p), std::move(gens));
}

FiniteGroup wreath_group(std::uint64_t p, std::uint64_t max_order) {
  const std::string name = "wreath:" + std::to_string(p);
  const u64 order = arith::ipow(p, static_cast<unsigned>(p + 1));
  check_bound(order, max_order, name);
  const auto base = static_cast<Element>(order / p);
  std::vector<Generator> gens{{"e", 1}, {"x", base}};
  return FiniteGroup(name, std::make_shared<WreathLaw>(p), std::move(gens));
}

FiniteGroup metacyclic_group(std::uint64_t m, std::uint64_t n, std::uint64_t i, std::uint64_t t,
                             std::uint64_t max_order) {
  const std::string name = "meta:" + std::to_string(m) + ":" + std::to_string(n) + ":" +
                           std::to_string(i) + ":" + std::to_string(t);
  if (m == 0 || n == 0) throw Error("ParseError", name + ": m and n must be positive");
  const u64 order = arith::checked_mul(m, n);
  check_bound(order, max_order, name);
  i %= n;
  t %= n;
  if (std::gcd(t, n) != 1 && n > 1) {
    throw Error("InconsistentPresentation", name + ": t must be a unit modulo n");
  }
  if (arith::powmod(t, m, n) != 1 % n) {
    throw Error("InconsistentPresentation", name + ": t^m != 1 mod n, so the group collapses");
  }
  if ((i * ((t + n - 1) % n)) % n != 0) {
    throw Error("InconsistentPresentation", name + ": y^i is not fixed by conjugation");
  }
  // x is x^1, which folds to y^i when m = 1
  const Element x = m == 1 ? static_cast<Element>(i) : static_cast<Element>(n);
  const Element y = n == 1 ? 0 : 1;
  std::vector<Generator> gens{{"x", x}, {"y", y}};
  return FiniteGroup(name, std::make_shared<MetacyclicLaw>(m, n, i, t), std::move(gens));
}

FiniteGroup semidirect_square(std::uint64_t p, const std::array<Matrix3, 3>& action,
                              std::string name, FiniteGroup::Options options,
                              std::uint64_t max_order) {
  check_bound(arith::ipow(p, 6), max_order, name);
  for (std::size_t a = 0; a < 3; ++a) {
    Matrix3 power = identity_matrix();
    for (u64 k = 0; k < p; ++k) power = matmul(power, action[a], p);
    if (power != identity_matrix()) {
      throw Error("InconsistentPresentation", name + ": action matrix of order not dividing p");
    }
    for (std::size_t b = a + 1; b < 3; ++b) {
      if (matmul(action[a], action[b], p) != matmul(action[b], action[a], p)) {
        throw Error("InconsistentPresentation", name + ": action matrices do not commute");
      }
    }
  }
  const auto q = static_cast<Element>(p);
  const Element cube = q * q * q;
  std::vector<Generator> gens{{"a1", cube}, {"a2", cube * q}, {"a3", cube * q * q},
                              {"b1", 1},    {"b2", q},        {"b3", q * q}};
  return FiniteGroup(std::move(name), std::make_shared<SemidirectSquareLaw>(p, action),
                     std::move(gens), options);
}

FiniteGroup build_group(std::string_view spec, std::uint64_t max_order) {
  const auto parts = split(spec, ':');
  const std::string_view kind = parts.front();
  auto need = [&](std::size_t n) {
    if (parts.size() != n) {
      throw Error("ParseError", "group spec '" + std::string(spec) + "' expects " +
                                    std::to_string(n - 1) + " argument(s)");
    }
  };
  if (kind == "cyclic") {
    need(2);
    return abelian_group({parse_uint(parts[1], spec)}, std::string(spec), max_order);
  }
  if (kind == "elab") {
    need(3);
    const u64 p = require_prime(parse_uint(parts[1], spec), spec);
    const u64 k = parse_uint(parts[2], spec);
    if (k > 64) throw Error("OrderTooLarge", std::string(spec) + ": rank too large");
    return abelian_group(std::vector<u64>(k, p), std::string(spec), max_order);
  }
  if (kind == "abelian") {
    need(2);
    std::vector<u64> factors;
    for (auto f : split(parts[1], ',')) factors.push_back(parse_uint(f, spec));
    return abelian_group(factors, std::string(spec), max_order);
  }
  if (kind == "heis") {
    need(2);
    return heisenberg_group(require_prime(parse_uint(parts[1], spec), spec), max_order);
  }
  if (kind == "wreath") {
    need(2);
    return wreath_group(require_prime(parse_uint(parts[1], spec), spec), max_order);
  }
  if (kind == "meta") {
    need(5);
    return metacyclic_group(parse_uint(parts[1], spec), parse_uint(parts[2], spec),
                            parse_uint(parts[3], spec), parse_uint(parts[4], spec), max_order);
  }
  if (kind == "double") {
    need(2);
    const u64 p = require_prime(parse_uint(parts[1], spec), spec);
    if (p == 2) throw Error("ParseError", "double:p requires an odd prime");
    return semidirect_square(p, double_action(p), std::string(spec), {}, max_order);
  }
  throw Error("ParseError", "unknown group constructor '" + std::string(kind) + "'");
}

}  // namespace adlab::groups
