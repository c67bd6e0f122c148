#include "adlab/arith.hpp"

#include <algorithm>
#include <numeric>

#include "adlab/error.hpp"

namespace adlab::arith {

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t k = out.size();
    u64 pk = 1;
    for (unsigned j = 1; j <= e; ++j) {
      pk *= p;
      for (std::size_t i = 0; i < k; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned valuation(u64 n, u64 p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

u64 p_part(u64 n, u64 p) { return ipow(p, valuation(n, p)); }

u64 prime_power_base(u64 n) {
  if (n < 2) return 0;
  auto f = factorize(n);
  return f.size() == 1 ? f.front().first : 0;
}

u64 ipow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

u64 checked_mul(u64 a, u64 b) {
  u64 r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error("Overflow", "integer overflow in exact arithmetic");
  }
  return r;
}

u64 mulmod(u64 a, u64 b, u64 mod) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % mod);
}

u64 powmod(u64 base, u64 exp, u64 mod) {
  if (mod == 1) return 0;
  u64 r = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

u64 mod(i64 a, u64 m) {
  const i64 mm = static_cast<i64>(m);
  i64 r = a % mm;
  if (r < 0) r += mm;
  return static_cast<u64>(r);
}

u64 inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  i64 old_r = static_cast<i64>(a % m), r = static_cast<i64>(m);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw Error("NotInvertible", "element is not a unit modulo m");
  return mod(old_s, m);
}

u64 multiplicative_order(u64 a, u64 m) {
  if (std::gcd(a, m) != 1) throw Error("NotInvertible", "order of a non-unit");
  if (m == 1) return 1;
  u64 ord = euler_phi(m);
  for (auto [p, e] : factorize(ord)) {
    for (unsigned i = 0; i < e; ++i) {
      if (powmod(a, ord / p, m) == 1) {
        ord /= p;
      } else {
        break;
      }
    }
  }
  return ord;
}

u64 euler_phi(u64 n) {
  u64 r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

u64 crt(u64 a, u64 m1, u64 b, u64 m2) {
  // x = a + m1 * k, with m1 * k = b - a (mod m2)
  const u64 m = m1 * m2;
  const u64 diff = mod(static_cast<i64>(b % m2) - static_cast<i64>(a % m2), m2);
  const u64 k = mulmod(diff, inverse_mod(m1 % m2, m2), m2);
  return (a % m1 + m1 * k) % m;
}

bool is_squarefree(i64 d) {
  if (d == 0) return false;
  u64 n = static_cast<u64>(d < 0 ? -d : d);
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  // factor out 2s from n: (a/2) is 0 for even a, else +1 for a = +-1 mod 8, -1 for a = +-3 mod 8
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    const u64 r = mod(a, 8);
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol (a/n), n odd positive
  u64 aa = mod(a, static_cast<u64>(n));
  u64 nn = static_cast<u64>(n);
  while (aa != 0) {
    while (aa % 2 == 0) {
      aa /= 2;
      const u64 r = nn % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(aa, nn);
    if (aa % 4 == 3 && nn % 4 == 3) result = -result;
    aa %= nn;
  }
  return nn == 1 ? result : 0;
}

u64 factorial(u64 n) {
  u64 r = 1;
  for (u64 i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

}  // namespace adlab::arith
