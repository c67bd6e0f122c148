#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace adlab::arith {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

std::vector<u64> prime_divisors(u64 n);
std::vector<u64> divisors(u64 n);

/// Exponent of p in n (n > 0).
unsigned valuation(u64 n, u64 p);

/// Largest power of p dividing n.
u64 p_part(u64 n, u64 p);

/// p such that n = p^k with k >= 1, or 0 when n is not a prime power.
u64 prime_power_base(u64 n);

u64 ipow(u64 base, unsigned exp);

/// Multiplication that throws on 64-bit overflow.
u64 checked_mul(u64 a, u64 b);

u64 powmod(u64 base, u64 exp, u64 mod);
u64 mulmod(u64 a, u64 b, u64 mod);

/// Nonnegative residue of a mod m.
u64 mod(i64 a, u64 m);

/// Inverse of a modulo m; requires gcd(a, m) = 1.
u64 inverse_mod(u64 a, u64 m);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
u64 multiplicative_order(u64 a, u64 m);

u64 euler_phi(u64 n);

/// x with x = a (mod m1), x = b (mod m2), m1 and m2 coprime.
u64 crt(u64 a, u64 m1, u64 b, u64 m2);

bool is_squarefree(i64 d);

/// Kronecker symbol (a/n) for any integer a and any integer n.
int kronecker(i64 a, i64 n);

u64 factorial(u64 n);

}  // namespace adlab::arith
