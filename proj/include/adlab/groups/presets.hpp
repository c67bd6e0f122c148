#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "adlab/groups/finite_group.hpp"

namespace adlab::groups {

/// 3x3 matrix over F_p acting on column vectors.
using Matrix3 = std::array<std::array<std::uint32_t, 3>, 3>;

/// Enumeration bound: ADLAB_MAX_ORDER when set, otherwise 2^20.
std::uint64_t default_max_order();

/// Builds a group from a spec string:
///   cyclic:n | elab:p:k | abelian:a1,a2,... | heis:p | wreath:p | meta:m:n:i:t | double:p
/// Errors: ParseError, InconsistentPresentation, OrderTooLarge.
FiniteGroup build_group(std::string_view spec, std::uint64_t max_order = default_max_order());

/// Direct product of cyclic groups Z/a1 x ... x Z/ak; generators e1..ek.
FiniteGroup abelian_group(const std::vector<std::uint64_t>& factors, std::string name,
                          std::uint64_t max_order = default_max_order());

/// Unitriangular 3x3 matrices over F_p; generators x, y, u (entries (1,2), (2,3), (1,3)).
FiniteGroup heisenberg_group(std::uint64_t p, std::uint64_t max_order = default_max_order());

/// F_p wr Z/p = F_p^p x| <x>, x cycling coordinates; generators e (first basis vector) and x.
FiniteGroup wreath_group(std::uint64_t p, std::uint64_t max_order = default_max_order());

/// <x, y | x^m = y^i, y^n = 1, x^-1 y x = y^t>, elements x^a y^b.
FiniteGroup metacyclic_group(std::uint64_t m, std::uint64_t n, std::uint64_t i, std::uint64_t t,
                             std::uint64_t max_order = default_max_order());

/// F_p^3 x|_phi F_p^3 where phi sends the i-th basis vector of the acting factor to action[i].
/// The action matrices must commute and satisfy A^p = 1. Elements are pairs (h, g) with
/// h in the normal factor; generators a1..a3 (acting factor) and b1..b3 (normal factor).
FiniteGroup semidirect_square(std::uint64_t p, const std::array<Matrix3, 3>& action,
                              std::string name, FiniteGroup::Options options = {},
                              std::uint64_t max_order = default_max_order());

/// The unitriangular transformations phi_x, phi_y, phi_u.
Matrix3 heisenberg_x(std::uint64_t p);
Matrix3 heisenberg_y(std::uint64_t p);
Matrix3 heisenberg_u(std::uint64_t p);

/// Action used by double:p: e1 -> phi_x, e2 -> phi_u, e3 -> identity.
std::array<Matrix3, 3> double_action(std::uint64_t p);

Matrix3 matmul(const Matrix3& a, const Matrix3& b, std::uint64_t p);
Matrix3 identity_matrix();

}  // namespace adlab::groups
