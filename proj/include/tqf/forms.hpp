#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "tqf/modarith.hpp"

namespace tqf {

struct Vec3 {
    i64 x = 0, y = 0, z = 0;
    friend auto operator<=>(const Vec3&, const Vec3&) = default;
};

/// Classically integral ternary quadratic form
///   Q(x,y,z) = c11 x^2 + c12 xy + c13 xz + c22 y^2 + c23 yz + c33 z^2
/// with even cross coefficients, so the Gram matrix is integral.
/// Coefficient order (c11,c12,c13,c22,c23,c33) is fixed for all I/O.
struct TernaryForm {
    i64 c11 = 0, c12 = 0, c13 = 0, c22 = 0, c23 = 0, c33 = 0;
    friend auto operator<=>(const TernaryForm&, const TernaryForm&) = default;
};

/// Column-convention integer basis transform: column j holds the image
/// of the j-th basis vector.
struct Mat3 {
    std::array<std::array<i64, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    friend auto operator<=>(const Mat3&, const Mat3&) = default;
};

i64 det(const Mat3& m);

struct Reduction {
    TernaryForm form;
    Mat3 transform;  // det +1, transform^T * A_Q * transform = A_reduced
};

struct ClassList {
    i64 determinant = 0;
    std::vector<TernaryForm> representatives;
};

i64 evaluate(const TernaryForm& q, const Vec3& v);

bool is_classically_integral(const TernaryForm& q);

/// Determinant of the integral Gram matrix. Requires even cross terms.
i64 gram_determinant(const TernaryForm& q);

bool is_positive_definite(const TernaryForm& q);

/// Canonical Eisenstein-reduced representative of the equivalence class
/// plus a determinant +1 transform onto it. Requires a positive
/// definite, classically integral form.
Reduction reduce(const TernaryForm& q);

bool is_equivalent(const TernaryForm& a, const TernaryForm& b);

/// Every equivalence class of positive definite classically integral
/// forms of determinant d, canonical representatives in ascending
/// coefficient order.
ClassList enumerate_classes(i64 d);

/// All integer vectors v with Q(v) = m, in a fixed deterministic order.
std::vector<Vec3> enumerate_representations(const TernaryForm& q, i64 m);

bool represents(const TernaryForm& q, i64 m);

std::string to_string(const TernaryForm& q);
std::string to_polynomial(const TernaryForm& q);

/// Parses "[c11,c12,c13,c22,c23,c33]".
TernaryForm parse_form(std::string_view text);

}  // namespace tqf
