// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TKMOTIVE_FINITE_FIELD_HPP
#define TKMOTIVE_FINITE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "tkmotive/torus_knot.hpp"

namespace tkmotive {

/// Largest modulus accepted by PrimeField; keeps every product below 2^32.
inline constexpr std::uint32_t kMaxFieldModulus = 1u << 16;

/// Deterministic trial division.
bool is_prime(std::uint64_t v) noexcept;

/// q is prime and q = 1 (mod mn), so F_q* contains every mn-th root of unity.
bool is_admissible(const TorusKnotParams& p, std::uint64_t q) noexcept;

/// Smallest prime q <= cap with q = 1 (mod mn). Throws NoAdmissiblePrime.
std::uint32_t smallest_admissible_prime(const TorusKnotParams& p, std::uint64_t cap);

/// An element of F_q stored as its least nonnegative residue. The modulus
/// lives in the PrimeField that produced it.
struct FieldElement {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Arithmetic in the prime field F_q with q <= 2^16.
class PrimeField {
 public:
  /// Throws NotPrime, or CapExceeded if q exceeds kMaxFieldModulus.
  explicit PrimeField(std::uint32_t q);

  std::uint32_t modulus() const noexcept { return q_; }
  std::uint32_t size() const noexcept { return q_; }

  FieldElement element(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(q_);
    return {static_cast<std::uint32_t>(r < 0 ? r + q_ : r)};
  }
  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    std::uint32_t s = a.value + b.value;
    return {s >= q_ ? s - q_ : s};
  }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept {
    return {a.value >= b.value ? a.value - b.value : a.value + q_ - b.value};
  }
  FieldElement neg(FieldElement a) const noexcept { return {a.value == 0 ? 0 : q_ - a.value}; }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % q_)};
  }
  /// Precondition: a != 0.
  FieldElement inv(FieldElement a) const noexcept { return {inverse_[a.value]}; }
  FieldElement pow(FieldElement a, std::uint64_t k) const noexcept;

 private:
  std::uint32_t q_;
  std::vector<std::uint32_t> inverse_;
};

struct Vec2 {
  FieldElement x;
  FieldElement y;

  friend constexpr auto operator<=>(const Vec2&, const Vec2&) = default;
};

/// Row-major 2x2 matrix [[a, b], [c, d]] over a prime field.
struct Mat2 {
  FieldElement a, b, c, d;

  friend constexpr auto operator<=>(const Mat2&, const Mat2&) = default;

  /// Packs the four residues into one word; injective for q <= 2^16.
  constexpr std::uint64_t key() const noexcept {
    return (std::uint64_t{a.value} << 48) | (std::uint64_t{b.value} << 32) |
           (std::uint64_t{c.value} << 16) | std::uint64_t{d.value};
  }
};

inline constexpr Mat2 kIdentity{{1}, {0}, {0}, {1}};
inline constexpr Mat2 kZeroMatrix{};

Mat2 make_mat(const PrimeField& f, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

inline Mat2 mat_add(const PrimeField& f, const Mat2& x, const Mat2& y) noexcept {
  return {f.add(x.a, y.a), f.add(x.b, y.b), f.add(x.c, y.c), f.add(x.d, y.d)};
}
inline Mat2 mat_sub(const PrimeField& f, const Mat2& x, const Mat2& y) noexcept {
  return {f.sub(x.a, y.a), f.sub(x.b, y.b), f.sub(x.c, y.c), f.sub(x.d, y.d)};
}
inline Mat2 mat_mul(const PrimeField& f, const Mat2& x, const Mat2& y) noexcept {
  const std::uint64_t q = f.modulus();
  auto dot = [q](FieldElement p0, FieldElement q0, FieldElement p1, FieldElement q1) {
    return FieldElement{static_cast<std::uint32_t>(
        (std::uint64_t{p0.value} * q0.value + std::uint64_t{p1.value} * q1.value) % q)};
  };
  return {dot(x.a, y.a, x.b, y.c), dot(x.a, y.b, x.b, y.d),
          dot(x.c, y.a, x.d, y.c), dot(x.c, y.b, x.d, y.d)};
}
inline FieldElement det(const PrimeField& f, const Mat2& m) noexcept {
  return f.sub(f.mul(m.a, m.d), f.mul(m.b, m.c));
}
inline FieldElement trace(const PrimeField& f, const Mat2& m) noexcept { return f.add(m.a, m.d); }
inline bool is_scalar(const Mat2& m) noexcept {
  return m.b.value == 0 && m.c.value == 0 && m.a == m.d;
}

Mat2 mat_scale(const PrimeField& f, FieldElement s, const Mat2& m) noexcept;
Vec2 apply(const PrimeField& f, const Mat2& m, const Vec2& v) noexcept;
/// Precondition: det(m) != 0.
Mat2 mat_inverse(const PrimeField& f, const Mat2& m) noexcept;

/// M^k by square-and-multiply; M^0 is the identity.
Mat2 mat_pow(const PrimeField& f, Mat2 m, std::uint64_t k) noexcept;

/// I + M + ... + M^(l-1), accumulated term by term (valid even when M - I
/// is singular).
Mat2 phi_mat(const PrimeField& f, std::uint64_t l, const Mat2& m) noexcept;

/// Rank of a 2x2 matrix.
int rank(const PrimeField& f, const Mat2& m) noexcept;

/// Rank of the 2x4 block matrix [left | -right], i.e. of the map
/// (alpha, beta) -> left*alpha - right*beta. Its kernel has dimension
/// 4 - rank.
int rank_2x4(const PrimeField& f, const Mat2& left, const Mat2& right) noexcept;

/// Dimension of the span of {I, A, B, AB} inside the 2x2 matrices. This span
/// is the algebra generated by A and B, so the value is 4 exactly when the
/// pair has no common eigenline over the algebraic closure.
int pair_algebra_rank(const PrimeField& f, const Mat2& a, const Mat2& b) noexcept;

/// tr(M)^2 = 4 det(M).
bool has_repeated_eigenvalue(const PrimeField& f, const Mat2& m) noexcept;

/// Every invertible 2x2 matrix over f, in lexicographic order of (a, b, c, d).
std::vector<Mat2> enumerate_gl2(const PrimeField& f);

/// |GL_2(F_q)| = (q^2 - 1)(q^2 - q).
std::uint64_t gl2_order(std::uint64_t q) noexcept;

/// An element pair of AGL_2(F_q): A = (1 0; alpha A0), B = (1 0; beta B0).
struct AffinePair {
  Mat2 a0;
  Mat2 b0;
  Vec2 alpha;
  Vec2 beta;
};

/// k-th power of the affine map (1 0; v M): returns (M^k, Phi_k(M) v).
std::pair<Mat2, Vec2> affine_power(const PrimeField& f, const Mat2& m, const Vec2& v,
                                   std::uint64_t k) noexcept;

/// A^n = B^m in AGL_2(F_q).
bool satisfies_relation(const PrimeField& f, const TorusKnotParams& p, const AffinePair& pair);

}  // namespace tkmotive

#endif  // TKMOTIVE_FINITE_FIELD_HPP
