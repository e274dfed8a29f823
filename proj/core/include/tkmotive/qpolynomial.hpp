// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TKMOTIVE_QPOLYNOMIAL_HPP
#define TKMOTIVE_QPOLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "tkmotive/bigint.hpp"

namespace tkmotive {

/// Integer polynomial in the Lefschetz class q = [C].
///
/// Coefficients are stored densely in ascending order with no trailing
/// zeros, so two polynomials are equal exactly when their coefficient
/// vectors are. The zero polynomial has an empty coefficient vector and
/// degree -1.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> ascending);
  QPolynomial(std::initializer_list<long long> ascending);

  static QPolynomial constant(BigInt c);
  static QPolynomial monomial(BigInt c, std::size_t power);
  /// The Lefschetz class itself.
  static QPolynomial q() { return monomial(1, 1); }

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of q^power; zero beyond the degree.
  BigInt coefficient(std::size_t power) const;
  BigInt leading_coefficient() const;
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Horner evaluation at q = k.
  BigInt evaluate(const BigInt& k) const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);
  QPolynomial& operator*=(const BigInt& scalar);

  friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) { return lhs += rhs; }
  friend QPolynomial operator-(QPolynomial lhs, const QPolynomial& rhs) { return lhs -= rhs; }
  friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);
  friend QPolynomial operator*(QPolynomial lhs, const BigInt& s) { return lhs *= s; }
  friend QPolynomial operator*(const BigInt& s, QPolynomial rhs) { return rhs *= s; }
  friend QPolynomial operator-(QPolynomial p);

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

QPolynomial poly_mul(const QPolynomial& a, const QPolynomial& b);
BigInt poly_eval(const QPolynomial& p, const BigInt& k);

/// p^e by repeated multiplication.
QPolynomial pow(const QPolynomial& p, unsigned e);

/// Reduced fraction with a positive denominator.
class RationalScalar {
 public:
  RationalScalar(BigInt numerator, BigInt denominator = 1);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  friend bool operator==(const RationalScalar&, const RationalScalar&) = default;

 private:
  BigInt num_;
  BigInt den_;
};

/// s * p with an exact integrality check on every coefficient.
/// Throws NonIntegralScale if the denominator does not divide.
QPolynomial rational_scale(const QPolynomial& p, const RationalScalar& s);

/// Class of a variety with a Z/2 action, split as [X]^+ = [X/Z2] and
/// [X]^- = [X] - [X]^+.
struct EquivariantClass {
  QPolynomial plus;
  QPolynomial minus;

  /// From the plain class [X] and the class of its quotient [X/Z2].
  static EquivariantClass from_total_and_quotient(const QPolynomial& total,
                                                  const QPolynomial& quotient);
  /// A variety with trivial action: everything lives in the invariant part.
  static EquivariantClass trivial(QPolynomial cls) { return {std::move(cls), {}}; }

  QPolynomial total() const { return plus + minus; }

  friend bool operator==(const EquivariantClass&, const EquivariantClass&) = default;
};

/// Class of X x Y under the diagonal action.
EquivariantClass equivariant_product(const EquivariantClass& x, const EquivariantClass& y);

std::ostream& operator<<(std::ostream& os, const QPolynomial& p);

}  // namespace tkmotive

#endif  // TKMOTIVE_QPOLYNOMIAL_HPP
