// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#include "tkmotive/qpolynomial.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "tkmotive/errors.hpp"
#include "tkmotive/render.hpp"

namespace tkmotive {

BigInt parse_decimal(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') throw std::invalid_argument("not an integer: '" + text + "'");
  }
  BigInt v(text[0] == '+' ? text.substr(1) : text);
  return v;
}

QPolynomial::QPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

QPolynomial::QPolynomial(std::initializer_list<long long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long long c : ascending) coeffs_.emplace_back(c);
  trim();
}

QPolynomial QPolynomial::constant(BigInt c) { return QPolynomial(std::vector<BigInt>{std::move(c)}); }

QPolynomial QPolynomial::monomial(BigInt c, std::size_t power) {
  std::vector<BigInt> v(power + 1);
  v[power] = std::move(c);
  return QPolynomial(std::move(v));
}

BigInt QPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

BigInt QPolynomial::leading_coefficient() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

BigInt QPolynomial::evaluate(const BigInt& k) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= k;
    acc += *it;
  }
  return acc;
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  // Leading coefficients are nonzero integers, so no trimming is needed.
  return QPolynomial(std::move(out));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

QPolynomial& QPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

QPolynomial operator-(QPolynomial p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

QPolynomial poly_mul(const QPolynomial& a, const QPolynomial& b) { return a * b; }

BigInt poly_eval(const QPolynomial& p, const BigInt& k) { return p.evaluate(k); }

QPolynomial pow(const QPolynomial& p, unsigned e) {
  QPolynomial out = QPolynomial::constant(1);
  for (unsigned i = 0; i < e; ++i) out *= p;
  return out;
}

RationalScalar::RationalScalar(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw std::invalid_argument("rational scalar with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

QPolynomial rational_scale(const QPolynomial& p, const RationalScalar& s) {
  std::vector<BigInt> out;
  out.reserve(p.coefficients().size());
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    BigInt scaled = p.coefficients()[i] * s.numerator();
    BigInt quotient;
    BigInt remainder;
    divide_qr(scaled, s.denominator(), quotient, remainder);
    if (remainder != 0) {
      throw NonIntegralScale("scaling " + to_human(p) + " by " + s.numerator().str() + "/" +
                             s.denominator().str() + " leaves a fractional coefficient at q^" +
                             std::to_string(i));
    }
    out.push_back(std::move(quotient));
  }
  return QPolynomial(std::move(out));
}

EquivariantClass EquivariantClass::from_total_and_quotient(const QPolynomial& total,
                                                           const QPolynomial& quotient) {
  return {quotient, total - quotient};
}

EquivariantClass equivariant_product(const EquivariantClass& x, const EquivariantClass& y) {
  return {x.plus * y.plus + x.minus * y.minus, x.plus * y.minus + x.minus * y.plus};
}

std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << to_human(p); }

}  // namespace tkmotive
