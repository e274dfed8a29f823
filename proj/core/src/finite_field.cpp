// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#include "tkmotive/finite_field.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "tkmotive/errors.hpp"

namespace tkmotive {

bool is_prime(std::uint64_t v) noexcept {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t d = 3; d * d <= v; d += 2) {
    if (v % d == 0) return false;
  }
  return true;
}

bool is_admissible(const TorusKnotParams& p, std::uint64_t q) noexcept {
  const auto mn = static_cast<std::uint64_t>(p.m()) * static_cast<std::uint64_t>(p.n());
  return is_prime(q) && q % mn == 1 % mn;
}

std::uint32_t smallest_admissible_prime(const TorusKnotParams& p, std::uint64_t cap) {
  const auto mn = static_cast<std::uint64_t>(p.m()) * static_cast<std::uint64_t>(p.n());
  const std::uint64_t limit = std::min<std::uint64_t>(cap, kMaxFieldModulus);
  // Candidates 1 + j*mn; for mn = 1 every prime qualifies.
  for (std::uint64_t c = mn + 1; c <= limit; c += mn) {
    if (is_prime(c)) return static_cast<std::uint32_t>(c);
  }
  throw NoAdmissiblePrime("no prime q <= " + std::to_string(cap) + " with q = 1 (mod " +
                          std::to_string(mn) + ") for " + p.to_string());
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (!is_prime(q)) throw NotPrime(std::to_string(q) + " is not prime");
  if (q > kMaxFieldModulus) {
    throw CapExceeded("field size " + std::to_string(q) + " exceeds " +
                      std::to_string(kMaxFieldModulus));
  }
  // inverse(i) = -(q / i) * inverse(q mod i)
  inverse_.assign(q, 0);
  if (q > 1) inverse_[1] = 1;
  for (std::uint32_t i = 2; i < q; ++i) {
    inverse_[i] = static_cast<std::uint32_t>(
        (q - static_cast<std::uint64_t>(q / i) * inverse_[q % i] % q) % q);
  }
}

FieldElement PrimeField::pow(FieldElement a, std::uint64_t k) const noexcept {
  FieldElement r = one();
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Mat2 make_mat(const PrimeField& f, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return {f.element(a), f.element(b), f.element(c), f.element(d)};
}

Mat2 mat_scale(const PrimeField& f, FieldElement s, const Mat2& m) noexcept {
  return {f.mul(s, m.a), f.mul(s, m.b), f.mul(s, m.c), f.mul(s, m.d)};
}

Vec2 apply(const PrimeField& f, const Mat2& m, const Vec2& v) noexcept {
  return {f.add(f.mul(m.a, v.x), f.mul(m.b, v.y)), f.add(f.mul(m.c, v.x), f.mul(m.d, v.y))};
}

Mat2 mat_inverse(const PrimeField& f, const Mat2& m) noexcept {
  const FieldElement s = f.inv(det(f, m));
  return {f.mul(s, m.d), f.mul(s, f.neg(m.b)), f.mul(s, f.neg(m.c)), f.mul(s, m.a)};
}

Mat2 mat_pow(const PrimeField& f, Mat2 m, std::uint64_t k) noexcept {
  Mat2 r = kIdentity;
  while (k) {
    if (k & 1) r = mat_mul(f, r, m);
    m = mat_mul(f, m, m);
    k >>= 1;
  }
  return r;
}

Mat2 phi_mat(const PrimeField& f, std::uint64_t l, const Mat2& m) noexcept {
  Mat2 sum = kZeroMatrix;
  Mat2 term = kIdentity;
  for (std::uint64_t i = 0; i < l; ++i) {
    sum = mat_add(f, sum, term);
    if (i + 1 < l) term = mat_mul(f, term, m);
  }
  return sum;
}

int rank(const PrimeField& f, const Mat2& m) noexcept {
  if (m == kZeroMatrix) return 0;
  return det(f, m).value != 0 ? 2 : 1;
}

namespace {

// Row rank of a small dense matrix over f, by Gaussian elimination.
template <std::size_t Rows, std::size_t Cols>
int row_rank(const PrimeField& f, std::array<std::array<FieldElement, Cols>, Rows> rows) noexcept {
  int r = 0;
  for (std::size_t col = 0; col < Cols && r < static_cast<int>(Rows); ++col) {
    std::size_t pivot = Rows;
    for (std::size_t i = r; i < Rows; ++i) {
      if (rows[i][col].value != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == Rows) continue;
    std::swap(rows[r], rows[pivot]);
    const FieldElement inv = f.inv(rows[r][col]);
    for (std::size_t i = r + 1; i < Rows; ++i) {
      if (rows[i][col].value == 0) continue;
      const FieldElement factor = f.mul(rows[i][col], inv);
      for (std::size_t j = col; j < Cols; ++j) {
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

int rank_2x4(const PrimeField& f, const Mat2& left, const Mat2& right) noexcept {
  std::array<std::array<FieldElement, 4>, 2> rows{{
      {left.a, left.b, f.neg(right.a), f.neg(right.b)},
      {left.c, left.d, f.neg(right.c), f.neg(right.d)},
  }};
  return row_rank(f, rows);
}

int pair_algebra_rank(const PrimeField& f, const Mat2& a, const Mat2& b) noexcept {
  const Mat2 ab = mat_mul(f, a, b);
  std::array<std::array<FieldElement, 4>, 4> rows{{
      {kIdentity.a, kIdentity.b, kIdentity.c, kIdentity.d},
      {a.a, a.b, a.c, a.d},
      {b.a, b.b, b.c, b.d},
      {ab.a, ab.b, ab.c, ab.d},
  }};
  return row_rank(f, rows);
}

bool has_repeated_eigenvalue(const PrimeField& f, const Mat2& m) noexcept {
  const FieldElement t = trace(f, m);
  return f.mul(t, t) == f.mul(f.element(4), det(f, m));
}

std::uint64_t gl2_order(std::uint64_t q) noexcept { return (q * q - 1) * (q * q - q); }

std::vector<Mat2> enumerate_gl2(const PrimeField& f) {
  const std::uint32_t q = f.modulus();
  std::vector<Mat2> out;
  out.reserve(gl2_order(q));
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          const Mat2 m{{a}, {b}, {c}, {d}};
          if (det(f, m).value != 0) out.push_back(m);
        }
  return out;
}

std::pair<Mat2, Vec2> affine_power(const PrimeField& f, const Mat2& m, const Vec2& v,
                                   std::uint64_t k) noexcept {
  return {mat_pow(f, m, k), apply(f, phi_mat(f, k, m), v)};
}

bool satisfies_relation(const PrimeField& f, const TorusKnotParams& p, const AffinePair& pair) {
  const auto lhs = affine_power(f, pair.a0, pair.alpha, static_cast<std::uint64_t>(p.n()));
  const auto rhs = affine_power(f, pair.b0, pair.beta, static_cast<std::uint64_t>(p.m()));
  return lhs == rhs;
}

}  // namespace tkmotive
