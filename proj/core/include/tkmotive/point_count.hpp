// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TKMOTIVE_POINT_COUNT_HPP
#define TKMOTIVE_POINT_COUNT_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tkmotive/bigint.hpp"
#include "tkmotive/finite_field.hpp"
#include "tkmotive/stratum.hpp"
#include "tkmotive/torus_knot.hpp"

// Exhaustive F_q point counts of Rep_{m,n}(G) for G = AGL_1, GL_2, AGL_2.
//
// An AGL_2 point is (A0, B0, alpha, beta) with A0^n = B0^m and
// Phi_n(A0) alpha = Phi_m(B0) beta. For a fixed GL_2 solution (A0, B0) the
// translation parts form a linear space of dimension 4 - rank(Lambda), so
// AGL_2 points are counted as a weighted sum over GL_2 solutions.

namespace tkmotive {

/// Default cap on |GL_2(F_q)| for the enumeration (q <= 43 fits).
inline constexpr std::uint64_t kDefaultGroupBudget = std::uint64_t{1} << 22;

struct CountOptions {
  unsigned threads = 1;
  std::uint64_t max_group_order = kDefaultGroupBudget;
};

/// Thread count from TKMOTIVE_THREADS if set and positive, else the
/// hardware concurrency (at least 1).
unsigned default_thread_count();

struct CountTotals {
  BigInt agl_total;
  BigInt gl_total;
  BigInt gl_irr;
  BigInt red_A;
  BigInt red_B;
  BigInt red_C;

  friend bool operator==(const CountTotals&, const CountTotals&) = default;
};

struct CountReport {
  std::uint32_t q = 0;
  /// AGL_2 points per stratum (fiber-weighted). Empty for AGL_1 counts.
  std::map<Stratum, BigInt> per_stratum;
  /// GL_2 solution pairs per stratum.
  std::map<Stratum, BigInt> stratum_pairs;
  CountTotals totals;
  std::chrono::duration<double> elapsed{};
  unsigned thread_count = 1;
};

/// |Rep_{m,n}(AGL_1)(F_q)| via the fibration over t in F_q*. For q <= 31 a
/// naive loop over (t, alpha, beta) is run as well and must agree
/// (ConsistencyError otherwise). Throws NotPrime.
CountReport count_agl1(const TorusKnotParams& p, std::uint32_t q);

/// Naive count of {(t, alpha, beta) : Phi_n(t^m) alpha = Phi_m(t^n) beta}.
BigInt count_agl1_naive(const TorusKnotParams& p, const PrimeField& f);

/// All of GL_2(F_q) with A^n and B^m precomputed, and the B side indexed
/// by B^m so the partners of a given A are found by one lookup.
class Gl2SolutionIndex {
 public:
  /// Throws CapExceeded if |GL_2(F_q)| > max_group_order.
  Gl2SolutionIndex(const PrimeField& f, const TorusKnotParams& p,
                   std::uint64_t max_group_order = kDefaultGroupBudget);

  const PrimeField& field() const noexcept { return field_; }
  const TorusKnotParams& params() const noexcept { return params_; }
  const std::vector<Mat2>& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return group_.size(); }

  const Mat2& phi_n(std::size_t i) const noexcept { return phi_n_[i]; }
  const Mat2& phi_m(std::size_t i) const noexcept { return phi_m_[i]; }

  /// Indices b (ascending) with group()[b]^m == group()[a]^n.
  std::span<const std::uint32_t> partners(std::size_t a) const;

 private:
  PrimeField field_;
  TorusKnotParams params_;
  std::vector<Mat2> group_;
  std::vector<Mat2> phi_n_;
  std::vector<Mat2> phi_m_;
  std::vector<std::uint64_t> a_keys_;
  std::vector<std::uint32_t> by_power_;
  std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>> ranges_;
};

/// Calls visit(A0, B0) once for every pair in GL_2(F_q)^2 with
/// A0^n = B0^m, ordered by (A0, B0). Throws NotPrime, CapExceeded.
void enumerate_gl2_solutions(const TorusKnotParams& p, std::uint32_t q,
                             const std::function<void(const Mat2&, const Mat2&)>& visit,
                             std::uint64_t max_group_order = kDefaultGroupBudget);

std::vector<std::pair<Mat2, Mat2>> collect_gl2_solutions(
    const TorusKnotParams& p, std::uint32_t q,
    std::uint64_t max_group_order = kDefaultGroupBudget);

struct PairClass {
  Stratum stratum;
  /// Rank of Lambda(alpha, beta) = Phi_n(A0) alpha - Phi_m(B0) beta.
  int lambda_rank;
};

/// Stratum of a solution pair (A0^n = B0^m is a precondition).
/// Throws ClassificationError if the pair fits no stratum.
PairClass classify_gl2_pair(const PrimeField& f, const TorusKnotParams& p, const Mat2& a0,
                            const Mat2& b0);

/// Same, with Phi_n(A0) and Phi_m(B0) supplied by the caller.
PairClass classify_gl2_pair(const PrimeField& f, const Mat2& a0, const Mat2& b0,
                            const Mat2& phi_n_a0, const Mat2& phi_m_b0);

/// Full AGL_2 / GL_2 census with per-stratum tallies. Results do not depend
/// on options.threads. Throws NotPrime, CapExceeded, ClassificationError.
CountReport count_agl2(const TorusKnotParams& p, std::uint32_t q, const CountOptions& options = {});

}  // namespace tkmotive

#endif  // TKMOTIVE_POINT_COUNT_HPP
