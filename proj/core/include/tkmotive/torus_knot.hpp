// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TKMOTIVE_TORUS_KNOT_HPP
#define TKMOTIVE_TORUS_KNOT_HPP

#include <cstdint>
#include <string>

namespace tkmotive {

/// Type (m, n) of a torus knot, whose group is <x, y | x^n = y^m>.
/// Construction enforces m, n >= 1 and gcd(m, n) = 1.
class TorusKnotParams {
 public:
  /// Throws InvalidParams.
  TorusKnotParams(std::int64_t m, std::int64_t n);

  std::int64_t m() const noexcept { return m_; }
  std::int64_t n() const noexcept { return n_; }

  /// m = 1 or n = 1: the group is infinite cyclic and Rep(G) = G.
  bool is_degenerate() const noexcept { return m_ == 1 || n_ == 1; }

  TorusKnotParams swapped() const { return {n_, m_}; }

  std::string to_string() const;

  friend bool operator==(const TorusKnotParams&, const TorusKnotParams&) = default;

 private:
  std::int64_t m_;
  std::int64_t n_;
};

}  // namespace tkmotive

#endif  // TKMOTIVE_TORUS_KNOT_HPP
