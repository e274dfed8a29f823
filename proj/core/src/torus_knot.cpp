// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#include "tkmotive/torus_knot.hpp"

#include <numeric>

#include "tkmotive/errors.hpp"

namespace tkmotive {

TorusKnotParams::TorusKnotParams(std::int64_t m, std::int64_t n) : m_(m), n_(n) {
  if (m < 1 || n < 1) throw InvalidParams("m and n must be positive, got " + to_string());
  if (std::gcd(m, n) != 1) throw InvalidParams("m and n must be coprime, got " + to_string());
}

std::string TorusKnotParams::to_string() const {
  return "(" + std::to_string(m_) + "," + std::to_string(n_) + ")";
}

}  // namespace tkmotive
