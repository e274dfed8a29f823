// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TKMOTIVE_VERIFY_HPP
#define TKMOTIVE_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tkmotive/bigint.hpp"
#include "tkmotive/point_count.hpp"
#include "tkmotive/torus_knot.hpp"

namespace tkmotive {

enum class VerifyGroup { agl1, agl2, gl2, strata, corrected };

/// Parses "agl1", "agl2", "gl2", "strata", "corrected"; throws std::invalid_argument.
VerifyGroup parse_verify_group(std::string_view name);
std::string_view verify_group_name(VerifyGroup g) noexcept;

struct VerificationItem {
  std::string name;
  BigInt expected;  // polynomial evaluated at q
  BigInt observed;  // point count
  bool match = false;
};

struct VerificationReport {
  TorusKnotParams params{1, 1};
  std::uint32_t q = 0;
  bool admissible = false;
  std::vector<VerificationItem> items;
  std::chrono::duration<double> elapsed{};

  bool all_match() const;
  bool passed() const { return admissible && all_match(); }
};

struct VerifyOptions {
  /// Explicit field size; when empty the smallest admissible prime <= max_q.
  std::optional<std::uint32_t> q;
  std::uint64_t max_q = 1000;
  std::set<VerifyGroup> groups{VerifyGroup::agl1, VerifyGroup::agl2, VerifyGroup::gl2};
  CountOptions count;
};

/// Compares motive evaluations at q with exhaustive counts. Mismatches are
/// reported in the items, never thrown. Throws NotPrime, NoAdmissiblePrime,
/// CapExceeded, and UnsupportedRange when strata are requested for a
/// degenerate knot.
VerificationReport verify(const TorusKnotParams& p, const VerifyOptions& options);

}  // namespace tkmotive

#endif  // TKMOTIVE_VERIFY_HPP
