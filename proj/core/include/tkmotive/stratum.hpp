// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TKMOTIVE_STRATUM_HPP
#define TKMOTIVE_STRATUM_HPP

#include <array>
#include <map>
#include <optional>
#include <string_view>

#include "tkmotive/qpolynomial.hpp"

namespace tkmotive {

/// Strata of Rep_{m,n}(AGL_2). The irreducible strata are indexed by how
/// many eigenvalues of A0 (resp. B0) are nontrivial n-th (resp. m-th) roots
/// of unity; the reducible ones by normal form (A), (B), (C) and by the
/// dimension of the translation fiber.
enum class Stratum {
  irr1, irr2, irr3, irr4, irr5,
  A1, A2, A3,
  B1, B2,
  C1, C2,
};

inline constexpr std::array<Stratum, 12> kAllStrata = {
    Stratum::irr1, Stratum::irr2, Stratum::irr3, Stratum::irr4, Stratum::irr5,
    Stratum::A1,   Stratum::A2,   Stratum::A3,   Stratum::B1,   Stratum::B2,
    Stratum::C1,   Stratum::C2,
};

enum class StratumGroup { irr, A, B, C };

inline constexpr std::array<StratumGroup, 4> kAllStratumGroups = {
    StratumGroup::irr, StratumGroup::A, StratumGroup::B, StratumGroup::C};

std::string_view label(Stratum s) noexcept;
std::string_view label(StratumGroup g) noexcept;
std::optional<Stratum> parse_stratum(std::string_view text) noexcept;
StratumGroup group_of(Stratum s) noexcept;

/// Per-stratum motives together with their group subtotals.
class StratumBreakdown {
 public:
  void set(Stratum s, QPolynomial p);
  /// Throws std::out_of_range if the entry has not been set.
  const QPolynomial& at(Stratum s) const;
  bool contains(Stratum s) const { return entries_.contains(s); }
  const std::map<Stratum, QPolynomial>& entries() const noexcept { return entries_; }

  /// Sum of the entries present in group g.
  QPolynomial total(StratumGroup g) const;
  /// Sum of all entries.
  QPolynomial grand_total() const;

  /// Adds the entries of other; a stratum may not be set twice.
  void merge(const StratumBreakdown& other);

 private:
  std::map<Stratum, QPolynomial> entries_;
};

}  // namespace tkmotive

#endif  // TKMOTIVE_STRATUM_HPP
