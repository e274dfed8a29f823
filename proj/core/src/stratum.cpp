// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#include "tkmotive/stratum.hpp"

#include <stdexcept>
#include <string>

namespace tkmotive {

std::string_view label(Stratum s) noexcept {
  switch (s) {
    case Stratum::irr1: return "irr1";
    case Stratum::irr2: return "irr2";
    case Stratum::irr3: return "irr3";
    case Stratum::irr4: return "irr4";
    case Stratum::irr5: return "irr5";
    case Stratum::A1: return "A1";
    case Stratum::A2: return "A2";
    case Stratum::A3: return "A3";
    case Stratum::B1: return "B1";
    case Stratum::B2: return "B2";
    case Stratum::C1: return "C1";
    case Stratum::C2: return "C2";
  }
  return "?";
}

std::string_view label(StratumGroup g) noexcept {
  switch (g) {
    case StratumGroup::irr: return "irr";
    case StratumGroup::A: return "A";
    case StratumGroup::B: return "B";
    case StratumGroup::C: return "C";
  }
  return "?";
}

std::optional<Stratum> parse_stratum(std::string_view text) noexcept {
  for (Stratum s : kAllStrata) {
    if (label(s) == text) return s;
  }
  return std::nullopt;
}

StratumGroup group_of(Stratum s) noexcept {
  switch (s) {
    case Stratum::irr1:
    case Stratum::irr2:
    case Stratum::irr3:
    case Stratum::irr4:
    case Stratum::irr5: return StratumGroup::irr;
    case Stratum::A1:
    case Stratum::A2:
    case Stratum::A3: return StratumGroup::A;
    case Stratum::B1:
    case Stratum::B2: return StratumGroup::B;
    case Stratum::C1:
    case Stratum::C2: return StratumGroup::C;
  }
  return StratumGroup::irr;
}

void StratumBreakdown::set(Stratum s, QPolynomial p) { entries_[s] = std::move(p); }

const QPolynomial& StratumBreakdown::at(Stratum s) const {
  auto it = entries_.find(s);
  if (it == entries_.end()) throw std::out_of_range("stratum " + std::string(label(s)) + " not set");
  return it->second;
}

QPolynomial StratumBreakdown::total(StratumGroup g) const {
  QPolynomial sum;
  for (const auto& [s, p] : entries_) {
    if (group_of(s) == g) sum += p;
  }
  return sum;
}

QPolynomial StratumBreakdown::grand_total() const {
  QPolynomial sum;
  for (const auto& [s, p] : entries_) sum += p;
  return sum;
}

void StratumBreakdown::merge(const StratumBreakdown& other) {
  for (const auto& [s, p] : other.entries_) {
    if (entries_.contains(s)) {
      throw std::logic_error("stratum " + std::string(label(s)) + " set twice");
    }
    entries_.emplace(s, p);
  }
}

}  // namespace tkmotive
