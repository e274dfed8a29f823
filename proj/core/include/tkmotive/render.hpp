// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TKMOTIVE_RENDER_HPP
#define TKMOTIVE_RENDER_HPP

#include <string>
#include <string_view>

#include "tkmotive/qpolynomial.hpp"

namespace tkmotive {

enum class Format { human, latex, json, csv };

/// Parses "human", "latex", "json" or "csv"; throws std::invalid_argument.
Format parse_format(std::string_view name);
std::string_view format_name(Format f) noexcept;

/// Descending powers, e.g. "3*q^2 - 3*q". Zero renders as "0".
std::string to_human(const QPolynomial& p);

/// Descending powers in LaTeX, e.g. "3q^{2} - 3q".
std::string to_latex(const QPolynomial& p);

/// JSON array of decimal-string coefficients in ascending order,
/// e.g. ["0","-3","3"]. Lossless: from_json(to_json(p)) == p.
std::string to_json(const QPolynomial& p);
QPolynomial from_json(std::string_view text);

/// Ascending decimal coefficients joined by ';' (the CSV cell form).
std::string to_csv_cell(const QPolynomial& p);
QPolynomial from_csv_cell(std::string_view cell);

}  // namespace tkmotive

#endif  // TKMOTIVE_RENDER_HPP
