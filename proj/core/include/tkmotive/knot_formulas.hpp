// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TKMOTIVE_KNOT_FORMULAS_HPP
#define TKMOTIVE_KNOT_FORMULAS_HPP

#include <cstdint>
#include <string_view>

#include "tkmotive/qpolynomial.hpp"
#include "tkmotive/stratum.hpp"
#include "tkmotive/torus_knot.hpp"

// Motives of representation varieties of torus knots into GL_2, AGL_1 and
// AGL_2. Every function here is a pure function of (m, n).
//
// The AGL_2 total is assembled twice: once as the sum of the twelve strata
// and once from the closed form. agl2_motive() refuses to return unless the
// two agree.

namespace tkmotive {

// Classes of the groups themselves.
QPolynomial class_gl1();   // q - 1
QPolynomial class_gl2();   // (q^2 - q)(q^2 - 1)
QPolynomial class_pgl2();  // q^3 - q
QPolynomial class_agl1();  // q (q - 1)
QPolynomial class_agl2();  // q^2 [GL_2]

/// (C*)^2 minus the diagonal, Z/2 swapping coordinates.
EquivariantClass torus_minus_diagonal_class();
/// GL_2 / (GL_1 x GL_1) = P^1 x P^1 minus the diagonal, Z/2 swapping columns.
EquivariantClass split_torus_flag_class();

/// |mu_mn - (mu_m u mu_n)| = (m - 1)(n - 1).
std::uint64_t omega_size(const TorusKnotParams& p);

/// (mn - m - n + 2)(q^2 - q). Valid for degenerate knots as well.
QPolynomial agl1_motive(const TorusKnotParams& p);

/// Irreducible locus of Rep_{m,n}(GL_2), by parity of m and n.
/// Throws UnsupportedRange if m = 1 or n = 1 (that locus is empty).
QPolynomial gl2_irr_motive(const TorusKnotParams& p);

/// Entries irr1..irr5. Throws UnsupportedRange for degenerate knots and
/// ConsistencyError if their sum differs from the compressed closed form.
StratumBreakdown agl2_irr_strata(const TorusKnotParams& p);

/// Entries A1..A3, B1, B2, C1, C2, each group checked against its
/// printed subtotal.
StratumBreakdown agl2_red_strata(const TorusKnotParams& p);

/// All twelve strata.
StratumBreakdown agl2_strata(const TorusKnotParams& p);

/// The closed form for [Rep_{m,n}(AGL_2)] as a single expression, without
/// going through the strata. Only meaningful for m, n >= 2.
QPolynomial agl2_closed_form(const TorusKnotParams& p);

/// [Rep_{m,n}(AGL_2)]. For m, n >= 2 this is the strata sum, checked against
/// agl2_closed_form(); for degenerate knots it is [AGL_2].
QPolynomial agl2_motive(const TorusKnotParams& p);

/// Reducible parts of Rep_{m,n}(GL_2); independent of (m, n).
QPolynomial gl2_red_A_motive();
QPolynomial gl2_red_B_motive();
QPolynomial gl2_red_C_motive();

/// [Rep_{m,n}(GL_2)]; [GL_2] for degenerate knots.
QPolynomial gl2_motive(const TorusKnotParams& p);

enum class MotiveGroup { agl1, agl2, gl2, gl2_irr };

/// Parses "agl1", "agl2", "gl2", "gl2-irr"; throws std::invalid_argument.
MotiveGroup parse_motive_group(std::string_view name);
std::string_view motive_group_name(MotiveGroup g) noexcept;

/// Dispatches to the functions above, routing degenerate knots to the
/// special cases (gl2-irr is 0 there).
QPolynomial motive(MotiveGroup g, const TorusKnotParams& p);

}  // namespace tkmotive

#endif  // TKMOTIVE_KNOT_FORMULAS_HPP
