// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TKMOTIVE_KNOT_CORRECTIONS_HPP
#define TKMOTIVE_KNOT_CORRECTIONS_HPP

#include "tkmotive/qpolynomial.hpp"
#include "tkmotive/stratum.hpp"
#include "tkmotive/torus_knot.hpp"

// Amendments to the reducible part of the stratification in knot_formulas.
//
// knot_formulas reproduces the published strata as written. Exhaustive
// counts disagree with them in stratum (A) for two reasons, and the
// functions here account for both:
//
//  * Non-semisimple reducible pairs. When t1/t2 lies in Omega_{m,n}, the
//    pair (A0, B0) may be lower triangular in a basis where the two share
//    only one eigenline. Each matrix still has distinct eigenvalues and
//    A0^n = B0^m is scalar, so these pairs are reducible but fit none of
//    the normal forms (A), (B), (C). Their GL_2 class is
//    (m-1)(n-1)(q-1)(q^3-q).
//
//  * The Z/2 twist in A3. The fibration over unordered eigenvalue pairs
//    {t1, t2} has fiber P^1 x P^1 - diagonal only up to the swap, so its
//    class is [B]^+ q^2 + [B]^- q rather than [B] (q^2 + q). The difference
//    is q^3 - q^2 on the GL_2 level and q^5 - q^4 after the C^2 fiber.
//
// With both terms the closed form also holds for m = 1 or n = 1, where it
// reduces to [AGL_2] and [GL_2].

namespace tkmotive {

/// GL_2 class of the non-semisimple reducible pairs, (m-1)(n-1)(q-1)(q^3-q).
QPolynomial gl2_nonsemisimple_motive(const TorusKnotParams& p);

/// AGL_2 contribution of the non-semisimple pairs split by the rank of
/// Lambda, filed under A1 (rank 0), A2 (rank 1) and A3 (rank 2), the strata
/// the pair classifier assigns them to.
StratumBreakdown agl2_nonsemisimple_strata(const TorusKnotParams& p);

/// Amount by which the untwisted A3 formula overcounts: q^5 - q^4.
QPolynomial a3_twist_excess();

/// Published strata plus both amendments. Requires m, n >= 2.
StratumBreakdown agl2_corrected_strata(const TorusKnotParams& p);

/// Corrected [Rep_{m,n}(AGL_2)] for any coprime m, n >= 1.
QPolynomial agl2_corrected_motive(const TorusKnotParams& p);

/// Corrected [Rep_{m,n}(GL_2)] for any coprime m, n >= 1.
QPolynomial gl2_corrected_motive(const TorusKnotParams& p);

/// Corrected GL_2 class of the pairs the classifier files under (A):
/// the split-torus class plus the non-semisimple pairs.
QPolynomial gl2_corrected_red_A_motive(const TorusKnotParams& p);

}  // namespace tkmotive

#endif  // TKMOTIVE_KNOT_CORRECTIONS_HPP
