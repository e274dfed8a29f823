// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#include "tkmotive/knot_corrections.hpp"

#include "tkmotive/errors.hpp"
#include "tkmotive/knot_formulas.hpp"
#include "tkmotive/render.hpp"

namespace tkmotive {
namespace {

QPolynomial qpow(unsigned e) { return QPolynomial::monomial(1, e); }

QPolynomial linear(const BigInt& a, const BigInt& b) { return QPolynomial(std::vector<BigInt>{b, a}); }

}  // namespace

QPolynomial gl2_nonsemisimple_motive(const TorusKnotParams& p) {
  const BigInt k = omega_size(p);
  // Ordered (t2, t1 = zeta t2) with zeta in Omega, times ordered triples of
  // distinct lines (shared, A0's other, B0's other).
  return k * class_gl1() * class_pgl2();
}

StratumBreakdown agl2_nonsemisimple_strata(const TorusKnotParams& p) {
  const BigInt m = p.m(), n = p.n();
  const BigInt k = omega_size(p);
  // Over t2 with t2^mn = 1, the images of Phi_n(A0) and Phi_m(B0) are each
  // the shared line, the other eigenline, or zero, with multiplicities
  // (n-1, n-1, (n-1)(n-2)) and (m-1, m-1, (m-1)(m-2)). Off mu_mn both are
  // invertible and Lambda has rank 2.
  const BigInt rank0 = k * (m - 2) * (n - 2);
  const BigInt rank1 = k * (2 * m + 2 * n - 7);
  const QPolynomial rank2 = k * linear(1, 2 - m * n);  // 3k + k(q - 1 - mn)
  const QPolynomial flags = class_pgl2();

  StratumBreakdown out;
  out.set(Stratum::A1, rank0 * flags * qpow(4));
  out.set(Stratum::A2, rank1 * flags * qpow(3));
  out.set(Stratum::A3, rank2 * flags * qpow(2));
  return out;
}

QPolynomial a3_twist_excess() { return qpow(5) - qpow(4); }

StratumBreakdown agl2_corrected_strata(const TorusKnotParams& p) {
  const StratumBreakdown published = agl2_strata(p);
  const StratumBreakdown extra = agl2_nonsemisimple_strata(p);
  StratumBreakdown out;
  for (Stratum s : kAllStrata) {
    QPolynomial v = published.at(s);
    if (extra.contains(s)) v += extra.at(s);
    if (s == Stratum::A3) v -= a3_twist_excess();
    out.set(s, std::move(v));
  }
  return out;
}

QPolynomial agl2_corrected_motive(const TorusKnotParams& p) {
  QPolynomial closed = agl2_closed_form(p) - a3_twist_excess() +
                       agl2_nonsemisimple_strata(p).grand_total();
  if (p.is_degenerate()) {
    if (closed != class_agl2()) {
      throw ConsistencyError("corrected AGL_2 closed form at " + p.to_string() + " is " +
                             to_human(closed) + ", expected [AGL_2]");
    }
    return closed;
  }
  const QPolynomial strata = agl2_corrected_strata(p).grand_total();
  if (strata != closed) {
    throw ConsistencyError("corrected AGL_2 strata sum vs closed form at " + p.to_string());
  }
  return closed;
}

QPolynomial gl2_corrected_red_A_motive(const TorusKnotParams& p) {
  return gl2_red_A_motive() + gl2_nonsemisimple_motive(p);
}

QPolynomial gl2_corrected_motive(const TorusKnotParams& p) {
  const QPolynomial irr = p.is_degenerate() ? QPolynomial{} : gl2_irr_motive(p);
  QPolynomial out =
      irr + gl2_corrected_red_A_motive(p) + gl2_red_B_motive() + gl2_red_C_motive();
  if (p.is_degenerate() && out != class_gl2()) {
    throw ConsistencyError("corrected GL_2 class at " + p.to_string() + " is " + to_human(out) +
                           ", expected [GL_2]");
  }
  return out;
}

}  // namespace tkmotive
