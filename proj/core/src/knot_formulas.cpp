// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#include "tkmotive/knot_formulas.hpp"

#include <stdexcept>
#include <string>

#include "tkmotive/errors.hpp"
#include "tkmotive/render.hpp"

namespace tkmotive {
namespace {

const QPolynomial kQ = QPolynomial::q();
const QPolynomial kOne = QPolynomial::constant(1);

QPolynomial qpow(unsigned e) { return QPolynomial::monomial(1, e); }

// a*q + b
QPolynomial linear(const BigInt& a, const BigInt& b) { return QPolynomial(std::vector<BigInt>{b, a}); }

QPolynomial constant(const BigInt& c) { return QPolynomial::constant(c); }

void require_nondegenerate(const TorusKnotParams& p, const char* what) {
  if (p.is_degenerate()) {
    throw UnsupportedRange(std::string(what) + " requires m, n >= 2, got " + p.to_string());
  }
}

void require_equal(const QPolynomial& lhs, const QPolynomial& rhs, const std::string& what,
                   const TorusKnotParams& p) {
  if (lhs != rhs) {
    throw ConsistencyError(what + " at " + p.to_string() + ": " + to_human(lhs) +
                           " != " + to_human(rhs));
  }
}

// Exact quotient of an integer that the formulas guarantee to be divisible.
BigInt exact_div(const BigInt& num, long den, const char* what) {
  if (num % den != 0) {
    throw NonIntegralScale(std::string(what) + ": " + num.str() + " is not divisible by " +
                           std::to_string(den));
  }
  return num / den;
}

struct Ints {
  BigInt m, n, k, mn;
};

Ints ints(const TorusKnotParams& p) {
  BigInt m = p.m(), n = p.n();
  return {m, n, (m - 1) * (n - 1), m * n};
}

// [P^1 - {0, 1, oo}] [PGL_2]: class of irreducible pairs with fixed eigenvalues.
QPolynomial fixed_eigenvalue_irr_class() { return linear(1, -2) * class_pgl2(); }

}  // namespace

QPolynomial class_gl1() { return linear(1, -1); }

QPolynomial class_gl2() { return (qpow(2) - kQ) * (qpow(2) - kOne); }

QPolynomial class_pgl2() { return qpow(3) - kQ; }

QPolynomial class_agl1() { return kQ * class_gl1(); }

QPolynomial class_agl2() { return qpow(2) * class_gl2(); }

EquivariantClass torus_minus_diagonal_class() {
  // Quotient by the swap, in coordinates s = x + y, p = xy: the plane minus
  // {p = 0} minus the punctured conic {4p = s^2}.
  const QPolynomial total = class_gl1() * class_gl1() - class_gl1();
  const QPolynomial quotient = (qpow(2) - kQ) - class_gl1();
  return EquivariantClass::from_total_and_quotient(total, quotient);
}

EquivariantClass split_torus_flag_class() {
  // P^1 x P^1 minus the diagonal; the quotient is Sym^2 P^1 = P^2 minus a conic.
  const QPolynomial p1 = linear(1, 1);
  const QPolynomial total = p1 * p1 - p1;
  const QPolynomial quotient = (qpow(2) + kQ + kOne) - p1;
  return EquivariantClass::from_total_and_quotient(total, quotient);
}

std::uint64_t omega_size(const TorusKnotParams& p) {
  return static_cast<std::uint64_t>(p.m() - 1) * static_cast<std::uint64_t>(p.n() - 1);
}

QPolynomial agl1_motive(const TorusKnotParams& p) {
  // Fibration over t in C*: fiber C off Omega, C^2 over Omega.
  const BigInt omega = omega_size(p);
  const QPolynomial generic = (class_gl1() - constant(omega)) * kQ;
  const QPolynomial special = omega * qpow(2);
  QPolynomial total = generic + special;
  require_equal(total, BigInt(p.m() * p.n() - p.m() - p.n() + 2) * (qpow(2) - kQ),
                "AGL_1 fibration sum vs closed form", p);
  return total;
}

QPolynomial gl2_irr_motive(const TorusKnotParams& p) {
  require_nondegenerate(p, "irreducible GL_2 motive");
  const auto [m, n, k, mn] = ints(p);
  const QPolynomial pgl2 = class_pgl2();
  const QPolynomial q_minus_1 = linear(1, -1);
  const QPolynomial q_minus_2 = linear(1, -2);
  const bool m_odd = p.m() % 2 != 0;
  const bool n_odd = p.n() % 2 != 0;
  if (m_odd && n_odd) {
    return rational_scale(pgl2 * q_minus_2 * q_minus_1, RationalScalar(k, 4));
  }
  if (m_odd) {
    QPolynomial inner = rational_scale(q_minus_2, RationalScalar((n - 2) * (m - 1), 4)) +
                        rational_scale(q_minus_1, RationalScalar(m - 1, 2));
    return pgl2 * inner * q_minus_1;
  }
  QPolynomial inner = rational_scale(q_minus_2, RationalScalar((n - 1) * (m - 2), 4)) +
                      rational_scale(q_minus_1, RationalScalar(n - 1, 2));
  return pgl2 * inner * q_minus_1;
}

StratumBreakdown agl2_irr_strata(const TorusKnotParams& p) {
  require_nondegenerate(p, "irreducible AGL_2 strata");
  const auto [m, n, k, mn] = ints(p);
  const QPolynomial fixed = fixed_eigenvalue_irr_class();

  // Number of eigenvalue configurations (copies of the fixed-eigenvalue
  // variety) in strata 1-4.
  const BigInt base1 = exact_div((n - 1) * (n - 2) * (m - 1) * (m - 2), 4, "irr1 base");
  const BigInt base2 = exact_div((n - 1) * (n - 2) * (m - 1), 2, "irr2 base");
  const BigInt base3 = exact_div((m - 1) * (n - 1) * (m - 2), 2, "irr3 base");
  const BigInt base4 = k;
  const BigInt forbidden = exact_div(mn * k, 4, "forbidden orbit count");
  if (base1 + base2 + base3 + base4 != forbidden) {
    throw ConsistencyError("forbidden eigenvalue orbits at " + p.to_string() + ": " +
                           BigInt(base1 + base2 + base3 + base4).str() + " != " + forbidden.str());
  }

  StratumBreakdown out;
  // Fibers of (alpha, beta) are C^4, C^3, C^3, C^2, C^2.
  out.set(Stratum::irr1, base1 * fixed * qpow(4));
  out.set(Stratum::irr2, base2 * fixed * qpow(3));
  out.set(Stratum::irr3, base3 * fixed * qpow(3));
  out.set(Stratum::irr4, base4 * fixed * qpow(2));
  out.set(Stratum::irr5, (gl2_irr_motive(p) - forbidden * fixed) * qpow(2));

  const QPolynomial closed =
      rational_scale(k * (qpow(3) - BigInt(2) * qpow(2)) * linear(1, -1) * class_pgl2() *
                         linear((m - 2) * (n - 2), mn - 4),
                     RationalScalar(1, 4)) +
      gl2_irr_motive(p) * qpow(2);
  require_equal(out.total(StratumGroup::irr), closed, "irreducible strata sum vs closed form", p);
  return out;
}

StratumBreakdown agl2_red_strata(const TorusKnotParams& p) {
  require_nondegenerate(p, "reducible AGL_2 strata");
  const auto [m, n, k, mn] = ints(p);
  const QPolynomial q_minus_1 = linear(1, -1);
  // Translation-fiber-free class of the split torus orbit with fixed eigenvalues.
  const QPolynomial orbit_A = split_torus_flag_class().total();  // q^2 + q
  const BigInt pairs_in_omega = exact_div(k * (mn - m - n), 2, "A1 base");
  // q - 1 - |Omega| = q - mn + n + m - 2
  const QPolynomial off_omega = linear(1, -(mn - n - m + 2));

  StratumBreakdown out;

  // (A) distinct eigenvalues t1 != t2.
  out.set(Stratum::A1, pairs_in_omega * qpow(4) * orbit_A);
  out.set(Stratum::A2, k * off_omega * qpow(3) * orbit_A);
  const QPolynomial base_A3 =
      torus_minus_diagonal_class().plus - constant(pairs_in_omega) - k * off_omega;
  out.set(Stratum::A3, qpow(2) * orbit_A * base_A3);
  const QPolynomial closed_A =
      orbit_A * qpow(2) *
      (pairs_in_omega * (qpow(2) - kOne) + k * off_omega * q_minus_1 + q_minus_1 * q_minus_1);
  require_equal(out.total(StratumGroup::A), closed_A, "stratum (A) sum vs closed form", p);

  // (B) scalar pairs.
  out.set(Stratum::B1, k * qpow(4));
  out.set(Stratum::B2, (q_minus_1 - constant(k)) * qpow(2));
  const QPolynomial closed_B = k * (qpow(4) - qpow(2)) + q_minus_1 * qpow(2);
  require_equal(out.total(StratumGroup::B), closed_B, "stratum (B) sum vs closed form", p);

  // (C) Jordan type.
  const QPolynomial fixed_C = q_minus_1 * linear(1, 1);
  out.set(Stratum::C1, k * qpow(3) * fixed_C);
  out.set(Stratum::C2, (gl2_red_C_motive() - k * fixed_C) * qpow(2));
  const QPolynomial closed_C =
      q_minus_1 * q_minus_1 * linear(1, 1) * qpow(2) + k * fixed_C * (qpow(3) - qpow(2));
  require_equal(out.total(StratumGroup::C), closed_C, "stratum (C) sum vs closed form", p);

  return out;
}

StratumBreakdown agl2_strata(const TorusKnotParams& p) {
  StratumBreakdown out = agl2_irr_strata(p);
  out.merge(agl2_red_strata(p));
  return out;
}

QPolynomial agl2_closed_form(const TorusKnotParams& p) {
  const auto [m, n, k, mn] = ints(p);
  const QPolynomial q5_q3 = qpow(5) - qpow(3);
  const QPolynomial q_minus_1 = linear(1, -1);
  const QPolynomial q_minus_2 = linear(1, -2);
  const QPolynomial irr = p.is_degenerate() ? QPolynomial{} : gl2_irr_motive(p);

  QPolynomial out = qpow(6) - BigInt(2) * qpow(4) + qpow(3) + irr * qpow(2);
  out += rational_scale(k * q_minus_1 * q_minus_2 * linear((m - 2) * (n - 2), mn - 4) * q5_q3,
                        RationalScalar(1, 4));
  out += k * (linear(1, 1) - constant(2)) * q5_q3;
  out += rational_scale(k * (mn - m - n) * q_minus_1 * q5_q3, RationalScalar(1, 2));
  return out;
}

QPolynomial agl2_motive(const TorusKnotParams& p) {
  if (p.is_degenerate()) return class_agl2();
  QPolynomial total = agl2_strata(p).grand_total();
  require_equal(total, agl2_closed_form(p), "AGL_2 strata sum vs closed form", p);
  return total;
}

QPolynomial gl2_red_A_motive() {
  return equivariant_product(torus_minus_diagonal_class(), split_torus_flag_class()).plus;
}

QPolynomial gl2_red_B_motive() { return class_gl1(); }

QPolynomial gl2_red_C_motive() {
  // (C*)^2 x GL_2 / U with U the upper triangular Borel.
  const QPolynomial q_minus_1 = linear(1, -1);
  return q_minus_1 * q_minus_1 * linear(1, 1);
}

QPolynomial gl2_motive(const TorusKnotParams& p) {
  if (p.is_degenerate()) return class_gl2();
  return gl2_irr_motive(p) + gl2_red_A_motive() + gl2_red_B_motive() + gl2_red_C_motive();
}

MotiveGroup parse_motive_group(std::string_view name) {
  if (name == "agl1") return MotiveGroup::agl1;
  if (name == "agl2") return MotiveGroup::agl2;
  if (name == "gl2") return MotiveGroup::gl2;
  if (name == "gl2-irr") return MotiveGroup::gl2_irr;
  throw std::invalid_argument("unknown group '" + std::string(name) + "'");
}

std::string_view motive_group_name(MotiveGroup g) noexcept {
  switch (g) {
    case MotiveGroup::agl1: return "agl1";
    case MotiveGroup::agl2: return "agl2";
    case MotiveGroup::gl2: return "gl2";
    case MotiveGroup::gl2_irr: return "gl2-irr";
  }
  return "?";
}

QPolynomial motive(MotiveGroup g, const TorusKnotParams& p) {
  switch (g) {
    case MotiveGroup::agl1: return agl1_motive(p);
    case MotiveGroup::agl2: return agl2_motive(p);
    case MotiveGroup::gl2: return gl2_motive(p);
    case MotiveGroup::gl2_irr: return p.is_degenerate() ? QPolynomial{} : gl2_irr_motive(p);
  }
  throw std::logic_error("unreachable");
}

}  // namespace tkmotive
