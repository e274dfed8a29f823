// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <numeric>

#include "tkmotive/knot_corrections.hpp"
#include "tkmotive/knot_formulas.hpp"

using namespace tkmotive;

namespace {
const QPolynomial q = QPolynomial::q();
const QPolynomial one{1};
QPolynomial qp(unsigned k) { return pow(q, k); }
}  // namespace

TEST_CASE("non-semisimple reducible pairs") {
  const TorusKnotParams p(2, 3);
  CHECK(gl2_nonsemisimple_motive(p) == BigInt(2) * (q - one) * class_pgl2());
  const StratumBreakdown s = agl2_nonsemisimple_strata(p);
  // k (q^3 - q) [(m-2)(n-2) q^4 + (2m+2n-7) q^3 + (q + 2 - mn) q^2]
  CHECK(s.grand_total() == BigInt(2) * class_pgl2() * (BigInt(3) * qp(3) + (q - BigInt(4) * one) * qp(2)));
  CHECK(s.at(Stratum::A1).is_zero());
  CHECK(gl2_nonsemisimple_motive(TorusKnotParams(1, 4)).is_zero());
}

TEST_CASE("A3 twist") { CHECK(a3_twist_excess() == qp(5) - qp(4)); }

TEST_CASE("corrected totals at (2,3)") {
  const TorusKnotParams p(2, 3);
  CHECK(agl2_corrected_motive(p).evaluate(7) == 2272032);
  CHECK(gl2_corrected_motive(p).evaluate(7) == 18144);
  CHECK(gl2_corrected_red_A_motive(p).evaluate(7) == 5754);
  const StratumBreakdown s = agl2_corrected_strata(p);
  CHECK(s.grand_total() == agl2_corrected_motive(p));
  CHECK(s.at(Stratum::A2).evaluate(7) == 845152);
  CHECK(s.at(Stratum::A3).evaluate(7) == 158466);
  // Strata other than A are untouched.
  const StratumBreakdown published = agl2_strata(p);
  for (Stratum st : kAllStrata) {
    if (group_of(st) != StratumGroup::A) CHECK(s.at(st) == published.at(st));
  }
}

TEST_CASE("corrected formulas at the degenerate end") {
  for (int n : {1, 2, 3, 7}) {
    const TorusKnotParams p(1, n);
    CHECK(agl2_corrected_motive(p) == class_agl2());
    CHECK(gl2_corrected_motive(p) == class_gl2());
  }
}

TEST_CASE("corrected motives are symmetric and vanish at q = 0, 1") {
  for (int m = 2; m <= 9; ++m) {
    for (int n = m + 1; n <= 12; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const TorusKnotParams p(m, n);
      const QPolynomial a = agl2_corrected_motive(p);
      CHECK(a == agl2_corrected_motive(p.swapped()));
      CHECK(a.evaluate(0) == 0);
      CHECK(a.evaluate(1) == 0);
      CHECK(gl2_corrected_motive(p).evaluate(1) == 0);
    }
  }
}
