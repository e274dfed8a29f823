// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <numeric>
#include <random>

#include "tkmotive/errors.hpp"
#include "tkmotive/finite_field.hpp"
#include "tkmotive/knot_corrections.hpp"
#include "tkmotive/knot_formulas.hpp"
#include "tkmotive/point_count.hpp"

using namespace tkmotive;

namespace {
std::mt19937_64 rng(0x5eed);

QPolynomial random_poly() {
  std::uniform_int_distribution<int> deg(-1, 6);
  std::uniform_int_distribution<long long> coef(-1000000007LL, 1000000007LL);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = coef(rng);
  return QPolynomial(std::move(c));
}

template <class F>
void for_coprime(int lo, int hi, F&& f) {
  for (int m = lo; m <= hi; ++m) {
    for (int n = m + 1; n <= hi; ++n) {
      if (std::gcd(m, n) == 1) f(TorusKnotParams(m, n));
    }
  }
}

Mat2 random_mat(const PrimeField& f) {
  std::uniform_int_distribution<std::int64_t> d(0, f.modulus() - 1);
  return make_mat(f, d(rng), d(rng), d(rng), d(rng));
}

Mat2 random_invertible(const PrimeField& f) {
  for (;;) {
    const Mat2 m = random_mat(f);
    if (det(f, m).value != 0) return m;
  }
}
}  // namespace

TEST_CASE("ring axioms") {
  for (int i = 0; i < 200; ++i) {
    const QPolynomial a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a - a == QPolynomial{});
    CHECK(-(-a) == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::uniform_int_distribution<long long> k(-5000, 5000);
  for (int i = 0; i < 100; ++i) {
    const QPolynomial a = random_poly(), b = random_poly();
    const BigInt x = k(rng);
    CHECK(poly_eval(a * b, x) == poly_eval(a, x) * poly_eval(b, x));
    CHECK(poly_eval(a + b, x) == poly_eval(a, x) + poly_eval(b, x));
  }
}

TEST_CASE("equivariant totals multiply") {
  for (int i = 0; i < 100; ++i) {
    const EquivariantClass x{random_poly(), random_poly()};
    const EquivariantClass y{random_poly(), random_poly()};
    CHECK(equivariant_product(x, y).total() == x.total() * y.total());
  }
}

TEST_CASE("torus minus diagonal constants") {
  const QPolynomial q = QPolynomial::q();
  const QPolynomial one{1};
  const EquivariantClass t = torus_minus_diagonal_class();
  CHECK(t.plus == (q - one) * (q - one));
  CHECK(t.minus == one - q);
  const EquivariantClass x = split_torus_flag_class();
  CHECK(x.plus == q * q);
  CHECK(x.minus == q);
}

TEST_CASE("strata sum equals the closed form for 2 <= m < n <= 12") {
  int pairs = 0;
  for_coprime(2, 12, [&](const TorusKnotParams& p) {
    CAPTURE(p.to_string());
    const StratumBreakdown s = agl2_strata(p);
    CHECK(s.entries().size() == 12);
    CHECK(s.grand_total() == agl2_closed_form(p));
    CHECK(agl2_corrected_strata(p).grand_total() == agl2_corrected_motive(p));
    ++pairs;
  });
  CHECK(pairs == 34);
}

TEST_CASE("m <-> n symmetry") {
  for_coprime(1, 12, [](const TorusKnotParams& p) {
    CAPTURE(p.to_string());
    const TorusKnotParams s = p.swapped();
    CHECK(agl1_motive(p) == agl1_motive(s));
    CHECK(agl2_motive(p) == agl2_motive(s));
    CHECK(gl2_motive(p) == gl2_motive(s));
    if (p.is_degenerate()) return;
    const StratumBreakdown a = agl2_strata(p), b = agl2_strata(s);
    CHECK(a.at(Stratum::irr2) == b.at(Stratum::irr3));
    CHECK(a.at(Stratum::irr3) == b.at(Stratum::irr2));
    for (Stratum st : {Stratum::irr1, Stratum::irr4, Stratum::irr5, Stratum::A1, Stratum::A2, Stratum::A3,
                       Stratum::B1, Stratum::B2, Stratum::C1, Stratum::C2}) {
      CHECK(a.at(st) == b.at(st));
    }
  });
}

TEST_CASE("motives vanish at q = 0 and q = 1") {
  for_coprime(2, 12, [](const TorusKnotParams& p) {
    CAPTURE(p.to_string());
    for (const QPolynomial& m : {agl1_motive(p), agl2_motive(p), gl2_irr_motive(p)}) {
      CHECK(m.evaluate(0) == 0);
      CHECK(m.evaluate(1) == 0);
    }
  });
}

TEST_CASE("every rational scaling is integral for coprime m, n <= 50") {
  for (int m = 1; m <= 50; ++m) {
    for (int n = 1; n <= 50; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const TorusKnotParams p(m, n);
      CAPTURE(p.to_string());
      CHECK_NOTHROW(agl2_closed_form(p));
      CHECK_NOTHROW(agl2_motive(p));
      CHECK_NOTHROW(gl2_motive(p));
      CHECK_NOTHROW(agl2_corrected_motive(p));
      if (!p.is_degenerate()) CHECK_NOTHROW(agl2_strata(p));
    }
  }
}

TEST_CASE("agl1 coefficient is |Omega| + 1") {
  for_coprime(1, 20, [](const TorusKnotParams& p) {
    CHECK(agl1_motive(p).coefficient(2) == BigInt(omega_size(p) + 1));
  });
}

TEST_CASE("Phi telescoping") {
  for (std::uint32_t q : {5u, 7u, 13u, 31u}) {
    const PrimeField f(q);
    for (int i = 0; i < 50; ++i) {
      const Mat2 m = random_mat(f);
      const std::uint64_t l = 1 + static_cast<std::uint64_t>(i % 12);
      CHECK(mat_mul(f, mat_sub(f, m, kIdentity), phi_mat(f, l, m)) == mat_sub(f, mat_pow(f, m, l), kIdentity));
    }
  }
}

TEST_CASE("algebra rank is conjugation invariant") {
  for (std::uint32_t q : {5u, 7u, 11u}) {
    const PrimeField f(q);
    for (int i = 0; i < 300; ++i) {
      const Mat2 a = random_mat(f), b = random_mat(f), p = random_invertible(f);
      const Mat2 pi = mat_inverse(f, p);
      const int r = pair_algebra_rank(f, a, b);
      CHECK(pair_algebra_rank(f, mat_mul(f, mat_mul(f, p, a), pi), mat_mul(f, mat_mul(f, p, b), pi)) == r);
    }
  }
}

TEST_CASE("rank_2x4 is invariant under a common left factor") {
  const PrimeField f(7);
  for (int i = 0; i < 300; ++i) {
    Mat2 l = random_mat(f), r = random_mat(f);
    if (i % 4 == 0) r = kZeroMatrix;
    if (i % 4 == 1) l.a = l.b = {0};
    const Mat2 g = random_invertible(f);
    CHECK(rank_2x4(f, mat_mul(f, g, l), mat_mul(f, g, r)) == rank_2x4(f, l, r));
  }
}

TEST_CASE("admissible primes") {
  for_coprime(1, 12, [](const TorusKnotParams& p) {
    const std::uint32_t q = smallest_admissible_prime(p, 1000);
    CHECK(is_prime(q));
    CHECK(q % static_cast<std::uint32_t>(p.m() * p.n()) == 1);
    for (std::uint32_t r = 2; r < q; ++r) {
      if (is_prime(r) && r % static_cast<std::uint32_t>(p.m() * p.n()) == 1) FAIL("smaller admissible prime ", r);
    }
  });
}

TEST_CASE("counts do not depend on the thread count") {
  for (auto [m, n, q] : {std::tuple{2, 3, 7}, std::tuple{2, 5, 11}, std::tuple{3, 4, 13}}) {
    const TorusKnotParams p(m, n);
    const CountReport base = count_agl2(p, static_cast<std::uint32_t>(q), {1, kDefaultGroupBudget});
    for (unsigned t : {2u, 3u, 8u}) {
      CAPTURE(t);
      const CountReport r = count_agl2(p, static_cast<std::uint32_t>(q), {t, kDefaultGroupBudget});
      CHECK(r.thread_count == t);
      CHECK(r.totals == base.totals);
      CHECK(r.per_stratum == base.per_stratum);
      CHECK(r.stratum_pairs == base.stratum_pairs);
    }
  }
}
