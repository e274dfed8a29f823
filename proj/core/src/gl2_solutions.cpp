// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "tkmotive/errors.hpp"
#include "tkmotive/point_count.hpp"

namespace tkmotive {
namespace {

std::string describe(const Mat2& m) {
  std::ostringstream os;
  os << "[[" << m.a.value << "," << m.b.value << "],[" << m.c.value << "," << m.d.value << "]]";
  return os.str();
}

[[noreturn]] void unclassifiable(const Mat2& a0, const Mat2& b0, const std::string& why) {
  throw ClassificationError("pair A0=" + describe(a0) + " B0=" + describe(b0) + ": " + why);
}

}  // namespace

Gl2SolutionIndex::Gl2SolutionIndex(const PrimeField& f, const TorusKnotParams& p,
                                   std::uint64_t max_group_order)
    : field_(f), params_(p) {
  const std::uint64_t order = gl2_order(f.modulus());
  if (order > max_group_order) {
    throw CapExceeded("|GL_2(F_" + std::to_string(f.modulus()) + ")| = " + std::to_string(order) +
                      " exceeds the enumeration budget of " + std::to_string(max_group_order));
  }
  group_ = enumerate_gl2(f);
  const auto n = static_cast<std::uint64_t>(p.n());
  const auto m = static_cast<std::uint64_t>(p.m());

  const std::size_t size = group_.size();
  phi_n_.resize(size);
  phi_m_.resize(size);
  a_keys_.resize(size);
  std::vector<std::uint64_t> b_keys(size);
  for (std::size_t i = 0; i < size; ++i) {
    const Mat2& g = group_[i];
    phi_n_[i] = phi_mat(f, n, g);
    phi_m_[i] = phi_mat(f, m, g);
    a_keys_[i] = mat_pow(f, g, n).key();
    b_keys[i] = mat_pow(f, g, m).key();
  }

  by_power_.resize(size);
  std::iota(by_power_.begin(), by_power_.end(), 0u);
  std::sort(by_power_.begin(), by_power_.end(), [&](std::uint32_t x, std::uint32_t y) {
    return b_keys[x] != b_keys[y] ? b_keys[x] < b_keys[y] : x < y;
  });
  ranges_.reserve(size / 4 + 1);
  for (std::uint32_t lo = 0; lo < size;) {
    std::uint32_t hi = lo + 1;
    while (hi < size && b_keys[by_power_[hi]] == b_keys[by_power_[lo]]) ++hi;
    ranges_.emplace(b_keys[by_power_[lo]], std::make_pair(lo, hi));
    lo = hi;
  }
}

std::span<const std::uint32_t> Gl2SolutionIndex::partners(std::size_t a) const {
  auto it = ranges_.find(a_keys_[a]);
  if (it == ranges_.end()) return {};
  return std::span<const std::uint32_t>(by_power_).subspan(it->second.first,
                                                           it->second.second - it->second.first);
}

void enumerate_gl2_solutions(const TorusKnotParams& p, std::uint32_t q,
                             const std::function<void(const Mat2&, const Mat2&)>& visit,
                             std::uint64_t max_group_order) {
  const PrimeField f(q);
  const Gl2SolutionIndex index(f, p, max_group_order);
  const auto& g = index.group();
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::uint32_t b : index.partners(a)) visit(g[a], g[b]);
  }
}

std::vector<std::pair<Mat2, Mat2>> collect_gl2_solutions(const TorusKnotParams& p, std::uint32_t q,
                                                         std::uint64_t max_group_order) {
  std::vector<std::pair<Mat2, Mat2>> out;
  enumerate_gl2_solutions(
      p, q, [&](const Mat2& a, const Mat2& b) { out.emplace_back(a, b); }, max_group_order);
  return out;
}

PairClass classify_gl2_pair(const PrimeField& f, const TorusKnotParams& p, const Mat2& a0,
                            const Mat2& b0) {
  return classify_gl2_pair(f, a0, b0, phi_mat(f, static_cast<std::uint64_t>(p.n()), a0),
                           phi_mat(f, static_cast<std::uint64_t>(p.m()), b0));
}

PairClass classify_gl2_pair(const PrimeField& f, const Mat2& a0, const Mat2& b0,
                            const Mat2& phi_n_a0, const Mat2& phi_m_b0) {
  const int lambda = rank_2x4(f, phi_n_a0, phi_m_b0);

  if (is_scalar(a0) && is_scalar(b0)) {
    if (lambda == 0) return {Stratum::B1, lambda};
    if (lambda == 2) return {Stratum::B2, lambda};
    unclassifiable(a0, b0, "scalar pair with Lambda of rank 1");
  }

  if (pair_algebra_rank(f, a0, b0) == 4) {
    // Both matrices are diagonalizable with distinct eigenvalues; the rank of
    // Phi counts eigenvalues that are not nontrivial roots of unity.
    const int ra = rank(f, phi_n_a0);
    const int rb = rank(f, phi_m_b0);
    Stratum s = Stratum::irr5;
    int expected = 2;
    if (ra == 0 && rb == 0) {
      s = Stratum::irr1;
      expected = 0;
    } else if (ra == 0 && rb == 1) {
      s = Stratum::irr2;
      expected = 1;
    } else if (ra == 1 && rb == 0) {
      s = Stratum::irr3;
      expected = 1;
    } else if (ra == 1 && rb == 1) {
      s = Stratum::irr4;
      expected = 2;
    } else if (ra == 2 && rb == 2) {
      s = Stratum::irr5;
      expected = 2;
    } else {
      unclassifiable(a0, b0,
                     "irreducible pair with Phi ranks (" + std::to_string(ra) + "," +
                         std::to_string(rb) + ")");
    }
    if (lambda != expected) {
      unclassifiable(a0, b0, "irreducible pair in " + std::string(label(s)) +
                                 " with Lambda of rank " + std::to_string(lambda));
    }
    return {s, lambda};
  }

  if (has_repeated_eigenvalue(f, a0) && has_repeated_eigenvalue(f, b0)) {
    if (lambda == 1) return {Stratum::C1, lambda};
    if (lambda == 2) return {Stratum::C2, lambda};
    unclassifiable(a0, b0, "Jordan-type pair with Lambda of rank 0");
  }

  switch (lambda) {
    case 0: return {Stratum::A1, lambda};
    case 1: return {Stratum::A2, lambda};
    default: return {Stratum::A3, lambda};
  }
}

}  // namespace tkmotive
