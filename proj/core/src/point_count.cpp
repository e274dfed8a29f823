// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#include "tkmotive/point_count.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "tkmotive/errors.hpp"

namespace tkmotive {
namespace {

using Clock = std::chrono::steady_clock;

FieldElement phi_scalar(const PrimeField& f, std::uint64_t l, FieldElement x) {
  FieldElement sum = f.zero();
  FieldElement term = f.one();
  for (std::uint64_t i = 0; i < l; ++i) {
    sum = f.add(sum, term);
    term = f.mul(term, x);
  }
  return sum;
}

// Pair counts per stratum and per rank of Lambda.
struct Tally {
  std::array<std::array<std::uint64_t, 3>, kAllStrata.size()> counts{};
};

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("TKMOTIVE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

BigInt count_agl1_naive(const TorusKnotParams& p, const PrimeField& f) {
  const auto m = static_cast<std::uint64_t>(p.m());
  const auto n = static_cast<std::uint64_t>(p.n());
  BigInt count = 0;
  for (std::uint32_t t = 1; t < f.modulus(); ++t) {
    const FieldElement x = phi_scalar(f, n, f.pow({t}, m));
    const FieldElement y = phi_scalar(f, m, f.pow({t}, n));
    for (std::uint32_t alpha = 0; alpha < f.modulus(); ++alpha)
      for (std::uint32_t beta = 0; beta < f.modulus(); ++beta)
        if (f.mul(x, {alpha}) == f.mul(y, {beta})) ++count;
  }
  return count;
}

CountReport count_agl1(const TorusKnotParams& p, std::uint32_t q) {
  const auto start = Clock::now();
  const PrimeField f(q);
  const auto m = static_cast<std::uint64_t>(p.m());
  const auto n = static_cast<std::uint64_t>(p.n());

  // The fiber over t is the annihilator of (Phi_n(t^m), Phi_m(t^n)).
  std::uint64_t full_fibers = 0;
  for (std::uint32_t t = 1; t < q; ++t) {
    const FieldElement x = phi_scalar(f, n, f.pow({t}, m));
    const FieldElement y = phi_scalar(f, m, f.pow({t}, n));
    if (x.value == 0 && y.value == 0) ++full_fibers;
  }
  const BigInt bq = q;
  CountReport report;
  report.q = q;
  report.totals.agl_total = BigInt(full_fibers) * bq * bq + BigInt(q - 1 - full_fibers) * bq;
  report.totals.gl_total = q - 1;

  if (q <= 31) {
    const BigInt naive = count_agl1_naive(p, f);
    if (naive != report.totals.agl_total) {
      throw ConsistencyError("AGL_1 count at q=" + std::to_string(q) + ": fibration gives " +
                             report.totals.agl_total.str() + ", naive loop gives " + naive.str());
    }
  }
  report.elapsed = Clock::now() - start;
  return report;
}

CountReport count_agl2(const TorusKnotParams& p, std::uint32_t q, const CountOptions& options) {
  const auto start = Clock::now();
  const PrimeField f(q);
  const Gl2SolutionIndex index(f, p, options.max_group_order);
  const auto& group = index.group();

  const unsigned threads = std::max(1u, options.threads);
  std::vector<Tally> tallies(threads);
  std::vector<std::exception_ptr> errors(threads);

  auto work = [&](unsigned slot, std::size_t begin, std::size_t end) {
    try {
      Tally& tally = tallies[slot];
      for (std::size_t a = begin; a < end; ++a) {
        for (std::uint32_t b : index.partners(a)) {
          const PairClass pc =
              classify_gl2_pair(f, group[a], group[b], index.phi_n(a), index.phi_m(b));
          ++tally.counts[static_cast<std::size_t>(pc.stratum)][pc.lambda_rank];
        }
      }
    } catch (...) {
      errors[slot] = std::current_exception();
    }
  };

  const std::size_t size = group.size();
  const std::size_t chunk = (size + threads - 1) / threads;
  if (threads == 1) {
    work(0, 0, size);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(size, t * chunk);
      const std::size_t end = std::min(size, begin + chunk);
      pool.emplace_back(work, t, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  CountReport report;
  report.q = q;
  report.thread_count = threads;
  const BigInt bq = q;
  const std::array<BigInt, 3> fiber = {bq * bq * bq * bq, bq * bq * bq, bq * bq};
  for (std::size_t s = 0; s < kAllStrata.size(); ++s) {
    BigInt pairs = 0;
    BigInt points = 0;
    for (std::size_t r = 0; r < 3; ++r) {
      BigInt c = 0;
      for (const Tally& t : tallies) c += t.counts[s][r];
      pairs += c;
      points += c * fiber[r];
    }
    const Stratum st = kAllStrata[s];
    report.stratum_pairs[st] = pairs;
    report.per_stratum[st] = points;
    report.totals.agl_total += points;
    report.totals.gl_total += pairs;
    switch (group_of(st)) {
      case StratumGroup::irr: report.totals.gl_irr += pairs; break;
      case StratumGroup::A: report.totals.red_A += pairs; break;
      case StratumGroup::B: report.totals.red_B += pairs; break;
      case StratumGroup::C: report.totals.red_C += pairs; break;
    }
  }
  report.elapsed = Clock::now() - start;
  return report;
}

}  // namespace tkmotive
