// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#include "tkmotive/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "tkmotive/errors.hpp"
#include "tkmotive/knot_corrections.hpp"
#include "tkmotive/knot_formulas.hpp"

namespace tkmotive {

VerifyGroup parse_verify_group(std::string_view name) {
  if (name == "agl1") return VerifyGroup::agl1;
  if (name == "agl2") return VerifyGroup::agl2;
  if (name == "gl2") return VerifyGroup::gl2;
  if (name == "strata") return VerifyGroup::strata;
  if (name == "corrected") return VerifyGroup::corrected;
  throw std::invalid_argument("unknown verification group '" + std::string(name) + "'");
}

std::string_view verify_group_name(VerifyGroup g) noexcept {
  switch (g) {
    case VerifyGroup::agl1: return "agl1";
    case VerifyGroup::agl2: return "agl2";
    case VerifyGroup::gl2: return "gl2";
    case VerifyGroup::strata: return "strata";
    case VerifyGroup::corrected: return "corrected";
  }
  return "?";
}

bool VerificationReport::all_match() const {
  return std::all_of(items.begin(), items.end(), [](const VerificationItem& i) { return i.match; });
}

VerificationReport verify(const TorusKnotParams& p, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto& groups = options.groups;
  const bool wants_strata = groups.contains(VerifyGroup::strata);
  if (wants_strata && p.is_degenerate()) {
    throw UnsupportedRange("per-stratum verification requires m, n >= 2, got " + p.to_string());
  }

  VerificationReport report;
  report.params = p;
  if (options.q) {
    if (!is_prime(*options.q)) throw NotPrime(std::to_string(*options.q) + " is not prime");
    report.q = *options.q;
  } else {
    report.q = smallest_admissible_prime(p, options.max_q);
  }
  report.admissible = is_admissible(p, report.q);
  const BigInt q = report.q;

  auto add = [&](std::string name, const QPolynomial& formula, const BigInt& observed) {
    VerificationItem item{std::move(name), formula.evaluate(q), observed, false};
    item.match = item.expected == item.observed;
    report.items.push_back(std::move(item));
  };

  if (groups.contains(VerifyGroup::agl1)) {
    add("agl1", agl1_motive(p), count_agl1(p, report.q).totals.agl_total);
  }

  const bool needs_agl2 = groups.contains(VerifyGroup::agl2) || groups.contains(VerifyGroup::gl2) ||
                          wants_strata || groups.contains(VerifyGroup::corrected);
  if (needs_agl2) {
    const CountReport counts = count_agl2(p, report.q, options.count);
    const CountTotals& t = counts.totals;
    if (groups.contains(VerifyGroup::agl2)) add("agl2", agl2_motive(p), t.agl_total);
    if (groups.contains(VerifyGroup::gl2)) {
      add("gl2", gl2_motive(p), t.gl_total);
      add("gl2-irr", motive(MotiveGroup::gl2_irr, p), t.gl_irr);
      add("gl2-red-A", gl2_red_A_motive(), t.red_A);
      add("gl2-red-B", gl2_red_B_motive(), t.red_B);
      add("gl2-red-C", gl2_red_C_motive(), t.red_C);
    }
    if (wants_strata) {
      const StratumBreakdown strata = agl2_strata(p);
      for (Stratum s : kAllStrata) {
        add(std::string(label(s)), strata.at(s), counts.per_stratum.at(s));
      }
    }
    if (groups.contains(VerifyGroup::corrected)) {
      add("agl2-corrected", agl2_corrected_motive(p), t.agl_total);
      add("gl2-corrected", gl2_corrected_motive(p), t.gl_total);
      add("gl2-red-A-corrected", gl2_corrected_red_A_motive(p), t.red_A);
      if (!p.is_degenerate()) {
        const StratumBreakdown corrected = agl2_corrected_strata(p);
        for (Stratum s : {Stratum::A1, Stratum::A2, Stratum::A3}) {
          add(std::string(label(s)) + "-corrected", corrected.at(s), counts.per_stratum.at(s));
        }
      }
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace tkmotive
