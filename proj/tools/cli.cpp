// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "tkmotive/errors.hpp"
#include "tkmotive/knot_corrections.hpp"
#include "tkmotive/knot_formulas.hpp"
#include "tkmotive/render.hpp"
#include "tkmotive/verify.hpp"

namespace tkmotive::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

// Raised for bad flag combinations detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Motive groups the CLI understands: the published ones plus the corrected totals.
struct GroupChoice {
  std::string name;
  std::optional<MotiveGroup> published;
};

GroupChoice parse_group(const std::string& name) {
  if (name == "agl2-corrected" || name == "gl2-corrected") return {name, std::nullopt};
  try {
    return {name, parse_motive_group(name)};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

QPolynomial group_motive(const GroupChoice& g, const TorusKnotParams& p) {
  if (g.published) return motive(*g.published, p);
  if (g.name == "agl2-corrected") return agl2_corrected_motive(p);
  return gl2_corrected_motive(p);
}

ordered_json poly_json(const QPolynomial& p) { return ordered_json::parse(to_json(p)); }

std::string render(const QPolynomial& p, Format f) {
  switch (f) {
    case Format::latex: return to_latex(p);
    case Format::json: return to_json(p);
    case Format::csv: return to_csv_cell(p);
    case Format::human: break;
  }
  return to_human(p);
}

ordered_json breakdown_json(const StratumBreakdown& b) {
  ordered_json strata = ordered_json::object();
  for (const auto& [s, poly] : b.entries()) strata[std::string(label(s))] = poly_json(poly);
  ordered_json totals = ordered_json::object();
  for (StratumGroup g : kAllStratumGroups) totals[std::string(label(g))] = poly_json(b.total(g));
  totals["grand"] = poly_json(b.grand_total());
  return {{"strata", strata}, {"totals", totals}};
}

// --- motive ---------------------------------------------------------------

struct MotiveArgs {
  std::string group;
  long long m = 0;
  long long n = 0;
  bool strata = false;
  std::string format = "human";
};

int run_motive(const MotiveArgs& a, std::ostream& out) {
  const TorusKnotParams p(a.m, a.n);
  const GroupChoice g = parse_group(a.group);
  Format f;
  try {
    f = parse_format(a.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  if (!a.strata) {
    const QPolynomial poly = group_motive(g, p);
    switch (f) {
      case Format::json:
        out << ordered_json{{"m", p.m()}, {"n", p.n()}, {"group", g.name}, {"degree", poly.degree()},
                            {"polynomial", poly_json(poly)}}
                   .dump()
            << '\n';
        break;
      case Format::csv:
        out << "m,n,group,degree,coefficients\n"
            << p.m() << ',' << p.n() << ',' << g.name << ',' << poly.degree() << ','
            << to_csv_cell(poly) << '\n';
        break;
      default: out << render(poly, f) << '\n';
    }
    return kExitOk;
  }

  if (g.name != "agl2" && g.name != "agl2-corrected") {
    throw UsageError("--strata is only available for --group agl2 or agl2-corrected");
  }
  const StratumBreakdown b = g.published ? agl2_strata(p) : agl2_corrected_strata(p);
  const QPolynomial grand = b.grand_total();
  if (grand != group_motive(g, p)) {
    throw ConsistencyError("strata sum differs from the total at " + p.to_string());
  }
  switch (f) {
    case Format::json: {
      ordered_json j{{"m", p.m()}, {"n", p.n()}, {"group", g.name}};
      j.update(breakdown_json(b));
      out << j.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "m,n,group,stratum,degree,coefficients\n";
      for (const auto& [s, poly] : b.entries()) {
        out << p.m() << ',' << p.n() << ',' << g.name << ',' << label(s) << ',' << poly.degree() << ','
            << to_csv_cell(poly) << '\n';
      }
      for (StratumGroup sg : kAllStratumGroups) {
        const QPolynomial t = b.total(sg);
        out << p.m() << ',' << p.n() << ',' << g.name << ",total:" << label(sg) << ',' << t.degree()
            << ',' << to_csv_cell(t) << '\n';
      }
      out << p.m() << ',' << p.n() << ',' << g.name << ",total:grand," << grand.degree() << ','
          << to_csv_cell(grand) << '\n';
      break;
    case Format::latex:
      out << "\\begin{align*}\n";
      for (const auto& [s, poly] : b.entries()) {
        out << "  [\\mathrm{" << label(s) << "}] &= " << to_latex(poly) << " \\\\\n";
      }
      out << "  [\\mathrm{Rep}] &= " << to_latex(grand) << "\n\\end{align*}\n";
      break;
    case Format::human:
      for (const auto& [s, poly] : b.entries()) {
        out << std::left << std::setw(8) << label(s) << to_human(poly) << '\n';
      }
      for (StratumGroup sg : kAllStratumGroups) {
        out << std::left << std::setw(8) << ("[" + std::string(label(sg)) + "]") << to_human(b.total(sg))
            << '\n';
      }
      out << std::left << std::setw(8) << "total" << to_human(grand) << '\n';
      break;
  }
  return kExitOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  long long m = 0;
  long long n = 0;
  std::optional<long long> q;
  bool auto_q = false;
  long long max_q = 1000;
  std::vector<std::string> groups;
  bool strata = false;
  unsigned threads = 0;
  bool allow_inadmissible = false;
  std::string format = "human";
  unsigned long long max_order = kDefaultGroupBudget;
};

std::set<VerifyGroup> parse_groups(const std::vector<std::string>& names) {
  std::set<VerifyGroup> out;
  for (const auto& name : names) {
    try {
      out.insert(parse_verify_group(name));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

void print_report(const VerificationReport& r, Format f, std::ostream& out) {
  if (f == Format::json) {
    ordered_json items = ordered_json::array();
    for (const auto& i : r.items) {
      items.push_back({{"name", i.name},
                       {"expected", i.expected.str()},
                       {"observed", i.observed.str()},
                       {"match", i.match}});
    }
    out << ordered_json{{"m", r.params.m()},
                        {"n", r.params.n()},
                        {"q", r.q},
                        {"admissible", r.admissible},
                        {"items", items},
                        {"pass", r.passed()},
                        {"elapsed_seconds", r.elapsed.count()}}
               .dump()
        << '\n';
    return;
  }
  out << "verify m=" << r.params.m() << " n=" << r.params.n() << " q=" << r.q << " ("
      << (r.admissible ? "admissible" : "inadmissible") << ")\n";
  std::size_t width = 10;
  for (const auto& i : r.items) width = std::max(width, i.name.size() + 2);
  out << std::left << std::setw(static_cast<int>(width)) << "quantity" << std::setw(22) << "expected"
      << std::setw(22) << "observed" << "status\n";
  for (const auto& i : r.items) {
    out << std::left << std::setw(static_cast<int>(width)) << i.name << std::setw(22) << i.expected.str()
        << std::setw(22) << i.observed.str() << (i.match ? "ok" : "MISMATCH") << '\n';
  }
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(2)
      << r.elapsed.count() << " s)\n";
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  const TorusKnotParams p(a.m, a.n);
  if (a.q.has_value() == a.auto_q) throw UsageError("exactly one of --q or --auto-q is required");
  Format f;
  try {
    f = parse_format(a.format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (f != Format::human && f != Format::json) throw UsageError("verify supports --format human|json");

  VerifyOptions opts;
  if (a.q) {
    if (*a.q < 2 || !is_prime(static_cast<std::uint64_t>(*a.q))) {
      throw NotPrime(std::to_string(*a.q) + " is not prime");
    }
    if (*a.q > kMaxFieldModulus) throw UsageError("--q must be at most " + std::to_string(kMaxFieldModulus));
    opts.q = static_cast<std::uint32_t>(*a.q);
  }
  opts.max_q = static_cast<std::uint64_t>(a.max_q);
  if (!a.groups.empty()) opts.groups = parse_groups(a.groups);
  if (a.strata) opts.groups.insert(VerifyGroup::strata);
  opts.count.threads = a.threads ? a.threads : default_thread_count();
  opts.count.max_group_order = a.max_order;

  const VerificationReport r = verify(p, opts);
  print_report(r, f, out);
  if (!r.all_match()) return kExitMismatch;
  if (!r.admissible && !a.allow_inadmissible) return kExitMismatch;
  return kExitOk;
}

// --- sweep ----------------------------------------------------------------

struct SweepArgs {
  long long max = 0;
  std::string group;
  std::string out_path;
  std::string format;
  bool verify = false;
  long long max_q = 1000;
  unsigned threads = 0;
  unsigned long long max_order = kDefaultGroupBudget;
};

struct SweepRow {
  TorusKnotParams params;
  QPolynomial polynomial;
  std::optional<StratumBreakdown> strata;
  std::optional<std::uint32_t> verified_q;
  std::optional<bool> verified;
};

std::set<VerifyGroup> verify_groups_for(const std::string& group) {
  if (group == "agl1") return {VerifyGroup::agl1};
  if (group == "agl2") return {VerifyGroup::agl2};
  if (group == "gl2" || group == "gl2-irr") return {VerifyGroup::gl2};
  return {VerifyGroup::corrected};
}

int run_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  const GroupChoice g = parse_group(a.group);
  std::string format = a.format;
  if (format.empty()) format = a.out_path.ends_with(".json") ? "json" : "csv";
  if (format != "csv" && format != "json") throw UsageError("sweep supports --format csv|json");
  if (a.max < 2) throw UsageError("--max must be at least 2");

  std::vector<SweepRow> rows;
  bool all_pass = true;
  for (long long m = 2; m <= a.max; ++m) {
    for (long long n = m + 1; n <= a.max; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const TorusKnotParams p(m, n);
      SweepRow row{p, group_motive(g, p), std::nullopt, std::nullopt, std::nullopt};
      if (g.name == "agl2") row.strata = agl2_strata(p);
      if (g.name == "agl2-corrected") row.strata = agl2_corrected_strata(p);
      if (a.verify) {
        VerifyOptions opts;
        opts.max_q = static_cast<std::uint64_t>(a.max_q);
        opts.groups = verify_groups_for(g.name);
        opts.count.threads = a.threads ? a.threads : default_thread_count();
        opts.count.max_group_order = a.max_order;
        try {
          const VerificationReport r = verify(p, opts);
          row.verified_q = r.q;
          row.verified = r.passed();
        } catch (const Error& e) {
          err << "sweep " << p.to_string() << ": " << e.what() << '\n';
          row.verified = false;
        }
        if (!*row.verified) all_pass = false;
      }
      rows.push_back(std::move(row));
    }
  }

  std::ofstream file(a.out_path);
  if (!file) {
    err << "cannot open '" << a.out_path << "' for writing\n";
    return kExitUsage;
  }
  if (format == "csv") {
    file << "m,n,group,degree,coefficients,verified_q,verified\n";
    for (const auto& r : rows) {
      file << r.params.m() << ',' << r.params.n() << ',' << g.name << ',' << r.polynomial.degree() << ','
           << to_csv_cell(r.polynomial) << ',' << (r.verified_q ? std::to_string(*r.verified_q) : "")
           << ',' << (r.verified ? (*r.verified ? "true" : "false") : "") << '\n';
    }
  } else {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json j{{"m", r.params.m()},
                     {"n", r.params.n()},
                     {"group", g.name},
                     {"degree", r.polynomial.degree()},
                     {"polynomial", poly_json(r.polynomial)}};
      if (r.strata) j.update(breakdown_json(*r.strata));
      j["verified_q"] = r.verified_q ? ordered_json(*r.verified_q) : ordered_json(nullptr);
      j["verified"] = r.verified ? ordered_json(*r.verified) : ordered_json(nullptr);
      arr.push_back(std::move(j));
    }
    file << arr.dump(2) << '\n';
  }
  file.close();
  if (!file) {
    err << "error writing '" << a.out_path << "'\n";
    return kExitUsage;
  }
  out << "wrote " << rows.size() << " rows to " << a.out_path << '\n';
  return all_pass ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motives of AGL_1 / AGL_2 representation varieties of torus knots"};
  app.name(args.empty() ? "tkmotive" : args[0]);
  app.require_subcommand(1);

  const std::vector<std::string> kGroups{"agl1", "agl2", "gl2", "gl2-irr", "agl2-corrected",
                                         "gl2-corrected"};

  MotiveArgs ma;
  auto* motive = app.add_subcommand("motive", "Print the motive of a representation variety");
  motive->add_option("--group", ma.group, "agl1 | agl2 | gl2 | gl2-irr | agl2-corrected | gl2-corrected")
      ->required()
      ->check(CLI::IsMember(kGroups));
  motive->add_option("--m", ma.m, "Torus knot parameter m")->required();
  motive->add_option("--n", ma.n, "Torus knot parameter n")->required();
  motive->add_flag("--strata", ma.strata, "Print the per-stratum breakdown (agl2 only)");
  motive->add_option("--format", ma.format, "human | json | csv | latex")
      ->check(CLI::IsMember({"human", "json", "csv", "latex"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Compare motives with exhaustive F_q point counts");
  verify->add_option("--m", va.m, "Torus knot parameter m")->required();
  verify->add_option("--n", va.n, "Torus knot parameter n")->required();
  verify->add_option("--q", va.q, "Field size (a prime)");
  verify->add_flag("--auto-q", va.auto_q, "Use the smallest prime q = 1 (mod mn)");
  verify->add_option("--max-q", va.max_q, "Upper bound for --auto-q")->capture_default_str();
  verify->add_option("--groups", va.groups, "agl1, agl2, gl2, strata, corrected")->delimiter(',');
  verify->add_flag("--strata", va.strata, "Also compare every stratum");
  verify->add_option("--threads", va.threads, "Worker threads (default: TKMOTIVE_THREADS or all cores)");
  verify->add_flag("--allow-inadmissible", va.allow_inadmissible,
                   "Do not fail solely because q is not 1 mod mn");
  verify->add_option("--format", va.format, "human | json")->check(CLI::IsMember({"human", "json"}));
  verify->add_option("--max-order", va.max_order, "Largest |GL_2(F_q)| to enumerate")->capture_default_str();

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Tabulate motives over all coprime 2 <= m < n <= max");
  sweep->add_option("--max", sa.max, "Largest n")->required();
  sweep->add_option("--group", sa.group, "Motive group")->required()->check(CLI::IsMember(kGroups));
  sweep->add_option("--out", sa.out_path, "Output file")->required();
  sweep->add_option("--format", sa.format, "csv | json (default: from the file extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_flag("--verify", sa.verify, "Verify every row at its smallest admissible prime");
  sweep->add_option("--max-q", sa.max_q, "Upper bound for the admissible prime search")->capture_default_str();
  sweep->add_option("--threads", sa.threads, "Worker threads");
  sweep->add_option("--max-order", sa.max_order, "Largest |GL_2(F_q)| to enumerate")->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (motive->parsed()) return run_motive(ma, out);
    if (verify->parsed()) return run_verify(va, out);
    return run_sweep(sa, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedRange& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotPrime& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NoAdmissiblePrime& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    // ClassificationError, ConsistencyError: a finding, not a usage problem.
    err << "fatal: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace tkmotive::cli
