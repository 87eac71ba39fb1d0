#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rnagell/bounds.hpp"
#include "rnagell/classifier.hpp"
#include "rnagell/core_arith.hpp"
#include "rnagell/gaps.hpp"
#include "rnagell/json_util.hpp"
#include "rnagell/pade.hpp"
#include "rnagell/search.hpp"
#include "rnagell/solver.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rnagell;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;  // a checked claim failed on real data
constexpr int kExitUsage = 2;

enum class Format { json, csv, text };

struct CliConfig {
  int precision = 50;
  Format format = Format::json;
  W3Variant w3 = W3Variant::paper;
};

mpz_class parse_int(const std::string& s) {
  try {
    return mpz_class(s);
  } catch (const std::exception&) {
    throw CLI::ValidationError("not an integer: " + s);
  }
}

std::string csv_escape(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_rows(const std::vector<ordered_json>& rows, Format fmt, std::ostream& out) {
  if (fmt == Format::json) {
    for (const auto& row : rows) out << row.dump() << "\n";
    return;
  }
  if (fmt == Format::csv) {
    if (rows.empty()) return;
    bool first = true;
    for (const auto& [key, value] : rows.front().items()) {
      out << (first ? "" : ",") << key;
      first = false;
      (void)value;
    }
    out << "\n";
    for (const auto& row : rows) {
      first = true;
      for (const auto& [key, value] : row.items()) {
        out << (first ? "" : ",") << csv_escape(value);
        first = false;
        (void)key;
      }
      out << "\n";
    }
    return;
  }
  for (const auto& row : rows) {
    bool first = true;
    for (const auto& [key, value] : row.items()) {
      out << (first ? "" : " ") << key << "=" << csv_escape(value);
      first = false;
    }
    out << "\n";
  }
}

ordered_json solution_json(const Solution& sol) {
  ordered_json j;
  j["x"] = json_int(sol.x);
  j["s"] = sol.s;
  j["k"] = sol.k;
  j["l"] = sol.l;
  j["y"] = json_int(sol.y);
  return j;
}

ordered_json gap_report_json(const GapReport& r) {
  static const char* names[] = {"weak-pair", "weak-triple", "strong"};
  ordered_json j;
  j["kind"] = names[static_cast<int>(r.kind)];
  j["j"] = r.j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  if (r.kind == GapReport::Kind::WeakTriple) j["rhsChained"] = r.rhs_chained;
  j["satisfied"] = r.satisfied();
  ordered_json xs = ordered_json::array();
  for (const auto& w : r.witnesses) xs.push_back(json_int(w.x));
  j["witnesses"] = xs;
  return j;
}

// y = x^2 + D must factor as 2^s p1^k p2^l with s in {0, 2}
Solution solution_from_x(const Instance& inst, const mpz_class& x) {
  Solution sol;
  sol.x = x;
  sol.y = x * x + inst.D;
  mpz_class rest = sol.y;
  while (mpz_even_p(rest.get_mpz_t())) {
    rest >>= 1;
    ++sol.s;
  }
  if (sol.s != 0 && sol.s != 2)
    throw CLI::ValidationError(x.get_str() + " is not a solution (power of 2 is 2^" +
                               std::to_string(sol.s) + ")");
  while (mpz_divisible_p(rest.get_mpz_t(), inst.p1.get_mpz_t())) {
    rest /= inst.p1;
    ++sol.k;
  }
  while (mpz_divisible_p(rest.get_mpz_t(), inst.p2.get_mpz_t())) {
    rest /= inst.p2;
    ++sol.l;
  }
  if (rest != 1)
    throw CLI::ValidationError(x.get_str() + " is not a solution (cofactor " + rest.get_str() +
                               ")");
  return sol;
}

struct InstanceArgs {
  std::string d_str, p1_str, p2_str;

  void attach(CLI::App* cmd) {
    cmd->add_option("-D", d_str, "coefficient D")->required();
    cmd->add_option("-p", p1_str, "smaller odd prime p1")->required();
    cmd->add_option("-q", p2_str, "larger odd prime p2")->required();
  }

  Instance make() const { return {parse_int(d_str), parse_int(p1_str), parse_int(p2_str)}; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for x^2 + D = 2^s p1^k p2^l with s in {0, 2}"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read defaults from a config file");

  CliConfig cfg;
  app.add_option("--precision", cfg.precision, "working precision in decimal digits")
      ->envname("RNAGELL_PRECISION")
      ->check(CLI::Range(30, 100000))
      ->capture_default_str();
  std::map<std::string, Format> fmt_map{
      {"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
  app.add_option("--format", cfg.format, "output format")
      ->transform(CLI::CheckedTransformer(fmt_map, CLI::ignore_case))
      ->default_val("json");
  std::map<std::string, W3Variant> w3_map{{"paper", W3Variant::paper},
                                          {"computed", W3Variant::computed}};
  app.add_option("--w3", cfg.w3, "which W3 threshold to use")
      ->transform(CLI::CheckedTransformer(w3_map, CLI::ignore_case))
      ->default_val("paper");

  int exit_code = kExitOk;

  // ---- solve ----------------------------------------------------------
  auto* solve_cmd = app.add_subcommand("solve", "enumerate all solutions up to a bound");
  InstanceArgs solve_args;
  std::string solve_bound;
  solve_args.attach(solve_cmd);
  solve_cmd->add_option("--bound", solve_bound, "largest y to consider")->required();
  solve_cmd->callback([&] {
    Instance inst = solve_args.make();
    auto sols = solve(inst, parse_int(solve_bound));
    std::vector<ordered_json> rows;
    rows.reserve(sols.size());
    for (const auto& sol : sols) rows.push_back(solution_json(sol));
    print_rows(rows, cfg.format, std::cout);
  });

  // ---- classify -------------------------------------------------------
  auto* classify_cmd = app.add_subcommand("classify", "solve and attach class columns");
  InstanceArgs classify_args;
  std::string classify_bound;
  classify_args.attach(classify_cmd);
  classify_cmd->add_option("--bound", classify_bound, "largest y to consider")->required();
  classify_cmd->callback([&] {
    Instance inst = classify_args.make();
    auto sols = solve(inst, parse_int(classify_bound));
    std::vector<ordered_json> rows;
    rows.reserve(sols.size());
    for (const auto& sol : sols) {
      ordered_json j = solution_json(sol);
      ClassKey key = quarter_class(sol, inst);
      j["t"] = fraction(sol, inst);
      j["j"] = key.j;
      j["u"] = key.u;
      j["v"] = key.v;
      rows.push_back(std::move(j));
    }
    print_rows(rows, cfg.format, std::cout);
  });

  // ---- gaps -----------------------------------------------------------
  auto* gaps_cmd = app.add_subcommand("gaps", "run the gap checks over all classes");
  InstanceArgs gaps_args;
  std::string gaps_bound, gaps_low = "0", gaps_high;
  gaps_args.attach(gaps_cmd);
  gaps_cmd->add_option("--bound", gaps_bound, "largest y to consider")->required();
  gaps_cmd->add_option("--low-y", gaps_low, "window lower bound (inclusive)");
  gaps_cmd->add_option("--high-y", gaps_high, "window upper bound (exclusive)");
  gaps_cmd->callback([&] {
    Instance inst = gaps_args.make();
    auto sols = solve(inst, parse_int(gaps_bound));
    std::optional<mpz_class> high;
    if (!gaps_high.empty()) high = parse_int(gaps_high);
    auto reports = check_all_gaps(sols, inst, parse_int(gaps_low), high, cfg.precision);
    std::vector<ordered_json> rows;
    rows.reserve(reports.size());
    bool violated = false;
    for (const auto& r : reports) {
      rows.push_back(gap_report_json(r));
      violated = violated || !r.satisfied();
    }
    print_rows(rows, cfg.format, std::cout);
    if (violated) exit_code = kExitViolation;
  });

  // ---- pade -----------------------------------------------------------
  auto* pade_cmd = app.add_subcommand("pade", "build approximants and verify their properties");
  unsigned long pade_n1 = 1, pade_n2 = 1;
  std::string pade_verify;
  pade_cmd->add_option("--n1", pade_n1, "degree of the first polynomial")->required();
  pade_cmd->add_option("--n2", pade_n2, "degree of the second polynomial")->required();
  pade_cmd->add_option("--verify", pade_verify, "which property to verify")
      ->check(CLI::IsMember({"a", "b", "c", "d", "e"}));
  pade_cmd->callback([&] {
    auto pa = build(static_cast<unsigned>(pade_n1), static_cast<unsigned>(pade_n2));
    ordered_json j;
    j["n1"] = pa.n1;
    j["n2"] = pa.n2;
    auto rationals = [](const std::vector<mpq_class>& cs) {
      ordered_json a = ordered_json::array();
      for (const auto& c : cs) a.push_back(c.get_str());
      return a;
    };
    auto integers = [](const std::vector<mpz_class>& cs) {
      ordered_json a = ordered_json::array();
      for (const auto& c : cs) a.push_back(json_int(c));
      return a;
    };
    bool ok = true;
    if (pade_verify.empty()) {
      j["g"] = rationals(pa.g_coeffs);
      j["h"] = rationals(pa.h_coeffs);
      j["gScaled"] = integers(pa.g_scaled_int);
      j["hScaled"] = integers(pa.h_scaled_int);
    } else if (pade_verify == "a") {
      ordered_json checks = ordered_json::array();
      for (int k = 1; k <= 9; ++k) {
        auto res = verify_inequality_a(pa, mpq_class(k, 10), cfg.precision);
        checks.push_back({{"z", std::to_string(k) + "/10"},
                          {"satisfied", res.satisfied},
                          {"residual", res.residual}});
        ok = ok && res.satisfied;
      }
      auto res = verify_inequality_a(pa, mpq_class(1, 1000000), cfg.precision);
      checks.push_back({{"z", "1/1000000"}, {"satisfied", res.satisfied}, {"residual", res.residual}});
      ok = ok && res.satisfied;
      j["checks"] = checks;
      j["satisfied"] = ok;
    } else if (pade_verify == "b") {
      j["gScaled"] = integers(pa.g_scaled_int);
      j["hScaled"] = integers(pa.h_scaled_int);
      j["integral"] = true;  // build() rejects non-integral scalings
    } else if (pade_verify == "c") {
      std::vector<mpq_class> zs;
      for (int k = 1; k <= 9; ++k) zs.emplace_back(k, 10);
      ok = verify_monotonic_c(pa, zs);
      j["monotonic"] = ok;
    } else if (pade_verify == "d") {
      mpq_class formula = g_at_1(pa.n1, pa.n2);
      mpq_class series(0);
      for (const auto& c : pa.g_coeffs) series += c;
      j["formula"] = formula.get_str();
      j["series"] = series.get_str();
      ok = formula == series;
      j["equal"] = ok;
    } else if (pade_verify == "e") {
      auto res = wronskian_e(pa.n1, pa.n2);
      j["c"] = res.c.get_str();
      j["ok"] = res.ok;
      ok = res.ok;
    }
    print_rows({j}, cfg.format, std::cout);
    if (!ok) exit_code = kExitViolation;
  });

  // ---- bounds ---------------------------------------------------------
  auto* bounds_cmd = app.add_subcommand("bounds", "derived threshold constants for one D");
  std::string bounds_d;
  bounds_cmd->add_option("-D", bounds_d, "coefficient D")->required();
  bounds_cmd->callback([&] {
    BoundSet bs = constants(parse_int(bounds_d), cfg.precision);
    ordered_json j;
    j["D"] = json_int(bs.D);
    j["delta"] = bs.delta.get_str();
    j["delta1"] = bs.delta1.get_str();
    j["Y"] = json_int(bs.Y);
    j["c"] = bs.c.str(cfg.precision);
    j["W1"] = bs.w1.str(cfg.precision);
    j["W2"] = bs.w2.str(cfg.precision);
    j["W"] = bs.w.str(cfg.precision);
    j["W3paper"] = bs.w3_paper_real.str(cfg.precision);
    j["W3computed"] = bs.w3_computed.str(cfg.precision);
    print_rows({j}, cfg.format, std::cout);
  });

  // ---- budget ---------------------------------------------------------
  auto* budget_cmd = app.add_subcommand("budget", "per-class solution caps for one case");
  std::string budget_case;
  budget_cmd->add_option("--case", budget_case, "one of i, ii, iii, iv")
      ->required()
      ->check(CLI::IsMember({"i", "ii", "iii", "iv"}));
  budget_cmd->callback([&] {
    Budget b = budget(budget_case);
    ordered_json j;
    j["case"] = b.tag;
    if (!b.per_class.empty()) {
      ordered_json caps = ordered_json::object();
      for (const auto& [key, cap] : b.per_class)
        caps[std::to_string(key.j) + "," + std::to_string(key.u) + "," + std::to_string(key.v)] =
            cap;
      j["perClass"] = caps;
    } else {
      j["perQuarter"] = b.per_quarter;
      j["smallRegion"] = b.small_region;
    }
    j["sectionTotal"] = b.section_total;
    j["grandTotal"] = grand_total();
    print_rows({j}, cfg.format, std::cout);
  });

  // ---- search ---------------------------------------------------------
  auto* search_cmd = app.add_subcommand("search", "sweep a (D, p1, p2) grid and count solutions");
  std::string s_dmin = "1", s_dmax = "1", s_ybound;
  unsigned long s_prime_bound = 5;
  unsigned long s_workers = 1;
  std::optional<unsigned long> s_sample;
  unsigned long s_seed = 0;
  std::optional<unsigned long> s_cap;
  std::string s_resume;
  unsigned long s_top = 20;
  search_cmd->add_option("--d-min", s_dmin, "smallest D");
  search_cmd->add_option("--d-max", s_dmax, "largest D");
  search_cmd->add_option("--prime-bound", s_prime_bound, "largest prime in the grid")->required();
  search_cmd->add_option("--y-bound", s_ybound, "largest y per instance (default: the W3 threshold)");
  search_cmd->add_option("--sample", s_sample, "sample this many instances from the grid");
  search_cmd->add_option("--seed", s_seed, "sampling seed");
  search_cmd->add_option("--workers", s_workers, "worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_option("--resume", s_resume, "checkpoint directory (streams records.jsonl)");
  search_cmd->add_option("--cap", s_cap, "verify that every instance count stays at or below this");
  search_cmd->add_option("--top", s_top, "extremal instances to keep in the summary");
  search_cmd->callback([&] {
    SearchSpec spec;
    spec.d_min = parse_int(s_dmin);
    spec.d_max = parse_int(s_dmax);
    spec.prime_bound = s_prime_bound;
    if (s_ybound.empty()) {
      BoundSet bs = constants(1, cfg.precision);
      mpz_class yb;
      mpfr_get_z(yb.get_mpz_t(), bs.w3(cfg.w3).raw(), MPFR_RNDD);
      spec.y_bound = yb;
    } else {
      spec.y_bound = parse_int(s_ybound);
    }
    spec.sample_count = s_sample;
    spec.sample_seed = s_seed;

    std::optional<std::string> dir;
    if (!s_resume.empty()) dir = s_resume;
    auto records = run(spec, static_cast<unsigned>(s_workers), dir);
    SearchSummary summary = summarize(records, s_top);

    if (dir) {
      std::ofstream(*dir + "/summary.csv", std::ios::trunc) << summary_csv(summary);
      std::ofstream(*dir + "/extremal.csv", std::ios::trunc) << extremal_csv(summary);
    } else {
      for (const auto& rec : records) std::cout << record_to_json(rec) << "\n";
    }
    std::cerr << "instances: " << records.size() << ", max count: " << summary.max_count << "\n";

    if (s_cap) {
      auto claim = verify_claim(records, *s_cap);
      if (!claim.ok) {
        for (const auto& v : claim.violations)
          std::cerr << "cap " << *s_cap << " violated: " << record_to_json(v) << "\n";
        exit_code = kExitViolation;
      } else {
        std::cerr << "cap " << *s_cap << " holds\n";
      }
    }
  });

  // ---- lambda ---------------------------------------------------------
  auto* lambda_cmd = app.add_subcommand("lambda", "linear form in arguments for three solutions");
  InstanceArgs lambda_args;
  std::string lambda_xs;
  double lambda_tol = 1e-30;
  lambda_args.attach(lambda_cmd);
  lambda_cmd->add_option("--xs", lambda_xs, "comma separated x1,x2,x3")->required();
  lambda_cmd->add_option("--tolerance", lambda_tol, "membership tolerance")->capture_default_str();
  lambda_cmd->callback([&] {
    Instance inst = lambda_args.make();
    std::vector<mpz_class> xs;
    std::stringstream ss(lambda_xs);
    std::string part;
    while (std::getline(ss, part, ',')) xs.push_back(parse_int(part));
    if (xs.size() != 3) throw CLI::ValidationError("--xs needs exactly three values");
    std::array<Solution, 3> sols = {solution_from_x(inst, xs[0]), solution_from_x(inst, xs[1]),
                                    solution_from_x(inst, xs[2])};
    auto diag = lambda_diagnostic(sols, inst, cfg.precision, lambda_tol);

    ordered_json j;
    j["d"] = json_int(diag.d);
    j["f"] = diag.f;
    j["degenerate"] = diag.degenerate;
    j["tolerance"] = diag.tolerance;
    j["minDistance"] = diag.min_distance;
    j["bestE"] = diag.best_e;
    ordered_json choices = ordered_json::array();
    for (const auto& c : diag.choices)
      choices.push_back({{"e", c.e}, {"branch", c.branch}, {"lambda", c.lambda},
                         {"distance", c.distance}});
    j["choices"] = choices;
    j["withinTolerance"] = diag.within_tolerance();
    print_rows({j}, cfg.format, std::cout);
    if (!diag.degenerate && !diag.within_tolerance()) exit_code = kExitViolation;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
