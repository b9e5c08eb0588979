// hypack_survey: single-case evaluation, parameter sweeps, table
// regeneration and the extremum search.
//
// exit codes: 0 ok, 1 usage, 2 computation error, 3 unallowlisted
// discrepancies

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypack/hypack.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kCompute = 2, kDiscrepancy = 3 };

std::vector<hypack::Mode> modes_of(const std::string& s) {
  if (s == "both") return {hypack::Mode::Packing, hypack::Mode::Covering};
  return {hypack::parse_mode(s)};
}

std::string render(const hypack::SurveyReport& rep, const std::string& format, int precision) {
  if (format == "csv") return hypack::render_csv(rep, precision);
  if (format == "json") return hypack::render_json(rep);
  return hypack::render_markdown(rep, precision);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ball packing and covering densities of truncated Coxeter orthoschemes"};

  std::optional<std::string> u_arg, v_arg, w_arg, table_arg, sweep_arg, allowlist_arg;
  std::string case_arg = "all";
  std::string mode_arg = "both";
  std::string format = "md";
  int precision = 5;
  double tolerance = 1e-4;
  bool extrema = false;

  app.add_option("--u", u_arg, "parameter u (integer >= 3 or inf)");
  app.add_option("--v", v_arg, "parameter v (integer >= 3 or inf)");
  app.add_option("--w", w_arg, "parameter w (integer >= 3 or inf)");
  app.add_option("--case", case_arg, "case id (e.g. 1.s.i.a) or all");
  app.add_option("--mode", mode_arg, "packing, covering or both")
      ->check(CLI::IsMember({"packing", "covering", "both"}));
  app.add_option("--table", table_arg, "regenerate a reference table (id or all)");
  app.add_option("--sweep", sweep_arg, "sweep spec, e.g. u=3..9,v=3..9,w=3..9,+inf");
  app.add_flag("--find-extrema", extrema, "report max packing and min covering density");
  app.add_option("--format", format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
  app.add_option("--precision", precision, "decimals in md/csv output")->check(CLI::Range(0, 17));
  app.add_option("--tolerance", tolerance, "absolute tolerance for table comparison")->check(CLI::PositiveNumber);
  app.add_option("--allowlist", allowlist_arg, "file of known table discrepancies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  const bool single = u_arg || v_arg || w_arg;
  const int chosen = int(single) + int(table_arg.has_value()) + int(sweep_arg.has_value() || extrema);
  if (chosen != 1) {
    std::cerr << "error: choose exactly one of --u/--v/--w, --table, --sweep/--find-extrema\n";
    return kUsage;
  }
  if (single && !(u_arg && v_arg && w_arg)) {
    std::cerr << "error: --u, --v and --w are all required\n";
    return kUsage;
  }

  hypack::SurveyReport rep;
  try {
    if (single) {
      const auto p = hypack::OrthoParams::of(hypack::parse_order(*u_arg), hypack::parse_order(*v_arg),
                                             hypack::parse_order(*w_arg));
      const auto f = hypack::Frame::build(p);
      const bool all_cases = case_arg == "all";
      for (const auto* c : hypack::select_cases({case_arg}))
        for (auto m : modes_of(mode_arg)) {
          try {
            rep.results.push_back({std::string(c->id), hypack::evaluate(f, *c, m)});
          } catch (const hypack::Error& e) {
            // with --case all, only report what applies
            if (!all_cases || !hypack::is_skippable(e.code())) throw;
          }
        }
      if (rep.results.empty()) throw hypack::Error(hypack::ErrorCode::CaseInapplicable, "no case applies to " + p.str());
    } else if (table_arg) {
      hypack::Allowlist allow;
      if (allowlist_arg) allow = hypack::Allowlist::load(*allowlist_arg);
      std::vector<std::string> which{*table_arg};
      rep = hypack::regen_tables(which, tolerance, allow);
    } else {
      hypack::SweepSpec spec = sweep_arg ? hypack::parse_sweep(*sweep_arg) : hypack::default_sweep();
      if (case_arg != "all") spec.cases = {case_arg};
      spec.modes = modes_of(mode_arg);
      if (extrema) {
        rep = hypack::find_extrema(spec);
      } else {
        rep.results = hypack::run_sweep(spec);
      }
    }
  } catch (const hypack::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const auto c = e.code();
    return (c == hypack::ErrorCode::BadInput || c == hypack::ErrorCode::UnknownCase) ? kUsage : kCompute;
  }

  std::cout << render(rep, format, precision);
  if (rep.blocking_discrepancies() > 0) {
    std::cerr << rep.blocking_discrepancies() << " discrepancies above tolerance " << tolerance
              << " are not allowlisted\n";
    return kDiscrepancy;
  }
  return kOk;
}
