#pragma once

// Parameter sweeps, regeneration of the reference tables with a discrepancy
// report, the extremum search, and the md / csv / json renderers used by the
// hypack_survey tool.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypack/density_cases.hpp"
#include "hypack/error.hpp"
#include "hypack/essential_points.hpp"
#include "hypack/orthoscheme.hpp"
#include "hypack/reference_tables.hpp"
#include "hypack/volume.hpp"

namespace hypack {

struct SweepSpec {
  std::vector<Order> u_values;
  std::vector<Order> v_values;
  std::vector<Order> w_values;
  std::vector<std::string> cases;  ///< empty means every case
  std::vector<Mode> modes{Mode::Packing, Mode::Covering};

  bool empty() const { return u_values.empty() || v_values.empty() || w_values.empty() || modes.empty(); }
};

namespace detail {

inline std::vector<Order> order_range(int lo, int hi, bool with_inf) {
  if (lo < 3) throw Error(ErrorCode::BadInput, "sweep ranges start at 3");
  if (hi < lo) throw Error(ErrorCode::BadInput, "empty sweep range " + std::to_string(lo) + ".." + std::to_string(hi));
  std::vector<Order> out;
  for (int n = lo; n <= hi; ++n) out.push_back(Order::finite(n));
  if (with_inf) out.push_back(Order::infinity());
  return out;
}

inline int parse_bound(std::string_view s) {
  try {
    std::size_t used = 0;
    const int n = std::stoi(std::string(s), &used);
    if (used == s.size()) return n;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::BadInput, "bad sweep bound '" + std::string(s) + "'");
}

}  // namespace detail

/// Parses "u=3..9,v=3..9,w=3..9,+inf". An axis may also be a single value
/// ("v=3") or carry its own suffix ("w=3..9+inf"); a bare "+inf" adds
/// infinity to every axis. Missing axes default to 3..9.
inline SweepSpec parse_sweep(std::string_view text) {
  struct Axis {
    int lo = 3, hi = 9;
    bool inf = false;
  };
  std::map<char, Axis> axes{{'u', {}}, {'v', {}}, {'w', {}}};
  bool global_inf = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    start = comma + 1;
    if (item.empty()) continue;
    if (item == "+inf" || item == "inf") {
      global_inf = true;
      continue;
    }
    if (item.size() < 3 || item[1] != '=' || !axes.contains(item[0]))
      throw Error(ErrorCode::BadInput, "bad sweep item '" + std::string(item) + "'");
    Axis& ax = axes[item[0]];
    std::string_view range = item.substr(2);
    if (range.ends_with("+inf")) {
      ax.inf = true;
      range.remove_suffix(4);
    }
    if (range == "inf") {
      throw Error(ErrorCode::BadInput, "sweep axis needs a finite range, got '" + std::string(item) + "'");
    }
    const std::size_t dots = range.find("..");
    if (dots == std::string_view::npos) {
      ax.lo = ax.hi = detail::parse_bound(range);
    } else {
      ax.lo = detail::parse_bound(range.substr(0, dots));
      ax.hi = detail::parse_bound(range.substr(dots + 2));
    }
  }
  SweepSpec spec;
  spec.u_values = detail::order_range(axes['u'].lo, axes['u'].hi, axes['u'].inf || global_inf);
  spec.v_values = detail::order_range(axes['v'].lo, axes['v'].hi, axes['v'].inf || global_inf);
  spec.w_values = detail::order_range(axes['w'].lo, axes['w'].hi, axes['w'].inf || global_inf);
  return spec;
}

/// The documented search family: every parameter in 3..9 plus infinity.
inline SweepSpec default_sweep() { return parse_sweep("u=3..9,v=3..9,w=3..9,+inf"); }

/// Errors that mean "this (params, case, mode) does not exist", skipped in
/// sweeps rather than reported.
inline bool is_skippable(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotHyperbolic:
    case ErrorCode::NotSymmetric:
    case ErrorCode::CaseInapplicable:
    case ErrorCode::CoveringUndefined:
    case ErrorCode::InfiniteStabilizer: return true;
    default: return false;
  }
}

struct ResultRow {
  std::string table_id;
  CaseResult result;
};

inline bool result_less(const ResultRow& x, const ResultRow& y) {
  const auto key = [](const ResultRow& r) {
    return std::tie(r.result.params, r.result.case_id, r.result.mode, r.table_id);
  };
  return key(x) < key(y);
}

struct Discrepancy {
  std::string table_id;
  std::string row;    ///< e.g. "covering (4,8,4)"
  std::string field;  ///< r_or_R, vol_W, vol_B, density, or evaluation
  double expected = 0.0;
  double computed = 0.0;
  double delta = 0.0;
  bool allowlisted = false;
  std::string message;  ///< set when evaluation itself failed
};

/// Row-level remarks that are not numeric mismatches, e.g. a row whose
/// printed parameters were reinterpreted.
struct RowFlag {
  std::string table_id;
  std::string row;
  std::string note;
};

struct Extremum {
  ResultRow row;
};

struct Extrema {
  std::optional<Extremum> best_packing;   ///< maximum density
  std::optional<Extremum> best_covering;  ///< minimum density
};

struct SurveyReport {
  std::vector<ResultRow> results;
  std::vector<Discrepancy> discrepancies;
  std::vector<RowFlag> flags;
  std::optional<Extrema> extrema;
  std::size_t cells_compared = 0;

  std::size_t blocking_discrepancies() const {
    return static_cast<std::size_t>(std::count_if(discrepancies.begin(), discrepancies.end(),
                                                  [](const Discrepancy& d) { return !d.allowlisted; }));
  }
};

inline std::vector<const CentreCase*> select_cases(const std::vector<std::string>& ids) {
  std::vector<const CentreCase*> out;
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
    for (const auto& c : kCases) out.push_back(&c);
  } else {
    for (const auto& id : ids) out.push_back(&find_case(id));
  }
  return out;
}

/// Evaluates every applicable (params, case, mode) of the spec. Inapplicable
/// combinations are skipped; real failures propagate.
inline std::vector<ResultRow> run_sweep(const SweepSpec& spec) {
  const auto cases = select_cases(spec.cases);
  std::vector<ResultRow> out;
  for (Order u : spec.u_values)
    for (Order v : spec.v_values)
      for (Order w : spec.w_values) {
        const OrthoParams p = OrthoParams::of(u, v, w);
        if (!p.is_hyperbolic()) continue;
        const Frame f = Frame::build(p);
        const double vol = orthoscheme_volume(p);
        for (const CentreCase* c : cases)
          for (Mode m : spec.modes) {
            try {
              out.push_back({std::string(c->id), evaluate(f, *c, m, vol)});
            } catch (const Error& e) {
              if (!is_skippable(e.code())) throw;
            }
          }
      }
  std::stable_sort(out.begin(), out.end(), result_less);
  return out;
}

/// Scans results for the largest packing and smallest covering density.
/// Ties keep the earliest row in the (sorted) list.
inline Extrema find_extrema(const std::vector<ResultRow>& results) {
  if (results.empty()) throw Error(ErrorCode::EmptySweep, "no applicable evaluation in the sweep");
  Extrema ex;
  for (const auto& r : results) {
    if (r.result.mode == Mode::Packing) {
      if (!ex.best_packing || r.result.density > ex.best_packing->row.result.density) ex.best_packing = Extremum{r};
    } else {
      if (!ex.best_covering || r.result.density < ex.best_covering->row.result.density) ex.best_covering = Extremum{r};
    }
  }
  return ex;
}

inline SurveyReport find_extrema(const SweepSpec& spec) {
  if (spec.empty()) throw Error(ErrorCode::EmptySweep, "sweep has no parameter values");
  SurveyReport rep;
  rep.results = run_sweep(spec);
  rep.extrema = find_extrema(rep.results);
  return rep;
}

/// Known discrepancies, one per line: `table_id mode (u,v,w) field`.
/// Blank lines and text after '#' are ignored.
class Allowlist {
 public:
  Allowlist() = default;

  static Allowlist parse(std::istream& in) {
    Allowlist a;
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string table, mode, params, field;
      if (!(ls >> table)) continue;
      if (!(ls >> mode >> params >> field))
        throw Error(ErrorCode::BadInput, "allowlist line needs 'table_id mode (u,v,w) field': " + line);
      a.entries_.insert(key(table, mode + " " + params, field));
    }
    return a;
  }

  static Allowlist load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::DatasetMissing, "cannot open allowlist " + path);
    return parse(in);
  }

  bool contains(const Discrepancy& d) const { return entries_.contains(key(d.table_id, d.row, d.field)); }
  std::size_t size() const { return entries_.size(); }

 private:
  static std::string key(const std::string& t, const std::string& row, const std::string& f) {
    return t + "|" + row + "|" + f;
  }
  std::set<std::string> entries_;
};

inline std::string row_label(Mode m, const OrthoParams& p) { return std::string(to_string(m)) + " " + p.str(); }

/// Recomputes the rows of the named tables ("all" for every table) and
/// lists every cell further than `tolerance` from the printed value.
inline SurveyReport regen_tables(const std::vector<std::string>& which, double tolerance = 1e-4,
                                 const Allowlist& allow = {}) {
  const bool all = which.empty() || std::find(which.begin(), which.end(), "all") != which.end();
  if (!all)
    for (const auto& id : which) find_case(id);

  SurveyReport rep;
  for (const TableRow& row : reference_rows()) {
    if (!all && std::find(which.begin(), which.end(), row.table_id) == which.end()) continue;
    const std::string label = row_label(row.mode, row.params);
    if (!row.special_note.empty() && !row.bold()) rep.flags.push_back({row.table_id, label, row.special_note});

    const CentreCase& c = find_case(row.table_id);
    if (c.id == "1.s.i.c" && row.mode == Mode::Covering && angle_sum_sign(row.params.v, row.params.w) <= 0)
      rep.flags.push_back({row.table_id, label, "excluded by the strict covering header 1/v+1/w > 1/2"});

    CaseResult res;
    try {
      res = evaluate(row.params, row.table_id, row.mode);
    } catch (const Error& e) {
      Discrepancy d{row.table_id, label, "evaluation", row.radius, std::nan(""), std::nan(""), false, e.what()};
      d.allowlisted = allow.contains(d);
      rep.discrepancies.push_back(d);
      continue;
    }
    const std::pair<const char*, std::pair<double, double>> cells[] = {
        {"r_or_R", {row.radius, res.radius}},
        {"vol_W", {row.vol_w, res.vol_w}},
        {"vol_B", {row.vol_ball, res.vol_ball}},
        {"density", {row.density, res.density}},
    };
    for (const auto& [field, vals] : cells) {
      ++rep.cells_compared;
      const double delta = vals.second - vals.first;
      if (std::abs(delta) > tolerance) {
        Discrepancy d{row.table_id, label, field, vals.first, vals.second, delta, false, {}};
        d.allowlisted = allow.contains(d);
        rep.discrepancies.push_back(d);
      }
    }
    rep.results.push_back({row.table_id, std::move(res)});
  }
  std::stable_sort(rep.results.begin(), rep.results.end(), result_less);
  return rep;
}

// ---------------------------------------------------------------- rendering

inline std::string format_fixed(double x, int precision) {
  if (std::isnan(x)) return "nan";
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << x;
  return os.str();
}

inline std::string stab_string(const StabOrder& s) {
  return s.den == 1 ? std::to_string(s.num) : std::to_string(s.num) + "/" + std::to_string(s.den);
}

inline const char* kCsvHeader = "table_id,u,v,w,case_id,mode,radius,vol_w,vol_ball,stab_order,halved,density,witness";

inline std::string render_csv(const SurveyReport& rep, int precision = 5) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& [table, r] : rep.results) {
    os << table << ',' << r.params.u.str() << ',' << r.params.v.str() << ',' << r.params.w.str() << ',' << r.case_id
       << ',' << to_string(r.mode) << ',' << format_fixed(r.radius, precision) << ','
       << format_fixed(r.vol_w, precision) << ',' << format_fixed(r.vol_ball, precision) << ',' << stab_string(r.stab)
       << ',' << (r.stab.halved ? "true" : "false") << ',' << format_fixed(r.density, precision) << ',' << r.witness
       << '\n';
  }
  return os.str();
}

inline nlohmann::json to_json(const ResultRow& row) {
  const CaseResult& r = row.result;
  const auto order = [](Order o) -> nlohmann::json {
    if (o.is_infinite()) return "inf";
    return o.value();
  };
  return {{"table_id", row.table_id},
          {"u", order(r.params.u)},
          {"v", order(r.params.v)},
          {"w", order(r.params.w)},
          {"case_id", r.case_id},
          {"mode", to_string(r.mode)},
          {"radius", r.radius},
          {"vol_w", r.vol_w},
          {"vol_ball", r.vol_ball},
          {"stab_order", stab_string(r.stab)},
          {"halved", r.stab.halved},
          {"density", r.density},
          {"witness", r.witness}};
}

inline nlohmann::json to_json(const SurveyReport& rep) {
  nlohmann::json j;
  j["results"] = nlohmann::json::array();
  for (const auto& r : rep.results) j["results"].push_back(to_json(r));
  j["discrepancies"] = nlohmann::json::array();
  const auto num = [](double x) -> nlohmann::json {
    if (std::isnan(x)) return nullptr;
    return x;
  };
  for (const auto& d : rep.discrepancies) {
    nlohmann::json e{{"table_id", d.table_id}, {"row", d.row},           {"field", d.field},
                     {"expected", d.expected}, {"computed", num(d.computed)}, {"delta", num(d.delta)},
                     {"allowlisted", d.allowlisted}};
    if (!d.message.empty()) e["message"] = d.message;
    j["discrepancies"].push_back(e);
  }
  if (!rep.flags.empty()) {
    j["flags"] = nlohmann::json::array();
    for (const auto& f : rep.flags) j["flags"].push_back({{"table_id", f.table_id}, {"row", f.row}, {"note", f.note}});
  }
  if (rep.extrema) {
    j["extrema"] = {
        {"best_packing", rep.extrema->best_packing ? to_json(rep.extrema->best_packing->row) : nlohmann::json()},
        {"best_covering", rep.extrema->best_covering ? to_json(rep.extrema->best_covering->row) : nlohmann::json()}};
  } else {
    j["extrema"] = nullptr;
  }
  return j;
}

inline std::string render_json(const SurveyReport& rep) { return to_json(rep).dump(2) + "\n"; }

inline std::string render_markdown(const SurveyReport& rep, int precision = 5) {
  std::ostringstream os;
  const auto f = [&](double x) { return format_fixed(x, precision); };
  // group by (table, mode) in canonical case order
  for (const auto& c : kCases)
    for (Mode m : {Mode::Packing, Mode::Covering}) {
      std::vector<const CaseResult*> rows;
      for (const auto& r : rep.results)
        if (r.table_id == c.id && r.result.mode == m) rows.push_back(&r.result);
      if (rows.empty()) continue;
      os << "### " << c.id << " " << to_string(m) << " (centre " << to_string(c.centre) << ")\n\n";
      os << "| (u,v,w) | " << (m == Mode::Packing ? "r" : "R") << " | Vol(W) | Vol(B) | stab | "
         << (m == Mode::Packing ? "delta" : "Delta") << " | witness |\n";
      os << "|---|---|---|---|---|---|---|\n";
      for (const CaseResult* r : rows)
        os << "| " << r->params.str() << " | " << f(r->radius) << " | " << f(r->vol_w) << " | " << f(r->vol_ball)
           << " | " << stab_string(r->stab) << (r->stab.halved ? " (x1/2)" : "") << " | " << f(r->density) << " | "
           << r->witness << " |\n";
      os << '\n';
    }
  if (rep.extrema) {
    os << "### Extrema\n\n";
    const auto line = [&](const char* what, const std::optional<Extremum>& e) {
      if (!e) {
        os << "- " << what << ": none\n";
        return;
      }
      const CaseResult& r = e->row.result;
      os << "- " << what << ": " << f(r.density) << " at " << r.params.str() << " case " << r.case_id << ", radius "
         << f(r.radius) << " (" << r.witness << ")\n";
    };
    line("max packing density", rep.extrema->best_packing);
    line("min covering density", rep.extrema->best_covering);
    os << '\n';
  }
  if (rep.cells_compared > 0 || !rep.discrepancies.empty()) {
    os << "### Discrepancies\n\n";
    os << rep.cells_compared << " cells compared, " << rep.discrepancies.size() << " above tolerance, "
       << rep.blocking_discrepancies() << " not allowlisted.\n\n";
    if (!rep.discrepancies.empty()) {
      os << "| table | row | field | printed | computed | delta | allowlisted |\n|---|---|---|---|---|---|---|\n";
      for (const auto& d : rep.discrepancies)
        os << "| " << d.table_id << " | " << d.row << " | " << d.field << " | " << f(d.expected) << " | "
           << (d.message.empty() ? f(d.computed) : d.message) << " | " << f(d.delta) << " | "
           << (d.allowlisted ? "yes" : "no") << " |\n";
      os << '\n';
    }
  }
  if (!rep.flags.empty()) {
    os << "### Row notes\n\n";
    for (const auto& fl : rep.flags) os << "- " << fl.table_id << " " << fl.row << ": " << fl.note << '\n';
    os << '\n';
  }
  return os.str();
}

}  // namespace hypack
