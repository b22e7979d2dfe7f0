#include "penergy/report.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "penergy/error.hpp"

namespace penergy {
namespace {

using nlohmann::ordered_json;

ordered_json number(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

ordered_json violation_json(const Violation& v) {
  return ordered_json{{"graph6", v.graph6}, {"n", v.n}, {"p", v.p}, {"slack", number(v.slack)}};
}

ordered_json verification_json(const VerificationResult& r, bool include_timing) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    rows.push_back(ordered_json{{"n", row.n},
                                {"graphs_checked", row.graphs_checked},
                                {"violations", row.violations},
                                {"min_slack", number(row.min_slack)},
                                {"witness_g6", row.witness}});
  }
  ordered_json violations = ordered_json::array();
  for (const auto& v : r.violations) violations.push_back(violation_json(v));
  ordered_json flagged = ordered_json::array();
  for (const auto& v : r.flagged) flagged.push_back(violation_json(v));
  std::string status = r.passed() ? "pass" : (r.diagnostic ? "counterexample_found" : "violations");
  if (r.diagnostic && r.passed()) status = "no_counterexample_in_range";
  return ordered_json{{"theorem_id", r.theorem_id},
                      {"status", status},
                      {"min_n", r.min_n},
                      {"max_n", r.max_n},
                      {"graphs_checked", r.graphs_checked},
                      {"violations", violations},
                      {"min_slack", number(r.min_slack)},
                      {"witness_g6", r.min_slack_witness},
                      {"wall_time_s", include_timing ? r.wall_time : 0.0},
                      {"tolerance", r.tolerance},
                      {"zero_tol", r.zero_tol < 0 ? ordered_json("default") : ordered_json(r.zero_tol)},
                      {"inertia_corrections", r.inertia_corrections},
                      {"flagged", flagged},
                      {"rows", rows}};
}

void verification_csv_rows(std::ostream& out, const VerificationResult& r, bool include_timing) {
  for (const auto& row : r.rows) {
    out << r.theorem_id << ',' << row.n << ',' << row.graphs_checked << ',' << row.violations
        << ',' << format_number(row.min_slack) << ',' << row.witness << ','
        << (include_timing ? format_number(r.wall_time, 6) : "0") << '\n';
  }
  out << r.theorem_id << ",all," << r.graphs_checked << ',' << r.violations.size() << ','
      << format_number(r.min_slack) << ',' << r.min_slack_witness << ','
      << (include_timing ? format_number(r.wall_time, 6) : "0") << '\n';
}

constexpr const char* kVerificationHeader =
    "theorem_id,n,graphs_checked,violations,min_slack,witness_g6,wall_time_s\n";

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw InvalidArgument("unknown output format '" + text + "' (expected csv or json)");
}

std::string format_number(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream ss;
  ss.precision(digits);
  ss << x;
  return ss.str();
}

void write_energy_reports(std::ostream& out, const std::vector<LabeledEnergy>& reports,
                          OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& [source, r] : reports) {
      arr.push_back(ordered_json{{"source", source},
                                 {"p", r.p},
                                 {"e_pos", r.e_pos},
                                 {"e_neg", r.e_neg},
                                 {"e_total", r.e_total},
                                 {"n_pos", r.inertia.n_pos},
                                 {"n_zero", r.inertia.n_zero},
                                 {"n_neg", r.inertia.n_neg}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  if (reports.empty()) return;
  out << "source,p,e_pos,e_neg,e_total,n_pos,n_zero,n_neg\n";
  for (const auto& [source, r] : reports) {
    out << source << ',' << format_number(r.p) << ',' << format_number(r.e_pos) << ','
        << format_number(r.e_neg) << ',' << format_number(r.e_total) << ',' << r.inertia.n_pos
        << ',' << r.inertia.n_zero << ',' << r.inertia.n_neg << '\n';
  }
}

void write_gap_reports(std::ostream& out, const std::vector<LabeledGap>& gaps,
                       OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& [kind, g] : gaps) {
      arr.push_back(ordered_json{{"kind", kind},
                                 {"p", g.p},
                                 {"whole", g.whole},
                                 {"parts_sum", g.parts_sum},
                                 {"gap", g.gap},
                                 {"ok", gap_ok(g)}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  out << "kind,p,whole,parts_sum,gap,ok\n";
  for (const auto& [kind, g] : gaps) {
    out << kind << ',' << format_number(g.p) << ',' << format_number(g.whole) << ','
        << format_number(g.parts_sum) << ',' << format_number(g.gap) << ','
        << (gap_ok(g) ? "true" : "false") << '\n';
  }
}

void write_verification(std::ostream& out, const VerificationResult& result, OutputFormat format,
                        bool include_timing) {
  write_verifications(out, {result}, format, include_timing);
}

void write_verifications(std::ostream& out, const std::vector<VerificationResult>& results,
                         OutputFormat format, bool include_timing) {
  if (format == OutputFormat::json) {
    if (results.size() == 1) {
      out << verification_json(results.front(), include_timing).dump(2) << '\n';
      return;
    }
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) arr.push_back(verification_json(r, include_timing));
    out << arr.dump(2) << '\n';
    return;
  }
  out << kVerificationHeader;
  for (const auto& r : results) verification_csv_rows(out, r, include_timing);
}

void write_extremal(std::ostream& out, const std::vector<ExtremalRow>& rows, double p,
                    EnergySide side, OutputFormat format) {
  const char* side_name = side == EnergySide::pos ? "pos" : "neg";
  if (format == OutputFormat::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      arr.push_back(ordered_json{{"n", row.n},
                                 {"p", p},
                                 {"side", side_name},
                                 {"min_energy", number(row.min_energy)},
                                 {"witness_g6", row.witness},
                                 {"graphs", row.graphs}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  out << "n,p,side,min_energy,witness_g6,graphs\n";
  for (const auto& row : rows) {
    out << row.n << ',' << format_number(p) << ',' << side_name << ','
        << format_number(row.min_energy) << ',' << row.witness << ',' << row.graphs << '\n';
  }
}

void write_spectrum(std::ostream& out, const std::string& source, const Spectrum& s,
                    OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json values = ordered_json::array();
    for (double x : s.values) values.push_back(std::stod(format_number(x, 15)));
    out << ordered_json{{"source", source}, {"eigenvalues", values}}.dump(2) << '\n';
    return;
  }
  out << "source,index,eigenvalue\n";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    out << source << ',' << i << ',' << format_number(s.values[i], 15) << '\n';
  }
}

}  // namespace penergy
