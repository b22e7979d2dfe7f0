#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <utility>

#include "penergy/canonical.hpp"
#include "penergy/energy.hpp"
#include "penergy/enumerate.hpp"
#include "penergy/error.hpp"
#include "penergy/graph.hpp"
#include "penergy/pinching.hpp"
#include "penergy/report.hpp"
#include "penergy/spectra.hpp"
#include "penergy/verify.hpp"

namespace penergy::cli {
namespace {

struct SourceFlags {
  std::string family;
  std::string g6_file;
  std::string matrix;
};

struct OutputFlags {
  std::string format;
  std::string out;
};

struct Labeled {
  std::string label;
  SymmetricMatrix matrix;
};

void add_source_flags(CLI::App* cmd, SourceFlags& s) {
  cmd->add_option("--family", s.family, "Graph family: P<n>, C<n>, K<n>, E<n>, S<leaves>");
  cmd->add_option("--g6-file", s.g6_file, "File with one graph6 string per line");
  cmd->add_option("--matrix", s.matrix, "Matrix text file (n, then n rows)");
}

void add_output_flags(CLI::App* cmd, OutputFlags& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--format", o.format, "Output format: csv or json")->capture_default_str();
  cmd->add_option("--out", o.out, "Write output to this path instead of stdout");
}

std::vector<double> parse_p_list(const std::string& text) {
  std::vector<double> ps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double p = 0.0;
    try {
      p = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InvalidArgument("bad p value '" + item + "'");
    ps.push_back(p);
  }
  if (ps.empty()) throw InvalidArgument("--p needs at least one value");
  return ps;
}

std::vector<Labeled> load_sources(const SourceFlags& s) {
  const int given = !s.family.empty() + !s.g6_file.empty() + !s.matrix.empty();
  if (given != 1) {
    throw InvalidArgument("exactly one of --family, --g6-file, --matrix is required");
  }
  std::vector<Labeled> out;
  if (!s.family.empty()) {
    const auto [kind, n] = parse_family(s.family);
    out.push_back({s.family, family_adjacency(kind, n)});
  } else if (!s.g6_file.empty()) {
    std::ifstream in(s.g6_file);
    if (!in) throw InvalidArgument("cannot read " + s.g6_file);
    for (const Graph& g : read_graph6_stream(in)) out.push_back({graph6_encode(g), adjacency(g)});
  } else {
    std::ifstream in(s.matrix);
    if (!in) throw InvalidArgument("cannot read " + s.matrix);
    out.push_back({"matrix", read_matrix(in)});
  }
  return out;
}

// Output stream selected by --out.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InvalidArgument("cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

double zero_tol_for(const std::optional<double>& flag, std::size_t n) {
  return flag.value_or(default_tolerance(n));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positive/negative p-energy toolkit for Hermitian matrices and graphs", "penergy"};
  app.require_subcommand(1);

  SourceFlags source;
  std::string p_text = "4";
  std::optional<double> zero_tol;
  std::optional<double> slack_tol;
  unsigned jobs = 1;
  int min_n = 1;
  int max_n = 8;
  bool timing = false;

  // energy
  auto* energy = app.add_subcommand("energy", "Positive, negative and total p-energy");
  add_source_flags(energy, source);
  energy->add_option("--p", p_text, "Comma-separated exponents (>= 1)")->capture_default_str();
  energy->add_option("--zero-tol", zero_tol, "Relative eigenvalue zero threshold");
  OutputFlags energy_out;
  add_output_flags(energy, energy_out, "csv");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues, non-increasing");
  add_source_flags(spectrum, source);
  spectrum->add_option("--zero-tol", zero_tol, "Relative threshold below which values print as 0");
  OutputFlags spectrum_out;
  add_output_flags(spectrum, spectrum_out, "csv");

  // pinch
  std::string blocks;
  auto* pinch = app.add_subcommand("pinch", "Pinching and super-additivity gaps for a block partition");
  add_source_flags(pinch, source);
  pinch->add_option("--blocks", blocks, "Comma-separated diagonal block sizes")->required();
  pinch->add_option("--p", p_text, "Comma-separated exponents (>= 1)")->capture_default_str();
  pinch->add_option("--zero-tol", zero_tol, "Relative eigenvalue zero threshold");
  OutputFlags pinch_out;
  add_output_flags(pinch, pinch_out, "json");

  // enumerate
  int enum_n = 0;
  bool include_disconnected = false;
  auto* enumerate = app.add_subcommand("enumerate", "Connected graphs up to isomorphism, graph6");
  enumerate->add_option("--n", enum_n, "Vertex count (1..10)")->required();
  enumerate->add_flag("--all", include_disconnected, "Include disconnected graphs");
  enumerate->add_option("--jobs", jobs, "Worker threads");
  OutputFlags enumerate_out;
  enumerate->add_option("--format", enumerate_out.format, "g6 (default), csv or json");
  enumerate->add_option("--out", enumerate_out.out, "Write output to this path instead of stdout");

  // verify
  std::string theorem_id;
  std::string verify_p;
  auto* verify = app.add_subcommand("verify", "Exhaustively check a registered theorem");
  verify->add_option("--theorem", theorem_id, "Theorem id, or 'all'")->required();
  verify->add_option("--min-n", min_n, "Smallest order")->capture_default_str();
  verify->add_option("--max-n", max_n, "Largest order (<= 10)")->capture_default_str();
  verify->add_option("--p", verify_p, "Override the exponent grid (negp, posp, upper2)");
  verify->add_option("--tol", slack_tol, "Slack tolerance: slack >= -tol passes");
  verify->add_option("--zero-tol", zero_tol, "Relative eigenvalue zero threshold");
  verify->add_option("--jobs", jobs, "Worker threads");
  verify->add_flag("--timing", timing, "Report measured wall time (otherwise 0)");
  OutputFlags verify_out;
  add_output_flags(verify, verify_out, "csv");

  // scan
  std::string conjecture;
  std::string scan_p = "2";
  std::string witness_out;
  auto* scan = app.add_subcommand("scan", "Diagnostic counterexample scan of an open conjecture");
  scan->add_option("--conjecture", conjecture, "posp_path, negp_complete or s_plus")->required();
  scan->add_option("--p", scan_p, "Comma-separated exponents (>= 2)")->capture_default_str();
  scan->add_option("--min-n", min_n, "Smallest order")->capture_default_str();
  scan->add_option("--max-n", max_n, "Largest order (<= 10)")->capture_default_str();
  scan->add_option("--tol", slack_tol, "Slack tolerance");
  scan->add_option("--zero-tol", zero_tol, "Relative eigenvalue zero threshold");
  scan->add_option("--jobs", jobs, "Worker threads");
  scan->add_option("--witness-out", witness_out, "Write counterexample graph6 lines here");
  scan->add_flag("--timing", timing, "Report measured wall time (otherwise 0)");
  OutputFlags scan_out;
  add_output_flags(scan, scan_out, "csv");

  // extremal
  std::string side_text = "pos";
  bool exclude_complete = false;
  auto* extremal = app.add_subcommand("extremal", "Per-order minimisers of E_p^+ or E_p^-");
  extremal->add_option("--p", p_text, "Exponent")->capture_default_str();
  extremal->add_option("--side", side_text, "pos or neg")->capture_default_str();
  extremal->add_flag("--exclude-complete", exclude_complete, "Skip complete graphs");
  extremal->add_option("--min-n", min_n, "Smallest order")->capture_default_str();
  extremal->add_option("--max-n", max_n, "Largest order (<= 10)")->capture_default_str();
  extremal->add_option("--jobs", jobs, "Worker threads");
  OutputFlags extremal_out;
  add_output_flags(extremal, extremal_out, "csv");

  // fuzz
  FuzzOptions fuzz_opts;
  std::string fuzz_p = "1,1.5,2,3,4,7.5";
  int graph_split_max_n = 0;
  auto* fuzz = app.add_subcommand("fuzz", "Seeded pinching / super-additivity fuzzing");
  fuzz->add_option("--trials", fuzz_opts.trials, "Random symmetric matrices")->capture_default_str();
  fuzz->add_option("--hermitian-trials", fuzz_opts.hermitian_trials, "Random Hermitian matrices")
      ->capture_default_str();
  fuzz->add_option("--max-n", fuzz_opts.max_n, "Largest symmetric order")->capture_default_str();
  fuzz->add_option("--hermitian-max-n", fuzz_opts.hermitian_max_n, "Largest Hermitian order")
      ->capture_default_str();
  fuzz->add_option("--p", fuzz_p, "Comma-separated exponents (>= 1)")->capture_default_str();
  fuzz->add_option("--seed", fuzz_opts.seed, "Generator seed")->capture_default_str();
  fuzz->add_option("--graph-max-n", graph_split_max_n,
                   "Also check every two-part vertex split of connected graphs up to this order");
  fuzz->add_option("--jobs", jobs, "Worker threads");
  fuzz->add_flag("--timing", timing, "Report measured wall time (otherwise 0)");
  OutputFlags fuzz_out;
  add_output_flags(fuzz, fuzz_out, "csv");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "penergy: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    VerifyOptions vopts;
    vopts.workers = std::max(1U, jobs);
    vopts.tolerance = slack_tol;
    vopts.zero_tol = zero_tol;

    if (energy->parsed()) {
      const auto ps = parse_p_list(p_text);
      std::vector<LabeledEnergy> reports;
      for (const auto& src : load_sources(source)) {
        const Spectrum s = eigenvalues(src.matrix);
        for (double p : ps) {
          reports.push_back({src.label, p_energy(s, p, zero_tol_for(zero_tol, s.size()))});
        }
      }
      Sink sink(energy_out.out, out);
      write_energy_reports(sink.get(), reports, parse_format(energy_out.format));
      return kExitPass;
    }

    if (spectrum->parsed()) {
      const OutputFormat format = parse_format(spectrum_out.format);
      Sink sink(spectrum_out.out, out);
      for (const auto& src : load_sources(source)) {
        Spectrum s = eigenvalues(src.matrix);
        const double t = s.threshold(zero_tol_for(zero_tol, s.size()));
        for (double& x : s.values) {
          if (std::abs(x) <= t) x = 0.0;
        }
        write_spectrum(sink.get(), src.label, s, format);
      }
      return kExitPass;
    }

    if (pinch->parsed()) {
      const auto ps = parse_p_list(p_text);
      const BlockPartition part = BlockPartition::parse(blocks);
      std::vector<LabeledGap> gaps;
      bool ok = true;
      for (const auto& src : load_sources(source)) {
        const BlockSpectra spectra = block_spectra(src.matrix, part);
        const double zt = zero_tol_for(zero_tol, src.matrix.order());
        for (double p : ps) {
          if (!(p >= 1.0)) throw InvalidArgument("p must be >= 1");
          const GapReport pg = pinching_gap(spectra, p);
          const SuperadditivityGap sg = superadditivity_gap(spectra, p, zt);
          ok = ok && gap_ok(pg) && gap_ok(sg.pos) && gap_ok(sg.neg);
          gaps.push_back({"pinching", pg});
          gaps.push_back({"superadditivity_pos", sg.pos});
          gaps.push_back({"superadditivity_neg", sg.neg});
        }
      }
      Sink sink(pinch_out.out, out);
      write_gap_reports(sink.get(), gaps, parse_format(pinch_out.format));
      return ok ? kExitPass : kExitViolations;
    }

    if (enumerate->parsed()) {
      Sink sink(enumerate_out.out, out);
      std::ostream& os = sink.get();
      const std::string format = enumerate_out.format.empty() ? "g6" : enumerate_out.format;
      if (format != "g6" && format != "csv" && format != "json") {
        throw InvalidArgument("unknown output format '" + format + "'");
      }
      bool first = true;
      if (format == "csv") os << "n,graph6\n";
      if (format == "json") os << "[";
      enumerate_graphs(
          enum_n,
          [&](const Graph& g) {
            const std::string g6 = graph6_encode(g);
            if (format == "g6") {
              os << g6 << '\n';
            } else if (format == "csv") {
              os << g.order() << ',' << g6 << '\n';
            } else {
              os << (first ? "\n  \"" : ",\n  \"") << g6 << '"';
            }
            first = false;
          },
          EnumerateOptions{!include_disconnected, std::max(1U, jobs)});
      if (format == "json") os << (first ? "]\n" : "\n]\n");
      return kExitPass;
    }

    if (verify->parsed()) {
      const std::vector<double> p_override =
          verify_p.empty() ? std::vector<double>{} : parse_p_list(verify_p);
      std::vector<std::string> ids;
      if (theorem_id == "all") {
        ids = theorem_ids();
      } else {
        ids.push_back(theorem_id);
      }
      std::vector<VerificationResult> results;
      for (const auto& id : ids) {
        const TheoremSpec spec = theorem(id, theorem_id == "all" ? std::vector<double>{} : p_override);
        results.push_back(verify_theorem(spec, min_n, max_n, vopts));
      }
      Sink sink(verify_out.out, out);
      write_verifications(sink.get(), results, parse_format(verify_out.format), timing);
      const bool pass = std::all_of(results.begin(), results.end(),
                                    [](const VerificationResult& r) { return r.passed(); });
      return pass ? kExitPass : kExitViolations;
    }

    if (scan->parsed()) {
      std::vector<VerificationResult> results;
      for (double p : parse_p_list(scan_p)) {
        results.push_back(conjecture_scan(conjecture, p, min_n, max_n, vopts));
      }
      Sink sink(scan_out.out, out);
      write_verifications(sink.get(), results, parse_format(scan_out.format), timing);
      bool counterexample = false;
      std::unique_ptr<std::ofstream> witnesses;
      if (!witness_out.empty()) {
        witnesses = std::make_unique<std::ofstream>(witness_out);
        if (!*witnesses) throw InvalidArgument("cannot write " + witness_out);
      }
      for (const auto& r : results) {
        for (const auto& v : r.violations) {
          counterexample = true;
          if (witnesses) *witnesses << v.graph6 << '\n';
        }
      }
      return counterexample ? kExitCounterexample : kExitPass;
    }

    if (extremal->parsed()) {
      const auto ps = parse_p_list(p_text);
      if (side_text != "pos" && side_text != "neg") throw InvalidArgument("--side must be pos or neg");
      const EnergySide side = side_text == "pos" ? EnergySide::pos : EnergySide::neg;
      const OutputFormat format = parse_format(extremal_out.format);
      Sink sink(extremal_out.out, out);
      for (double p : ps) {
        write_extremal(sink.get(), extremal_table(p, min_n, max_n, side, exclude_complete, vopts.workers),
                       p, side, format);
      }
      return kExitPass;
    }

    if (fuzz->parsed()) {
      fuzz_opts.p_set = parse_p_list(fuzz_p);
      fuzz_opts.workers = vopts.workers;
      const FuzzReport report = fuzz_superadditivity(fuzz_opts);
      std::vector<VerificationResult> results{report.superadditivity, report.pinching};
      if (graph_split_max_n > 0) {
        results.push_back(graph_split_superadditivity(2, graph_split_max_n, 4.0, vopts));
      }
      Sink sink(fuzz_out.out, out);
      write_verifications(sink.get(), results, parse_format(fuzz_out.format), timing);
      const bool pass = std::all_of(results.begin(), results.end(),
                                    [](const VerificationResult& r) { return r.passed(); });
      return pass ? kExitPass : kExitViolations;
    }
  } catch (const InvalidArgument& e) {
    err << "penergy: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "penergy: internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace penergy::cli
