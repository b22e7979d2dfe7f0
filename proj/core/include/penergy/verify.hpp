#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "penergy/energy.hpp"
#include "penergy/graph.hpp"
#include "penergy/spectra.hpp"

namespace penergy {

// Which graphs a theorem quantifies over.
struct GraphClassFilter {
  bool connected = true;
  bool non_complete = false;
  bool has_dominating_vertex = false;
  int min_n = 1;
  int max_n = 10;
};

// Everything a slack function may need about one graph. Energies use the
// validated inertia (exact signature when the float classification was in
// doubt).
struct GraphContext {
  const Graph& graph;
  const Spectrum& spectrum;
  Inertia inertia;
  double zero_tol = 0.0;

  int n() const { return graph.order(); }
  EnergyReport energy(double p) const { return p_energy_with_inertia(spectrum, p, inertia); }
};

// Slack of one claimed inequality lhs >= rhs: lhs - rhs.
using SlackFunction = std::function<double(const GraphContext&, double p)>;

enum class GraphSource {
  connected,  // canonical augmentation over connected graphs
  dominated,  // every (n-1)-vertex graph joined to a new dominating vertex
};

struct TheoremSpec {
  std::string id;
  std::string description;
  GraphClassFilter filter;
  GraphSource source = GraphSource::connected;
  // Additional hypothesis beyond the filter (e.g. "G - v is a union of cliques").
  std::function<bool(const Graph&)> hypothesis;
  // Empty means the slack is evaluated once (p is then passed as 0).
  std::vector<double> p_values;
  SlackFunction slack;
  // slack >= -tolerance passes.
  double tolerance = 1e-8;
};

struct Violation {
  std::string graph6;
  int n = 0;
  double p = 0.0;
  double slack = 0.0;
};

// Per-order aggregate.
struct VerificationRow {
  int n = 0;
  std::size_t graphs_checked = 0;
  std::size_t violations = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  std::string witness;
};

struct VerificationResult {
  std::string theorem_id;
  int min_n = 0;
  int max_n = 0;
  std::size_t graphs_checked = 0;
  std::vector<Violation> violations;
  double min_slack = std::numeric_limits<double>::infinity();
  std::string min_slack_witness;
  double wall_time = 0.0;
  double tolerance = 0.0;
  double zero_tol = 0.0;
  // Near-tight instances (slack within (-tol, 1e-6)) re-evaluated with the
  // exact signature.
  std::vector<Violation> flagged;
  // Graphs whose float sign classification disagreed with the exact one.
  std::size_t inertia_corrections = 0;
  std::vector<VerificationRow> rows;
  // Conjecture scans never claim truth; a violation there is a counterexample.
  bool diagnostic = false;

  bool passed() const { return violations.empty(); }
};

struct VerifyOptions {
  unsigned workers = 1;
  std::optional<double> tolerance;  // overrides TheoremSpec::tolerance
  // Relative eigenvalue zero threshold; default_tolerance(n) when unset.
  std::optional<double> zero_tol;
};

// Ids in registration order.
std::vector<std::string> theorem_ids();
// Throws InvalidArgument for unknown ids. p_override replaces the default
// p grid of theorems that take one.
TheoremSpec theorem(const std::string& id, const std::vector<double>& p_override = {});

// Graphs of order n that the theorem quantifies over, in deterministic order.
std::vector<Graph> theorem_graphs(const TheoremSpec& spec, int n, unsigned workers = 1);

// Exhaustively evaluates the slack over the theorem's class for
// n in [max(min_n, spec.filter.min_n), min(max_n, spec.filter.max_n)].
VerificationResult verify_theorem(const TheoremSpec& spec, int min_n, int max_n,
                                  const VerifyOptions& options = {});

// Diagnostic scans of open conjectures: posp_path (E_p^+(G) >= E_p^+(P_n)),
// negp_complete (E_p^-(G) >= E_p^-(K_n)), s_plus
// (min(E_2^+, E_2^-) >= n - 1). Violations are reported as counterexamples.
std::vector<std::string> conjecture_ids();
VerificationResult conjecture_scan(const std::string& id, double p, int min_n, int max_n,
                                   const VerifyOptions& options = {});

struct ExtremalRow {
  int n = 0;
  double min_energy = 0.0;
  std::string witness;
  std::size_t graphs = 0;
};

enum class EnergySide { pos, neg };

// Per n, the connected graph minimising E_p^side (ties: first in
// enumeration order). Complete graphs are skipped when exclude_complete.
std::vector<ExtremalRow> extremal_table(double p, int min_n, int max_n, EnergySide side,
                                        bool exclude_complete, unsigned workers = 1);

// Smallest normalised interlacing margin over all one-vertex deletions of m:
// min over v, i of lambda_i(A) - lambda_i(B) and lambda_i(B) - lambda_{i+1}(A),
// divided by max(1, scale). +inf for order 1.
double interlacing_slack(const SymmetricMatrix& m);

// Every enumerated connected graph and each one-vertex deletion satisfy
// lambda_i(A) >= lambda_i(B) >= lambda_{i+1}(A) within 1e-9 * scale.
VerificationResult interlacing_suite(int min_n, int max_n, const VerifyOptions& options = {});

struct FuzzOptions {
  std::size_t trials = 100000;
  int max_n = 12;
  std::size_t hermitian_trials = 10000;
  int hermitian_max_n = 8;
  std::vector<double> p_set{1.0, 1.5, 2.0, 3.0, 4.0, 7.5};
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

// Random symmetric / Hermitian matrices with random contiguous partitions.
// Slack is gap / max(1, whole); the threshold is -1e-8. Rows are per matrix
// order, witnesses are "sym:<trial>" or "herm:<trial>" (replayable from the
// seed).
struct FuzzReport {
  VerificationResult superadditivity;
  VerificationResult pinching;
};
FuzzReport fuzz_superadditivity(const FuzzOptions& options);

// Regenerates one fuzz instance; exposed so tests can replay witnesses.
struct FuzzInstance {
  std::vector<double> real_part;  // n*n
  std::vector<double> imag_part;  // n*n, empty for symmetric trials
  std::vector<std::size_t> blocks;
  std::size_t n = 0;
};
FuzzInstance fuzz_instance(std::uint64_t seed, std::size_t trial, bool hermitian, int max_n);

// Every connected graph with n in [min_n, max_n] and every split of its
// vertex set into two nonempty parts: E_p^+/- super-additivity.
VerificationResult graph_split_superadditivity(int min_n, int max_n, double p,
                                               const VerifyOptions& options = {});

}  // namespace penergy
