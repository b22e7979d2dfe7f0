#include "penergy/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <random>

#include "penergy/enumerate.hpp"
#include "penergy/error.hpp"
#include "penergy/pinching.hpp"
#include "parallel.hpp"

namespace penergy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Slacks below this (but passing) are re-evaluated with the exact signature.
constexpr double kNearTight = 1e-6;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Largest number of components of G - v over vertices v for which G - v is
// a disjoint union of cliques; 0 when there is no such v.
int max_clique_components_after_deletion(const Graph& g) {
  if (g.order() < 2) return 0;
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet rest = g.all_vertices() & ~(VertexSet{1} << v);
    const Graph h = induced_subgraph(g, rest);
    const StructuralPredicates pred = structural_predicates(h);
    if (pred.is_disjoint_union_of_cliques) {
      best = std::max(best, static_cast<int>(pred.components.size()));
    }
  }
  return best;
}

bool passes_filter(const TheoremSpec& spec, const Graph& g) {
  if (spec.filter.connected && !is_connected(g)) return false;
  if (spec.filter.non_complete && is_complete(g)) return false;
  if (spec.filter.has_dominating_vertex && !has_dominating_vertex(g)) return false;
  if (spec.hypothesis && !spec.hypothesis(g)) return false;
  return true;
}

struct Outcome {
  double slack = kInf;
  double p = 0.0;
  bool flagged = false;
  bool corrected = false;
};

double worst_slack(const TheoremSpec& spec, const GraphContext& ctx, double& worst_p) {
  double slack = kInf;
  worst_p = spec.p_values.empty() ? 0.0 : spec.p_values.front();
  if (spec.p_values.empty()) return spec.slack(ctx, 0.0);
  for (double p : spec.p_values) {
    const double s = spec.slack(ctx, p);
    if (s < slack) {
      slack = s;
      worst_p = p;
    }
  }
  return slack;
}

Outcome evaluate(const TheoremSpec& spec, const Graph& g, double tol,
                 const std::optional<double>& zero_tol) {
  const SymmetricMatrix adj = adjacency(g);
  const Spectrum spectrum = eigenvalues(adj);
  const double zt = zero_tol.value_or(default_tolerance(spectrum.size()));
  Inertia in = inertia(spectrum, zt);

  Outcome out;
  std::optional<Inertia> exact;
  const double band = 10.0 * spectrum.threshold(zt);
  const bool ambiguous = std::any_of(spectrum.values.begin(), spectrum.values.end(),
                                     [&](double x) { return std::abs(x) <= band; });
  if (ambiguous) {
    exact = exact_inertia(adj);
    if (*exact != in) {
      out.corrected = true;
      in = *exact;
    }
  }

  GraphContext ctx{g, spectrum, in, zt};
  out.slack = worst_slack(spec, ctx, out.p);
  if (out.slack > -tol && out.slack < kNearTight) {
    if (!exact) exact = exact_inertia(adj);
    GraphContext exact_ctx{g, spectrum, *exact, zt};
    out.slack = worst_slack(spec, exact_ctx, out.p);
    out.flagged = true;
  }
  return out;
}

void check_range(int min_n, int max_n) {
  if (min_n < 1 || max_n > kMaxEnumerationOrder || min_n > max_n) {
    throw InvalidArgument("n range [" + std::to_string(min_n) + ", " + std::to_string(max_n) +
                          "] must lie within [1, " + std::to_string(kMaxEnumerationOrder) + "]");
  }
}

void fold(VerificationResult& result, VerificationRow& row, const Graph& g, const Outcome& o,
          double tol) {
  ++row.graphs_checked;
  const bool need_g6 = o.slack < row.min_slack || o.slack < -tol || o.flagged;
  const std::string g6 = need_g6 ? graph6_encode(g) : std::string();
  if (o.slack < row.min_slack) {
    row.min_slack = o.slack;
    row.witness = g6;
  }
  if (o.slack < -tol) {
    ++row.violations;
    result.violations.push_back(Violation{g6, g.order(), o.p, o.slack});
  }
  if (o.flagged) result.flagged.push_back(Violation{g6, g.order(), o.p, o.slack});
  if (o.corrected) ++result.inertia_corrections;
}

void finish(VerificationResult& result) {
  for (const auto& row : result.rows) {
    result.graphs_checked += row.graphs_checked;
    if (row.min_slack < result.min_slack) {
      result.min_slack = row.min_slack;
      result.min_slack_witness = row.witness;
    }
  }
}

TheoremSpec make(std::string id, std::string description, GraphClassFilter filter,
                 std::vector<double> p_values, SlackFunction slack) {
  TheoremSpec spec;
  spec.id = std::move(id);
  spec.description = std::move(description);
  spec.filter = filter;
  spec.p_values = std::move(p_values);
  spec.slack = std::move(slack);
  return spec;
}

GraphClassFilter connected_from(int min_n, bool non_complete = false) {
  GraphClassFilter f;
  f.connected = true;
  f.non_complete = non_complete;
  f.min_n = min_n;
  f.max_n = kMaxEnumerationOrder;
  return f;
}

const std::vector<std::string>& registry_ids() {
  static const std::vector<std::string> ids{
      "pos4",   "pos4_strong", "neg4",       "dom4",        "cliques4", "negp",
      "posp",   "upper2",      "star_bound", "interlacing", "scaling"};
  return ids;
}

// (q, p) pairs for the scaling-lemma sandwich.
constexpr std::pair<double, double> kScalingPairs[] = {{2.0, 4.0}, {2.0, 6.0}, {4.0, 8.0}};

double scaling_slack(const GraphContext& ctx) {
  double slack = kInf;
  for (const auto& [q, p] : kScalingPairs) {
    const EnergyReport rq = ctx.energy(q);
    const EnergyReport rp = ctx.energy(p);
    const ScalingBounds b = scaling_bounds(rq, p);
    const double mp = std::max(1.0, rp.e_pos);
    const double mn = std::max(1.0, rp.e_neg);
    slack = std::min({slack, (rp.e_pos - b.lower_pos) / mp, (b.upper_pos - rp.e_pos) / mp,
                      (rp.e_neg - b.lower_neg) / mn, (b.upper_neg - rp.e_neg) / mn});
  }
  return slack;
}

}  // namespace

std::vector<std::string> theorem_ids() { return registry_ids(); }

TheoremSpec theorem(const std::string& id, const std::vector<double>& p_override) {
  TheoremSpec spec;
  bool adjustable = false;
  if (id == "pos4") {
    spec = make(id, "E_4^+(G) >= 4n/3 for connected G, n >= 3", connected_from(3), {4.0},
                [](const GraphContext& c, double p) {
                  return c.energy(p).e_pos - 4.0 * c.n() / 3.0;
                });
  } else if (id == "pos4_strong") {
    spec = make(id, "E_4^+(G) >= 2n for connected G, n >= 5", connected_from(5), {4.0},
                [](const GraphContext& c, double p) { return c.energy(p).e_pos - 2.0 * c.n(); });
  } else if (id == "neg4") {
    spec = make(id, "E_4^-(G) >= n for connected non-complete G, n >= 3", connected_from(3, true),
                {4.0}, [](const GraphContext& c, double p) { return c.energy(p).e_neg - c.n(); });
  } else if (id == "dom4") {
    spec = make(id,
                "E_4^-(G) >= n+1 for non-complete G with a dominating vertex, n >= 3; "
                "E_4^-(G) >= 6 when n = 4",
                connected_from(3, true), {4.0}, [](const GraphContext& c, double p) {
                  const double e = c.energy(p).e_neg;
                  double s = e - (c.n() + 1.0);
                  if (c.n() == 4) s = std::min(s, e - 6.0);
                  return s;
                });
    spec.filter.has_dominating_vertex = true;
    spec.source = GraphSource::dominated;
  } else if (id == "cliques4") {
    spec = make(id,
                "E_4^-(G) >= n+1 for connected non-complete G, n >= 3, with G - v a disjoint "
                "union of cliques for some v",
                connected_from(3, true), {4.0},
                [](const GraphContext& c, double p) { return c.energy(p).e_neg - (c.n() + 1.0); });
    spec.hypothesis = [](const Graph& g) { return max_clique_components_after_deletion(g) > 0; };
  } else if (id == "negp") {
    spec = make(id, "E_p^-(G) >= n for p >= 4, connected non-complete G", connected_from(1, true),
                {4.0, 5.0, 6.0},
                [](const GraphContext& c, double p) { return c.energy(p).e_neg - c.n(); });
    adjustable = true;
  } else if (id == "posp") {
    spec = make(id, "E_p^+(G) >= (4/3)^(p/4) n for p >= 4, connected G, n >= 4",
                connected_from(4), {4.0, 5.0, 6.0}, [](const GraphContext& c, double p) {
                  return c.energy(p).e_pos - std::pow(4.0 / 3.0, p / 4.0) * c.n();
                });
    adjustable = true;
  } else if (id == "upper2") {
    spec = make(id, "E_p^+(G) <= (n-1)^p and E_p^-(G) <= (n/2)^p for p >= 2", connected_from(1),
                {2.0}, [](const GraphContext& c, double p) {
                  const EnergyReport r = c.energy(p);
                  const UpperBounds b = energy_upper_bounds(c.n(), p);
                  return std::min(b.pos - r.e_pos, b.neg - r.e_neg);
                });
    adjustable = true;
  } else if (id == "star_bound") {
    spec = make(id, "|lambda_n(G)| >= sqrt(l) when G - v is a union of l cliques, G connected",
                connected_from(2), {}, [](const GraphContext& c, double) {
                  const int l = max_clique_components_after_deletion(c.graph);
                  return std::abs(c.spectrum.values.back()) - std::sqrt(static_cast<double>(l));
                });
    spec.hypothesis = [](const Graph& g) { return max_clique_components_after_deletion(g) > 0; };
  } else if (id == "interlacing") {
    spec = make(id, "lambda_i(A) >= lambda_i(A - v) >= lambda_{i+1}(A) for every vertex v",
                connected_from(2), {},
                [](const GraphContext& c, double) { return interlacing_slack(adjacency(c.graph)); });
    spec.tolerance = 1e-9;
  } else if (id == "scaling") {
    spec = make(id,
                "scaling sandwich E_q^(p/q) / k^(p/q-1) <= E_p <= E_q^(p/q), "
                "(q,p) in {(2,4),(2,6),(4,8)}, both signs",
                connected_from(1), {},
                [](const GraphContext& c, double) { return scaling_slack(c); });
  } else {
    throw InvalidArgument("unknown theorem id '" + id + "'");
  }
  if (!p_override.empty()) {
    if (!adjustable) throw InvalidArgument("theorem '" + id + "' has a fixed exponent");
    const double floor_p = id == "upper2" ? 2.0 : 4.0;
    for (double p : p_override) {
      if (!(p >= floor_p)) {
        throw InvalidArgument("theorem '" + id + "' is stated for p >= " +
                              std::to_string(static_cast<int>(floor_p)));
      }
    }
    spec.p_values = p_override;
  }
  return spec;
}

std::vector<Graph> theorem_graphs(const TheoremSpec& spec, int n, unsigned workers) {
  std::vector<Graph> pool =
      spec.source == GraphSource::dominated ? dominated_graphs(n, workers) : connected_graphs(n, workers);
  std::vector<Graph> out;
  out.reserve(pool.size());
  for (auto& g : pool) {
    if (passes_filter(spec, g)) out.push_back(std::move(g));
  }
  return out;
}

VerificationResult verify_theorem(const TheoremSpec& spec, int min_n, int max_n,
                                  const VerifyOptions& options) {
  check_range(min_n, max_n);
  const auto start = Clock::now();
  VerificationResult result;
  result.theorem_id = spec.id;
  result.tolerance = options.tolerance.value_or(spec.tolerance);
  result.zero_tol = options.zero_tol.value_or(-1.0);
  const int lo = std::max(min_n, spec.filter.min_n);
  const int hi = std::min(max_n, spec.filter.max_n);
  result.min_n = lo;
  result.max_n = hi;
  const double tol = result.tolerance;

  for (int n = lo; n <= hi; ++n) {
    if (spec.source == GraphSource::dominated && n < 2) continue;
    const std::vector<Graph> graphs = theorem_graphs(spec, n, options.workers);
    std::vector<Outcome> outcomes(graphs.size());
    detail::parallel_for(graphs.size(), options.workers, [&](std::size_t i) {
      outcomes[i] = evaluate(spec, graphs[i], tol, options.zero_tol);
    });
    VerificationRow row;
    row.n = n;
    for (std::size_t i = 0; i < graphs.size(); ++i) fold(result, row, graphs[i], outcomes[i], tol);
    result.rows.push_back(std::move(row));
  }
  finish(result);
  result.wall_time = seconds_since(start);
  return result;
}

std::vector<std::string> conjecture_ids() { return {"posp_path", "negp_complete", "s_plus"}; }

VerificationResult conjecture_scan(const std::string& id, double p, int min_n, int max_n,
                                   const VerifyOptions& options) {
  TheoremSpec spec;
  if (id == "posp_path") {
    spec = make(id, "E_p^+(G) >= E_p^+(P_n) for connected G", connected_from(1), {p},
                [](const GraphContext& c, double q) {
                  const double ref = p_energy(closed_form_spectrum(Family::path, c.n()), q).e_pos;
                  return c.energy(q).e_pos - ref;
                });
  } else if (id == "negp_complete") {
    spec = make(id, "E_p^-(G) >= E_p^-(K_n) for connected G", connected_from(1), {p},
                [](const GraphContext& c, double q) {
                  const double ref =
                      p_energy(closed_form_spectrum(Family::complete, c.n()), q).e_neg;
                  return c.energy(q).e_neg - ref;
                });
  } else if (id == "s_plus") {
    spec = make(id, "min(E_2^+(G), E_2^-(G)) >= n - 1 for connected G", connected_from(1), {2.0},
                [](const GraphContext& c, double) {
                  const EnergyReport r = c.energy(2.0);
                  return std::min(r.e_pos, r.e_neg) - (c.n() - 1.0);
                });
  } else {
    throw InvalidArgument("unknown conjecture id '" + id + "'");
  }
  if (id != "s_plus" && !(p >= 2.0)) throw InvalidArgument("conjecture scans need p >= 2");
  VerificationResult result = verify_theorem(spec, min_n, max_n, options);
  result.diagnostic = true;
  return result;
}

std::vector<ExtremalRow> extremal_table(double p, int min_n, int max_n, EnergySide side,
                                        bool exclude_complete, unsigned workers) {
  check_range(min_n, max_n);
  if (!(p >= 1.0)) throw InvalidArgument("p must be >= 1");
  TheoremSpec spec = make("extremal", "", connected_from(1, exclude_complete), {p},
                          [side](const GraphContext& c, double q) {
                            const EnergyReport r = c.energy(q);
                            return side == EnergySide::pos ? r.e_pos : r.e_neg;
                          });
  std::vector<ExtremalRow> rows;
  for (int n = min_n; n <= max_n; ++n) {
    const std::vector<Graph> graphs = theorem_graphs(spec, n, workers);
    std::vector<Outcome> outcomes(graphs.size());
    detail::parallel_for(graphs.size(), workers, [&](std::size_t i) {
      // Tolerance -inf keeps energies away from the near-tight re-check.
      outcomes[i] = evaluate(spec, graphs[i], -kInf, std::nullopt);
    });
    ExtremalRow row;
    row.n = n;
    row.graphs = graphs.size();
    row.min_energy = kInf;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (outcomes[i].slack < row.min_energy) {
        row.min_energy = outcomes[i].slack;
        row.witness = graph6_encode(graphs[i]);
      }
    }
    if (!graphs.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

double interlacing_slack(const SymmetricMatrix& m) {
  const std::size_t n = m.order();
  if (n < 2) return kInf;
  const Spectrum whole = eigenvalues(m);
  const double norm = std::max(1.0, whole.scale);
  double slack = kInf;
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < n; ++v) {
    keep.clear();
    for (std::size_t u = 0; u < n; ++u) {
      if (u != v) keep.push_back(u);
    }
    const Spectrum sub = eigenvalues(principal_submatrix(m, keep));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      slack = std::min({slack, (whole.values[i] - sub.values[i]) / norm,
                        (sub.values[i] - whole.values[i + 1]) / norm});
    }
  }
  return slack;
}

VerificationResult interlacing_suite(int min_n, int max_n, const VerifyOptions& options) {
  return verify_theorem(theorem("interlacing"), min_n, max_n, options);
}

FuzzInstance fuzz_instance(std::uint64_t seed, std::size_t trial, bool hermitian, int max_n) {
  if (max_n < 1) throw InvalidArgument("max_n must be positive");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                    hermitian ? 1U : 0U};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<int> order(1, max_n);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  std::bernoulli_distribution cut(0.5);

  FuzzInstance inst;
  inst.n = static_cast<std::size_t>(order(rng));
  const std::size_t n = inst.n;
  inst.real_part.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double x = entry(rng);
      inst.real_part[i * n + j] = x;
      inst.real_part[j * n + i] = x;
    }
  }
  if (hermitian) {
    inst.imag_part.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double y = entry(rng);
        inst.imag_part[i * n + j] = y;
        inst.imag_part[j * n + i] = -y;
      }
    }
  }
  std::size_t run = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (cut(rng)) {
      inst.blocks.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  inst.blocks.push_back(run);
  return inst;
}

FuzzReport fuzz_superadditivity(const FuzzOptions& options) {
  if (options.trials == 0) throw InvalidArgument("fuzzing needs at least one trial");
  for (double p : options.p_set) {
    if (!(p >= 1.0)) throw InvalidArgument("fuzz p values must be >= 1");
  }
  const auto start = Clock::now();
  struct TrialOutcome {
    std::size_t n = 0;
    double super_slack = kInf;
    double pinch_slack = kInf;
    double super_p = 0.0;
    double pinch_p = 0.0;
  };
  const std::size_t total = options.trials + options.hermitian_trials;
  std::vector<TrialOutcome> outcomes(total);
  detail::parallel_for(total, options.workers, [&](std::size_t t) {
    const bool herm = t >= options.trials;
    const std::size_t index = herm ? t - options.trials : t;
    const FuzzInstance inst =
        fuzz_instance(options.seed, index, herm, herm ? options.hermitian_max_n : options.max_n);
    const BlockPartition part(inst.blocks);
    const BlockSpectra spectra =
        herm ? block_spectra(HermitianMatrix(inst.n, inst.real_part, inst.imag_part), part)
             : block_spectra(SymmetricMatrix::from_entries(inst.n, inst.real_part), part);
    TrialOutcome& o = outcomes[t];
    o.n = inst.n;
    const double zt = default_tolerance(inst.n);
    for (double p : options.p_set) {
      const SuperadditivityGap sg = superadditivity_gap(spectra, p, zt);
      const double s = std::min(sg.pos.gap / std::max(1.0, std::abs(sg.pos.whole)),
                                sg.neg.gap / std::max(1.0, std::abs(sg.neg.whole)));
      if (s < o.super_slack) {
        o.super_slack = s;
        o.super_p = p;
      }
      const GapReport pg = pinching_gap(spectra, p);
      const double ps = pg.gap / std::max(1.0, std::abs(pg.whole));
      if (ps < o.pinch_slack) {
        o.pinch_slack = ps;
        o.pinch_p = p;
      }
    }
  });

  FuzzReport report;
  auto build = [&](VerificationResult& r, const std::string& id, bool pinching) {
    r.theorem_id = id;
    r.tolerance = kGapRelTol;
    const int top = std::max(options.max_n, options.hermitian_trials ? options.hermitian_max_n : 0);
    r.min_n = 1;
    r.max_n = top;
    std::vector<VerificationRow> rows(static_cast<std::size_t>(top) + 1);
    for (std::size_t t = 0; t < total; ++t) {
      const TrialOutcome& o = outcomes[t];
      const bool herm = t >= options.trials;
      const double s = pinching ? o.pinch_slack : o.super_slack;
      const double p = pinching ? o.pinch_p : o.super_p;
      VerificationRow& row = rows[o.n];
      row.n = static_cast<int>(o.n);
      ++row.graphs_checked;
      const std::string tag =
          (herm ? "herm:" : "sym:") + std::to_string(herm ? t - options.trials : t);
      if (s < row.min_slack) {
        row.min_slack = s;
        row.witness = tag;
      }
      if (s < -kGapRelTol) {
        ++row.violations;
        r.violations.push_back(Violation{tag, static_cast<int>(o.n), p, s});
      }
    }
    for (auto& row : rows) {
      if (row.graphs_checked > 0) r.rows.push_back(std::move(row));
    }
    finish(r);
    r.wall_time = seconds_since(start);
  };
  build(report.superadditivity, "superadditivity", false);
  build(report.pinching, "pinching", true);
  return report;
}

VerificationResult graph_split_superadditivity(int min_n, int max_n, double p,
                                               const VerifyOptions& options) {
  check_range(min_n, max_n);
  if (!(p >= 1.0)) throw InvalidArgument("p must be >= 1");
  const auto start = Clock::now();
  VerificationResult result;
  result.theorem_id = "graph_split";
  result.tolerance = options.tolerance.value_or(kGapRelTol);
  result.min_n = std::max(2, min_n);
  result.max_n = max_n;
  for (int n = result.min_n; n <= max_n; ++n) {
    const std::vector<Graph> graphs = connected_graphs(n, options.workers);
    struct SplitOutcome {
      double slack = kInf;
      std::size_t splits = 0;
    };
    std::vector<SplitOutcome> outcomes(graphs.size());
    detail::parallel_for(graphs.size(), options.workers, [&](std::size_t i) {
      const SymmetricMatrix adj = adjacency(graphs[i]);
      const Spectrum whole = eigenvalues(adj);
      const double zt = options.zero_tol.value_or(default_tolerance(adj.order()));
      const VertexSet all = graphs[i].all_vertices();
      // Splits with vertex 0 on the first side, each unordered split once.
      for (VertexSet s = 1; s < all; s += 2) {
        std::vector<std::size_t> first, second;
        for (int v = 0; v < n; ++v) ((s >> v) & 1U ? first : second).push_back(v);
        BlockSpectra spectra;
        spectra.whole = whole;
        spectra.blocks.push_back(eigenvalues(principal_submatrix(adj, first)));
        spectra.blocks.push_back(eigenvalues(principal_submatrix(adj, second)));
        const SuperadditivityGap g = superadditivity_gap(spectra, p, zt);
        outcomes[i].slack = std::min({outcomes[i].slack,
                                      g.pos.gap / std::max(1.0, std::abs(g.pos.whole)),
                                      g.neg.gap / std::max(1.0, std::abs(g.neg.whole))});
        ++outcomes[i].splits;
      }
    });
    VerificationRow row;
    row.n = n;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      row.graphs_checked += outcomes[i].splits;
      const double s = outcomes[i].slack;
      if (s < row.min_slack) {
        row.min_slack = s;
        row.witness = graph6_encode(graphs[i]);
      }
      if (s < -result.tolerance) {
        ++row.violations;
        result.violations.push_back(Violation{graph6_encode(graphs[i]), n, p, s});
      }
    }
    result.rows.push_back(std::move(row));
  }
  finish(result);
  result.wall_time = seconds_since(start);
  return result;
}

}  // namespace penergy
