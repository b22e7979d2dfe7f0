#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "penergy/canonical.hpp"
#include "penergy/enumerate.hpp"
#include "penergy/error.hpp"
#include "penergy/report.hpp"
#include "penergy/verify.hpp"

using namespace penergy;

namespace {

// Paw: triangle with a pendant vertex.
Graph paw() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  return g;
}

}  // namespace

TEST_CASE("registry") {
  auto ids = theorem_ids();
  for (const char* id : {"pos4", "pos4_strong", "neg4", "dom4", "cliques4", "negp", "posp",
                         "upper2", "star_bound", "interlacing", "scaling"}) {
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  }
  CHECK_THROWS_AS(theorem("nonsense"), InvalidArgument);
  CHECK(theorem("negp", {7.0}).p_values == std::vector<double>{7.0});
  CHECK_THROWS_AS(theorem("negp", {0.5}), InvalidArgument);
  CHECK_THROWS_AS(theorem("pos4", {5.0}), InvalidArgument);
}

TEST_CASE("pos4 base cases") {
  auto r = verify_theorem(theorem("pos4"), 3, 8);
  CHECK(r.graphs_checked == 12111);
  CHECK(r.passed());
  REQUIRE(r.rows.size() == 6);
  CHECK(r.rows[0].graphs_checked == 2);
  CHECK(r.rows[5].graphs_checked == 11117);
  // P_3 meets 4n/3 = 4 with equality
  CHECK(std::abs(r.rows[0].min_slack) < 1e-12);
  for (std::size_t i = 1; i < r.rows.size(); ++i) CHECK(r.rows[i].min_slack > 0);
}

TEST_CASE("neg4 on three vertices checks only the path") {
  auto r = verify_theorem(theorem("neg4"), 1, 3);
  CHECK(r.min_n == 3);
  CHECK(r.graphs_checked == 1);
  CHECK(r.min_slack == doctest::Approx(1).epsilon(1e-10));
  CHECK(r.min_slack_witness == canonical_form(family(Family::path, 3)));
}

TEST_CASE("dom4 anchors") {
  auto three = verify_theorem(theorem("dom4"), 3, 3);
  CHECK(three.graphs_checked == 1);
  CHECK(std::abs(three.min_slack) < 1e-10);
  CHECK(three.passed());

  // The n = 4 strengthening (>= 6) does not hold for the paw, whose negative
  // 4-energy is about 5.8134; the n + 1 bound itself holds.
  auto four = verify_theorem(theorem("dom4"), 4, 4);
  CHECK(four.graphs_checked == 3);
  REQUIRE(four.violations.size() == 1);
  CHECK(four.violations[0].graph6 == canonical_form(paw()));
  CHECK(four.violations[0].slack == doctest::Approx(5.8133576577 - 6).epsilon(1e-8));

  auto rest = verify_theorem(theorem("dom4"), 5, 8);
  CHECK(rest.passed());
}

TEST_CASE("dominated class matches a filter over connected graphs") {
  auto spec = theorem("dom4");
  for (int n = 3; n <= 7; ++n) {
    std::set<std::string> from_source, from_filter;
    for (const auto& g : theorem_graphs(spec, n)) from_source.insert(canonical_form(g));
    for (const auto& g : connected_graphs(n))
      if (has_dominating_vertex(g) && !is_complete(g)) from_filter.insert(canonical_form(g));
    CHECK(from_source == from_filter);
  }
}

TEST_CASE("remaining theorem suites pass on their stated ranges") {
  for (const char* id : {"pos4_strong", "neg4", "cliques4", "negp", "posp", "upper2",
                         "star_bound", "interlacing", "scaling"}) {
    INFO(id);
    auto r = verify_theorem(theorem(id), 1, 7);
    CHECK(r.passed());
    CHECK(r.graphs_checked > 0);
  }
}

TEST_CASE("completeness: graphs_checked equals the filtered enumeration count") {
  auto r = verify_theorem(theorem("neg4"), 3, 7);
  std::size_t expect = 0;
  for (int n = 3; n <= 7; ++n)
    for (const auto& g : connected_graphs(n)) expect += !is_complete(g);
  CHECK(r.graphs_checked == expect);
}

TEST_CASE("results do not depend on the worker count") {
  VerifyOptions one, four;
  four.workers = 4;
  auto a = verify_theorem(theorem("posp"), 3, 7, one);
  auto b = verify_theorem(theorem("posp"), 3, 7, four);
  std::ostringstream sa, sb;
  write_verification(sa, a, OutputFormat::json, false);
  write_verification(sb, b, OutputFormat::json, false);
  CHECK(sa.str() == sb.str());
}

TEST_CASE("range errors") {
  CHECK_THROWS_AS(verify_theorem(theorem("pos4"), 3, kMaxEnumerationOrder + 1), InvalidArgument);
  CHECK_THROWS_AS(verify_theorem(theorem("pos4"), 6, 5), InvalidArgument);
}

TEST_CASE("conjecture scans") {
  auto s = conjecture_scan("s_plus", 2, 3, 3);
  CHECK(s.diagnostic);
  CHECK(s.graphs_checked == 2);
  CHECK(std::abs(s.min_slack) < 1e-12);  // min(E2+, E2-) of P_3 is 2 = n - 1
  CHECK(s.min_slack_witness == canonical_form(family(Family::path, 3)));

  auto path = conjecture_scan("posp_path", 2, 1, 6);
  CHECK(path.passed());
  CHECK(path.min_slack <= 1e-12);  // P_n compared with itself

  auto comp = conjecture_scan("negp_complete", 4, 4, 4);
  CHECK(comp.graphs_checked == 6);

  CHECK_THROWS_AS(conjecture_scan("bogus", 4, 3, 5), InvalidArgument);
  CHECK_THROWS_AS(conjecture_scan("posp_path", 1.5, 3, 5), InvalidArgument);
}

TEST_CASE("extremal table anchors") {
  auto pos = extremal_table(2, 3, 3, EnergySide::pos, false);
  REQUIRE(pos.size() == 1);
  CHECK(pos[0].min_energy == doctest::Approx(2));
  CHECK(pos[0].witness == canonical_form(family(Family::path, 3)));

  auto neg = extremal_table(4, 3, 3, EnergySide::neg, true);
  CHECK(neg[0].min_energy == doctest::Approx(4));
  CHECK(neg[0].witness == canonical_form(family(Family::path, 3)));

  auto four = extremal_table(4, 4, 4, EnergySide::pos, false);
  CHECK(four[0].graphs == 6);
  CHECK(four[0].min_energy >= 16.0 / 3.0);
}

TEST_CASE("interlacing") {
  auto k3 = adjacency(family(Family::complete, 3));
  CHECK(interlacing_slack(k3) >= -1e-12);
  CHECK(std::isinf(interlacing_slack(SymmetricMatrix(1))));
  CHECK(interlacing_slack(SymmetricMatrix(4)) == 0);
  auto r = interlacing_suite(3, 7);
  CHECK(r.passed());
  CHECK(r.graphs_checked == 2 + 6 + 21 + 112 + 853);
}

TEST_CASE("report formats") {
  auto r = verify_theorem(theorem("neg4"), 3, 4);
  std::ostringstream csv;
  write_verification(csv, r, OutputFormat::csv, false);
  CHECK(csv.str().rfind("theorem_id,n,graphs_checked,violations,min_slack,witness_g6,wall_time_s\n", 0) == 0);
  CHECK(csv.str().find("neg4,all,6,0,") != std::string::npos);

  std::ostringstream json;
  write_verification(json, r, OutputFormat::json, false);
  CHECK(json.str().find("\"status\": \"pass\"") != std::string::npos);

  std::ostringstream e;
  write_energy_reports(e, {}, OutputFormat::csv);
  CHECK(e.str().empty());
  CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
}
