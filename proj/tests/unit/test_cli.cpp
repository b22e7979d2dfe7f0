#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using penergy::cli::run;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name, const std::string& contents) {
  auto dir = fs::temp_directory_path() / "penergy_cli_test";
  fs::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << contents;
  return path;
}

std::size_t lines(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST_CASE("energy") {
  auto k5 = cli({"energy", "--family", "K5", "--p", "4"});
  CHECK(k5.code == 0);
  CHECK(k5.out == "source,p,e_pos,e_neg,e_total,n_pos,n_zero,n_neg\nK5,4,256,4,260,1,0,4\n");

  auto p3 = cli({"energy", "--family", "P3", "--p", "4", "--format", "json"});
  CHECK(p3.code == 0);
  auto j = nlohmann::json::parse(p3.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["e_pos"].get<double>() == doctest::Approx(4).epsilon(1e-12));
  CHECK(j[0]["e_neg"].get<double>() == doctest::Approx(4).epsilon(1e-12));
  CHECK(j[0]["n_zero"] == 1);

  auto multi = cli({"energy", "--family", "C5", "--p", "1,2,3"});
  CHECK(lines(multi.out) == 4);

  auto empty = scratch("empty.g6", "");
  auto e = cli({"energy", "--g6-file", empty.string()});
  CHECK(e.code == 0);
  CHECK(e.out.empty());

  auto g6 = scratch("two.g6", "Bw\nBg\n");
  CHECK(lines(cli({"energy", "--g6-file", g6.string()}).out) == 3);
}

TEST_CASE("energy errors") {
  CHECK(cli({"energy", "--family", "K5", "--p", "0.5"}).code == 2);
  CHECK(cli({"energy"}).code == 2);
  CHECK(cli({"energy", "--family", "K5", "--g6-file", "x.g6"}).code == 2);
  CHECK(cli({"energy", "--g6-file", "/nonexistent/file.g6"}).code == 2);
  CHECK(cli({"energy", "--family", "Z9"}).code == 2);
  CHECK(cli({"energy", "--family", "K3", "--format", "xml"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
}

TEST_CASE("spectrum") {
  auto c4 = cli({"spectrum", "--family", "C4"});
  CHECK(c4.code == 0);
  CHECK(c4.out == "source,index,eigenvalue\nC4,0,2\nC4,1,0\nC4,2,0\nC4,3,-2\n");
}

TEST_CASE("pinch") {
  auto p3 = scratch("p3.txt", "3\n0 1 0\n1 0 1\n0 1 0\n");
  auto r = cli({"pinch", "--matrix", p3.string(), "--blocks", "2,1", "--p", "2"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["kind"] == "pinching");
  CHECK(j[0]["whole"].get<double>() == doctest::Approx(4).epsilon(1e-12));
  CHECK(j[0]["gap"].get<double>() == doctest::Approx(2).epsilon(1e-12));
  CHECK(j[0]["ok"] == true);

  CHECK(cli({"pinch", "--matrix", p3.string(), "--blocks", "2,2"}).code == 2);
  auto asym = scratch("asym.txt", "2\n0 1\n2 0\n");
  CHECK(cli({"pinch", "--matrix", asym.string(), "--blocks", "1,1"}).code == 2);
}

TEST_CASE("enumerate") {
  auto r = cli({"enumerate", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 6);
  CHECK(lines(cli({"enumerate", "--n", "4", "--all"}).out) == 11);
  CHECK(cli({"enumerate", "--n", "11"}).code == 2);

  auto path = fs::temp_directory_path() / "penergy_cli_test" / "five.g6";
  CHECK(cli({"enumerate", "--n", "5", "--out", path.string()}).out.empty());
  std::ifstream in(path);
  std::string s((std::istreambuf_iterator<char>(in)), {});
  CHECK(lines(s) == 21);
}

TEST_CASE("verify") {
  auto r = cli({"verify", "--theorem", "neg4", "--max-n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("neg4,all,1,0,1,") != std::string::npos);

  CHECK(cli({"verify", "--theorem", "nonsense"}).code == 2);
  CHECK(cli({"verify", "--theorem", "pos4", "--max-n", "11"}).code == 2);

  // the n = 4 strengthening of dom4 is violated by the paw
  CHECK(cli({"verify", "--theorem", "dom4", "--max-n", "4"}).code == 1);
  CHECK(cli({"verify", "--theorem", "dom4", "--min-n", "5", "--max-n", "6"}).code == 0);

  auto json = cli({"verify", "--theorem", "posp", "--p", "4.5", "--max-n", "6", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"theorem_id\": \"posp\"") != std::string::npos);
}

TEST_CASE("scan exit codes") {
  auto s = cli({"scan", "--conjecture", "s_plus", "--max-n", "6"});
  CHECK(s.code == 0);
  CHECK(cli({"scan", "--conjecture", "nope"}).code == 2);
  // a deliberately impossible tolerance turns every near-tight graph into a
  // counterexample, exercising the distinct exit status
  auto forced = cli({"scan", "--conjecture", "posp_path", "--p", "2", "--max-n", "4", "--tol", "-1"});
  CHECK(forced.code == 3);
}

TEST_CASE("extremal and fuzz") {
  auto e = cli({"extremal", "--p", "2", "--side", "pos", "--min-n", "3", "--max-n", "3"});
  CHECK(e.code == 0);
  CHECK(e.out == "n,p,side,min_energy,witness_g6,graphs\n3,2,pos,2,BW,2\n");
  CHECK(cli({"extremal", "--side", "sideways"}).code == 2);

  auto f = cli({"fuzz", "--trials", "200", "--hermitian-trials", "20"});
  CHECK(f.code == 0);
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::vector<std::string>> cmds{
      {"verify", "--theorem", "all", "--max-n", "6", "--jobs", "3"},
      {"scan", "--conjecture", "negp_complete", "--p", "2,4", "--max-n", "6"},
      {"fuzz", "--trials", "300", "--hermitian-trials", "30", "--seed", "9", "--jobs", "2"},
      {"enumerate", "--n", "7", "--jobs", "2"},
  };
  for (const auto& c : cmds) {
    auto a = cli(c), b = cli(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
