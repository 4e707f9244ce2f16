#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "pascaline/binary_form.hpp"
#include "pascaline/rational.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PASCALINE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli pascals: format, witness values, class counts") {
  RunResult r = run_cli("pascals 0 1 inf 3 -5 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("k(1,23): (3,-11,14)") != std::string::npos);
  CHECK(r.out.find("classes: 60") != std::string::npos);

  RunResult d = run_cli("pascals 0 0 inf 1 -2 3");
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("classes: 19") != std::string::npos);

  RunResult t = run_cli("pascals 0 1 inf 2 1/2 -1");
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("k(1,23) k(2,13) k(3,12)") != std::string::npos);
}

TEST_CASE("cli printed poles re-parse to the same line") {
  RunResult r = run_cli("pascals 0 1 inf 3 -5 7");
  std::istringstream is(r.out);
  std::string line;
  int checked = 0;
  while (std::getline(is, line) && checked < 60) {
    auto colon = line.find(": (");
    if (colon == std::string::npos || line[0] != 'k') continue;
    std::string tuple = line.substr(colon + 2);
    REQUIRE(tuple.front() == '(');
    REQUIRE(tuple.back() == ')');
    std::string body = tuple.substr(1, tuple.size() - 2);
    std::array<pascaline::Rat, 3> c;
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
      std::size_t comma = body.find(',', start);
      std::string tok = body.substr(start, comma == std::string::npos
                                               ? std::string::npos
                                               : comma - start);
      c[static_cast<std::size_t>(i)] = pascaline::parse_rat(tok);
      start = comma + 1;
    }
    pascaline::BinaryForm f{c[0], c[1], c[2]};
    // Printed tuples are already canonical.
    CHECK(pascaline::ProjectiveForm(f).form() == f);
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("cli table") {
  RunResult r = run_cli("table");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("12.34.56") != std::string::npos);  // row A, column E
  CHECK(r.out.find("diagonally symmetric pass") != std::string::npos);
  std::size_t labels = 0, pos = 0;
  while ((pos = r.out.find("\nk(", pos)) != std::string::npos) {
    ++labels;
    ++pos;
  }
  CHECK(labels == 60);
}

TEST_CASE("cli classify and construct") {
  CHECK(run_cli("classify 0 1 inf 2 1/2 -1").out.find("TripleSymmetric") !=
        std::string::npos);
  RunResult r = run_cli("construct ricochet 0 1 inf 2");
  CHECK(r.out.find("E=-2/3") != std::string::npos);
  CHECK(r.out.find("F=-2") != std::string::npos);
  CHECK(r.out.find("pascal pole: (1,0,4)") != std::string::npos);
}

TEST_CASE("cli json output") {
  RunResult r = run_cli("--json pascals 0 1 inf 3 -5 7");
  json o = json::parse(r.out);
  CHECK(o["lines"].size() == 60);
  CHECK(o["classes"].size() == 60);
  CHECK(o["lines"][0]["label"] == "k(1,23)");
  CHECK(o["lines"][0]["pole"] == json::array({"3", "-11", "14"}));

  json c = json::parse(run_cli("--json classify 1 -1 2 -2 3 -3").out);
  CHECK(c["classification"] == "Involutive");
  CHECK(c["centre"] == json::array({"0", "1", "0"}));

  json s = json::parse(run_cli("--json scan 'k(1,23)' 'k(1,24)' --prime 31").out);
  CHECK(s["unexplained"] == 0);
  CHECK(s["pattern"] == 2);
}

TEST_CASE("cli covariants and construct involution") {
  RunResult r = run_cli("covariants 1 -1 2 -2 3 -3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("theta_15_0: 0") != std::string::npos);
  CHECK(r.out.find("theta_8_2:") != std::string::npos);

  RunResult inv = run_cli("construct involution 0 1 0 2 3 5");
  CHECK(inv.exit_code == 0);
  CHECK(inv.out.find("D=-5 E=-3 F=-2") != std::string::npos);
  CHECK(inv.out.find("pascal pole: (0,1,0)") != std::string::npos);

  // Centre x1^2 + 4 x2^2 has a finite chart position, so Q gets a mark.
  RunResult svg = run_cli("svg involution 1 0 4 2 3 5");
  CHECK(svg.exit_code == 0);
  std::size_t chords = 0, pos = 0;
  while ((pos = svg.out.find("class=\"chord\"", pos)) != std::string::npos) {
    ++chords;
    ++pos;
  }
  CHECK(chords == 3);
  CHECK(svg.out.find(">Q<") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("pascals 0 1 inf 3 -5 zz").exit_code == 2);
  CHECK(run_cli("pascals 0 1 inf 3 -5").exit_code == 2);       // wrong arity
  CHECK(run_cli("pascals 0 1 inf 3 -5 1/0").exit_code == 2);   // zero denominator
  CHECK(run_cli("scan 'k(1,23)' 'k(9,99)' --prime 31").exit_code == 2);
  CHECK(run_cli("pascals 0 0 0 1 2 3").exit_code == 3);        // triple point
  CHECK(run_cli("construct ricochet 0 1 inf 0").exit_code == 3);
  CHECK(run_cli("construct triple 1").exit_code == 3);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("cli svg determinism") {
  RunResult a = run_cli("svg ricochet 0 1 inf 2");
  RunResult b = run_cli("svg ricochet 0 1 inf 2");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("<svg") != std::string::npos);
  CHECK(a.out.find("class=\"pascal\"") != std::string::npos);
}
