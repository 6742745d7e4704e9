// File format and the command-line front end: parsing, emission round
// trips, job options, and subprocess runs of the real binary.

#include "catch_amalgamated.hpp"
#include "support.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace polyred;
using namespace testsup;
using nlohmann::json;

namespace {

std::string emit_to_string(Polyhedron const& P, std::string const& name = "") {
  std::ostringstream os;
  emit_poly(os, P, name);
  return os.str();
}

int parse_error_line(std::string const& text) {
  try {
    parse_poly(text);
  } catch (ParseError const& e) {
    return e.line;
  }
  return -1;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(std::string const& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Runs the built binary through the shell, capturing both streams.
CliResult run_cli(std::string const& args, std::string const& stdin_text = "") {
  static int counter = 0;
  std::string base = "/tmp/polyred_cli_test_" + std::to_string(counter++);
  std::string in_path = base + ".in";
  {
    std::ofstream in(in_path);
    in << stdin_text;
  }
  std::string cmd = std::string(POLYRED_CLI_PATH) + " " + args + " <" + in_path + " >" + base +
                    ".out 2>" + base + ".err";
  int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(base + ".out");
  r.err = slurp(base + ".err");
  std::remove(in_path.c_str());
  std::remove((base + ".out").c_str());
  std::remove((base + ".err").c_str());
  return r;
}

std::string write_temp(std::string const& text) {
  static int counter = 0;
  std::string path = "/tmp/polyred_io_test_" + std::to_string(counter++) + ".ine";
  std::ofstream out(path);
  out << text;
  return path;
}

std::string const square_ine =
    "square\n"
    "H-representation\n"
    "begin\n"
    "4 3 rational\n"
    "1 1 0\n"
    "1 0 1\n"
    "1 -1 0\n"
    "1 0 -1\n"
    "end\n";

}  // namespace

TEST_CASE("parse then emit is the identity on a canonical file", "[io]") {
  PolyFile pf = parse_poly(square_ine);
  CHECK(pf.name == "square");
  CHECK(pf.poly.dim == 2);
  CHECK(pf.poly.row_count() == 4);
  CHECK(pf.warnings.empty());
  CHECK(emit_to_string(pf.poly, pf.name) == square_ine);
}

TEST_CASE("emit then parse round-trips arbitrary polyhedra", "[io]") {
  Rng rng(7001);
  for (int t = 0; t < 30; ++t) {
    Polyhedron P = t % 2 == 0
                       ? random_h(rng, InstanceSpec{rng.uniform(1, 4), rng.uniform(1, 8),
                                                    rng.uniform(0, 2), 0, 9, 6})
                       : random_full_dim(rng, rng.uniform(2, 4), rng.uniform(4, 12), 40);
    std::string text = emit_to_string(P, "t");
    PolyFile pf = parse_poly(text);
    CHECK(pf.poly.kind == P.kind);
    CHECK(pf.poly.dim == P.dim);
    CHECK(pf.poly.linearity == P.linearity);
    // Emission normalizes scales; a second round-trip is byte-stable.
    CHECK(emit_to_string(pf.poly, "t") == text);
    CHECK(canonical_equal(pf.poly, P));
  }
}

TEST_CASE("V-files keep vertices exact and scale rays", "[io]") {
  Polyhedron V = make_v(2,
                        {Row(Rational(1), {Rational(1, 3), Rational(-7, 2)}),
                         Row(Rational(0), {Rational(4), Rational(6)}),
                         Row(Rational(0), {Rational(0), Rational(5)})},
                        {2});
  std::string text = emit_to_string(V);
  PolyFile pf = parse_poly(text);
  // The vertex survives with its exact fractions; direction rows normalize.
  CHECK(pf.poly.rows[0] == Row(Rational(1), {Rational(1, 3), Rational(-7, 2)}));
  CHECK(pf.poly.rows[1] == Row(Rational(0), {Rational(2), Rational(3)}));
  CHECK(pf.poly.rows[2] == Row(Rational(0), {Rational(0), Rational(1)}));
  CHECK(pf.poly.linearity == std::vector<int>{2});
  CHECK(text.find("V-representation") != std::string::npos);
  CHECK(text.find("linearity 1 3") != std::string::npos);
}

TEST_CASE("parse errors carry the offending line number", "[io]") {
  CHECK(parse_error_line("name\nH-representation\nbegin\n1 3 rational\n1 2\nend\n") == 5);
  CHECK(parse_error_line("name\nH-representation\nbegin\n1 x rational\n1 2 3\nend\n") == 4);
  CHECK(parse_error_line("name\nH-representation\nbegin\n1 3 rational\n1 2 3\n") == 6);
  CHECK(parse_error_line("name\nH-representation\nlinearity 2 1 5\nbegin\n1 3 rational\n1 2 3\nend\n") == 3);
  CHECK(parse_error_line("name\nH-representation\nbegin\n1 1 rational\n1\nend\n") == 4);
  CHECK(parse_error_line("name\nV-representation\nbegin\n1 3 rational\n2 1 1\nend\n") == 5);
  CHECK(parse_error_line("") == 1);
}

TEST_CASE("comments, blank lines, and unknown options are tolerated", "[io]") {
  std::string text =
      "* leading note\n"
      "tolerated\n"
      "H-representation\n"
      "* another note\n"
      "begin\n"
      "2 2 integer\n"
      "1 1\n"
      "* inside the matrix\n"
      "3 -1\n"
      "end\n"
      "maximize 1 0\n"
      "incidence\n";
  PolyFile pf = parse_poly(text);
  CHECK(pf.poly.row_count() == 2);
  CHECK(pf.warnings.size() >= 2);  // ignored trailing options
  CHECK(pf.job.op == JobRequest::Op::None);
}

TEST_CASE("job lines select the operation and columns", "[io]") {
  std::string base =
      "j\nH-representation\nbegin\n2 3 rational\n1 1 0\n1 0 1\nend\n";
  PolyFile min = parse_poly(base + "minrep\n");
  CHECK(min.job.op == JobRequest::Op::MinRep);
  PolyFile red = parse_poly(base + "redund\n");
  CHECK(red.job.op == JobRequest::Op::Redund);
  PolyFile elim = parse_poly(base + "eliminate 1 2\n");
  CHECK(elim.job.op == JobRequest::Op::Eliminate);
  CHECK(elim.job.columns == std::vector<int>{2});
  PolyFile proj = parse_poly(base + "project 2 1 2\n");
  CHECK(proj.job.op == JobRequest::Op::Project);
  CHECK(proj.job.columns == std::vector<int>({1, 2}));

  CHECK(parse_error_line(base + "eliminate 2 1\n") == 8);     // count mismatch
  CHECK(parse_error_line(base + "eliminate 1 3\n") == 8);     // column out of range
  PolyFile both = parse_poly(base + "minrep\nredund\n");
  CHECK(both.job.op == JobRequest::Op::Redund);
  CHECK_FALSE(both.warnings.empty());  // the override is reported
}

TEST_CASE("report text explains every row", "[io]") {
  Polyhedron P = make_h(2,
                        {Row(Rational(3), {Rational(1), Rational(-2)}),
                         Row(Rational(0), {Rational(1), Rational(0)}),
                         Row(Rational(-6), {Rational(-1), Rational(4)})},
                        {0});
  MinRepReport rep = minimum_representation(P, MinRepOptions{});
  std::ostringstream os;
  emit_report(os, P, rep);
  std::string text = os.str();
  CHECK(text.find("row 1: linearity") != std::string::npos);
  CHECK(text.find("row 2: nonredundant") != std::string::npos);
  CHECK(text.find("row 3: duplicate of row 2") != std::string::npos);
  CHECK(text.find("kept 1 linearities and 1 inequalities, dropped 1 rows") != std::string::npos);
}

TEST_CASE("cli reduces a file and honors --verify and --stats", "[io]") {
  std::string path = write_temp(square_ine + "minrep\n");
  CliResult r = run_cli(path + " --verify --stats");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("H-representation") != std::string::npos);
  CHECK(r.out.find("4 3 rational") != std::string::npos);
  CHECK(r.out.find("row 1: nonredundant") != std::string::npos);

  json stats = json::parse(r.err.substr(r.err.find('{')));
  CHECK(stats.at("verb") == "minrep");
  CHECK(stats.at("lp").at("solves").get<int>() > 0);
  std::remove(path.c_str());
}

TEST_CASE("cli verbs and flag precedence", "[io]") {
  // File says eliminate column 1; explicit flags beat the file job.
  std::string path = write_temp(square_ine + "eliminate 1 1\n");
  CliResult file_job = run_cli(path);
  CHECK(file_job.exit_code == 0);
  CHECK(file_job.out.find("2 2 rational") != std::string::npos);

  CliResult flag_override = run_cli("fel --project 1 " + path);
  CHECK(flag_override.exit_code == 0);
  CHECK(flag_override.out.find("2 2 rational") != std::string::npos);
  CHECK(flag_override.out.find("*kept columns: 1") != std::string::npos);

  CliResult redund = run_cli("redund " + path + " --clarkson --stats");
  CHECK(redund.exit_code == 0);
  json stats = json::parse(redund.err.substr(redund.err.find('{')));
  CHECK(stats.at("clarkson_lp").at("max_rows").get<int>() <= 4 + 1);
  std::remove(path.c_str());
}

TEST_CASE("cli reads stdin and reports goldensquare equal to fel", "[io]") {
  CliResult fel = run_cli("fel --eliminate 2 -", square_ine);
  REQUIRE(fel.exit_code == 0);
  CliResult gold = run_cli("goldensquare --eliminate 2 -", square_ine);
  REQUIRE(gold.exit_code == 0);
  // The routes may order rows differently; they must describe the same system.
  std::istringstream fs(fel.out), gs(gold.out);
  PolyFile pf = parse_poly(fs), pg = parse_poly(gs);
  CHECK(canonical_equal(pf.poly, pg.poly));
  CHECK(pf.poly.row_count() == pg.poly.row_count());
}

TEST_CASE("cli exit codes: usage, parse, infeasible, guard", "[io]") {
  CHECK(run_cli("fel -", square_ine).exit_code == 1);  // no columns anywhere
  CHECK(run_cli("--no-such-flag -", square_ine).exit_code == 1);

  CliResult parse_err = run_cli("-", "junk\nbegin\nnot a size line\n");
  CHECK(parse_err.exit_code == 2);
  CHECK(parse_err.err.find("line") != std::string::npos);
  CHECK(run_cli("/tmp/definitely_missing_file_8231.ine").exit_code == 2);

  std::string infeasible =
      "bad\nH-representation\nbegin\n2 2 rational\n-2 1\n1 -1\nend\n";
  CliResult inf = run_cli("-", infeasible);
  CHECK(inf.exit_code == 3);
  CHECK(inf.err.find("infeasible") != std::string::npos);
  CHECK(inf.err.find("certificate") != std::string::npos);

  std::string big = emit_to_string(unit_cube(7), "big");
  CliResult guard = run_cli("oracle -", big);
  CHECK(guard.exit_code == 4);
}

TEST_CASE("cli oracle verb lists vertices", "[io]") {
  CliResult r = run_cli("oracle -", square_ine);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("V-representation") != std::string::npos);
  CHECK(r.out.find("4 3 rational") != std::string::npos);
}

TEST_CASE("cli output parses back as a valid file", "[io]") {
  CliResult r = run_cli("minrep -", square_ine);
  REQUIRE(r.exit_code == 0);
  PolyFile pf = parse_poly(r.out);
  CHECK(pf.poly.row_count() == 4);
  PolyFile sq = parse_poly(square_ine);
  CHECK(canonical_equal(pf.poly, sq.poly));
}
