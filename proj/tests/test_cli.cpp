#include "linent/cli.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "doctest.h"
#include "linent/divergences.hpp"
#include "linent/format.hpp"
#include "linent/lin.hpp"
#include "oracles.hpp"

using namespace linent;
using namespace linent::cli;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a linent::Error");
  return errc::empty_alphabet;
}

InputRecord parse_one(const std::string& line, InputFormat format) {
  const auto record = parse_record(line, format, 1, 1);
  REQUIRE(record.has_value());
  return *record;
}

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("parse_record skips comments and blanks") {
  CHECK_FALSE(parse_record("", InputFormat::probs, 1, 1).has_value());
  CHECK_FALSE(parse_record("   ", InputFormat::probs, 2, 1).has_value());
  CHECK_FALSE(parse_record("# comment", InputFormat::counts, 3, 1).has_value());
}

TEST_CASE("parse_record probs format") {
  const InputRecord spaced = parse_one("coin: 0.5 0.5", InputFormat::probs);
  CHECK(spaced.id == "coin");
  CHECK(spaced.dist.size() == 2);
  CHECK(spaced.dist.mass(0) == 0.5);

  const InputRecord comma = parse_one("0.25,0.25, 0.5", InputFormat::probs);
  CHECK(comma.id == "1");  // unnamed records take the record index
  CHECK(comma.dist.size() == 3);

  const InputRecord bracket = parse_one("[1.0]", InputFormat::probs);
  CHECK(bracket.dist.size() == 1);
  CHECK(bracket.dist.mass(0) == 1.0);

  CHECK(code_of([] { parse_record("a: 0.5 oops", InputFormat::probs, 4, 1); }) ==
        errc::parse_error);
  CHECK(code_of([] { parse_record(": 0.5 0.5", InputFormat::probs, 5, 1); }) ==
        errc::parse_error);
  CHECK(code_of([] { parse_record("a:", InputFormat::probs, 6, 1); }) == errc::parse_error);
  // validation failures keep their own code but gain line context
  try {
    parse_record("bad: 0.6 0.5", InputFormat::probs, 7, 1);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_normalized);
    CHECK(std::string(e.what()).find("line 7") != std::string::npos);
    CHECK(std::string(e.what()).find("bad") != std::string::npos);
  }
}

TEST_CASE("parse_record counts format") {
  const InputRecord coin = parse_one("coin: h=1,t=1", InputFormat::counts);
  CHECK(coin.id == "coin");
  CHECK(coin.dist.mass(0) == 0.5);
  CHECK(coin.dist.label(0) == "h");

  const InputRecord skewed = parse_one("b=1, a=3", InputFormat::counts);
  CHECK(skewed.dist.label(0) == "a");
  CHECK(skewed.dist.mass(0) == 0.75);

  CHECK(code_of([] { parse_record("x: h-1", InputFormat::counts, 2, 1); }) == errc::parse_error);
  CHECK(code_of([] { parse_record("x: h=1,h=2", InputFormat::counts, 3, 1); }) ==
        errc::parse_error);
  CHECK(code_of([] { parse_record("x: h=1.5", InputFormat::counts, 4, 1); }) ==
        errc::parse_error);
  CHECK(code_of([] { parse_record("x: a=0,b=0", InputFormat::counts, 5, 1); }) ==
        errc::all_zero_counts);
}

TEST_CASE("measure computes the full report") {
  const MeasureReport coin = measure(parse_one("coin: h=1,t=1", InputFormat::counts));
  CHECK(coin.alphabet_size == 2);
  CHECK(coin.lin == doctest::Approx(oracles::kLinUniform2).epsilon(1e-14));
  REQUIRE(coin.normalized_shannon.has_value());
  CHECK(*coin.normalized_shannon == 1.0);

  const MeasureReport die =
      measure(parse_one("die: 1=1,2=1,3=1,4=1,5=1,6=1", InputFormat::counts));
  CHECK(die.alphabet_size == 6);
  CHECK(die.lin == doctest::Approx(oracles::kLinUniform6).epsilon(1e-14));
  CHECK(*die.normalized_shannon == 1.0);
  // equal masses tie on the first label
  CHECK(die.max_symbol == "1");

  const MeasureReport unit = measure(parse_one("[1.0]", InputFormat::probs));
  CHECK(unit.lin == 0.0);
  CHECK(unit.shannon == 0.0);
  CHECK(unit.logical == 0.0);
  CHECK_FALSE(unit.normalized_shannon.has_value());
  CHECK(unit.max_symbol == "0");

  const MeasureReport skew = measure(parse_one("s: 0.25 0.75", InputFormat::probs));
  CHECK(skew.max_symbol == "1");
}

TEST_CASE("measure output formats") {
  const MeasureReport unit = measure(parse_one("[1.0]", InputFormat::probs));
  CHECK(measure_tsv_line(unit) == "1\t1\t0\tundefined\t0\t0\t0");
  CHECK(measure_json_line(unit) ==
        "{\"input_id\":\"1\",\"alphabet_size\":1,\"shannon\":0,"
        "\"normalized_shannon\":\"undefined\",\"lin\":0,\"logical\":0,\"max_symbol\":\"0\"}");
  CHECK(measure_tsv_header() ==
        "input_id\talphabet_size\tshannon\tnormalized_shannon\tlin\tlogical\tmax_symbol");

  const MeasureReport coin = measure(parse_one("coin: h=1,t=1", InputFormat::counts));
  const std::string line = measure_tsv_line(coin);
  CHECK(line.find("coin\t2\t1\t1\t0.311278124459133\t0.5\th") == 0);
}

TEST_CASE("measure reports stay within their ranges on random inputs") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Distribution p = random_distribution(seed % 20 + 1, seed);
    const MeasureReport r = measure({"r", p});
    CHECK(r.lin >= 0.0);
    CHECK(r.lin <= 1.0);
    CHECK(r.logical >= 0.0);
    CHECK(r.logical < 1.0);
    CHECK(r.shannon >= 0.0);
    CHECK(r.shannon <= std::log2(static_cast<double>(p.size())) + 1e-12);
    if (r.normalized_shannon) {
      CHECK(*r.normalized_shannon >= 0.0);
      CHECK(*r.normalized_shannon <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("measure reports round-trip through the probs format") {
  const Distribution p = random_distribution(12, 321);
  const MeasureReport direct = measure({"p", p});
  std::string line = "p:";
  for (double m : p.masses()) line += ' ' + format_real(m, 15);
  const MeasureReport reparsed = measure(parse_one(line, InputFormat::probs));
  CHECK(std::abs(direct.shannon - reparsed.shannon) <= 1e-9);
  CHECK(std::abs(direct.lin - reparsed.lin) <= 1e-9);
  CHECK(std::abs(direct.logical - reparsed.logical) <= 1e-9);
  CHECK(std::abs(*direct.normalized_shannon - *reparsed.normalized_shannon) <= 1e-9);
}

TEST_CASE("curve_table uniform") {
  const CurveTable table = curve_table({CurveKind::uniform, 100, 0});
  REQUIRE(table.columns == std::vector<std::string>{"n", "one_over_n", "lin_entropy"});
  REQUIRE(table.rows.size() == 100);
  CHECK(table.rows[0] == std::vector<double>{1.0, 1.0, 0.0});
  CHECK(table.rows[1][1] == 0.5);
  CHECK(table.rows[1][2] == doctest::Approx(oracles::kLinUniform2).epsilon(1e-15));
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    CHECK(table.rows[i][2] > table.rows[i - 1][2]);
  }
  CHECK(code_of([] { curve_table({CurveKind::uniform, 0, 0}); }) == errc::invalid_spec);
}

TEST_CASE("curve_table bernoulli") {
  const CurveTable table = curve_table({CurveKind::bernoulli, 0, 101});
  REQUIRE(table.rows.size() == 101);
  CHECK(table.rows.front()[0] == 0.0);
  CHECK(table.rows.front()[1] == 0.0);  // both endpoints are exact zeros
  CHECK(table.rows.back()[0] == 1.0);
  CHECK(table.rows.back()[1] == 0.0);
  CHECK(table.rows[50][0] == 0.5);
  CHECK(std::abs(table.rows[50][1] - lin_entropy_uniform(2)) <= 1e-12);
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& mirrored = table.rows[table.rows.size() - 1 - i];
    CHECK(std::abs(table.rows[i][1] - mirrored[1]) <= 1e-12);
    CHECK(table.rows[i][1] <= table.rows[50][1]);
  }
  CHECK(code_of([] { curve_table({CurveKind::bernoulli, 0, 1}); }) == errc::invalid_spec);
}

TEST_CASE("cli measure end to end") {
  const CliResult tsv = run_cli({"measure", "--format", "counts"}, "coin: h=1,t=1\n# note\n\n");
  CHECK(tsv.status == 0);
  const auto rows = lines_of(tsv.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == measure_tsv_header());
  CHECK(rows[1].find("coin\t2\t1\t1\t0.311278124459133") == 0);

  const CliResult json = run_cli({"measure", "--json"}, "0.5 0.5\n");
  CHECK(json.status == 0);
  CHECK(lines_of(json.out).size() == 1);
  CHECK(json.out.find("\"normalized_shannon\":1") != std::string::npos);

  const CliResult bad = run_cli({"measure"}, "0.6 0.5\n");
  CHECK(bad.status == 1);
  CHECK(bad.err.find("line 1") != std::string::npos);

  const CliResult missing = run_cli({"measure", "/nonexistent/input.txt"});
  CHECK(missing.status == 1);
}

TEST_CASE("cli curve end to end") {
  const CliResult uniform = run_cli({"curve", "uniform", "--max-n", "3"});
  CHECK(uniform.status == 0);
  const auto rows = lines_of(uniform.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "n\tone_over_n\tlin_entropy");
  CHECK(rows[1] == "1\t1\t0");
  CHECK(rows[2].find("2\t0.5\t0.311278124459133") == 0);

  const CliResult json = run_cli({"curve", "bernoulli", "--steps", "3", "--json"});
  CHECK(json.status == 0);
  CHECK(lines_of(json.out).size() == 3);
  CHECK(json.out.find("{\"alpha\":0,\"lin_entropy\":0}") != std::string::npos);
}

TEST_CASE("cli verify end to end") {
  const CliResult ok =
      run_cli({"verify", "--trials", "60", "--max-alphabet", "12", "--seed", "3"});
  CHECK(ok.status == 0);
  const auto rows = lines_of(ok.out);
  REQUIRE(rows.size() == 9);
  for (const auto& row : rows) CHECK(row.find("[PASS]") == 0);

  const CliResult failing = run_cli({"verify", "--trials", "60", "--max-alphabet", "12",
                                     "--functional", "shannon-normalized"});
  CHECK(failing.status == 1);
  bool monotonicity_failed = false;
  for (const auto& row : lines_of(failing.out)) {
    if (row.find("VIII") != std::string::npos) {
      monotonicity_failed = row.find("[FAIL]") == 0;
    }
  }
  CHECK(monotonicity_failed);

  // alias spelling resolves to the same functional
  const CliResult alias = run_cli({"verify", "--trials", "40", "--max-alphabet", "8",
                                   "--functional", "normalized-shannon"});
  CHECK(alias.status == 1);
}

TEST_CASE("cli exit codes are exactly 0, 1, and 2") {
  CHECK(run_cli({"--help"}).status == 0);
  CHECK(run_cli({"verify", "--trials", "0"}).status == 2);
  CHECK(run_cli({"verify", "--trials", "-3"}).status == 2);
  CHECK(run_cli({"no-such-command"}).status == 2);
  CHECK(run_cli({"curve", "uniform"}).status == 2);          // missing required --max-n
  CHECK(run_cli({"curve", "bernoulli", "--steps", "1"}).status == 2);
  CHECK(run_cli({"verify", "--functional", "unknown"}).status == 2);
  CHECK(run_cli({}).status == 2);                            // a subcommand is required
}
