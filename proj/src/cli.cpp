#include "linent/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <limits>
#include <string_view>

#include "CLI11.hpp"
#include "linent/divergences.hpp"
#include "linent/format.hpp"
#include "linent/lin.hpp"
#include "linent/verification.hpp"

namespace linent::cli {
namespace {

constexpr int kSignificantDigits = 15;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view token, std::size_t line_number) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) {
    fail(errc::parse_error, "line " + std::to_string(line_number) + ": invalid probability \"" +
                                std::string(token) + "\"");
  }
  return value;
}

std::uint64_t parse_count(std::string_view token, std::size_t line_number) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) {
    fail(errc::parse_error, "line " + std::to_string(line_number) + ": invalid count \"" +
                                std::string(token) + "\"");
  }
  return value;
}

Distribution parse_probs(std::string_view body, std::size_t line_number) {
  body = trim(body);
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']') {
    body = trim(body.substr(1, body.size() - 2));
  }
  std::vector<double> masses;
  std::size_t pos = 0;
  while (pos < body.size()) {
    while (pos < body.size() &&
           (body[pos] == ',' || std::isspace(static_cast<unsigned char>(body[pos])))) {
      ++pos;
    }
    if (pos >= body.size()) break;
    std::size_t end = pos;
    while (end < body.size() && body[end] != ',' &&
           !std::isspace(static_cast<unsigned char>(body[end]))) {
      ++end;
    }
    masses.push_back(parse_double(body.substr(pos, end - pos), line_number));
    pos = end;
  }
  if (masses.empty()) {
    fail(errc::parse_error, "line " + std::to_string(line_number) + ": no probabilities given");
  }
  std::vector<std::string> labels;
  labels.reserve(masses.size());
  for (std::size_t i = 0; i < masses.size(); ++i) labels.push_back(std::to_string(i));
  return make_distribution(std::move(labels), std::move(masses));
}

Distribution parse_counts(std::string_view body, std::size_t line_number) {
  std::map<std::string, std::uint64_t> counts;
  std::size_t pos = 0;
  bool any = false;
  while (pos <= body.size()) {
    const std::size_t comma = std::min(body.find(',', pos), body.size());
    const std::string_view token = trim(body.substr(pos, comma - pos));
    pos = comma + 1;
    if (token.empty()) {
      if (comma == body.size() && !any) break;
      fail(errc::parse_error, "line " + std::to_string(line_number) + ": empty label=count pair");
    }
    any = true;
    const std::size_t eq = token.find('=');
    if (eq == std::string_view::npos) {
      fail(errc::parse_error, "line " + std::to_string(line_number) + ": expected label=count in \"" +
                                  std::string(token) + "\"");
    }
    const std::string label(trim(token.substr(0, eq)));
    if (label.empty()) {
      fail(errc::parse_error, "line " + std::to_string(line_number) + ": empty label");
    }
    const std::uint64_t count = parse_count(trim(token.substr(eq + 1)), line_number);
    if (!counts.emplace(label, count).second) {
      fail(errc::parse_error,
           "line " + std::to_string(line_number) + ": duplicate label \"" + label + "\"");
    }
    if (comma == body.size()) break;
  }
  if (counts.empty()) {
    fail(errc::parse_error, "line " + std::to_string(line_number) + ": no counts given");
  }
  return empirical_distribution(counts);
}

std::string json_string(const std::string& s) { return '"' + json_escape(s) + '"'; }

}  // namespace

std::optional<InputRecord> parse_record(const std::string& line, InputFormat format,
                                        std::size_t line_number, std::size_t record_index) {
  const std::string_view trimmed = trim(line);
  if (trimmed.empty() || trimmed.front() == '#') return std::nullopt;

  std::string id;
  std::string_view body = trimmed;
  const std::size_t colon = trimmed.find(':');
  if (colon != std::string_view::npos) {
    id = std::string(trim(trimmed.substr(0, colon)));
    if (id.empty()) {
      fail(errc::parse_error, "line " + std::to_string(line_number) + ": empty record id");
    }
    body = trim(trimmed.substr(colon + 1));
  } else {
    id = std::to_string(record_index);
  }

  try {
    Distribution dist = format == InputFormat::probs ? parse_probs(body, line_number)
                                                     : parse_counts(body, line_number);
    return InputRecord{std::move(id), std::move(dist)};
  } catch (const Error& e) {
    if (e.code() == errc::parse_error) throw;
    fail(e.code(),
         "line " + std::to_string(line_number) + " (record \"" + id + "\"): " + e.what());
  }
}

MeasureReport measure(const InputRecord& record) {
  const Distribution& d = record.dist;
  MeasureReport r;
  r.input_id = record.id;
  r.alphabet_size = d.size();
  r.shannon = shannon_entropy(d);
  if (d.size() >= 2) r.normalized_shannon = normalized_shannon_entropy(d);
  r.lin = lin_entropy(d);
  r.logical = logical_entropy(d);
  const auto largest = std::max_element(d.masses().begin(), d.masses().end());
  r.max_symbol = d.label(static_cast<std::size_t>(largest - d.masses().begin()));
  return r;
}

CurveTable curve_table(const CurveSpec& spec) {
  CurveTable table;
  if (spec.kind == CurveKind::uniform) {
    if (spec.max_n < 1) fail(errc::invalid_spec, "curve uniform requires max_n >= 1");
    table.columns = {"n", "one_over_n", "lin_entropy"};
    for (std::int64_t n = 1; n <= spec.max_n; ++n) {
      const double nd = static_cast<double>(n);
      table.rows.push_back({nd, 1.0 / nd, lin_entropy_uniform(n)});
    }
  } else {
    if (spec.steps < 2) fail(errc::invalid_spec, "curve bernoulli requires steps >= 2");
    table.columns = {"alpha", "lin_entropy"};
    for (std::int64_t k = 0; k < spec.steps; ++k) {
      const double alpha = static_cast<double>(k) / static_cast<double>(spec.steps - 1);
      const Distribution ber({"0", "1"}, {alpha, 1.0 - alpha});
      table.rows.push_back({alpha, lin_entropy(ber)});
    }
  }
  return table;
}

std::string measure_tsv_header() {
  return "input_id\talphabet_size\tshannon\tnormalized_shannon\tlin\tlogical\tmax_symbol";
}

std::string measure_tsv_line(const MeasureReport& r) {
  std::string line = r.input_id;
  line += '\t' + std::to_string(r.alphabet_size);
  line += '\t' + format_real(r.shannon, kSignificantDigits);
  line += '\t';
  line += r.normalized_shannon ? format_real(*r.normalized_shannon, kSignificantDigits)
                               : std::string("undefined");
  line += '\t' + format_real(r.lin, kSignificantDigits);
  line += '\t' + format_real(r.logical, kSignificantDigits);
  line += '\t' + r.max_symbol;
  return line;
}

std::string measure_json_line(const MeasureReport& r) {
  std::string line = "{\"input_id\":" + json_string(r.input_id);
  line += ",\"alphabet_size\":" + std::to_string(r.alphabet_size);
  line += ",\"shannon\":" + format_real(r.shannon, kSignificantDigits);
  line += ",\"normalized_shannon\":";
  line += r.normalized_shannon ? format_real(*r.normalized_shannon, kSignificantDigits)
                               : std::string("\"undefined\"");
  line += ",\"lin\":" + format_real(r.lin, kSignificantDigits);
  line += ",\"logical\":" + format_real(r.logical, kSignificantDigits);
  line += ",\"max_symbol\":" + json_string(r.max_symbol) + "}";
  return line;
}

namespace {

std::string curve_tsv_line(const CurveTable& table, const std::vector<double>& row) {
  std::string line;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) line += '\t';
    if (table.columns[i] == "n") {
      line += std::to_string(static_cast<std::int64_t>(row[i]));
    } else {
      line += format_real(row[i], kSignificantDigits);
    }
  }
  return line;
}

std::string curve_json_line(const CurveTable& table, const std::vector<double>& row) {
  std::string line = "{";
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) line += ',';
    line += json_string(table.columns[i]) + ":";
    if (table.columns[i] == "n") {
      line += std::to_string(static_cast<std::int64_t>(row[i]));
    } else {
      line += format_real(row[i], kSignificantDigits);
    }
  }
  return line + "}";
}

int run_measure(InputFormat format, bool as_json, const std::string& file, std::istream& in,
                std::ostream& out, std::ostream& err) {
  std::ifstream file_stream;
  std::istream* source = &in;
  if (!file.empty()) {
    file_stream.open(file);
    if (!file_stream) {
      err << "error: cannot open \"" << file << "\"\n";
      return 1;
    }
    source = &file_stream;
  }
  if (!as_json) out << measure_tsv_header() << '\n';
  std::string line;
  std::size_t line_number = 0;
  std::size_t records = 0;
  while (std::getline(*source, line)) {
    ++line_number;
    const auto record = parse_record(line, format, line_number, records + 1);
    if (!record) continue;
    ++records;
    const MeasureReport report = measure(*record);
    out << (as_json ? measure_json_line(report) : measure_tsv_line(report)) << '\n';
  }
  return 0;
}

int run_curve(const CurveSpec& spec, bool as_json, std::ostream& out) {
  const CurveTable table = curve_table(spec);
  if (!as_json) {
    std::string header;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      if (i > 0) header += '\t';
      header += table.columns[i];
    }
    out << header << '\n';
  }
  for (const auto& row : table.rows) {
    out << (as_json ? curve_json_line(table, row) : curve_tsv_line(table, row)) << '\n';
  }
  return 0;
}

int run_verify(const SuiteConfig& cfg, const std::string& functional, std::ostream& out) {
  const auto reports = run_suite(cfg, functional_by_name(functional));
  bool all_passed = true;
  for (const auto& report : reports) {
    out << serialize_report(report) << '\n';
    all_passed = all_passed && report.passed;
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Entropy measures bounded by one for discrete distributions"};
  app.require_subcommand(1);

  auto* measure_cmd =
      app.add_subcommand("measure", "Compute entropy measures for input records");
  std::string format_name = "probs";
  measure_cmd->add_option("--format", format_name, "Input format: probs or counts")
      ->check(CLI::IsMember({"probs", "counts"}));
  bool measure_json = false;
  measure_cmd->add_flag("--json", measure_json, "Emit one JSON object per record");
  std::string file;
  measure_cmd->add_option("FILE", file, "Input file (defaults to standard input)");

  auto* curve_cmd = app.add_subcommand("curve", "Emit Lin entropy curve data");
  curve_cmd->require_subcommand(1);
  auto* curve_uniform = curve_cmd->add_subcommand("uniform", "H*(U_N) for N = 1..max-n");
  std::int64_t max_n = 0;
  curve_uniform->add_option("--max-n", max_n, "Largest alphabet size")
      ->required()
      ->check(CLI::PositiveNumber);
  bool uniform_json = false;
  curve_uniform->add_flag("--json", uniform_json, "Emit one JSON object per row");
  auto* curve_bernoulli =
      curve_cmd->add_subcommand("bernoulli", "H*[Ber(alpha)] on a uniform grid over [0, 1]");
  std::int64_t steps = 0;
  curve_bernoulli->add_option("--steps", steps, "Grid size, endpoints included")
      ->required()
      ->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max()));
  bool bernoulli_json = false;
  curve_bernoulli->add_flag("--json", bernoulli_json, "Emit one JSON object per row");

  auto* verify_cmd =
      app.add_subcommand("verify", "Run the entropy-functional property suite");
  SuiteConfig cfg;
  verify_cmd->add_option("--trials", cfg.trials, "Sampled cases per property")
      ->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
  verify_cmd->add_option("--max-alphabet", cfg.max_alphabet, "Largest sampled alphabet size")
      ->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max()));
  verify_cmd->add_option("--seed", cfg.seed, "Generator seed");
  std::string functional = "lin";
  verify_cmd->add_option("--functional", functional, "Functional under test")
      ->check(CLI::IsMember({"lin", "shannon-normalized", "normalized-shannon", "logical"}));

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("linent");
  for (const auto& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (measure_cmd->parsed()) {
      const InputFormat format =
          format_name == "counts" ? InputFormat::counts : InputFormat::probs;
      return run_measure(format, measure_json, file, in, out, err);
    }
    if (curve_uniform->parsed()) {
      return run_curve({CurveKind::uniform, max_n, 0}, uniform_json, out);
    }
    if (curve_bernoulli->parsed()) {
      return run_curve({CurveKind::bernoulli, 0, steps}, bernoulli_json, out);
    }
    return run_verify(cfg, functional, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace linent::cli
