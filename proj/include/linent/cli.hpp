#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "linent/distribution.hpp"

namespace linent::cli {

/// All measures for one input record. normalized_shannon is empty for N = 1,
/// where H / log2 N is 0/0; it prints as the token "undefined".
struct MeasureReport {
  std::string input_id;
  std::size_t alphabet_size = 0;
  double shannon = 0.0;        // bits
  std::optional<double> normalized_shannon;
  double lin = 0.0;            // bits
  double logical = 0.0;
  std::string max_symbol;      // label carrying the largest mass (first on ties)
};

enum class InputFormat { probs, counts };

struct InputRecord {
  std::string id;
  Distribution dist;
};

/// Parses one input line; returns nothing for blank lines and '#' comments.
/// Lines may carry an "id:" prefix; records without one are named by
/// record_index. Throws errc::parse_error (with the line number) on malformed
/// input and re-throws validation errors with the record context attached.
std::optional<InputRecord> parse_record(const std::string& line, InputFormat format,
                                        std::size_t line_number, std::size_t record_index);

MeasureReport measure(const InputRecord& record);

enum class CurveKind { uniform, bernoulli };

struct CurveSpec {
  CurveKind kind = CurveKind::uniform;
  std::int64_t max_n = 0;  // uniform: rows N = 1..max_n
  std::int64_t steps = 0;  // bernoulli: grid points over [0, 1], endpoints included
};

struct CurveTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// uniform: (n, one_over_n, lin_entropy); bernoulli: (alpha, lin_entropy).
CurveTable curve_table(const CurveSpec& spec);

std::string measure_tsv_header();
std::string measure_tsv_line(const MeasureReport& r);
std::string measure_json_line(const MeasureReport& r);

/// Entry point behind the linent binary; args excludes the program name.
/// Returns the process exit status: 0 success, 1 failure, 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace linent::cli
