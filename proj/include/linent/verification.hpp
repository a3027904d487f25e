#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linent/distribution.hpp"

namespace linent {

/// The eight entropy-functional properties plus the upper-bound claim
/// checked as a ninth row of the suite.
enum class PropertyId {
  nonnegativity,   // I
  continuity,      // II
  symmetry,        // III
  concavity,       // IV
  expectation,     // V
  minimality,      // VI
  maximality,      // VII
  monotonicity,    // VIII
  one_bounded,     // H <= 1
};

/// Roman numeral ("I".."VIII") or "B" for the bound row.
std::string property_label(PropertyId id);

/// Lowercase name ("nonnegativity", ..., "one-bounded").
std::string property_name(PropertyId id);

/// Outcome of one property check. worst_violation is 0 for a clean pass and
/// grows with the severity of the worst observed breach; passed is exactly
/// worst_violation <= tolerance. witness serializes the offending input(s)
/// and is present iff the check failed.
struct PropertyReport {
  PropertyId id;
  bool passed = false;
  std::int64_t trials = 0;
  double worst_violation = 0.0;
  double tolerance = 0.0;
  std::optional<std::string> witness;
};

struct SuiteConfig {
  std::int64_t trials = 1000;
  std::int64_t max_alphabet = 64;
  std::uint64_t seed = 1;
  std::int64_t uniform_sweep_max = 10000;       // top of the U_N sweep in VIII and the bound row
  std::map<PropertyId, double> tolerances;      // per-property overrides of the defaults
};

/// The functional under test: the map itself, the per-symbol surprisal it
/// claims to be the expectation of, and a closed form on uniform
/// distributions for the long U_N sweeps (cross-checked against the map).
struct EntropyFunctional {
  std::string name;
  std::function<double(const Distribution&)> entropy;
  std::function<double(double)> surprisal;
  std::function<double(std::int64_t)> uniform_entropy;
  std::int64_t min_alphabet = 1;  // smallest alphabet size the map is defined on
};

const EntropyFunctional& lin_functional();
const EntropyFunctional& normalized_shannon_functional();
const EntropyFunctional& logical_entropy_functional();

/// Lookup by CLI name: "lin", "shannon-normalized" (alias
/// "normalized-shannon"), "logical". Throws errc::invalid_spec otherwise.
const EntropyFunctional& functional_by_name(const std::string& name);

double default_tolerance(PropertyId id);

/// Runs one property check at the configured scale. Deterministic: the
/// generator is seeded from (cfg.seed, id), so checks are independent of
/// execution order. Throws errc::unknown_property for an id outside the enum.
PropertyReport check_property(PropertyId id, const SuiteConfig& cfg, const EntropyFunctional& f);
PropertyReport check_property(PropertyId id, const SuiteConfig& cfg);

/// All nine reports, in enum order. The overload without a functional checks
/// Lin entropy.
std::vector<PropertyReport> run_suite(const SuiteConfig& cfg, const EntropyFunctional& f);
std::vector<PropertyReport> run_suite(const SuiteConfig& cfg);

/// One structured text record per report; byte-stable for identical inputs.
std::string serialize_report(const PropertyReport& report);

/// "{"labels":[...],"masses":[...]}" with full-precision masses.
std::string serialize_distribution(const Distribution& p);

}  // namespace linent
