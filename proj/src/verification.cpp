#include "linent/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "linent/divergences.hpp"
#include "linent/format.hpp"
#include "linent/lin.hpp"
#include "linent/stable_sum.hpp"

namespace linent {
namespace {

// A failed strict inequality earns at least this much violation, which
// clears every identity tolerance by three orders of magnitude.
constexpr double kStrictMargin = 1e-9;

// Grid second differences of a linear surprisal land at rounding scale with
// either sign; anything below this floor does not count as strictly convex.
constexpr double kConvexityFloor = 1e-12;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Sampler {
  std::mt19937_64 engine;

  explicit Sampler(std::uint64_t seed) : engine(seed) {}

  double uniform01() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

  std::int64_t size_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Distribution distribution(std::int64_t n) {
    return random_distribution(static_cast<std::size_t>(n), engine);
  }
};

/// Accumulates the worst violation seen, keeping a description of the case
/// that produced it.
class Tracker {
 public:
  template <typename Describe>
  void observe(double violation, Describe&& describe) {
    ++trials_;
    if (violation > worst_) {
      worst_ = violation;
      witness_ = describe();
    }
  }

  void count_only() { ++trials_; }

  PropertyReport report(PropertyId id, double tolerance) && {
    PropertyReport r;
    r.id = id;
    r.trials = trials_;
    r.worst_violation = worst_;
    r.tolerance = tolerance;
    r.passed = worst_ <= tolerance;
    if (!r.passed) r.witness = std::move(witness_);
    return r;
  }

 private:
  std::int64_t trials_ = 0;
  double worst_ = 0.0;
  std::optional<std::string> witness_;
};

double strict_deficit(double gap) { return gap > 0.0 ? 0.0 : kStrictMargin - gap; }

Distribution degenerate_distribution(std::size_t n, std::size_t position) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<double> masses(n, 0.0);
  masses[position] = 1.0;
  return Distribution(std::move(labels), std::move(masses));
}

double l1_distance(const Distribution& a, const Distribution& b) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::abs(a.mass(i) - b.mass(i));
  return total;
}

double expectation_of_surprisal(const Distribution& p, const EntropyFunctional& f) {
  StableSum sum;
  for (double m : p.masses()) {
    if (m > 0.0) sum.add(m * f.surprisal(m));
  }
  return sum.value();
}

std::int64_t pair_min_alphabet(const EntropyFunctional& f) { return std::max<std::int64_t>(2, f.min_alphabet); }

Tracker check_nonnegativity(const SuiteConfig& cfg, const EntropyFunctional& f, Sampler& rng) {
  Tracker t;
  for (std::int64_t i = 0; i < cfg.trials; ++i) {
    const Distribution p = rng.distribution(rng.size_in(f.min_alphabet, cfg.max_alphabet));
    const double value = f.entropy(p);
    t.observe(std::max(0.0, -value), [&] { return serialize_distribution(p); });
  }
  return t;
}

Tracker check_continuity(const SuiteConfig& cfg, const EntropyFunctional& f, Sampler& rng) {
  Tracker t;
  for (std::int64_t i = 0; i < cfg.trials; ++i) {
    const Distribution p = rng.distribution(rng.size_in(pair_min_alphabet(f), cfg.max_alphabet));
    // Move at most 5e-4 of mass between two symbols: stays on the simplex
    // and keeps the L1 distance within 1e-3.
    const std::size_t from = static_cast<std::size_t>(rng.size_in(0, p.size() - 1));
    std::size_t to = static_cast<std::size_t>(rng.size_in(0, p.size() - 2));
    if (to >= from) ++to;
    const double amount = std::min(p.mass(from), 5e-4) * rng.uniform01();
    std::vector<double> masses(p.masses().begin(), p.masses().end());
    masses[from] -= amount;
    masses[to] += amount;
    const Distribution q({p.labels().begin(), p.labels().end()}, std::move(masses));
    t.observe(std::abs(f.entropy(p) - f.entropy(q)),
              [&] { return serialize_distribution(p) + " vs " + serialize_distribution(q); });
  }
  return t;
}

Tracker check_symmetry(const SuiteConfig& cfg, const EntropyFunctional& f, Sampler& rng) {
  Tracker t;
  for (std::int64_t i = 0; i < cfg.trials; ++i) {
    const Distribution p = rng.distribution(rng.size_in(f.min_alphabet, cfg.max_alphabet));
    std::vector<std::size_t> order(p.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    for (std::size_t k = order.size(); k > 1; --k) {
      std::swap(order[k - 1], order[static_cast<std::size_t>(rng.size_in(0, k - 1))]);
    }
    std::vector<std::string> labels(p.size());
    std::vector<double> masses(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
      labels[k] = p.label(order[k]);
      masses[k] = p.mass(order[k]);
    }
    const Distribution permuted(std::move(labels), std::move(masses));
    t.observe(std::abs(f.entropy(p) - f.entropy(permuted)),
              [&] { return serialize_distribution(p); });
  }
  return t;
}

Tracker check_concavity(const SuiteConfig& cfg, const EntropyFunctional& f, Sampler& rng) {
  Tracker t;
  for (std::int64_t i = 0; i < cfg.trials; ++i) {
    const std::int64_t n = rng.size_in(pair_min_alphabet(f), cfg.max_alphabet);
    const Distribution p = rng.distribution(n);
    const Distribution q = rng.distribution(n);
    const bool strict_eligible = l1_distance(p, q) >= 1e-3;
    for (int step = 1; step <= 9; ++step) {
      const double lambda = static_cast<double>(step) / 10.0;
      std::vector<double> masses(p.size());
      for (std::size_t k = 0; k < p.size(); ++k) {
        masses[k] = lambda * p.mass(k) + (1.0 - lambda) * q.mass(k);
      }
      const Distribution mixture({p.labels().begin(), p.labels().end()}, std::move(masses));
      const double gap =
          f.entropy(mixture) - (lambda * f.entropy(p) + (1.0 - lambda) * f.entropy(q));
      double violation = std::max(0.0, -gap);
      if (strict_eligible) violation = std::max(violation, std::max(0.0, kStrictMargin - gap));
      t.observe(violation, [&] {
        return "lambda=" + format_real(lambda, 3) + " " + serialize_distribution(p) + " " +
               serialize_distribution(q);
      });
    }
  }
  return t;
}

Tracker check_expectation(const SuiteConfig& cfg, const EntropyFunctional& f, Sampler& rng) {
  Tracker t;
  for (std::int64_t i = 0; i < cfg.trials; ++i) {
    const Distribution p = rng.distribution(rng.size_in(f.min_alphabet, cfg.max_alphabet));
    t.observe(std::abs(f.entropy(p) - expectation_of_surprisal(p, f)),
              [&] { return serialize_distribution(p); });
  }
  // Surprisal shape on a fixed grid over [0.01, 0.99].
  std::vector<double> alphas;
  std::vector<double> values;
  for (int k = 0; k <= 980; ++k) {
    alphas.push_back(static_cast<double>(10 + k) / 1000.0);
    values.push_back(f.surprisal(alphas.back()));
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    t.observe(std::max(0.0, -values[k]),
              [&] { return "surprisal negative at alpha=" + format_real(alphas[k], 6); });
    if (k + 1 < values.size()) {
      t.observe(strict_deficit(values[k] - values[k + 1]), [&] {
        return "surprisal not decreasing at alpha=" + format_real(alphas[k], 6);
      });
    }
    if (k > 0 && k + 1 < values.size()) {
      const double second = values[k - 1] - 2.0 * values[k] + values[k + 1];
      t.observe(second > kConvexityFloor ? 0.0 : kStrictMargin - second, [&] {
        return "surprisal second difference " + format_real(second, 6) +
               " at alpha=" + format_real(alphas[k], 6) + " is not strictly positive";
      });
    }
  }
  return t;
}

Tracker check_minimality(const SuiteConfig& cfg, const EntropyFunctional& f, Sampler& rng) {
  Tracker t;
  const std::size_t top = static_cast<std::size_t>(std::min<std::int64_t>(cfg.max_alphabet, 64));
  for (std::size_t n = static_cast<std::size_t>(std::max<std::int64_t>(1, f.min_alphabet)); n <= top; ++n) {
    for (std::size_t position : {std::size_t{0}, n / 2, n - 1}) {
      const Distribution p = degenerate_distribution(n, position);
      t.observe(std::abs(f.entropy(p)), [&] { return serialize_distribution(p); });
      if (n == 1) break;
    }
  }
  // Only-if direction: anything visibly away from degenerate must score
  // above the identity tolerance.
  for (std::int64_t n = pair_min_alphabet(f); n <= cfg.max_alphabet; ++n) {
    const Distribution u = uniform_distribution(static_cast<std::size_t>(n));
    const double value = f.entropy(u);
    t.observe(value > 1e-12 ? 0.0 : kStrictMargin - value,
              [&] { return serialize_distribution(u); });
  }
  for (std::int64_t i = 0; i < cfg.trials; ++i) {
    const Distribution p = rng.distribution(rng.size_in(pair_min_alphabet(f), cfg.max_alphabet));
    const double top_mass = *std::max_element(p.masses().begin(), p.masses().end());
    if (top_mass > 1.0 - 1e-6) {
      t.count_only();
      continue;
    }
    const double value = f.entropy(p);
    t.observe(value > 1e-12 ? 0.0 : kStrictMargin - value,
              [&] { return serialize_distribution(p); });
  }
  return t;
}

Tracker check_maximality(const SuiteConfig& cfg, const EntropyFunctional& f, Sampler& rng) {
  Tracker t;
  const std::int64_t top = std::min<std::int64_t>(cfg.max_alphabet, 16);
  for (std::int64_t n = pair_min_alphabet(f); n <= top; ++n) {
    const Distribution u = uniform_distribution(static_cast<std::size_t>(n));
    const double at_uniform = f.entropy(u);
    for (std::int64_t c = 0; c < cfg.trials; ++c) {
      const Distribution q = rng.distribution(n);
      double linf = 0.0;
      for (std::size_t k = 0; k < q.size(); ++k) {
        linf = std::max(linf, std::abs(q.mass(k) - u.mass(k)));
      }
      if (linf < 1e-6) {
        t.count_only();  // too close to uniform to witness strictness
        continue;
      }
      t.observe(strict_deficit(at_uniform - f.entropy(q)), [&] {
        return serialize_distribution(u) + " not above " + serialize_distribution(q);
      });
    }
  }
  return t;
}

Tracker check_monotonicity(const SuiteConfig& cfg, const EntropyFunctional& f, Sampler&) {
  Tracker t;
  const std::int64_t start = std::max<std::int64_t>(1, f.min_alphabet);
  double previous = f.uniform_entropy(start);
  for (std::int64_t n = start; n <= cfg.uniform_sweep_max; ++n) {
    const double current = f.uniform_entropy(n + 1);
    t.observe(strict_deficit(current - previous), [&] {
      return "H(U_" + std::to_string(n + 1) + ") - H(U_" + std::to_string(n) +
             ") = " + format_real(current - previous, 9);
    });
    previous = current;
  }
  // The closed form must agree with the map itself.
  for (std::int64_t n : {start, start + 1, std::int64_t{17}, std::int64_t{64}}) {
    if (n < start || n > std::min(cfg.uniform_sweep_max, cfg.max_alphabet)) continue;
    const Distribution u = uniform_distribution(static_cast<std::size_t>(n));
    const double diff = std::abs(f.entropy(u) - f.uniform_entropy(n));
    t.observe(diff > 1e-12 ? diff : 0.0,
              [&] { return "closed form disagrees with map on " + serialize_distribution(u); });
  }
  return t;
}

Tracker check_one_bounded(const SuiteConfig& cfg, const EntropyFunctional& f, Sampler& rng) {
  Tracker t;
  for (std::int64_t i = 0; i < cfg.trials; ++i) {
    const Distribution p = rng.distribution(rng.size_in(f.min_alphabet, cfg.max_alphabet));
    const double value = f.entropy(p);
    t.observe(std::max({0.0, value - 1.0, -value}), [&] { return serialize_distribution(p); });
  }
  const std::int64_t start = std::max<std::int64_t>(1, f.min_alphabet);
  for (std::int64_t n = start; n <= cfg.uniform_sweep_max; ++n) {
    const double value = f.uniform_entropy(n);
    t.observe(std::max({0.0, value - 1.0, -value}),
              [&] { return "H(U_" + std::to_string(n) + ") = " + format_real(value, 17); });
  }
  return t;
}

}  // namespace

std::string property_label(PropertyId id) {
  switch (id) {
    case PropertyId::nonnegativity: return "I";
    case PropertyId::continuity: return "II";
    case PropertyId::symmetry: return "III";
    case PropertyId::concavity: return "IV";
    case PropertyId::expectation: return "V";
    case PropertyId::minimality: return "VI";
    case PropertyId::maximality: return "VII";
    case PropertyId::monotonicity: return "VIII";
    case PropertyId::one_bounded: return "B";
  }
  fail(errc::unknown_property, "invalid property id");
}

std::string property_name(PropertyId id) {
  switch (id) {
    case PropertyId::nonnegativity: return "nonnegativity";
    case PropertyId::continuity: return "continuity";
    case PropertyId::symmetry: return "symmetry";
    case PropertyId::concavity: return "concavity";
    case PropertyId::expectation: return "expectation";
    case PropertyId::minimality: return "minimality";
    case PropertyId::maximality: return "maximality";
    case PropertyId::monotonicity: return "monotonicity";
    case PropertyId::one_bounded: return "one-bounded";
  }
  fail(errc::unknown_property, "invalid property id");
}

const EntropyFunctional& lin_functional() {
  static const EntropyFunctional f{
      "lin",
      [](const Distribution& p) { return lin_entropy(p); },
      [](double a) { return lin_surprisal(a); },
      [](std::int64_t n) { return lin_entropy_uniform(n); },
      1,
  };
  return f;
}

const EntropyFunctional& normalized_shannon_functional() {
  static const EntropyFunctional f{
      "shannon-normalized",
      [](const Distribution& p) { return normalized_shannon_entropy(p); },
      [](double a) { return -std::log2(a); },
      [](std::int64_t) { return 1.0; },  // H(U_N) / log2 N
      2,
  };
  return f;
}

const EntropyFunctional& logical_entropy_functional() {
  static const EntropyFunctional f{
      "logical",
      [](const Distribution& p) { return logical_entropy(p); },
      [](double a) { return 1.0 - a; },
      [](std::int64_t n) { return 1.0 - 1.0 / static_cast<double>(n); },
      1,
  };
  return f;
}

const EntropyFunctional& functional_by_name(const std::string& name) {
  if (name == "lin") return lin_functional();
  if (name == "shannon-normalized" || name == "normalized-shannon") {
    return normalized_shannon_functional();
  }
  if (name == "logical") return logical_entropy_functional();
  fail(errc::invalid_spec, "unknown functional \"" + name + "\"");
}

double default_tolerance(PropertyId id) {
  return id == PropertyId::continuity ? 0.01 : 1e-12;
}

PropertyReport check_property(PropertyId id, const SuiteConfig& cfg, const EntropyFunctional& f) {
  if (cfg.trials < 1) fail(errc::invalid_spec, "trials must be >= 1");
  if (cfg.max_alphabet < 2) fail(errc::invalid_spec, "max alphabet must be >= 2");
  const auto found = cfg.tolerances.find(id);
  const double tolerance = found != cfg.tolerances.end() ? found->second : default_tolerance(id);
  Sampler rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(id)));
  Tracker t;
  switch (id) {
    case PropertyId::nonnegativity: t = check_nonnegativity(cfg, f, rng); break;
    case PropertyId::continuity: t = check_continuity(cfg, f, rng); break;
    case PropertyId::symmetry: t = check_symmetry(cfg, f, rng); break;
    case PropertyId::concavity: t = check_concavity(cfg, f, rng); break;
    case PropertyId::expectation: t = check_expectation(cfg, f, rng); break;
    case PropertyId::minimality: t = check_minimality(cfg, f, rng); break;
    case PropertyId::maximality: t = check_maximality(cfg, f, rng); break;
    case PropertyId::monotonicity: t = check_monotonicity(cfg, f, rng); break;
    case PropertyId::one_bounded: t = check_one_bounded(cfg, f, rng); break;
    default: fail(errc::unknown_property, "invalid property id");
  }
  return std::move(t).report(id, tolerance);
}

PropertyReport check_property(PropertyId id, const SuiteConfig& cfg) {
  return check_property(id, cfg, lin_functional());
}

std::vector<PropertyReport> run_suite(const SuiteConfig& cfg, const EntropyFunctional& f) {
  std::vector<PropertyReport> reports;
  for (PropertyId id : {PropertyId::nonnegativity, PropertyId::continuity, PropertyId::symmetry,
                        PropertyId::concavity, PropertyId::expectation, PropertyId::minimality,
                        PropertyId::maximality, PropertyId::monotonicity, PropertyId::one_bounded}) {
    reports.push_back(check_property(id, cfg, f));
  }
  return reports;
}

std::vector<PropertyReport> run_suite(const SuiteConfig& cfg) {
  return run_suite(cfg, lin_functional());
}

std::string serialize_report(const PropertyReport& report) {
  std::string line = report.passed ? "[PASS] " : "[FAIL] ";
  line += property_label(report.id);
  line += ' ';
  line += property_name(report.id);
  line += " trials=" + std::to_string(report.trials);
  line += " worst_violation=" + format_real(report.worst_violation, 9);
  line += " tolerance=" + format_real(report.tolerance, 9);
  if (report.witness) line += " witness=" + *report.witness;
  return line;
}

std::string serialize_distribution(const Distribution& p) {
  std::string out = "{\"labels\":[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ',';
    out += '"' + json_escape(p.label(i)) + '"';
  }
  out += "],\"masses\":[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ',';
    out += format_real(p.mass(i), 17);
  }
  out += "]}";
  return out;
}

}  // namespace linent
