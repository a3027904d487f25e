#include "linent/distribution.hpp"

#include <cmath>
#include <unordered_set>
#include <utility>

#include "linent/stable_sum.hpp"

namespace linent {
namespace {

void check_masses(std::span<const double> masses) {
  for (double m : masses) {
    if (!(m >= 0.0)) fail(errc::negative_mass, "mass must be >= 0, got " + std::to_string(m));
    if (m > 1.0) fail(errc::mass_above_one, "mass must be <= 1, got " + std::to_string(m));
  }
  StableSum total;
  for (double m : masses) total.add(m);
  const double sum = total.value();
  if (std::abs(sum - 1.0) > kNormalizationTolerance) {
    fail(errc::not_normalized, "masses sum to " + std::to_string(sum) + ", expected 1");
  }
}

void check_labels(std::span<const std::string> labels, std::size_t expected) {
  if (labels.size() != expected) {
    fail(errc::length_mismatch, "label count does not match mass count");
  }
  std::unordered_set<std::string_view> seen;
  seen.reserve(labels.size());
  for (const auto& label : labels) {
    if (!seen.insert(label).second) fail(errc::duplicate_label, "duplicate label \"" + label + "\"");
  }
}

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

// Uniform in [0, 1) from the top 53 bits of the engine output.
double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace

Distribution::Distribution(std::vector<std::string> labels, std::vector<double> masses)
    : labels_(std::move(labels)), masses_(std::move(masses)) {
  if (masses_.empty()) fail(errc::empty_alphabet, "alphabet must be nonempty");
  check_masses(masses_);
  check_labels(labels_, masses_.size());
}

JointDistribution::JointDistribution(std::vector<std::string> labels, std::vector<double> masses)
    : labels_(std::move(labels)), masses_(std::move(masses)) {
  if (labels_.empty()) fail(errc::empty_alphabet, "alphabet must be nonempty");
  if (masses_.size() != labels_.size() * labels_.size()) {
    fail(errc::length_mismatch, "joint mass matrix must be N x N");
  }
  check_masses(masses_);
  check_labels(labels_, labels_.size());
}

WeightVector::WeightVector(std::vector<std::string> labels, std::vector<double> weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
  if (weights_.empty()) fail(errc::empty_alphabet, "alphabet must be nonempty");
  bool any_positive = false;
  for (double w : weights_) {
    if (!(w >= 0.0)) fail(errc::negative_weight, "weight must be >= 0, got " + std::to_string(w));
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) fail(errc::all_zero_weights, "at least one weight must be positive");
  check_labels(labels_, weights_.size());
}

Distribution make_distribution(std::vector<std::string> labels, std::vector<double> masses) {
  return Distribution(std::move(labels), std::move(masses));
}

Distribution empirical_distribution(const std::map<std::string, std::uint64_t>& counts) {
  if (counts.empty()) fail(errc::empty_input, "no counts given");
  std::uint64_t total = 0;
  for (const auto& [label, count] : counts) {
    if (total + count < total) fail(errc::out_of_range, "count total overflows");
    total += count;
  }
  if (total == 0) fail(errc::all_zero_counts, "all counts are zero");

  std::vector<std::string> labels;
  std::vector<double> masses;
  labels.reserve(counts.size());
  masses.reserve(counts.size());
  // std::map iteration is already lexicographic.
  for (const auto& [label, count] : counts) {
    labels.push_back(label);
    masses.push_back(static_cast<double>(count) / static_cast<double>(total));
  }
  return Distribution(std::move(labels), std::move(masses));
}

Distribution uniform_distribution(std::size_t n) {
  if (n == 0) fail(errc::zero_size, "alphabet size must be >= 1");
  return Distribution(index_labels(n), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Distribution random_distribution(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  return random_distribution(n, engine);
}

Distribution random_distribution(std::size_t n, std::mt19937_64& engine) {
  if (n == 0) fail(errc::zero_size, "alphabet size must be >= 1");
  std::vector<double> draws(n);
  double total = 0.0;
  while (total <= 0.0) {
    StableSum sum;
    for (auto& draw : draws) {
      draw = -std::log1p(-uniform01(engine));  // unit-rate exponential
      sum.add(draw);
    }
    total = sum.value();
  }
  std::vector<double> masses(n);
  for (std::size_t i = 0; i < n; ++i) masses[i] = draws[i] / total;
  return Distribution(index_labels(n), std::move(masses));
}

}  // namespace linent
