#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "linent/errors.hpp"

namespace linent {

/// Absolute tolerance on |sum of masses - 1| accepted at construction.
inline constexpr double kNormalizationTolerance = 1e-9;

/// Probability mass function over a finite, nonempty, labeled alphabet.
///
/// Construction validates every invariant: nonempty alphabet, masses in
/// [0, 1] summing to 1 within kNormalizationTolerance, pairwise distinct
/// labels. Masses are never renormalized silently. Zero-mass symbols are
/// legal and retained. Immutable once built, so values can be shared freely
/// across threads.
class Distribution {
 public:
  Distribution(std::vector<std::string> labels, std::vector<double> masses);

  std::size_t size() const noexcept { return masses_.size(); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::span<const double> masses() const noexcept { return masses_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  double mass(std::size_t i) const { return masses_[i]; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> masses_;
};

class Distribution;

/// Probability mass function over the product alphabet X x X, stored as a
/// row-major N x N matrix. Entries must lie in [0, 1] and sum to 1 within
/// kNormalizationTolerance.
class JointDistribution {
 public:
  JointDistribution(std::vector<std::string> labels, std::vector<double> masses);

  /// Alphabet size N; the matrix has N*N entries.
  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::span<const double> masses() const noexcept { return masses_; }
  double mass(std::size_t i, std::size_t j) const { return masses_[i * labels_.size() + j]; }

 private:
  struct Trusted {};
  JointDistribution(Trusted, std::vector<std::string> labels, std::vector<double> masses)
      : labels_(std::move(labels)), masses_(std::move(masses)) {}

  // Construct from an already-validated marginal without re-checking the
  // sum: the product matrix of a marginal at the edge of the normalization
  // tolerance deviates by up to twice the marginal's own slack.
  friend JointDistribution self_joint(const Distribution& p);
  friend JointDistribution self_product(const Distribution& p);

  std::vector<std::string> labels_;
  std::vector<double> masses_;
};

/// Nonnegative measure over a labeled alphabet, not necessarily normalized;
/// at least one weight must be positive.
class WeightVector {
 public:
  WeightVector(std::vector<std::string> labels, std::vector<double> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::span<const double> weights() const noexcept { return weights_; }
  double weight(std::size_t i) const { return weights_[i]; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> weights_;
};

/// Validating constructor wrapper; throws linent::Error on any invariant
/// violation (errc::empty_alphabet, negative_mass, mass_above_one,
/// not_normalized, duplicate_label, length_mismatch).
Distribution make_distribution(std::vector<std::string> labels, std::vector<double> masses);

/// Distribution of observed frequencies; labels come out sorted
/// lexicographically. Symbols with zero count are kept at mass zero.
Distribution empirical_distribution(const std::map<std::string, std::uint64_t>& counts);

/// U_N: equal mass 1/n on synthetic labels "0".."n-1".
Distribution uniform_distribution(std::size_t n);

/// Uniform draw from the (n-1)-simplex via normalized unit-rate exponentials
/// (a flat Dirichlet). Deterministic for a given seed.
Distribution random_distribution(std::size_t n, std::uint64_t seed);

/// Same, drawing from an existing engine (for bulk sampling in tests).
Distribution random_distribution(std::size_t n, std::mt19937_64& engine);

}  // namespace linent
