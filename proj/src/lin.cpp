#include "linent/lin.hpp"

#include <cmath>
#include <vector>

#include "linent/divergences.hpp"
#include "linent/stable_sum.hpp"

namespace linent {
namespace {

constexpr double kLn4 = 1.3862943611198906;  // 2 ln 2

void require_probability(double prob) {
  if (!(prob >= 0.0) || prob > 1.0) {
    fail(errc::out_of_range, "probability must lie in [0, 1], got " + std::to_string(prob));
  }
}

void require_positive_probability(double prob) {
  require_probability(prob);
  if (prob == 0.0) fail(errc::zero_probability, "derivative is undefined at probability 0");
}

}  // namespace

double lin_surprisal(double prob) {
  require_probability(prob);
  const double self = prob > 0.0 ? prob * std::log2(prob) : 0.0;
  return 1.0 + 0.5 * (self - (prob + 1.0) * std::log2(prob + 1.0));
}

SurprisalValue lin_surprisal_at(double prob) { return {prob, lin_surprisal(prob)}; }

double lin_surprisal_d1(double prob) {
  require_positive_probability(prob);
  return (std::log(prob) - std::log(prob + 1.0)) / kLn4;
}

double lin_surprisal_d2(double prob) {
  require_positive_probability(prob);
  return 1.0 / ((prob * prob + prob) * kLn4);
}

double weighted_surprisal_d2(double prob) {
  if (!(prob > 0.0) || prob >= 1.0) {
    fail(errc::out_of_range, "argument must lie in (0, 1), got " + std::to_string(prob));
  }
  return (2.0 * (prob + 1.0) * std::log(prob / (prob + 1.0)) + 1.0) / ((prob + 1.0) * kLn4);
}

double lin_entropy(const Distribution& p) {
  StableSum sum;
  for (double m : p.masses()) {
    if (m > 0.0) sum.add(m * lin_surprisal(m));
  }
  return sum.value();
}

double lin_entropy_implicit(const Distribution& p) {
  return js_divergence(self_joint(p), self_product(p));
}

double lin_entropy_uniform(std::int64_t n) {
  if (n < 1) fail(errc::zero_size, "alphabet size must be >= 1");
  return lin_surprisal(1.0 / static_cast<double>(n));
}

double logical_entropy(const Distribution& p) {
  StableSum sum;
  for (double m : p.masses()) sum.add(m * m);
  return 1.0 - sum.value();
}

double corollary_residual(const Distribution& p) {
  std::vector<std::string> labels(p.labels().begin(), p.labels().end());
  std::vector<double> weights(p.masses().begin(), p.masses().end());
  std::vector<double> squared(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) squared[i] = p.mass(i) * p.mass(i);
  const WeightVector original(labels, std::move(weights));
  const WeightVector elementwise_square(std::move(labels), std::move(squared));
  return lin_entropy(p) - js_divergence_general(original, elementwise_square) -
         logical_entropy(p) / 2.0;
}

}  // namespace linent
