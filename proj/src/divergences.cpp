#include "linent/divergences.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "linent/stable_sum.hpp"

namespace linent {
namespace {

void require_same_labels(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.size() != b.size() || !std::equal(a.begin(), a.end(), b.begin())) {
    fail(errc::label_mismatch, "arguments must share the same labels in the same order");
  }
}

double entropy_over(std::span<const double> masses) {
  StableSum sum;
  for (double m : masses) {
    if (m > 0.0) sum.add(m * std::log2(m));
  }
  return 0.0 - sum.value();  // avoids -0 for degenerate inputs
}

// log2(p) - log2(q) instead of log2(p/q): the ratio can overflow for
// denormal q even when the divergence itself is small.
double kl_over(std::span<const double> p, std::span<const double> q) {
  StableSum sum;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) {
      fail(errc::absolute_continuity_violated,
           "q vanishes at index " + std::to_string(i) + " where p does not");
    }
    sum.add(p[i] * (std::log2(p[i]) - std::log2(q[i])));
  }
  return sum.value();
}

double js_over(std::span<const double> p, std::span<const double> q) {
  std::vector<double> mixture(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mixture[i] = (p[i] + q[i]) / 2.0;
  const double gap = entropy_over(mixture) - (entropy_over(p) + entropy_over(q)) / 2.0;
  // rounding can push the gap a hair below zero when p and q nearly coincide
  return gap < 0.0 ? 0.0 : gap;
}

}  // namespace

double shannon_entropy(const Distribution& p) { return entropy_over(p.masses()); }

double shannon_entropy(const JointDistribution& p) { return entropy_over(p.masses()); }

double normalized_shannon_entropy(const Distribution& p) {
  if (p.size() == 1) {
    fail(errc::singleton_alphabet, "normalized entropy is undefined for N = 1 (log2 N = 0)");
  }
  return shannon_entropy(p) / std::log2(static_cast<double>(p.size()));
}

double kl_divergence(const Distribution& p, const Distribution& q) {
  require_same_labels(p.labels(), q.labels());
  return kl_over(p.masses(), q.masses());
}

double kl_divergence(const JointDistribution& p, const JointDistribution& q) {
  require_same_labels(p.labels(), q.labels());
  return kl_over(p.masses(), q.masses());
}

JointDistribution self_joint(const Distribution& p) {
  const std::size_t n = p.size();
  std::vector<double> masses(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) masses[i * n + i] = p.mass(i);
  return JointDistribution(JointDistribution::Trusted{},
                           {p.labels().begin(), p.labels().end()}, std::move(masses));
}

JointDistribution self_product(const Distribution& p) {
  const std::size_t n = p.size();
  std::vector<double> masses(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) masses[i * n + j] = p.mass(i) * p.mass(j);
  }
  return JointDistribution(JointDistribution::Trusted{},
                           {p.labels().begin(), p.labels().end()}, std::move(masses));
}

double js_divergence(const Distribution& p, const Distribution& q) {
  require_same_labels(p.labels(), q.labels());
  return js_over(p.masses(), q.masses());
}

double js_divergence(const JointDistribution& p, const JointDistribution& q) {
  require_same_labels(p.labels(), q.labels());
  return js_over(p.masses(), q.masses());
}

double js_divergence_general(const WeightVector& a, const WeightVector& b) {
  require_same_labels(a.labels(), b.labels());
  StableSum sum;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = a.weight(i);
    const double y = b.weight(i);
    const double m = (x + y) / 2.0;
    if (x > 0.0) sum.add(x * (std::log2(x) - std::log2(m)));
    if (y > 0.0) sum.add(y * (std::log2(y) - std::log2(m)));
  }
  return sum.value() / 2.0;
}

}  // namespace linent
