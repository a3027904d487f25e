#pragma once

#include "linent/distribution.hpp"

namespace linent {

/// H(p) = -sum_x p(x) log2 p(x), in bits, taking 0 log2 0 = 0.
double shannon_entropy(const Distribution& p);
double shannon_entropy(const JointDistribution& p);

/// H(p) / log2 N. Errors with errc::singleton_alphabet for N = 1, where the
/// quotient is 0/0.
double normalized_shannon_entropy(const Distribution& p);

/// D(p||q) = sum_x p(x) log2[p(x)/q(x)], in bits. Terms with p(x) = 0
/// contribute nothing; q(x) = 0 with p(x) > 0 is an absolute-continuity
/// violation. Arguments must share the same labels in the same order.
double kl_divergence(const Distribution& p, const Distribution& q);
double kl_divergence(const JointDistribution& p, const JointDistribution& q);

/// delta: joint law of X with a deterministic copy of itself, i.e. p on the
/// diagonal and 0 elsewhere.
JointDistribution self_joint(const Distribution& p);

/// pi: joint law of X with an independent copy of itself, i.e. the outer
/// product p(x) p(x').
JointDistribution self_product(const Distribution& p);

/// D*(p||q) = H[(p+q)/2] - [H(p)+H(q)]/2, in bits. Symmetric, bounded in
/// [0, 1], defined for any supports. Evaluated from the mixture gap rather
/// than the averaged-KL form so disjoint supports stay finite.
double js_divergence(const Distribution& p, const Distribution& q);
double js_divergence(const JointDistribution& p, const JointDistribution& q);

/// Averaged-KL expansion of D* applied term by term to possibly unnormalized
/// weights: (1/2)[sum_x a log2(a/m) + sum_x b log2(b/m)] with m = (a+b)/2 and
/// 0 log2(0/m) = 0. Coincides with js_divergence when both inputs are
/// normalized.
double js_divergence_general(const WeightVector& a, const WeightVector& b);

}  // namespace linent
