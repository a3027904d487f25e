#pragma once

#include <cstdint>

#include "linent/distribution.hpp"

namespace linent {

/// A Lin surprisal together with the probability it was evaluated at.
/// value lies in [0, 1] and is zero exactly when probability is one.
struct SurprisalValue {
  double probability;
  double value;  // bits
};

/// Lin surprisal I*(p) = log2 sqrt(4 p^p / (p+1)^(p+1)), in bits.
///
/// Evaluated in the cancellation-free form
///   1 + (1/2)[p log2 p - (p+1) log2(p+1)],   0 log2 0 = 0,
/// which makes the endpoint values I*(0) = 1 and I*(1) = 0 exact.
/// Decreasing and strictly convex on [0, 1].
double lin_surprisal(double prob);

SurprisalValue lin_surprisal_at(double prob);

/// dI*/dp = [ln p - ln(p+1)] / ln 4; negative on (0, 1], diverges at 0.
double lin_surprisal_d1(double prob);

/// d2I*/dp2 = 1 / [(p^2 + p) ln 4]; positive on (0, 1].
double lin_surprisal_d2(double prob);

/// Second derivative of the entropy summand a I*(a):
///   d2[a I*(a)]/da2 = [2(a+1) ln(a/(a+1)) + 1] / [(a+1) ln 4],
/// negative on (0, 1) (strict concavity of the summand).
double weighted_surprisal_d2(double prob);

/// Lin entropy H*(p) = sum_x p(x) I*[p(x)], in bits (explicit form).
/// Lies in [0, 1); zero exactly for degenerate p.
double lin_entropy(const Distribution& p);

/// Defining form H*(p) = D*(delta || pi): the Jensen-Shannon divergence
/// between the self-joint and self-product distributions of p. Slower than
/// lin_entropy (it walks the N x N product alphabet) and serves as the
/// independent route for equivalence checks.
double lin_entropy_implicit(const Distribution& p);

/// Closed form H*(U_N) = 1 + (1/2)[u log2 u - (u+1) log2(u+1)] with u = 1/N.
/// Strictly increasing in N, approaching 1 from below.
double lin_entropy_uniform(std::int64_t n);

/// Logical entropy h(p) = 1 - sum_x p(x)^2: the probability that two
/// independent draws from p differ. Dimensionless, in [0, 1).
double logical_entropy(const Distribution& p);

/// H*(p) - D*(p || p^2) - h(p)/2, with p^2 the elementwise-squared (and
/// deliberately unnormalized) weight vector. Identically zero up to rounding.
double corollary_residual(const Distribution& p);

}  // namespace linent
