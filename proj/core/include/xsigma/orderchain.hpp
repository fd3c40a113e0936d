#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "xsigma/root_system.hpp"

namespace xsigma::orderchain {

using rootsys::RootVec;
using rootsys::SimpleSubset;
using rootsys::WeightVec;

/// One upward cover step mu -> mu + eta_K in the dominance order.
struct CoverStep {
  WeightVec base;
  SimpleSubset K;
  WeightVec result;
};

/// Stembridge's cover criterion: the step exists when
///   (a) <(lambda-mu)|_K, alpha^vee> >= 0 for all alpha in K cap Supp(mu), and
///   (b) <mu + eta_K, alpha^vee> >= 0 for all alpha in Supp_D(lambda-mu) \ K.
/// Preconditions: lambda > mu dominant, K connected and inside Supp_D(lambda-mu).
std::optional<CoverStep> stembridge_step(const WeightVec& lambda, const WeightVec& mu,
                                         const SimpleSubset& K);

/// The connected K with mu + eta_K dominant, <= lambda, and meeting Supp(lambda),
/// built from K1 = {alpha : <lambda-mu, alpha^vee> >= 0}.
/// Preconditions: irreducible system, lambda > mu dominant, Supp_D(lambda-mu)
/// full, and (simply laced) or (a short alpha in Supp(lambda) pairs >= 0
/// against lambda-mu) or (alpha_S not in Supp(mu)).
SimpleSubset construct_k(const WeightVec& lambda, const WeightVec& mu);

/// One step of the induction: weights mu', lambda' with mu < mu' <= lambda,
/// lambda' either lambda or its little brother, and
/// V(mu+lambda) inside V(mu') (x) V(lambda') (oracle-verifiable).
struct InductionStep {
  WeightVec mu_prime;
  WeightVec lambda_prime;
  RootVec added;          // mu' - mu as a root vector (eta_K or zeta)
  RootVec removed;        // lambda - lambda' (zero when lambda' = lambda)
  bool second_branch;     // true when mu' = mu + zeta
  SimpleSubset K;         // the subset driving the first branch (Delta otherwise)
};

InductionStep induction_step(const WeightVec& lambda, const WeightVec& mu);

/// All dominant mu <= lambda, by downward cover closure over connected subsets,
/// ordered descending (lambda first; ties by coordinate order).
std::vector<WeightVec> dominant_ideal(const WeightVec& lambda);

/// lambda - mu = beta_1 + ... + beta_m split along the connected components of
/// its support, sorted by least index. mu + beta_1 is dominant.
std::vector<std::pair<RootVec, SimpleSubset>> component_split(const WeightVec& lambda,
                                                              const WeightVec& mu);

}  // namespace xsigma::orderchain
