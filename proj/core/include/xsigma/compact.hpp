#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xsigma/repthy.hpp"
#include "xsigma/root_system.hpp"

namespace xsigma::compact {

using rootsys::RootSystem;
using rootsys::RootVec;
using rootsys::SimpleSubset;
using rootsys::WeightVec;

// ---- condition (*) and little brothers --------------------------------------

/// For every non-simply-laced connected component: a long root in the support
/// forces the short root adjacent to a long root into the support.
bool satisfies_star(const WeightVec& lambda);
/// Same condition evaluated on the connected components of K only.
bool satisfies_star_k(const WeightVec& lambda, const SimpleSubset& K);

/// The short simple root of the connected non-simply-laced subset C that is
/// adjacent to a long root of C.
int short_long_junction(const SimpleSubset& C);

/// For a connected component C violating the condition: the sum of the simple
/// roots on the path from the last long support root down to alpha_S(C).
/// Empty when the condition holds on C.
std::optional<RootVec> little_brother_delta(const WeightVec& lambda, const SimpleSubset& C);

/// One obstruction weight per violating component; all dominant and < lambda.
std::vector<WeightVec> little_brothers(const WeightVec& lambda);
std::vector<WeightVec> little_brothers_k(const WeightVec& lambda, const SimpleSubset& K);

// ---- simple weight sets ------------------------------------------------------

/// The unique dominance-maximum of a nonempty set of dominant weights, if any.
std::optional<WeightVec> is_simple_sigma(const std::vector<WeightVec>& weights);

/// A finite simple set of dominant weights with its maximal element.
struct SigmaSet {
  std::vector<WeightVec> weights;  // sorted, deduplicated
  WeightVec max;

  /// Throws PreconditionError when the set is empty, non-dominant, or has no
  /// unique maximal element.
  static SigmaSet create(std::vector<WeightVec> weights);
  bool contains(const WeightVec& w) const;
};

/// Advisory diagnostics: weights above lambda, or outside lambda's coset mod
/// the root lattice, are legal but flagged.
std::vector<std::string> sigma_warnings(const SigmaSet& sigma);

// ---- normality ----------------------------------------------------------------

/// X_Sigma is normal iff Sigma contains every little brother of its maximum.
bool normality_decide(const SigmaSet& sigma);

struct OracleRow {
  WeightVec mu;
  bool found = false;
  int n = 0;
  std::vector<WeightVec> factors;
};

/// Brute-force search: for each dominant mu <= max, the lexicographically first
/// (n, multiset over Sigma) with V(mu+(n-1)max) inside the iterated product,
/// for n <= n_max.
std::vector<OracleRow> normality_oracle(const SigmaSet& sigma, int n_max, repthy::Oracle& oracle);

struct CertificateStep {
  WeightVec mu_from;
  WeightVec mu_to;       // strictly above mu_from
  WeightVec lambda_used; // factor consumed by this step
};

/// A chain realizing V(mu+(n-1)lambda) inside V(factors[0]) (x) ... (x)
/// V(factors[n-1]); every step satisfies V(mu_from + lambda) inside
/// V(mu_to) (x) V(lambda_used).
struct Certificate {
  WeightVec mu;
  int n = 0;
  std::vector<WeightVec> factors;
  std::vector<CertificateStep> steps;
};

/// Constructive chain builder; requires LB(max) inside Sigma and mu dominant
/// with mu <= max. Pure lattice computation (no tensor products).
Certificate normality_certificate(const SigmaSet& sigma, const WeightVec& mu);

/// Oracle-checks the final containment and every intermediate step.
bool verify_certificate(const Certificate& cert, const WeightVec& lambda_max,
                        repthy::Oracle& oracle);

// ---- colored cone and rays -----------------------------------------------------

/// Generators of the cone of the normalization in the coweight basis:
/// simple coroots off the support plus the negative fundamental coweights.
struct CoweightCone {
  const RootSystem* sys = nullptr;
  std::vector<std::vector<long long>> coroot_gens;
  std::vector<std::vector<long long>> coweight_gens;
  SimpleSubset colors;  // Delta minus Supp(lambda)

  std::vector<std::vector<long long>> all_generators() const;
};

CoweightCone colored_cone(const WeightVec& lambda);

struct StructureSubsets {
  SimpleSubset Ie;
  SimpleSubset Ide;
  SimpleSubset Ide_star;
  SimpleSubset J;
  int gamma_de = -1;  // trivalent node, types D/E only
};

StructureSubsets structure_subsets(const WeightVec& lambda);

enum class RayKind { Coroot, NegCoweight };

struct LabeledRay {
  RayKind kind;
  int index;  // ambient simple-root index (0-based internally)

  friend bool operator<(const LabeledRay& a, const LabeledRay& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.index < b.index;
  }
  friend bool operator==(const LabeledRay& a, const LabeledRay& b) {
    return a.kind == b.kind && a.index == b.index;
  }
};

/// Closed-form extremal rays: coroots off the support plus the negative
/// coweights indexed by J(lambda).
std::vector<LabeledRay> extremal_rays(const WeightVec& lambda);

/// The coweight-basis vector of a labeled ray (not reduced to primitive).
std::vector<long long> ray_vector(const RootSystem& sys, const LabeledRay& ray);

/// Generic oracle: inclusion-minimal generator subset, one primitive vector per
/// extremal ray, decided by exact rational feasibility. Requires a pointed cone.
std::vector<std::vector<long long>> extremal_rays_generic(const CoweightCone& cone);

// ---- Q-factoriality and smoothness ----------------------------------------------

struct QFactoriality {
  bool value = false;
  bool i = false;
  bool ii = false;
  std::optional<bool> iii;  // engaged for types D and E only
};

QFactoriality is_q_factorial(const WeightVec& lambda);

struct Smoothness {
  bool value = false;
  bool normal = false;       // condition (*) on the maximum
  bool q_factorial = false;
  bool complement_type_a = false;
};

/// Theorem-level criterion; depends only on max(Sigma). Product systems are
/// handled componentwise (a factor where lambda vanishes is a point).
Smoothness is_smooth(const SigmaSet& sigma);

struct Timashev {
  bool i = false;
  bool ii = false;
  std::optional<bool> iii;  // only evaluated when ii holds
};

Timashev timashev_check(const WeightVec& lambda);

/// X_lambda and X_mu are isomorphic iff the supports coincide.
bool same_compactification(const WeightVec& lambda, const WeightVec& mu);

}  // namespace xsigma::compact
