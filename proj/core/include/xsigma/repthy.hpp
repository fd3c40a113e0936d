#pragma once

#include <functional>
#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "xsigma/root_system.hpp"

namespace xsigma::repthy {

using rootsys::RootSystem;
using rootsys::RootSystemPtr;
using rootsys::SimpleSubset;
using rootsys::WeightVec;

/// Decomposition of a tensor product into dominant highest weights with
/// multiplicities. Keys are weight coordinate vectors.
struct TensorMultiset {
  std::map<std::vector<int>, long long> entries;

  bool contains(const WeightVec& nu) const { return entries.count(nu.coords) > 0; }
  long long multiplicity(const WeightVec& nu) const {
    auto it = entries.find(nu.coords);
    return it == entries.end() ? 0 : it->second;
  }
};

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(static_cast<unsigned>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// All weights of an irreducible module with multiplicities.
class WeightTable {
 public:
  struct Entry {
    std::vector<int> weight_coords;
    std::vector<int> depth;  // root coordinates of highest - weight
    long long mult;
  };

  const WeightVec& highest() const { return highest_; }
  const std::vector<Entry>& entries() const { return entries_; }
  long long multiplicity(const std::vector<int>& weight_coords) const;
  size_t size() const { return entries_.size(); }

 private:
  friend class Oracle;
  WeightVec highest_;
  std::vector<Entry> entries_;
  std::unordered_map<std::vector<int>, long long, VecHash> index_;
};

/// Size guards for representation-theoretic computations. Values are
/// overridable (CLI --dim-cap); exceeding one raises GuardExceeded.
struct Guards {
  long long dim_cap = 1'000'000;                 // largest module we tabulate
  long long table_product_cap = 100'000'000;     // weight-table size product per tensor instance
};

/// Signed dominant conjugate under the rho-shifted action: walks v + rho to the
/// dominant chamber; sign 0 when a wall is hit.
std::pair<WeightVec, int> dominant_conjugate(const WeightVec& v);

/// Weyl dimension formula, exact.
unsigned long long dim(const WeightVec& lambda);

/// The standard Levi subsystem on a subset of the simple roots, with the
/// index embedding for restricting and extending weight coordinates.
struct LeviSystem {
  RootSystemPtr sys;
  std::vector<int> to_ambient;    // local index -> ambient index
  std::vector<int> from_ambient;  // ambient index -> local index or -1

  WeightVec restrict_weight(const WeightVec& ambient) const;
  WeightVec extend_weight(const WeightVec& local, const RootSystem& ambient_sys) const;
};

LeviSystem levi_subsystem(const SimpleSubset& delta_prime);

/// Memoizing computation context. Not thread-safe by design: create one per
/// thread (the underlying RootSystem is immutable and freely shared).
class Oracle {
 public:
  explicit Oracle(RootSystemPtr sys, Guards guards = {});

  const RootSystem& system() const { return *sys_; }
  const Guards& guards() const { return guards_; }

  /// Freudenthal weight table of V(lambda); memoized. Requires lambda dominant
  /// and dim(lambda) within the guard.
  const WeightTable& weight_table(const WeightVec& lambda);
  long long weight_multiplicity(const WeightVec& lambda, const WeightVec& mu);

  /// Brauer-Klimyk decomposition of V(lambda) (x) V(mu); memoized. Iterates
  /// over the weight table of the smaller-dimension factor (ties: the second).
  const TensorMultiset& tensor_decompose(const WeightVec& lambda, const WeightVec& mu);

  bool tensor_contains(const WeightVec& lambda, const WeightVec& mu, const WeightVec& nu);
  /// nu in V(factors[0]) (x) ... (x) V(factors[n-1]), folded left with
  /// dominance pruning of unreachable constituents.
  bool iterated_contains(const std::vector<WeightVec>& factors, const WeightVec& nu);

  /// Upper estimate of |Pi(lambda)| used by the tensor-product guard.
  long long table_size_estimate(const WeightVec& lambda) const;

  /// When set, every tensor_decompose instance is reported (used by the
  /// acceptance suite to replay instances against an independent oracle).
  std::function<void(const WeightVec&, const WeightVec&)> on_tensor;

 private:
  const WeightTable& table_of_smaller(const WeightVec& a, const WeightVec& b,
                                      const WeightVec** other);

  RootSystemPtr sys_;
  Guards guards_;
  std::map<std::vector<int>, std::shared_ptr<WeightTable>> tables_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::shared_ptr<TensorMultiset>>
      tensors_;
};

}  // namespace xsigma::repthy
