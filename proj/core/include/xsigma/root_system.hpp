#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "xsigma/errors.hpp"
#include "xsigma/rational.hpp"

namespace xsigma::rootsys {

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// One irreducible factor of a (possibly reducible) root system.
struct Component {
  char letter;  // A, B, C, D, E, F, G
  int rank;
  int offset;  // index of its first simple root in the ambient numbering

  bool simply_laced() const { return letter == 'A' || letter == 'D' || letter == 'E'; }
};

/// A positive root, kept in both coordinate systems.
struct PositiveRoot {
  std::vector<int> root_coords;    // coefficients over the simple roots
  std::vector<int> weight_coords;  // pairings against the simple coroots
  long long half_norm;             // (beta,beta)/2 with short simple roots normalized to 1
};

/// Subset of the simple roots, as a bitmask over ambient indices.
struct SimpleSubset {
  const RootSystem* sys = nullptr;
  std::uint64_t bits = 0;

  bool empty() const { return bits == 0; }
  int size() const { return __builtin_popcountll(bits); }
  bool contains(int i) const { return (bits >> i) & 1; }
  SimpleSubset& add(int i) {
    bits |= (std::uint64_t(1) << i);
    return *this;
  }
  std::vector<int> members() const;
  int min_index() const;  // -1 when empty

  friend bool operator==(const SimpleSubset& a, const SimpleSubset& b) {
    return a.bits == b.bits;
  }
  friend bool operator<(const SimpleSubset& a, const SimpleSubset& b) { return a.bits < b.bits; }
};

/// Integer vector in the fundamental-weight basis: coordinate i is <v, alpha_i^vee>.
struct WeightVec {
  const RootSystem* sys = nullptr;
  std::vector<int> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  bool dominant() const;

  friend WeightVec operator+(const WeightVec& a, const WeightVec& b);
  friend WeightVec operator-(const WeightVec& a, const WeightVec& b);
  WeightVec scaled(int k) const;

  friend bool operator==(const WeightVec& a, const WeightVec& b) { return a.coords == b.coords; }
  friend bool operator!=(const WeightVec& a, const WeightVec& b) { return !(a == b); }
  friend bool operator<(const WeightVec& a, const WeightVec& b) { return a.coords < b.coords; }

  std::string str() const;
};

/// Rational vector in the simple-root basis.
struct RootVec {
  const RootSystem* sys = nullptr;
  std::vector<Rat> coords;

  bool is_zero() const;
  /// All coordinates nonnegative integers (membership in N*Delta).
  bool is_natural() const;
  std::vector<int> integer_coords() const;

  friend RootVec operator+(const RootVec& a, const RootVec& b);
  friend RootVec operator-(const RootVec& a, const RootVec& b);

  friend bool operator==(const RootVec& a, const RootVec& b) { return a.coords == b.coords; }

  std::string str() const;
};

/// Immutable Cartan datum for a (possibly reducible) root system in Bourbaki
/// numbering. All values derived in the constructor; safe to share across
/// threads.
class RootSystem {
 public:
  static RootSystemPtr build(const std::string& spec);
  /// Assemble from a component list (used for Levi subsystems).
  static RootSystemPtr assemble(const std::vector<std::pair<char, int>>& comps);

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  const std::vector<Component>& components() const { return components_; }
  bool irreducible() const { return components_.size() == 1; }

  /// cartan()[i][j] = <alpha_i, alpha_j^vee>; row i is the weight-coordinate
  /// vector of alpha_i, column j the coweight-coordinate vector of alpha_j^vee.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<long long>& symmetrizer() const { return symmetrizer_; }
  const std::vector<bool>& short_flags() const { return short_flags_; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  SimpleSubset extremes() const { return extremes_; }
  SimpleSubset all() const;

  bool is_short(int i) const { return short_flags_[i]; }
  int component_of(int i) const { return component_of_[i]; }

  const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }
  /// rho in weight coordinates is the all-ones vector.
  WeightVec rho() const;
  WeightVec fundamental_weight(int i) const;
  WeightVec zero_weight() const;
  WeightVec weight(std::vector<int> coords) const;
  RootVec root_vec(std::vector<Rat> coords) const;
  RootVec simple_root(int i) const;

  /// Inverse of the transposed Cartan matrix; column j holds the root
  /// coordinates of the j-th fundamental weight.
  const std::vector<std::vector<Rat>>& inverse_cartan_t() const { return inv_cartan_t_; }

 private:
  RootSystem() = default;
  void finalize();  // derives everything past components_/cartan_/short_flags_

  std::string name_;
  int rank_ = 0;
  std::vector<Component> components_;
  std::vector<int> component_of_;
  std::vector<std::vector<int>> cartan_;
  std::vector<long long> symmetrizer_;
  std::vector<bool> short_flags_;
  std::vector<std::vector<int>> adjacency_;
  SimpleSubset extremes_;
  std::vector<PositiveRoot> positive_roots_;
  std::vector<std::vector<Rat>> inv_cartan_t_;
};

// ---- lattice operations ----------------------------------------------------

/// Nonzero coordinates of a weight.
SimpleSubset support(const WeightVec& v);
/// Nonzero coordinates of a root-basis vector.
SimpleSubset support_over_delta(const RootVec& b);

SimpleSubset border(const SimpleSubset& I);
SimpleSubset interior(const SimpleSubset& I);
SimpleSubset closure(const SimpleSubset& I);
/// Dynkin-connected pieces of I, sorted by least member index.
std::vector<SimpleSubset> components(const SimpleSubset& I);
bool is_connected(const SimpleSubset& I);

/// Exact change of basis: weight coordinates -> simple-root coordinates.
RootVec to_root_basis(const WeightVec& v);
std::vector<Rat> to_root_basis(const RootSystem& sys, const std::vector<Rat>& weight_coords);
/// Simple-root coordinates -> weight coordinates (pairings are A^T * n).
std::vector<Rat> to_weight_coords(const RootVec& b);
/// Same, for integer root vectors; result is always integral.
std::vector<int> weight_coords_of_root(const RootSystem& sys, const std::vector<int>& rc);

/// mu <= lambda in the dominance order (lambda - mu in N*Delta).
bool dominance_leq(const WeightVec& mu, const WeightVec& lambda);

/// Highest short root of the (connected, nonempty) subsystem on K, in ambient
/// simple-root coordinates. Equals the highest root when Phi_K is simply laced.
RootVec highest_short_root(const SimpleSubset& K);

/// Dominant Weyl conjugate (plain, unshifted). Always exists.
WeightVec dominant_conjugate_plain(const WeightVec& v);

/// -w0(lambda): highest weight of the dual module. Requires lambda dominant.
WeightVec dual_weight(const WeightVec& lambda);

// ---- diagram classification ------------------------------------------------

/// A connected induced subdiagram recognized as an abstract irreducible type,
/// with the local Bourbaki numbering mapped to ambient indices.
struct ClassifiedComponent {
  char letter;
  int rank;
  std::vector<int> to_ambient;  // local Bourbaki index -> ambient index
};

ClassifiedComponent classify_component(const SimpleSubset& K);

/// Formats like "a1,a3" (1-based Bourbaki positions).
std::string subset_str(const SimpleSubset& I);
SimpleSubset parse_subset(const RootSystem& sys, const std::string& text);

}  // namespace xsigma::rootsys
