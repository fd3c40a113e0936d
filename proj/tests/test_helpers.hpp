#pragma once

#include <climits>
#include <optional>
#include <vector>

#include "xsigma/root_system.hpp"

namespace xsigma::testing {

using rootsys::PositiveRoot;
using rootsys::RootSystem;
using rootsys::RootVec;
using rootsys::SimpleSubset;
using rootsys::WeightVec;

inline WeightVec w(const rootsys::RootSystemPtr& sys, std::vector<int> coords) {
  return sys->weight(std::move(coords));
}

inline SimpleSubset subset(const rootsys::RootSystemPtr& sys, std::vector<int> indices) {
  SimpleSubset s{sys.get(), 0};
  for (int i : indices) s.add(i);
  return s;
}

/// Independent oracle for the highest short root: among the ambient positive
/// roots supported inside K, take the ones of minimal length and return the
/// unique K-dominant one. Does not touch the classification tables.
inline std::optional<std::vector<int>> short_dominant_root(const SimpleSubset& K) {
  const RootSystem& sys = *K.sys;
  auto inside = [&](const PositiveRoot& beta) {
    for (int i = 0; i < sys.rank(); ++i)
      if (beta.root_coords[i] != 0 && !K.contains(i)) return false;
    return true;
  };
  long long min_norm = LLONG_MAX;
  for (const auto& beta : sys.positive_roots())
    if (inside(beta) && beta.half_norm < min_norm) min_norm = beta.half_norm;
  if (min_norm == LLONG_MAX) return std::nullopt;
  std::optional<std::vector<int>> found;
  for (const auto& beta : sys.positive_roots()) {
    if (!inside(beta) || beta.half_norm != min_norm) continue;
    bool dominant = true;
    for (int i : K.members()) dominant &= beta.weight_coords[i] >= 0;
    if (!dominant) continue;
    if (found) return std::nullopt;  // not unique: something is off
    found = beta.root_coords;
  }
  return found;
}

/// All dominant weights <= lambda by box enumeration over the root lattice.
inline std::vector<std::vector<int>> brute_ideal(const WeightVec& lambda) {
  const RootSystem& sys = *lambda.sys;
  const int r = sys.rank();
  auto rc = rootsys::to_root_basis(lambda);
  std::vector<long long> bound(r);
  for (int i = 0; i < r; ++i) bound[i] = rc.coords[i].floor();
  std::vector<std::vector<int>> out;
  std::vector<int> n(r, 0);
  while (true) {
    std::vector<int> wc = lambda.coords;
    for (int i = 0; i < r; ++i)
      if (n[i])
        for (int j = 0; j < r; ++j) wc[j] -= n[i] * sys.cartan()[i][j];
    bool dom = true;
    for (int c : wc) dom &= c >= 0;
    if (dom) out.push_back(wc);
    int pos = r - 1;
    while (pos >= 0 && n[pos] == bound[pos]) n[pos--] = 0;
    if (pos < 0) break;
    ++n[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace xsigma::testing
