#pragma once

#include <optional>
#include <vector>

#include "xsigma/rational.hpp"

namespace xsigma::cone {

using IVec = std::vector<long long>;
using QVec = std::vector<Rat>;
using QMat = std::vector<std::vector<Rat>>;

/// v divided by the gcd of its entries. Throws on the zero vector.
IVec primitive(const IVec& v);

/// Exact feasibility of { x >= 0 : sum_j x_j g_j = target } (phase-1 simplex,
/// Bland's rule).
bool in_cone(const std::vector<IVec>& generators, const QVec& target);
bool in_cone(const std::vector<IVec>& generators, const IVec& target);

/// No nontrivial nonnegative relation among the generators.
bool is_pointed(const std::vector<IVec>& generators);

/// |det| of a square integer matrix given by rows, by fraction-free elimination.
long long abs_determinant(const std::vector<IVec>& rows);

/// Inverse of a square rational matrix, or nullopt when singular.
std::optional<QMat> invert(const QMat& m);

}  // namespace xsigma::cone
