#pragma once

#include <functional>
#include <vector>

#include "qsk/polynomial.hpp"

namespace qsk {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Exact determinant over the polynomial ring by Laplace expansion along
/// rows, memoized over the set of columns still available. The empty
/// matrix has determinant 1. Throws NonSquare.
Polynomial determinant(const PolyMatrix& m);

/// Builds the n x n matrix with entries `entry(i, j)`, 1-based, and returns
/// its determinant.
Polynomial determinant(int n, const std::function<Polynomial(int, int)>& entry);

}  // namespace qsk
