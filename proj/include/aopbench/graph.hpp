#pragma once

#include "aopbench/types.hpp"

namespace aopbench {

/// Mutual-or k-nearest-neighbor adjacency on the columns of `x` under the
/// Euclidean metric: S(i,j) = 1 iff i is among the `neighbor_count`
/// nearest of j or vice versa. Symmetric, zero diagonal, ties broken by
/// lower column index, a point is never its own neighbor.
Matrix knn_weights(const Matrix& x, int neighbor_count);

/// Graph Laplacian L = diag(S 1) - S. Symmetric PSD with zero row sums
/// for symmetric nonnegative S.
Matrix graph_laplacian(const Matrix& s);

/// Symmetric positive-definite square root of I + lambda1 * L, computed
/// by eigendecomposition. Throws if a nonpositive eigenvalue shows up
/// (cannot happen for PSD L and lambda1 >= 0 short of numerical
/// corruption).
Matrix sigma_factor(const Matrix& laplacian, double lambda1);

/// Scaled data matrix X * Sigma.
Matrix scaled_matrix(const Matrix& x, const Matrix& sigma);

/// Thin SVD of the scaled matrix. Throws if the input is the zero matrix.
SvdTriplets svd_triplets(const Matrix& x_scaled);

/// Convenience pipeline: knn graph -> Laplacian -> Sigma -> X * Sigma.
Matrix build_scaled_matrix(const DataSet& data);

}  // namespace aopbench
