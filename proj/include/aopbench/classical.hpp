#pragma once

#include <vector>

#include "aopbench/types.hpp"

namespace aopbench {

/// Matrix-space solver state: the projection matrix A (n x k, unit
/// Frobenius norm after each step), the auxiliary regression matrix B
/// (m x k), and the recorded surrogate-objective values.
struct ProjectionIterate {
  Matrix a;
  Matrix b;
  int iteration = 0;
  std::vector<double> objective_history;  // residual objective per iteration
};

/// A-optimality criterion Tr[(A^T Xt Xt^T A + lambda2 I)^-1]. Positive for
/// lambda2 > 0.
double trace_objective(const Matrix& a, const Matrix& x_scaled, double lambda2);

/// Regularized-residual surrogate ||I - A^T Xt B||_F^2 + lambda2 ||B||_F^2.
double residual_objective(const Matrix& a, const Matrix& b,
                          const Matrix& x_scaled, double lambda2);

/// PCA start: the top-k left singular vectors of Xt scaled by 1/sqrt(k),
/// so the start has unit Frobenius norm and k equal singular values.
/// Throws if rank(Xt) < k.
Matrix pca_init(const Matrix& x_scaled, int k);

/// Closed-form minimizer of the residual objective over B at fixed A:
/// B = (Xt^T A A^T Xt + lambda2 I)^-1 Xt^T A.
Matrix update_b(const Matrix& a, const Matrix& x_scaled, double lambda2);

/// A-step (Xt B B^T Xt^T)^+ Xt B using the Moore-Penrose pseudoinverse
/// (the n x n product has rank <= k; eigenvalues below 1e-12 of the
/// largest are treated as zero), then rescaled to unit Frobenius norm.
/// Throws if Xt B == 0.
Matrix update_a(const Matrix& b, const Matrix& x_scaled);

/// Singular values of the projection iterate, descending.
Vector projection_spectrum(const Matrix& a);

struct ClassicalSolveResult {
  ProjectionIterate iterate;
  bool converged = false;
  int iterations = 0;
  std::vector<double> trace_objective_history;
  std::vector<Vector> spectrum_history;  // singular values per iteration
};

/// Alternates update_b / update_a from pca_init until the sup-norm change
/// of A's singular-value vector drops below tol or max_iter is reached.
/// Non-convergence is reported through the flag, never thrown.
ClassicalSolveResult solve_classical_scaled(const Matrix& x_scaled, int k,
                                            double lambda2, double tol,
                                            int max_iter);

/// Full pipeline from a raw data set: builds the scaled matrix, rescales
/// it so its top singular value is 1 (unless normalize is false), and
/// runs the alternating solver.
ClassicalSolveResult solve_classical(const DataSet& data, int k, double tol,
                                     int max_iter, bool normalize = true);

}  // namespace aopbench
