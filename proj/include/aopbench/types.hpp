#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace aopbench {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Raw problem instance: data matrix plus regularizers and the
/// neighborhood size used to build the similarity graph. Columns of `x`
/// are data points.
struct DataSet {
  Matrix x;               // n x m, columns are points
  double lambda1 = 0.0;   // graph regularizer, >= 0
  double lambda2 = 1.0;   // ridge regularizer, > 0
  int neighbor_count = 1; // graph neighborhood size, < m

  int n() const { return static_cast<int>(x.rows()); }
  int m() const { return static_cast<int>(x.cols()); }

  /// Throws std::invalid_argument on any violated invariant.
  void validate() const;
};

/// Thin SVD of the scaled data matrix.
struct SvdTriplets {
  Matrix left_vectors;     // n x r, orthonormal columns
  Matrix right_vectors;    // m x r, orthonormal columns
  Vector singular_values;  // descending, positive
  int rank = 0;            // numerically nonzero count

  void validate() const;
};

/// The k retained squared singular values of the scaled data matrix,
/// normalized so sigma_sq[0] == 1, plus the condition number. This is the
/// only data the scalar solvers and the pipeline emulators need.
struct SpectralModel {
  int k = 0;
  std::vector<double> sigma_sq;  // descending, sigma_sq[0] == 1
  double kappa = 1.0;            // 1 / sqrt(sigma_sq[k-1])
  double scale = 1.0;            // discarded global factor (raw sigma_0)

  void validate() const;
};

/// Builds a SpectralModel from the top-k components of an SVD. Components
/// with squared singular value below 1e-14 relative to the largest are
/// rejected as rank-deficient input.
SpectralModel spectral_model_from_svd(const SvdTriplets& svd, int k);

/// Synthetic spectrum: sigma_sq[0] = 1 and sigma_sq[k-1] = 1/kappa^2
/// exactly, interior values i.i.d. uniform in (1/kappa^2, 1), sorted
/// descending. Deterministic per seed. Requires k >= 2 and kappa > 1.
SpectralModel random_spectrum(int k, double kappa, std::uint64_t seed);

}  // namespace aopbench
