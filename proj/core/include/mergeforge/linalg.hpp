#pragma once

#include <cstddef>
#include <vector>

#include "mergeforge/dense_matrix.hpp"

namespace mergeforge {

// Relative threshold for numerical rank: sigma_i counts while > tol * sigma_1.
inline constexpr double kRankRelTol = 1e-8;

// Thin SVD M = U diag(s) V^T with a deterministic sign convention: each V
// column's largest-magnitude entry is positive (ties broken by lowest index),
// and U columns are flipped in lockstep so the reconstruction is unchanged.
struct SvdResult {
  DenseMatrix U;                        // rows(M) x k
  std::vector<double> singular_values;  // length k, nonincreasing
  DenseMatrix V;                        // cols(M) x k
};

// d x r matrix with orthonormal columns. rank may come out smaller than
// requested when the source matrix is rank-deficient.
struct OrthonormalBasis {
  std::size_t dim = 0;
  std::size_t rank = 0;
  DenseMatrix columns;  // dim x rank

  static OrthonormalBasis empty(std::size_t dim) { return {dim, 0, DenseMatrix(dim, 0)}; }
};

SvdResult svd(const DenseMatrix& m);

std::size_t numerical_rank(const std::vector<double>& singular_values);

OrthonormalBasis top_right_singular_vectors(const DenseMatrix& m, std::size_t r);

// P = I - V V^T. Symmetric, idempotent, annihilates span(V).
DenseMatrix complement_projector(const OrthonormalBasis& v);

// M (I - V V^T) without materializing the projector.
DenseMatrix project_out_columns(const DenseMatrix& m, const OrthonormalBasis& v);

// (1/rank(V_d)) * ||V_hat^T V_d||_F^2, in [0, 1].
double subspace_affinity(const OrthonormalBasis& v_d, const OrthonormalBasis& v_hat);

double spectral_norm(const DenseMatrix& m);

std::vector<double> singular_values(const DenseMatrix& m);

// QR-derived random orthonormal d x r (deterministic in rng state).
DenseMatrix random_orthonormal(std::size_t dim, std::size_t r, SplitMix64& rng);

}  // namespace mergeforge
