#ifndef BRSTLAB_LINALG_HPP
#define BRSTLAB_LINALG_HPP

// Dense complex linear-algebra substrate: rank-revealing kernels and ranges,
// Hermitian spectral decomposition, and the single global tolerance policy.
// All rank decisions use a relative singular-value cutoff (rank_rel * sigma_max)
// with an absolute fallback for matrices that are zero to working precision.

#include <cmath>
#include <complex>
#include <sstream>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include "brstlab/errors.hpp"

namespace brstlab {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

struct Tolerance {
  double abs = 1e-10;      // absolute residual threshold
  double rank_rel = 1e-9;  // relative singular-value cutoff for rank decisions

  void validate() const {
    if (!(abs >= 0.0) || !std::isfinite(abs) || !(rank_rel >= 0.0) ||
        !std::isfinite(rank_rel)) {
      throw Error("Tolerance fields must be nonnegative and finite");
    }
  }
};

inline void require_finite(const Matrix& A, const char* what = "matrix") {
  if (!A.allFinite()) {
    throw Error(std::string(what) + " contains NaN/Inf entries");
  }
}

inline void require_square(const Matrix& A, const char* what = "matrix") {
  if (A.rows() != A.cols()) {
    std::ostringstream os;
    os << what << " must be square, got " << A.rows() << "x" << A.cols();
    throw DimensionError(os.str());
  }
}

// Frobenius norm; the residual currency used throughout.
inline double fnorm(const Matrix& A) { return A.norm(); }

inline Matrix identity(Eigen::Index d) { return Matrix::Identity(d, d); }

// ---------------------------------------------------------------------------
// Rank-revealing SVD helpers
// ---------------------------------------------------------------------------

namespace detail {

inline Eigen::Index rank_from_singular_values(const RealVector& sv,
                                              const Tolerance& tol) {
  if (sv.size() == 0) return 0;
  const double smax = sv(0);
  if (smax <= tol.abs) return 0;  // numerically the zero matrix
  const double cut = tol.rank_rel * smax;
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cut) ++r;
  return r;
}

// Refuse the rank decision when singular values crowd the cutoff.
inline void check_rank_gap(const RealVector& sv, const Tolerance& tol) {
  if (sv.size() == 0) return;
  const double smax = sv(0);
  if (smax <= tol.abs) return;
  const double cut = tol.rank_rel * smax;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut / 3.0 && sv(i) < cut * 3.0) {
      std::ostringstream os;
      os << "singular value " << sv(i) << " straddles rank cutoff " << cut;
      throw RankAmbiguityError(os.str());
    }
  }
}

} // namespace detail

// Orthonormal (Hilbert) basis of the numerical nullspace of A, as columns.
inline Matrix kernel_basis(const Matrix& A, const Tolerance& tol = {}) {
  require_finite(A);
  tol.validate();
  if (A.rows() == 0) return identity(A.cols());
  Eigen::BDCSVD<Matrix> svd(A, Eigen::ComputeFullV);
  const Eigen::Index r = detail::rank_from_singular_values(svd.singularValues(), tol);
  const Matrix& V = svd.matrixV();
  return V.rightCols(V.cols() - r);
}

// Orthonormal basis of the numerical column space of A, as columns.
inline Matrix range_basis(const Matrix& A, const Tolerance& tol = {},
                          bool strict_gap = false) {
  require_finite(A);
  tol.validate();
  Eigen::BDCSVD<Matrix> svd(A, Eigen::ComputeThinU);
  if (strict_gap) detail::check_rank_gap(svd.singularValues(), tol);
  const Eigen::Index r = detail::rank_from_singular_values(svd.singularValues(), tol);
  return svd.matrixU().leftCols(r);
}

inline Eigen::Index numerical_rank(const Matrix& A, const Tolerance& tol = {}) {
  require_finite(A);
  Eigen::BDCSVD<Matrix> svd(A);
  return detail::rank_from_singular_values(svd.singularValues(), tol);
}

// Hermitian idempotent projecting onto the numerical column space of A.
inline Matrix range_projection(const Matrix& A, const Tolerance& tol = {},
                               bool strict_gap = false) {
  const Matrix U = range_basis(A, tol, strict_gap);
  if (U.cols() == 0) return Matrix::Zero(A.rows(), A.rows());
  return U * U.adjoint();
}

// Hermitian projection onto the span of the (orthonormal) columns of V.
inline Matrix projection_onto(const Matrix& V) {
  if (V.cols() == 0) return Matrix::Zero(V.rows(), V.rows());
  return V * V.adjoint();
}

// ---------------------------------------------------------------------------
// Hermitian spectral decomposition
// ---------------------------------------------------------------------------

struct HermitianEig {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // orthonormal columns
};

inline HermitianEig hermitian_eig(const Matrix& A, const Tolerance& tol = {}) {
  require_finite(A);
  require_square(A, "hermitian_eig input");
  const double scale = std::max(1.0, fnorm(A));
  if (fnorm(A - A.adjoint()) > tol.abs * scale) {
    throw NotHermitianError("hermitian_eig: input is not Hermitian to tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (A + A.adjoint()));
  if (es.info() != Eigen::Success) {
    throw Error("hermitian_eig: eigensolver failed to converge");
  }
  return HermitianEig{es.eigenvalues(), es.eigenvectors()};
}

// Signature (n_plus, n_minus, n_zero) of a Hermitian form given by matrix M.
struct Signature {
  Eigen::Index n_plus = 0;
  Eigen::Index n_minus = 0;
  Eigen::Index n_zero = 0;
};

inline Signature form_signature(const Matrix& M, const Tolerance& tol = {}) {
  Signature sig;
  if (M.rows() == 0) return sig;
  const HermitianEig eig = hermitian_eig(0.5 * (M + M.adjoint()), tol);
  const double scale = std::max(1.0, eig.eigenvalues.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const double v = eig.eigenvalues(i);
    if (v > tol.rank_rel * scale) {
      ++sig.n_plus;
    } else if (v < -tol.rank_rel * scale) {
      ++sig.n_minus;
    } else {
      ++sig.n_zero;
    }
  }
  return sig;
}

} // namespace brstlab

#endif // BRSTLAB_LINALG_HPP
