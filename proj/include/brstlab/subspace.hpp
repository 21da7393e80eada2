#ifndef BRSTLAB_SUBSPACE_HPP
#define BRSTLAB_SUBSPACE_HPP

// Linear subspaces of the d x d matrix algebra, stored as a basis that is
// orthonormal under the Hilbert-Schmidt inner product tr(A* B).  Used for
// Ker delta, Ran delta, commutants, and physical algebras.

#include <vector>

#include "brstlab/linalg.hpp"

namespace brstlab {

// Column-major vectorization; vec(AXB) = (B^T (x) A) vec(X).
inline Vector vec(const Matrix& A) {
  return Eigen::Map<const Vector>(A.data(), A.size());
}

inline Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

struct OperatorSubspace {
  Eigen::Index ambient_dim = 0;    // matrices are ambient_dim x ambient_dim
  std::vector<Matrix> basis;       // HS-orthonormal

  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis.size()); }

  // d^2 x r matrix whose columns are the vectorized basis elements.
  Matrix coefficient_matrix() const {
    const Eigen::Index d2 = ambient_dim * ambient_dim;
    Matrix C(d2, dim());
    for (Eigen::Index k = 0; k < dim(); ++k) C.col(k) = vec(basis[k]);
    return C;
  }
};

// Orthonormalize a spanning set into an OperatorSubspace (rank-revealing).
inline OperatorSubspace span_of(Eigen::Index ambient_dim,
                                const std::vector<Matrix>& gens,
                                const Tolerance& tol = {}) {
  OperatorSubspace S;
  S.ambient_dim = ambient_dim;
  if (gens.empty()) return S;
  const Eigen::Index d2 = ambient_dim * ambient_dim;
  Matrix A(d2, static_cast<Eigen::Index>(gens.size()));
  for (size_t k = 0; k < gens.size(); ++k) {
    require_square(gens[k], "span_of generator");
    if (gens[k].rows() != ambient_dim) {
      throw DimensionError("span_of: generator does not match ambient dimension");
    }
    A.col(static_cast<Eigen::Index>(k)) = vec(gens[k]);
  }
  const Matrix U = range_basis(A, tol);
  for (Eigen::Index k = 0; k < U.cols(); ++k) {
    S.basis.push_back(unvec(U.col(k), ambient_dim, ambient_dim));
  }
  return S;
}

// Subspace spanned by the columns of a d^2 x r coefficient matrix.
inline OperatorSubspace subspace_from_columns(Eigen::Index ambient_dim,
                                              const Matrix& cols) {
  OperatorSubspace S;
  S.ambient_dim = ambient_dim;
  for (Eigen::Index k = 0; k < cols.cols(); ++k) {
    S.basis.push_back(unvec(cols.col(k), ambient_dim, ambient_dim));
  }
  return S;
}

// Frobenius distance from A to the span.
inline double distance_to(const OperatorSubspace& S, const Matrix& A) {
  Vector v = vec(A);
  for (const Matrix& B : S.basis) {
    const Vector b = vec(B);
    v -= b.dot(v) * b;
  }
  return v.norm();
}

// max over the basis of W of the residual || (1 - P_V) w ||.
inline double containment_residual(const OperatorSubspace& W,
                                   const OperatorSubspace& V) {
  double worst = 0.0;
  for (const Matrix& B : W.basis) {
    worst = std::max(worst, distance_to(V, B));
  }
  return worst;
}

// Mutual projection residual; subspace equality when <= threshold.
inline double mutual_residual(const OperatorSubspace& V,
                              const OperatorSubspace& W) {
  return std::max(containment_residual(V, W), containment_residual(W, V));
}

inline OperatorSubspace intersect(const OperatorSubspace& V,
                                  const OperatorSubspace& W,
                                  const Tolerance& tol = {}) {
  if (V.ambient_dim != W.ambient_dim) {
    throw DimensionError("intersect: ambient dimensions differ");
  }
  OperatorSubspace S;
  S.ambient_dim = V.ambient_dim;
  if (V.dim() == 0 || W.dim() == 0) return S;
  const Matrix CV = V.coefficient_matrix();
  const Matrix CW = W.coefficient_matrix();
  // x in ker((1 - P_W) CV)  =>  CV x lies in W as well as V.
  const Matrix PW = CW * CW.adjoint();
  const Matrix D = CV - PW * CV;
  const Matrix N = kernel_basis(D, tol);
  if (N.cols() == 0) return S;
  return subspace_from_columns(V.ambient_dim, range_basis(CV * N, tol));
}

// Close a span under matrix multiplication (terminates: dim <= d^2).
inline OperatorSubspace close_under_multiplication(const OperatorSubspace& V,
                                                   const Tolerance& tol = {}) {
  OperatorSubspace cur = V;
  while (true) {
    std::vector<Matrix> gens = cur.basis;
    for (const Matrix& A : cur.basis) {
      for (const Matrix& B : cur.basis) {
        gens.push_back(A * B);
      }
    }
    OperatorSubspace next = span_of(cur.ambient_dim, gens, tol);
    if (next.dim() == cur.dim()) return next;
    cur = std::move(next);
  }
}

inline bool is_star_closed(const OperatorSubspace& V, double threshold) {
  for (const Matrix& B : V.basis) {
    if (distance_to(V, Matrix(B.adjoint())) > threshold) return false;
  }
  return true;
}

inline bool is_multiplicatively_closed(const OperatorSubspace& V,
                                       double threshold) {
  for (const Matrix& A : V.basis) {
    for (const Matrix& B : V.basis) {
      if (distance_to(V, A * B) > threshold) return false;
    }
  }
  return true;
}

// Sum of two spans.
inline OperatorSubspace join(const OperatorSubspace& V,
                             const OperatorSubspace& W,
                             const Tolerance& tol = {}) {
  if (V.ambient_dim != W.ambient_dim) {
    throw DimensionError("join: ambient dimensions differ");
  }
  std::vector<Matrix> gens = V.basis;
  gens.insert(gens.end(), W.basis.begin(), W.basis.end());
  return span_of(V.ambient_dim, gens, tol);
}

// The full matrix algebra as a subspace (elementary-matrix basis).
inline OperatorSubspace full_matrix_algebra(Eigen::Index d) {
  OperatorSubspace S;
  S.ambient_dim = d;
  S.basis.reserve(static_cast<size_t>(d) * static_cast<size_t>(d));
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) {
      Matrix E = Matrix::Zero(d, d);
      E(i, j) = 1.0;
      S.basis.push_back(std::move(E));
    }
  }
  return S;
}

} // namespace brstlab

#endif // BRSTLAB_SUBSPACE_HPP
