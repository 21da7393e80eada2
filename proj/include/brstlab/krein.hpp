#ifndef BRSTLAB_KREIN_HPP
#define BRSTLAB_KREIN_HPP

// Krein spaces: a fundamental symmetry J (J^2 = 1, J* = J) on a
// finite-dimensional complex Hilbert space defines the indefinite inner
// product <<x, y>> = <x, J y>.  The Krein adjoint of an operator A is
// A^dag = J A* J, where * is the Hilbert (conjugate-transpose) adjoint.

#include "brstlab/linalg.hpp"

namespace brstlab {

struct KreinSpace {
  Eigen::Index dim = 0;
  Matrix J;  // fundamental symmetry

  static KreinSpace make(Matrix J_in, const Tolerance& tol = {}) {
    require_finite(J_in, "fundamental symmetry");
    require_square(J_in, "fundamental symmetry");
    const Eigen::Index d = J_in.rows();
    const double scale = std::max(1.0, fnorm(J_in));
    if (fnorm(J_in * J_in - identity(d)) > tol.abs * scale * 10) {
      throw Error("KreinSpace: J^2 != 1 to tolerance");
    }
    if (fnorm(J_in - J_in.adjoint()) > tol.abs * scale * 10) {
      throw Error("KreinSpace: J is not Hermitian to tolerance");
    }
    return KreinSpace{d, std::move(J_in)};
  }

  static KreinSpace trivial(Eigen::Index d) {
    return KreinSpace{d, identity(d)};
  }

  // <<x, y>> = <x, J y>
  Cplx indefinite_inner(const Vector& x, const Vector& y) const {
    return x.dot(J * y);
  }
};

// Krein adjoint A^dag = J A* J.
inline Matrix krein_adjoint(const Matrix& A, const KreinSpace& K) {
  require_square(A, "krein_adjoint input");
  if (A.rows() != K.dim) {
    throw DimensionError("krein_adjoint: operator size does not match space");
  }
  return K.J * A.adjoint() * K.J;
}

inline bool is_krein_selfadjoint(const Matrix& A, const KreinSpace& K,
                                 const Tolerance& tol = {}) {
  const double scale = std::max(1.0, fnorm(A));
  return fnorm(A - krein_adjoint(A, K)) <= tol.abs * scale * 10;
}

} // namespace brstlab

#endif // BRSTLAB_KREIN_HPP
