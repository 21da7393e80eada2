#ifndef BRSTLAB_CONSTRAINTS_HPP
#define BRSTLAB_CONSTRAINTS_HPP

// A finite set of Hermitian constraints G_a closing under the bracket
// [G_a, G_b] = i C^c_{ab} G_c with real, totally antisymmetric structure
// constants.  Violations are hard errors: a silently wrong C makes Q^2 != 0.

#include <vector>

#include "brstlab/subspace.hpp"

namespace brstlab {

struct ConstraintSystem {
  Eigen::Index h0_dim = 0;
  std::vector<Matrix> G;      // Hermitian constraint matrices
  std::vector<double> C_flat; // C[c][a][b], flattened; empty means abelian

  int n() const { return static_cast<int>(G.size()); }

  double C(int c, int a, int b) const {
    if (C_flat.empty()) return 0.0;
    const int nn = n();
    return C_flat[static_cast<size_t>((c * nn + a) * nn + b)];
  }

  bool abelian() const {
    for (double v : C_flat) {
      if (v != 0.0) return false;
    }
    return true;
  }
};

inline ConstraintSystem make_constraint_system(Eigen::Index h0_dim,
                                               std::vector<Matrix> G,
                                               std::vector<double> C_flat = {},
                                               const Tolerance& tol = {}) {
  ConstraintSystem sys;
  sys.h0_dim = h0_dim;
  sys.G = std::move(G);
  sys.C_flat = std::move(C_flat);
  const int n = sys.n();
  if (n == 0) throw ShapeError("constraint system needs at least one constraint");
  if (!sys.C_flat.empty() &&
      sys.C_flat.size() != static_cast<size_t>(n) * n * n) {
    throw ShapeError("structure constants must be an n x n x n tensor");
  }

  double scale = 1.0;
  for (const Matrix& Ga : sys.G) {
    require_finite(Ga, "constraint");
    require_square(Ga, "constraint");
    if (Ga.rows() != h0_dim) {
      throw DimensionError("constraint size does not match h0_dim");
    }
    scale = std::max(scale, fnorm(Ga));
    if (fnorm(Ga - Ga.adjoint()) > tol.abs * scale * 10) {
      throw NotHermitianError("constraint matrix is not Hermitian");
    }
  }

  // Linear independence via the Gram matrix of vectorized constraints.
  {
    Matrix V(h0_dim * h0_dim, n);
    for (int a = 0; a < n; ++a) V.col(a) = vec(sys.G[static_cast<size_t>(a)]);
    if (numerical_rank(V, tol) != n) {
      throw ShapeError("constraints are not linearly independent");
    }
  }

  // Total antisymmetry of C and the bracket closure.
  for (int c = 0; c < n; ++c) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const double v = sys.C(c, a, b);
        if (std::abs(v + sys.C(c, b, a)) > tol.abs ||
            std::abs(v + sys.C(a, c, b)) > tol.abs) {
          throw ClosureError("structure constants are not totally antisymmetric");
        }
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Matrix lhs = sys.G[static_cast<size_t>(a)] * sys.G[static_cast<size_t>(b)] -
                   sys.G[static_cast<size_t>(b)] * sys.G[static_cast<size_t>(a)];
      for (int c = 0; c < n; ++c) {
        lhs -= Cplx(0.0, 1.0) * sys.C(c, a, b) * sys.G[static_cast<size_t>(c)];
      }
      if (fnorm(lhs) > tol.abs * scale * scale * 100) {
        throw ClosureError("constraint bracket does not close on the given C");
      }
    }
  }
  // Jacobi identity for C (automatic for consistent brackets; checked anyway).
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int e = 0; e < n; ++e) {
          double s = 0.0;
          for (int d = 0; d < n; ++d) {
            s += sys.C(d, a, b) * sys.C(e, d, c) +
                 sys.C(d, b, c) * sys.C(e, d, a) +
                 sys.C(d, c, a) * sys.C(e, d, b);
          }
          if (std::abs(s) > 100 * tol.abs) {
            throw ClosureError("structure constants violate the Jacobi identity");
          }
        }
      }
    }
  }
  return sys;
}

} // namespace brstlab

#endif // BRSTLAB_CONSTRAINTS_HPP
