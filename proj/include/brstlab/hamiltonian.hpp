#ifndef BRSTLAB_HAMILTONIAN_HPP
#define BRSTLAB_HAMILTONIAN_HPP

// Hamiltonian BRST complex for a finite constraint set:
//   Q = G_a (x) eta_a - (i/2) C^c_{ab} 1 (x) eta_a eta_b rho_c
// (summation over repeated indices, realized as explicit loops), together with
//   Sigma_a = -i C^c_{ab} 1 (x) eta_b rho_c
// and the BRST Laplacian Delta = Q Q* + Q* Q.

#include <string>
#include <vector>

#include "brstlab/constraints.hpp"
#include "brstlab/ghost.hpp"

namespace brstlab {

// Uniform view of either ghost representation.
struct GhostSector {
  int m = 0;
  Eigen::Index dim = 0;
  std::vector<Matrix> eta;  // 0-based: eta[j] is eta_{j+1}
  std::vector<Matrix> rho;
  Matrix J;
  Matrix grading;
  Matrix ghost_number;
  std::string kind;  // "full" or "berezin"
};

inline GhostSector sector_of(const GhostRep& rep) {
  GhostSector s;
  s.m = rep.m;
  s.dim = rep.fock_dim;
  for (int j = 1; j <= rep.m; ++j) {
    s.eta.push_back(eta(rep, j));
    s.rho.push_back(rho(rep, j));
  }
  s.J = rep.J_g;
  s.grading = rep.parity;
  s.ghost_number = rep.G;
  s.kind = "full";
  return s;
}

inline GhostSector sector_of(const BerezinRep& rep) {
  GhostSector s;
  s.m = rep.m;
  s.dim = rep.dim;
  s.eta = rep.eta;
  s.rho = rep.rho;
  s.J = rep.J_bz;
  s.grading = rep.grading;
  s.ghost_number = rep.G_sf;
  s.kind = "berezin";
  return s;
}

struct BrstComplex {
  Eigen::Index total_dim = 0;
  Matrix Q;
  Matrix J_T;       // total fundamental symmetry
  Matrix grading;   // Gamma implementing the Z_2 grading
  Matrix G_total;   // 1 (x) ghost number
  std::string factors;
  Eigen::Index matter_dim = 0;
  Eigen::Index ghost_dim = 0;

  KreinSpace krein() const { return KreinSpace{total_dim, J_T}; }
};

namespace detail {

inline void validate_complex(const BrstComplex& cplx, const Tolerance& tol) {
  const double q2 = fnorm(cplx.Q * cplx.Q);
  const double qn = std::max(1.0, fnorm(cplx.Q));
  if (q2 > tol.abs * qn * qn) {
    throw ClosureError("BRST charge is not 2-nilpotent (bad structure constants?)");
  }
  const Matrix Qdag = cplx.J_T * cplx.Q.adjoint() * cplx.J_T;
  if (fnorm(cplx.Q - Qdag) > 10 * tol.abs * qn) {
    throw ClosureError("BRST charge is not Krein symmetric");
  }
  const Matrix comm = cplx.G_total * cplx.Q - cplx.Q * cplx.G_total;
  if (fnorm(comm - cplx.Q) > 10 * tol.abs * qn) {
    throw ClosureError("BRST charge does not have ghost number one");
  }
  if (fnorm(cplx.grading * cplx.Q * cplx.grading + cplx.Q) > 10 * tol.abs * qn) {
    throw GradingError("BRST charge is not odd under the grading");
  }
}

} // namespace detail

inline BrstComplex build_hamiltonian_Q(const ConstraintSystem& sys,
                                       const GhostSector& ghosts,
                                       const Tolerance& tol = {}) {
  const int n = sys.n();
  if (ghosts.m != n) {
    throw ShapeError("ghost pair count must equal the number of constraints");
  }
  const Eigen::Index d0 = sys.h0_dim;
  const Eigen::Index dg = ghosts.dim;

  BrstComplex cplx;
  cplx.matter_dim = d0;
  cplx.ghost_dim = dg;
  cplx.total_dim = d0 * dg;
  cplx.factors = "matter(" + std::to_string(d0) + ") x ghost[" + ghosts.kind +
                 "](" + std::to_string(dg) + ")";

  Matrix Q = Matrix::Zero(cplx.total_dim, cplx.total_dim);
  for (int a = 0; a < n; ++a) {
    Q += Eigen::kroneckerProduct(sys.G[static_cast<size_t>(a)],
                                 ghosts.eta[static_cast<size_t>(a)]).eval();
  }
  if (!sys.abelian()) {
    Matrix corr = Matrix::Zero(dg, dg);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          const double v = sys.C(c, a, b);
          if (v != 0.0) {
            corr += v * (ghosts.eta[static_cast<size_t>(a)] *
                         ghosts.eta[static_cast<size_t>(b)] *
                         ghosts.rho[static_cast<size_t>(c)]);
          }
        }
      }
    }
    Q -= Cplx(0.0, 0.5) *
         Eigen::kroneckerProduct(identity(d0), corr).eval();
  }
  cplx.Q = std::move(Q);
  cplx.J_T = Eigen::kroneckerProduct(identity(d0), ghosts.J).eval();
  cplx.grading = Eigen::kroneckerProduct(identity(d0), ghosts.grading).eval();
  cplx.G_total =
      Eigen::kroneckerProduct(identity(d0), ghosts.ghost_number).eval();

  detail::validate_complex(cplx, tol);
  return cplx;
}

// Delta = Q Q* + Q* Q (Hermitian, positive semidefinite).
inline Matrix delta_operator(const BrstComplex& cplx) {
  return cplx.Q * cplx.Q.adjoint() + cplx.Q.adjoint() * cplx.Q;
}

// Sigma_a = -i C^c_{ab} 1 (x) eta_b rho_c; Hermitian and Krein-Hermitian.
inline std::vector<Matrix> sigma_operators(const ConstraintSystem& sys,
                                           const GhostSector& ghosts) {
  const int n = sys.n();
  if (ghosts.m != n) {
    throw ShapeError("ghost pair count must equal the number of constraints");
  }
  std::vector<Matrix> out;
  const Eigen::Index d0 = sys.h0_dim;
  for (int a = 0; a < n; ++a) {
    Matrix s = Matrix::Zero(ghosts.dim, ghosts.dim);
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const double v = sys.C(c, a, b);
        if (v != 0.0) {
          s += Cplx(0.0, -1.0) * v *
               (ghosts.eta[static_cast<size_t>(b)] *
                ghosts.rho[static_cast<size_t>(c)]);
        }
      }
    }
    out.push_back(Eigen::kroneckerProduct(identity(d0), s).eval());
  }
  return out;
}

// Multiple Copies of the Physical Space report for abelian systems:
// Ker Delta = (intersection of the constraint kernels) tensor the ghost space,
// and its Krein signature exhibits the indefiniteness.
struct McpsReport {
  Eigen::Index dirac_dim = 0;       // dim of the matter physical space
  Eigen::Index brst_dim = 0;        // dim Ker Delta
  Eigen::Index ghost_space_dim = 0; // the multiplication factor
  double tensor_residual = 0.0;     // || P_kerDelta - P_dirac (x) 1 ||
  Signature kernel_signature;       // of the Krein form on Ker Delta
  Eigen::Index positive_subspace_dim = 0; // dim of (Ker Delta)_+ (reported only)
};

inline McpsReport mcps_report(const BrstComplex& cplx,
                              const ConstraintSystem& sys,
                              const Tolerance& tol = {}) {
  if (!sys.abelian()) {
    throw UnsupportedError("mcps_report applies to abelian systems only");
  }
  McpsReport rep;
  rep.ghost_space_dim = cplx.ghost_dim;

  Matrix sq = Matrix::Zero(sys.h0_dim, sys.h0_dim);
  for (const Matrix& Ga : sys.G) sq += Ga.adjoint() * Ga;
  const Matrix ker_matter = kernel_basis(sq, tol);
  rep.dirac_dim = ker_matter.cols();

  const Matrix Delta = delta_operator(cplx);
  const Matrix ker_total = kernel_basis(Delta, tol);
  rep.brst_dim = ker_total.cols();

  const Matrix P_brst = projection_onto(ker_total);
  const Matrix P_expected = Eigen::kroneckerProduct(
      projection_onto(ker_matter), identity(cplx.ghost_dim)).eval();
  rep.tensor_residual = fnorm(P_brst - P_expected);

  const Matrix form = ker_total.adjoint() * cplx.J_T * ker_total;
  rep.kernel_signature = form_signature(form, tol);
  rep.positive_subspace_dim = rep.kernel_signature.n_plus;
  return rep;
}

} // namespace brstlab

#endif // BRSTLAB_HAMILTONIAN_HPP
