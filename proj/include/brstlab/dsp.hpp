#ifndef BRSTLAB_DSP_HPP
#define BRSTLAB_DSP_HPP

// The dsp-decomposition of a nilpotent Krein-symmetric charge,
//   H = H_d (+) H_s (+) H_p,  H_d = Ran Q,  H_p = Ran Q*,
//   H_s = Ker Q  ∩  Ker Q* = Ker Delta,
// the superderivation delta(A) = QA - gamma(A)Q as a d^2 x d^2 superoperator,
// Ker delta / Ran delta, the compression homomorphism Phi_s(A) = P_s A P_s,
// the structure theorem  Ran delta = Ker delta ∩ Ker Phi_s, and physical
// algebra extraction.

#include <optional>
#include <vector>

#include "brstlab/hamiltonian.hpp"
#include "brstlab/krein.hpp"
#include "brstlab/subspace.hpp"

namespace brstlab {

struct DspData {
  Matrix P_d, P_s, P_p;  // Hermitian projections
  Eigen::Index d_d = 0, d_s = 0, d_p = 0;
  double completeness_residual = 0.0;  // || P_d + P_s + P_p - 1 ||
  double orthogonality_residual = 0.0; // max pairwise product norm
  bool krein_selfadjoint = false;      // whether Q was Krein self-adjoint
  double krein_s_residual = 0.0;       // || J P_s J - P_s || when applicable
  double krein_dp_residual = 0.0;      // || J P_d J - P_p || when applicable
};

inline DspData dsp_decompose(const Matrix& Q, const KreinSpace& K,
                             const Tolerance& tol = {}) {
  require_square(Q, "dsp charge");
  if (Q.rows() != K.dim) throw DimensionError("dsp: charge size != Krein dim");
  const double qn = std::max(1.0, fnorm(Q));
  if (fnorm(Q * Q) > tol.abs * qn * qn) {
    throw NilpotencyError("dsp_decompose: charge is not nilpotent to tolerance");
  }

  DspData dsp;
  dsp.P_d = range_projection(Q, tol, /*strict_gap=*/true);
  dsp.P_p = range_projection(Matrix(Q.adjoint()), tol, /*strict_gap=*/true);

  // H_s = Ker Q ∩ Ker Q*, from the stacked kernel.
  Matrix stacked(2 * K.dim, K.dim);
  stacked.topRows(K.dim) = Q;
  stacked.bottomRows(K.dim) = Q.adjoint();
  const Matrix ker = kernel_basis(stacked, tol);
  dsp.P_s = projection_onto(ker);

  dsp.d_d = numerical_rank(dsp.P_d, tol);
  dsp.d_s = ker.cols();
  dsp.d_p = numerical_rank(dsp.P_p, tol);

  dsp.completeness_residual =
      fnorm(dsp.P_d + dsp.P_s + dsp.P_p - identity(K.dim));
  dsp.orthogonality_residual =
      std::max({fnorm(dsp.P_d * dsp.P_s), fnorm(dsp.P_d * dsp.P_p),
                fnorm(dsp.P_s * dsp.P_p)});

  dsp.krein_selfadjoint = is_krein_selfadjoint(Q, K, tol);
  if (dsp.krein_selfadjoint) {
    dsp.krein_s_residual = fnorm(K.J * dsp.P_s * K.J - dsp.P_s);
    dsp.krein_dp_residual = fnorm(K.J * dsp.P_d * K.J - dsp.P_p);
  }
  return dsp;
}

// Physicality: the BRST physical space carries a positive definite inner
// product iff J P_s = P_s.
struct PhysicalityReport {
  bool physical = false;
  double residual = 0.0;  // || J P_s - P_s ||
  Signature signature;    // of <<.,.>> restricted to Ran P_s
};

inline PhysicalityReport physicality_check(const DspData& dsp,
                                           const KreinSpace& K,
                                           const Tolerance& tol = {}) {
  PhysicalityReport rep;
  rep.residual = fnorm(K.J * dsp.P_s - dsp.P_s);
  rep.physical = rep.residual <= 100 * tol.abs;
  const Matrix V = range_basis(dsp.P_s, tol);
  rep.signature = form_signature(Matrix(V.adjoint() * K.J * V), tol);
  return rep;
}

// ---------------------------------------------------------------------------
// The superderivation as a superoperator
// ---------------------------------------------------------------------------

// d^2 x d^2 matrix of A |-> QA - Gamma A Gamma Q in the vec basis.
inline Matrix superderivation_matrix(const Matrix& Q, const Matrix& grading,
                                     const Tolerance& tol = {}) {
  require_square(Q, "superderivation charge");
  const Eigen::Index d = Q.rows();
  if (grading.rows() != d || grading.cols() != d) {
    throw GradingError("superderivation: grading size mismatch");
  }
  if (fnorm(grading * grading - identity(d)) > 100 * tol.abs ||
      fnorm(grading * Q * grading + Q) >
          100 * tol.abs * std::max(1.0, fnorm(Q))) {
    throw GradingError("superderivation: grading is incompatible with Q");
  }
  const Matrix GQ = grading * Q;
  return Eigen::kroneckerProduct(identity(d), Q).eval() -
         Eigen::kroneckerProduct(GQ.transpose(), grading).eval();
}

// Apply the superoperator to a single matrix.
inline Matrix apply_super(const Matrix& sup, const Matrix& A) {
  const Eigen::Index d = A.rows();
  return unvec(Vector(sup * vec(A)), d, d);
}

namespace detail {

inline void check_super_size(Eigen::Index d) {
  if (d > 64) {
    throw SizeError("superoperator work is capped at ambient dimension 64");
  }
}

} // namespace detail

// Ker delta, optionally intersected with (the multiplicative closure of) a
// given subspace.
inline OperatorSubspace ker_delta(
    const Matrix& sup, Eigen::Index ambient_dim,
    const std::optional<OperatorSubspace>& restrict_to = std::nullopt,
    const Tolerance& tol = {}) {
  detail::check_super_size(ambient_dim);
  if (!restrict_to) {
    return subspace_from_columns(ambient_dim, kernel_basis(sup, tol));
  }
  if (restrict_to->ambient_dim != ambient_dim) {
    throw DimensionError("ker_delta: restrict_to ambient dimension mismatch");
  }
  OperatorSubspace alg = *restrict_to;
  // The pairwise closure check is quadratic in the subspace dimension; above
  // 64 basis elements the caller is responsible for passing a closed algebra.
  if (alg.dim() <= 64 && !is_multiplicatively_closed(alg, 100 * tol.abs)) {
    alg = close_under_multiplication(alg, tol);
  }
  if (alg.dim() == 0) return alg;
  const Matrix V = alg.coefficient_matrix();
  const Matrix N = kernel_basis(Matrix(sup * V), tol);
  if (N.cols() == 0) {
    OperatorSubspace empty;
    empty.ambient_dim = ambient_dim;
    return empty;
  }
  return subspace_from_columns(ambient_dim, range_basis(V * N, tol));
}

// Ran delta; also verifies Ran delta <= Ker delta.
inline OperatorSubspace ran_delta(const Matrix& sup, Eigen::Index ambient_dim,
                                  const Tolerance& tol = {}) {
  detail::check_super_size(ambient_dim);
  const OperatorSubspace ran =
      subspace_from_columns(ambient_dim, range_basis(sup, tol));
  for (const Matrix& B : ran.basis) {
    if ((sup * vec(B)).norm() > 100 * tol.abs * std::max(1.0, fnorm(sup))) {
      throw StructureTheoremViolation("Ran delta is not contained in Ker delta");
    }
  }
  return ran;
}

// Phi_s(A) = P_s A P_s.
inline Matrix phi_s(const Matrix& A, const DspData& dsp) {
  return dsp.P_s * A * dsp.P_s;
}

inline OperatorSubspace phi_s(const OperatorSubspace& S, const DspData& dsp,
                              const Tolerance& tol = {}) {
  std::vector<Matrix> imgs;
  imgs.reserve(S.basis.size());
  for (const Matrix& B : S.basis) imgs.push_back(phi_s(B, dsp));
  return span_of(S.ambient_dim, imgs, tol);
}

// ---------------------------------------------------------------------------
// Structure theorem:  Ran delta = Ker delta ∩ Ker Phi_s  on the full algebra,
// hence  Ker delta / Ran delta  is isomorphic to  Phi_s(Ker delta).
// ---------------------------------------------------------------------------

struct StructureTheoremReport {
  Eigen::Index dim_ker = 0, dim_ran = 0, dim_phi_image = 0;
  double residual_ran_in_kerphi = 0.0;  // Ran delta inside Ker delta ∩ Ker Phi_s
  double residual_kerphi_in_ran = 0.0;  // and conversely
  bool holds = false;
};

inline StructureTheoremReport structure_theorem_check(const Matrix& sup,
                                                      const DspData& dsp,
                                                      const Tolerance& tol = {}) {
  const Eigen::Index d = dsp.P_s.rows();
  detail::check_super_size(d);
  StructureTheoremReport rep;

  const OperatorSubspace ker = ker_delta(sup, d, std::nullopt, tol);
  const OperatorSubspace ran = ran_delta(sup, d, tol);
  rep.dim_ker = ker.dim();
  rep.dim_ran = ran.dim();

  // Ker delta ∩ Ker Phi_s from the stacked superoperator.
  const Matrix phis_super =
      Eigen::kroneckerProduct(dsp.P_s.transpose(), dsp.P_s).eval();
  Matrix stacked(2 * d * d, d * d);
  stacked.topRows(d * d) = sup;
  stacked.bottomRows(d * d) = phis_super;
  const OperatorSubspace both =
      subspace_from_columns(d, kernel_basis(stacked, tol));

  rep.residual_ran_in_kerphi = containment_residual(ran, both);
  rep.residual_kerphi_in_ran = containment_residual(both, ran);
  rep.dim_phi_image = phi_s(ker, dsp, tol).dim();
  rep.holds = std::max(rep.residual_ran_in_kerphi, rep.residual_kerphi_in_ran) <=
              100 * tol.abs;
  if (!rep.holds) {
    throw StructureTheoremViolation(
        "Ran delta != Ker delta ∩ Ker Phi_s beyond tolerance");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// BRST physical algebra: Phi_s(Ker delta ∩ restrict_to), realized on Ran P_s.
// ---------------------------------------------------------------------------

struct PhysicalAlgebraReport {
  OperatorSubspace on_ambient;  // span of P_s B P_s in the ambient algebra
  OperatorSubspace on_hs;       // same, compressed to an ON basis of Ran P_s
  bool restrict_was_closed = true;
  bool star_closed = false;
  bool krein_involution_factors = false;
};

inline PhysicalAlgebraReport brst_physical_algebra(
    const Matrix& sup, const DspData& dsp, const KreinSpace& K,
    const std::optional<OperatorSubspace>& restrict_to = std::nullopt,
    const Tolerance& tol = {}) {
  const Eigen::Index d = dsp.P_s.rows();
  PhysicalAlgebraReport rep;
  if (restrict_to && restrict_to->dim() <= 64) {
    rep.restrict_was_closed =
        is_multiplicatively_closed(*restrict_to, 100 * tol.abs);
  }
  const OperatorSubspace ker = ker_delta(sup, d, restrict_to, tol);
  rep.on_ambient = phi_s(ker, dsp, tol);

  const Matrix V = range_basis(dsp.P_s, tol);
  std::vector<Matrix> small;
  small.reserve(rep.on_ambient.basis.size());
  for (const Matrix& B : rep.on_ambient.basis) {
    small.push_back(V.adjoint() * B * V);
  }
  rep.on_hs = span_of(V.cols(), small, tol);

  rep.star_closed = is_star_closed(rep.on_ambient, 100 * tol.abs);
  // The Krein involution factors iff the span is dag-closed: B |-> J B* J.
  rep.krein_involution_factors = true;
  for (const Matrix& B : rep.on_ambient.basis) {
    if (distance_to(rep.on_ambient, krein_adjoint(B, K)) > 100 * tol.abs) {
      rep.krein_involution_factors = false;
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Vector-state condition (three equivalent formulations)
// ---------------------------------------------------------------------------

struct StateConditionReport {
  bool annihilates_AQ = false;    // <w, A Q w> = 0 for spanning A
  bool annihilates_delta = false; // <w, delta(A) w> = 0 for spanning A
  bool annihilates_Delta = false; // <w, Delta w> = 0
};

inline StateConditionReport state_condition_check(const Vector& omega,
                                                  const BrstComplex& cplx,
                                                  const Tolerance& tol = {}) {
  StateConditionReport rep;
  const Eigen::Index d = cplx.total_dim;
  const Vector w = omega / omega.norm();
  const Vector Qw = cplx.Q * w;
  const Vector Qsw = cplx.Q.adjoint() * w;

  // (i) sup_A |<w, A Q w>| over elementary A equals max_ij |w_i (Qw)_j|.
  double worst1 = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      worst1 = std::max(worst1, std::abs(std::conj(w(i)) * Qw(j)));
    }
  }
  rep.annihilates_AQ = worst1 <= 100 * tol.abs;

  // (ii) <w, delta(E_ij) w> = <w, Q E_ij w> - <w, Gamma E_ij Gamma Q w>.
  const Vector gw = cplx.grading * w;
  const Vector gQw = cplx.grading * Qw;
  double worst2 = 0.0;
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const Cplx val = std::conj(Qsw(i)) * w(j) - std::conj(gw(i)) * gQw(j);
      worst2 = std::max(worst2, std::abs(val));
    }
  }
  rep.annihilates_delta = worst2 <= 100 * tol.abs;

  const double dval = std::abs(w.dot(delta_operator(cplx) * w));
  rep.annihilates_Delta = dval <= 100 * tol.abs;
  return rep;
}

} // namespace brstlab

#endif // BRSTLAB_DSP_HPP
