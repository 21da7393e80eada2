#ifndef BRSTLAB_DIRAC_HPP
#define BRSTLAB_DIRAC_HPP

// Matrix-scale Dirac constraining: the physical subspace P = proj onto
// ∩_a Ker G_a, the observable algebra O = {A : P A (1-P) = (1-P) A P = 0}
// (block diagonal in the P split), the physical algebra P_phys = (1-P) O (1-P)
// realized as all matrices on the physical block, and the commutant of the
// constraint set.  Plus the containment comparison against a BRST physical
// algebra realized on H_s.

#include <optional>
#include <string>
#include <vector>

#include "brstlab/constraints.hpp"
#include "brstlab/subspace.hpp"

namespace brstlab {

// Nullspace of the stacked superoperators A |-> [A, G_a].  The result is a
// unital *-subalgebra (verified).
inline OperatorSubspace commutant(const std::vector<Matrix>& generators,
                                  const Tolerance& tol = {}) {
  if (generators.empty()) throw ShapeError("commutant: no generators");
  const Eigen::Index d = generators.front().rows();
  if (d > 64) throw SizeError("commutant: ambient dimension capped at 64");
  for (const Matrix& G : generators) {
    require_square(G, "commutant generator");
    if (G.rows() != d) throw DimensionError("commutant: mixed generator sizes");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(generators.size());
  Matrix stacked(n * d * d, d * d);
  const Matrix id = identity(d);
  for (Eigen::Index a = 0; a < n; ++a) {
    const Matrix& G = generators[static_cast<size_t>(a)];
    // vec([A,G]) = (G^T (x) 1 - 1 (x) G) vec(A)
    stacked.middleRows(a * d * d, d * d) =
        Eigen::kroneckerProduct(G.transpose(), id).eval() -
        Eigen::kroneckerProduct(id, G).eval();
  }
  OperatorSubspace C = subspace_from_columns(d, kernel_basis(stacked, tol));
  if (!is_multiplicatively_closed(C, 100 * tol.abs) ||
      !is_star_closed(C, 100 * tol.abs)) {
    throw Error("commutant: output failed the algebra sanity check");
  }
  return C;
}

struct DiracResult {
  Matrix P_phys_space;  // projection onto ∩_a Ker G_a
  Matrix P_open;        // 1 - P_phys_space
  Eigen::Index phys_dim = 0;
  bool phys_space_empty = false;  // reported, not an exception
  OperatorSubspace observables;     // block-diagonal matrices in the split
  OperatorSubspace physical_algebra; // compressions P A P on the physical block
  OperatorSubspace commutant_;       // {G_a}' inside the full matrix algebra
  Matrix phys_frame;  // ON basis of the physical subspace (columns)
};

inline DiracResult dirac_constrain(const ConstraintSystem& sys,
                                   const Tolerance& tol = {}) {
  DiracResult res;
  const Eigen::Index d = sys.h0_dim;

  Matrix sq = Matrix::Zero(d, d);
  for (const Matrix& G : sys.G) sq += G.adjoint() * G;
  const Matrix ker = kernel_basis(sq, tol);
  res.phys_frame = ker;
  res.phys_dim = ker.cols();
  res.phys_space_empty = (res.phys_dim == 0);
  res.P_phys_space = projection_onto(ker);
  res.P_open = identity(d) - res.P_phys_space;

  // Observables: block diagonal w.r.t. the split, spanned by P E P and
  // (1-P) E (1-P) over elementary matrices E.
  std::vector<Matrix> gens;
  const OperatorSubspace full = full_matrix_algebra(d);
  for (const Matrix& E : full.basis) {
    gens.push_back(res.P_phys_space * E * res.P_phys_space);
    gens.push_back(res.P_open * E * res.P_open);
  }
  res.observables = span_of(d, gens, tol);

  // Physical algebra: everything on the physical block.
  std::vector<Matrix> pgens;
  for (const Matrix& E : full.basis) {
    pgens.push_back(res.P_phys_space * E * res.P_phys_space);
  }
  res.physical_algebra = span_of(d, pgens, tol);

  res.commutant_ = commutant(sys.G, tol);
  return res;
}

// ---------------------------------------------------------------------------
// Comparison against the BRST physical algebra on H_s.
// ---------------------------------------------------------------------------

enum class CompareVerdict { equivalent, brst_strictly_larger, incomparable };

inline const char* to_string(CompareVerdict v) {
  switch (v) {
    case CompareVerdict::equivalent: return "equivalent";
    case CompareVerdict::brst_strictly_larger: return "brst_strictly_larger";
    default: return "incomparable";
  }
}

struct CompareReport {
  CompareVerdict verdict = CompareVerdict::incomparable;
  Eigen::Index dirac_dim = 0;
  Eigen::Index brst_dim = 0;
  double residual_dirac_in_brst = 0.0;
  double residual_brst_in_dirac = 0.0;
  std::optional<Matrix> witness;  // BRST element far from the Dirac image
  std::string embedding;          // how the Dirac algebra was realized on H_s
};

// `dirac_on_hs` is the image of the Dirac physical algebra realized on the
// same frame as `brst_on_hs` (the caller provides the embedding; it is echoed
// into the report for auditability).
inline CompareReport compare_dirac_brst(const OperatorSubspace& dirac_on_hs,
                                        const OperatorSubspace& brst_on_hs,
                                        const std::string& embedding,
                                        const Tolerance& tol = {}) {
  if (dirac_on_hs.ambient_dim != brst_on_hs.ambient_dim) {
    throw ShapeError("compare_dirac_brst: algebras live on different spaces");
  }
  CompareReport rep;
  rep.embedding = embedding;
  rep.dirac_dim = dirac_on_hs.dim();
  rep.brst_dim = brst_on_hs.dim();
  rep.residual_dirac_in_brst = containment_residual(dirac_on_hs, brst_on_hs);
  rep.residual_brst_in_dirac = containment_residual(brst_on_hs, dirac_on_hs);
  const double thr = 100 * tol.abs;
  if (rep.residual_dirac_in_brst <= thr && rep.residual_brst_in_dirac <= thr) {
    rep.verdict = CompareVerdict::equivalent;
  } else if (rep.residual_dirac_in_brst <= thr) {
    rep.verdict = CompareVerdict::brst_strictly_larger;
    // Witness: the BRST basis element furthest from the Dirac span.
    double best = -1.0;
    for (const Matrix& B : brst_on_hs.basis) {
      const double dist = distance_to(dirac_on_hs, B);
      if (dist > best) {
        best = dist;
        rep.witness = B;
      }
    }
  } else {
    rep.verdict = CompareVerdict::incomparable;
  }
  return rep;
}

} // namespace brstlab

#endif // BRSTLAB_DIRAC_HPP
