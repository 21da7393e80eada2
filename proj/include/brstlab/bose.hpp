#ifndef BRSTLAB_BOSE_HPP
#define BRSTLAB_BOSE_HPP

// Truncated bosonic Fock-Krein sector.  The one-particle space is
// C^{dt + 2m}: indices 0..dt-1 span the transversal part D_t, dt..dt+m-1 the
// neutral half D_1 (vectors f_j), dt+m..dt+2m-1 the swapped half D_2 (J f_j).
// The Fock basis is the set of occupation tuples with total particle number
// <= cutoff, in lexicographic order from recursive generation (vacuum first).
// Creators annihilate the top sector, so truncation-sensitive identities are
// asserted only on the guard subspace (total <= cutoff - guard).
//
// On top of the sector: the finite KO-Abelian charge (compressed to its
// invariant subspace N_b + N_g <= cutoff, where it is exactly nilpotent), the
// Gupta-Bleuler comparison, the combined matter+boson+ghost charge, and the
// ladder kernel splitting check.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "brstlab/hamiltonian.hpp"

namespace brstlab {

struct BosonicSector {
  Eigen::Index dt_dim = 0;
  int m = 0;
  Eigen::Index cutoff = 0;
  Eigen::Index one_particle_dim = 0;       // dt_dim + 2m
  Eigen::Index fock_dim = 0;
  int guard = 1;                            // degree budget for creator terms
  std::vector<std::vector<int>> states;     // occupation tuples
  std::vector<Matrix> a;                    // annihilators per one-particle index
  Matrix J_b;                               // second-quantized J (permutation)
  Matrix N_b;                               // total number operator (diagonal)
  Eigen::Index vacuum_index = 0;

  // Antilinear smeared annihilator a(f) = sum_i conj(f_i) a_i.
  Matrix a_field(const Vector& f) const {
    Matrix out = Matrix::Zero(fock_dim, fock_dim);
    for (Eigen::Index i = 0; i < one_particle_dim; ++i) {
      out += std::conj(f(i)) * a[static_cast<size_t>(i)];
    }
    return out;
  }

  Matrix a_star_field(const Vector& f) const {
    Matrix out = Matrix::Zero(fock_dim, fock_dim);
    for (Eigen::Index i = 0; i < one_particle_dim; ++i) {
      out += f(i) * a[static_cast<size_t>(i)].adjoint();
    }
    return out;
  }

  Vector apply_one_particle_J(const Vector& f) const {
    Vector g = f;
    for (int j = 0; j < m; ++j) {
      g(dt_dim + j) = f(dt_dim + m + j);
      g(dt_dim + m + j) = f(dt_dim + j);
    }
    return g;
  }

  // Krein field A(f) = (a(f) + a*(Jf)) / sqrt(2).
  Matrix A_field(const Vector& f) const {
    return (a_field(f) + a_star_field(apply_one_particle_J(f))) /
           std::sqrt(2.0);
  }

  // One-particle basis vector for f_j in D_1 (j 1-based) and its J image.
  Vector f_vec(int j) const {
    Vector f = Vector::Zero(one_particle_dim);
    f(dt_dim + j - 1) = 1.0;
    return f;
  }
  Vector Jf_vec(int j) const {
    Vector f = Vector::Zero(one_particle_dim);
    f(dt_dim + m + j - 1) = 1.0;
    return f;
  }

  // Isometry whose columns are the basis states with total <= cutoff - g.
  Matrix guard_isometry(int g) const {
    std::vector<Eigen::Index> keep;
    for (Eigen::Index n = 0; n < fock_dim; ++n) {
      int tot = 0;
      for (int v : states[static_cast<size_t>(n)]) tot += v;
      if (tot <= cutoff - g) keep.push_back(n);
    }
    Matrix W = Matrix::Zero(fock_dim, static_cast<Eigen::Index>(keep.size()));
    for (size_t k = 0; k < keep.size(); ++k) {
      W(keep[k], static_cast<Eigen::Index>(k)) = 1.0;
    }
    return W;
  }
};

inline BosonicSector build_bosonic_sector(Eigen::Index dt_dim, int m,
                                          Eigen::Index cutoff) {
  if (cutoff < 2) throw SizeError("build_bosonic_sector: cutoff must be >= 2");
  if (dt_dim < 0 || m < 0 || dt_dim + 2 * m < 1 || dt_dim + 2 * m > 6) {
    throw SizeError("build_bosonic_sector: need 1 <= dt_dim + 2m <= 6");
  }
  BosonicSector sec;
  sec.dt_dim = dt_dim;
  sec.m = m;
  sec.cutoff = cutoff;
  sec.one_particle_dim = dt_dim + 2 * m;
  const int p = static_cast<int>(sec.one_particle_dim);

  // Occupation tuples, lexicographic via depth-first generation.
  std::vector<int> pref(static_cast<size_t>(p), 0);
  std::function<void(int, int)> rec = [&](int pos, int total) {
    if (pos == p) {
      sec.states.push_back(pref);
      return;
    }
    for (int n = 0; n <= static_cast<int>(cutoff) - total; ++n) {
      pref[static_cast<size_t>(pos)] = n;
      rec(pos + 1, total + n);
    }
    pref[static_cast<size_t>(pos)] = 0;
  };
  rec(0, 0);
  sec.fock_dim = static_cast<Eigen::Index>(sec.states.size());
  if (sec.fock_dim > 4096) throw SizeError("build_bosonic_sector: fock_dim > 4096");

  std::map<std::vector<int>, Eigen::Index> idx;
  for (Eigen::Index n = 0; n < sec.fock_dim; ++n) {
    idx[sec.states[static_cast<size_t>(n)]] = n;
  }

  for (int i = 0; i < p; ++i) {
    Matrix A = Matrix::Zero(sec.fock_dim, sec.fock_dim);
    for (Eigen::Index n = 0; n < sec.fock_dim; ++n) {
      const std::vector<int>& s = sec.states[static_cast<size_t>(n)];
      if (s[static_cast<size_t>(i)] > 0) {
        std::vector<int> s2 = s;
        s2[static_cast<size_t>(i)] -= 1;
        A(idx.at(s2), n) = std::sqrt(static_cast<double>(s[static_cast<size_t>(i)]));
      }
    }
    sec.a.push_back(std::move(A));
  }

  sec.J_b = Matrix::Zero(sec.fock_dim, sec.fock_dim);
  sec.N_b = Matrix::Zero(sec.fock_dim, sec.fock_dim);
  for (Eigen::Index n = 0; n < sec.fock_dim; ++n) {
    std::vector<int> s2 = sec.states[static_cast<size_t>(n)];
    for (int j = 0; j < m; ++j) {
      std::swap(s2[static_cast<size_t>(dt_dim + j)],
                s2[static_cast<size_t>(dt_dim + m + j)]);
    }
    sec.J_b(idx.at(s2), n) = 1.0;
    int tot = 0;
    for (int v : sec.states[static_cast<size_t>(n)]) tot += v;
    sec.N_b(n, n) = static_cast<double>(tot);
  }
  return sec;
}

// ---------------------------------------------------------------------------
// Finite KO-Abelian charge on (truncated boson) (x) (full ghost Fock),
// compressed to the invariant subspace { N_b + N_g <= cutoff } on which it is
// exactly nilpotent and Krein symmetric.
// ---------------------------------------------------------------------------

struct KoComplex {
  BrstComplex cplx;        // the compressed complex (exact on its space)
  Matrix embed;            // isometry: invariant subspace -> boson (x) ghost
  Eigen::Index ambient_dim = 0;  // fock_dim * ghost_dim before compression
  double invariance_residual = 0.0;  // || (1 - W W*) Q W ||
  Eigen::Index bose_dim = 0, ghost_dim = 0;
};

inline KoComplex build_ko_abelian_Q(const BosonicSector& sector,
                                    const GhostRep& ghosts,
                                    const Tolerance& tol = {}) {
  if (ghosts.m != sector.m) {
    throw ShapeError("build_ko_abelian_Q: ghost pair count != sector.m");
  }
  const int m = sector.m;
  const Eigen::Index Db = sector.fock_dim;
  const Eigen::Index Dg = ghosts.fock_dim;
  const Eigen::Index D = Db * Dg;

  Matrix Q = Matrix::Zero(D, D);
  for (int j = 1; j <= m; ++j) {
    const Matrix astar_Jf = sector.a_star_field(sector.Jf_vec(j));
    const Matrix a_f = sector.a_field(sector.f_vec(j));
    Q += Eigen::kroneckerProduct(astar_Jf, ghosts.c_op(m + j)).eval() +
         Eigen::kroneckerProduct(a_f, Matrix(ghosts.c_op(j).adjoint())).eval();
  }

  // Ghost number with weight +1 for c*_j and for c_{m+j} (so [G, Q] = Q) and
  // total ghost occupation for the conserved quantity N_b + N_g.
  Matrix Ngh = Matrix::Zero(Dg, Dg);
  Matrix Gg = Matrix::Zero(Dg, Dg);
  for (int k = 1; k <= 2 * m; ++k) {
    const Matrix num = ghosts.c_op(k).adjoint() * ghosts.c_op(k);
    Ngh += num;
    Gg += (k <= m) ? num : -num;
  }

  // Invariant subspace selector.
  std::vector<Eigen::Index> keep;
  for (Eigen::Index b = 0; b < Db; ++b) {
    const long nb = std::lround(sector.N_b(b, b).real());
    for (Eigen::Index g = 0; g < Dg; ++g) {
      const long ng = std::lround(Ngh(g, g).real());
      if (nb + ng <= sector.cutoff) keep.push_back(b * Dg + g);
    }
  }
  Matrix W = Matrix::Zero(D, static_cast<Eigen::Index>(keep.size()));
  for (size_t k = 0; k < keep.size(); ++k) {
    W(keep[k], static_cast<Eigen::Index>(k)) = 1.0;
  }

  KoComplex ko;
  ko.ambient_dim = D;
  ko.bose_dim = Db;
  ko.ghost_dim = Dg;
  ko.embed = W;
  ko.invariance_residual = fnorm(Q * W - W * (W.adjoint() * Q * W));

  BrstComplex& c = ko.cplx;
  c.total_dim = W.cols();
  c.matter_dim = Db;
  c.ghost_dim = Dg;
  c.factors = "boson(" + std::to_string(Db) + ") x ghost[full](" +
              std::to_string(Dg) + ") | N_b+N_g <= " +
              std::to_string(sector.cutoff);
  c.Q = W.adjoint() * Q * W;
  c.J_T = W.adjoint() *
          Eigen::kroneckerProduct(sector.J_b, ghosts.J_g).eval() * W;
  c.grading = W.adjoint() *
              Eigen::kroneckerProduct(identity(Db), ghosts.parity).eval() * W;
  c.G_total = W.adjoint() *
              Eigen::kroneckerProduct(identity(Db), Gg).eval() * W;
  detail::validate_complex(c, tol);
  return ko;
}

// ---------------------------------------------------------------------------
// Gupta-Bleuler comparison on the truncated sector
// ---------------------------------------------------------------------------

struct GuptaBleulerReport {
  Eigen::Index hprime_dim = 0;    // H' = ∩_{f in D_1} Ker a(f)
  Eigen::Index neutral_dim = 0;   // H'' = Krein-neutral part of H'
  Eigen::Index quotient_dim = 0;  // dim H' / H''
  double isometry_residual = 0.0; // Gamma(P_t) as the quotient identification
};

inline GuptaBleulerReport gupta_bleuler_compare(const BosonicSector& sector,
                                                const Tolerance& tol = {}) {
  if (sector.dt_dim < 1) {
    throw ShapeError("gupta_bleuler_compare: needs dt_dim >= 1");
  }
  GuptaBleulerReport rep;
  const Eigen::Index D = sector.fock_dim;

  // Pure annihilator conditions: exact on the whole truncated space (guard 0).
  if (sector.m == 0) {
    rep.hprime_dim = D;
    rep.neutral_dim = 0;
    rep.quotient_dim = D;
    return rep;
  }
  Matrix stacked(sector.m * D, D);
  for (int j = 1; j <= sector.m; ++j) {
    stacked.middleRows((j - 1) * D, D) = sector.a_field(sector.f_vec(j));
  }
  const Matrix V = kernel_basis(stacked, tol);
  rep.hprime_dim = V.cols();

  const Matrix gram = V.adjoint() * sector.J_b * V;
  const Signature sig = form_signature(gram, tol);
  rep.neutral_dim = sig.n_zero;
  rep.quotient_dim = sig.n_plus + sig.n_minus;

  // Gamma(P_t): keep a basis state iff it is pure D_t; this identifies the
  // quotient with the truncated Fock space over D_t.  Verify
  // <Gamma psi, Gamma phi> = <psi, J_b phi> on H'.
  Matrix GammaPt = Matrix::Zero(D, D);
  for (Eigen::Index n = 0; n < D; ++n) {
    bool pure = true;
    const std::vector<int>& s = sector.states[static_cast<size_t>(n)];
    for (Eigen::Index i = sector.dt_dim; i < sector.one_particle_dim; ++i) {
      if (s[static_cast<size_t>(i)] != 0) pure = false;
    }
    if (pure) GammaPt(n, n) = 1.0;
  }
  const Matrix GV = GammaPt * V;
  rep.isometry_residual = fnorm(Matrix(GV.adjoint() * GV) - gram);
  return rep;
}

// ---------------------------------------------------------------------------
// Combined Hamiltonian + bosonic charge on matter (x) boson (x) ghost
// ---------------------------------------------------------------------------

struct CombinedComplex {
  Eigen::Index total_dim = 0;
  Matrix Q, J_T, grading;
  Matrix guard;                   // isometry onto { N_b <= cutoff - 1 }
  Eigen::Index guard_dim = 0;
  double nilpotency_residual = 0.0;  // || Q^2 guard ||
  double krein_residual = 0.0;       // || (Q - Q^dag) guard ||
  Eigen::Index matter_dim = 0, bose_dim = 0, ghost_dim = 0;
  std::string factors;
};

inline CombinedComplex build_combined_Q(const ConstraintSystem& sys,
                                        const BosonicSector& sector,
                                        const GhostRep& ghosts,
                                        const Tolerance& tol = {}) {
  if (!sys.abelian()) {
    throw UnsupportedError("build_combined_Q: non-abelian systems unsupported");
  }
  if (sector.dt_dim != 0) {
    throw ShapeError("build_combined_Q: sector must have dt_dim = 0");
  }
  if (sys.n() != sector.m || ghosts.m != sector.m) {
    throw ShapeError("build_combined_Q: constraint / boson / ghost counts differ");
  }
  const int m = sector.m;
  const Eigen::Index d0 = sys.h0_dim;
  const Eigen::Index Db = sector.fock_dim;
  const Eigen::Index Dg = ghosts.fock_dim;

  CombinedComplex cc;
  cc.matter_dim = d0;
  cc.bose_dim = Db;
  cc.ghost_dim = Dg;
  cc.total_dim = d0 * Db * Dg;
  cc.factors = "matter(" + std::to_string(d0) + ") x boson(" +
               std::to_string(Db) + ") x ghost[full](" + std::to_string(Dg) +
               ")";

  const Matrix id_b = identity(Db);
  Matrix Q = Matrix::Zero(cc.total_dim, cc.total_dim);
  for (int j = 1; j <= m; ++j) {
    const Vector fj = sector.f_vec(j);
    const Vector ifj = Cplx(0.0, 1.0) * fj;
    Vector gJf = Vector::Zero(2 * m);         // ghost one-particle J f_j
    gJf(m + j - 1) = 1.0;
    const Vector igJf = Cplx(0.0, 1.0) * gJf;

    const Matrix mb_f =
        Eigen::kroneckerProduct(sys.G[static_cast<size_t>(j - 1)], id_b).eval() +
        Eigen::kroneckerProduct(identity(d0),
                                Matrix(std::sqrt(2.0) * sector.A_field(fj)))
            .eval();
    const Matrix mb_if =
        Eigen::kroneckerProduct(sys.G[static_cast<size_t>(j - 1)], id_b).eval() +
        Eigen::kroneckerProduct(identity(d0),
                                Matrix(std::sqrt(2.0) * sector.A_field(ifj)))
            .eval();
    Q += Eigen::kroneckerProduct(mb_f, ghosts.C_field(gJf)).eval();
    Q += Eigen::kroneckerProduct(mb_if, ghosts.C_field(igJf)).eval();
  }
  cc.Q = std::move(Q);
  cc.J_T = Eigen::kroneckerProduct(
               Eigen::kroneckerProduct(identity(d0), sector.J_b).eval(),
               ghosts.J_g)
               .eval();
  cc.grading = Eigen::kroneckerProduct(
                   Matrix(identity(d0 * Db)), ghosts.parity)
                   .eval();

  // Guard: boson occupation <= cutoff - 1 (Q has creator degree 1).
  const Matrix Wb = sector.guard_isometry(1);
  cc.guard = Eigen::kroneckerProduct(
                 Eigen::kroneckerProduct(identity(d0), Wb).eval(),
                 identity(Dg))
                 .eval();
  cc.guard_dim = cc.guard.cols();

  cc.nilpotency_residual = fnorm(cc.Q * cc.Q * cc.guard);
  cc.krein_residual =
      fnorm((cc.Q - cc.J_T * cc.Q.adjoint() * cc.J_T) * cc.guard);
  const double qn = std::max(1.0, fnorm(cc.Q));
  if (cc.nilpotency_residual > tol.abs * qn * qn) {
    throw NilpotencyError("combined charge fails guarded nilpotency");
  }
  if (cc.krein_residual > 10 * tol.abs * qn) {
    throw ClosureError("combined charge fails guarded Krein symmetry");
  }
  return cc;
}

// Kernel of the truncated Laplacian intersected with the guard subspace,
// returned as an orthonormal frame in the ambient space.
inline Matrix combined_kernel_guard(const CombinedComplex& cc,
                                    const Tolerance& tol = {}) {
  const Matrix Delta =
      cc.Q * cc.Q.adjoint() + cc.Q.adjoint() * cc.Q;
  const Matrix ker = kernel_basis(Matrix(Delta * cc.guard), tol);
  if (ker.cols() == 0) return Matrix::Zero(cc.total_dim, 0);
  return range_basis(Matrix(cc.guard * ker), tol);
}

// ---------------------------------------------------------------------------
// Ladder kernel splitting:
//   Ker(G (x) 1 + 1 (x) a(g)) = (Ker G (x) 1) ∩ (1 (x) Ker a(g))
// on the guard subspace of matter (x) boson.
// ---------------------------------------------------------------------------

inline bool ladder_kernel_check(const Matrix& G, const BosonicSector& sector,
                                const Vector& g, const Tolerance& tol = {}) {
  require_square(G, "ladder_kernel_check constraint");
  if (fnorm(G - G.adjoint()) > 100 * tol.abs * std::max(1.0, fnorm(G))) {
    throw NotHermitianError("ladder_kernel_check: G must be Hermitian");
  }
  const Eigen::Index d0 = G.rows();
  const Eigen::Index Db = sector.fock_dim;
  const Matrix W = Eigen::kroneckerProduct(identity(d0),
                                           sector.guard_isometry(0))
                       .eval();
  const Matrix ag = sector.a_field(g);
  const Matrix L =
      Eigen::kroneckerProduct(G, identity(Db)).eval() +
      Eigen::kroneckerProduct(identity(d0), ag).eval();

  const Matrix kerL = kernel_basis(Matrix(L * W), tol);
  Matrix stacked(2 * W.rows(), W.cols());
  stacked.topRows(W.rows()) =
      Eigen::kroneckerProduct(G, identity(Db)).eval() * W;
  stacked.bottomRows(W.rows()) =
      Eigen::kroneckerProduct(identity(d0), ag).eval() * W;
  const Matrix kerBoth = kernel_basis(stacked, tol);

  const Matrix P1 = projection_onto(kerL);
  const Matrix P2 = projection_onto(kerBoth);
  return fnorm(P1 - P2) <= 100 * tol.abs * std::max<double>(1, P1.rows());
}

} // namespace brstlab

#endif // BRSTLAB_BOSE_HPP
