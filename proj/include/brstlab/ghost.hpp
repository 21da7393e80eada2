#ifndef BRSTLAB_GHOST_HPP
#define BRSTLAB_GHOST_HPP

// Fermionic ghost sector.  The one-particle space is 2m-dimensional with two
// neutral halves exchanged by the fundamental symmetry J: modes 1..m carry the
// basis f_j, modes m+1..2m carry J f_j.  Ghost and conjugate-ghost fields are
//   eta_j = (c_j + c*_{m+j}) / sqrt(2),   rho_j = (c_{m+j} + c*_j) / sqrt(2),
// both Krein-Hermitian, with {eta_j, rho_k} = delta_jk and vanishing
// like-brackets.  The ghost number operator is G = N_1 - N_2 where N_1 counts
// modes m+1..2m and N_2 counts modes 1..m, so G Omega = 0 and [G, eta_j] = eta_j.
//
// Jordan-Wigner convention: mode 1 is the outermost tensor factor, i.e. the
// occupation of mode k is bit (2m - k) of the basis index; the vacuum is
// index 0.  This fixes every matrix entry deterministically.

#include <vector>

#include "brstlab/krein.hpp"
#include "brstlab/subspace.hpp"

namespace brstlab {

namespace fermi {

// Apply annihilator of mode k (1-based, M modes total) to a Fock vector.
inline Vector apply_c(int M, int k, const Vector& v) {
  const Eigen::Index dim = v.size();
  Vector out = Vector::Zero(dim);
  const int bit = M - k;
  for (Eigen::Index n = 0; n < dim; ++n) {
    if (v(n) == Cplx(0.0)) continue;
    if (!((n >> bit) & 1)) continue;  // mode k unoccupied: annihilated
    // Jordan-Wigner string: parity of occupations of modes 1..k-1.
    int sign = 0;
    for (int j = 1; j < k; ++j) sign ^= static_cast<int>((n >> (M - j)) & 1);
    out(n & ~(Eigen::Index(1) << bit)) += (sign ? -1.0 : 1.0) * v(n);
  }
  return out;
}

inline Vector apply_cstar(int M, int k, const Vector& v) {
  const Eigen::Index dim = v.size();
  Vector out = Vector::Zero(dim);
  const int bit = M - k;
  for (Eigen::Index n = 0; n < dim; ++n) {
    if (v(n) == Cplx(0.0)) continue;
    if ((n >> bit) & 1) continue;  // already occupied
    int sign = 0;
    for (int j = 1; j < k; ++j) sign ^= static_cast<int>((n >> (M - j)) & 1);
    out(n | (Eigen::Index(1) << bit)) += (sign ? -1.0 : 1.0) * v(n);
  }
  return out;
}

// Second quantization of a signed mode permutation perm (1-based), acting on
// the fermionic Fock space with the wedge-reordering sign.
inline Matrix gamma_permutation(int M, const std::vector<int>& perm) {
  const Eigen::Index dim = Eigen::Index(1) << M;
  Matrix G = Matrix::Zero(dim, dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    std::vector<int> img;
    for (int k = 1; k <= M; ++k) {
      if ((n >> (M - k)) & 1) img.push_back(perm[static_cast<size_t>(k - 1)]);
    }
    int sign = 1;
    for (size_t i = 0; i + 1 < img.size(); ++i) {       // bubble sort parity
      for (size_t j = 0; j + 1 < img.size() - i; ++j) {
        if (img[j] > img[j + 1]) {
          std::swap(img[j], img[j + 1]);
          sign = -sign;
        }
      }
    }
    Eigen::Index n2 = 0;
    for (int k : img) n2 |= Eigen::Index(1) << (M - k);
    G(n2, n) = sign;
  }
  return G;
}

} // namespace fermi

struct GhostRep {
  int m = 0;                  // number of ghost pairs
  Eigen::Index fock_dim = 0;  // 2^(2m)
  std::vector<Matrix> c;      // annihilators, modes 1..2m (0-based storage)
  Matrix J_g;                 // second-quantized fundamental symmetry
  Matrix G;                   // ghost number operator N_1 - N_2
  Matrix parity;              // (-1)^N, implements the Z_2 grading
  Eigen::Index vacuum_index = 0;

  const Matrix& c_op(int mode) const {  // 1-based
    if (mode < 1 || mode > 2 * m) throw IndexError("ghost mode out of range");
    return c[static_cast<size_t>(mode - 1)];
  }

  // Antilinear smeared annihilator c(f) = sum_k conj(f_k) c_k, f in C^{2m}.
  Matrix c_field(const Vector& f) const {
    Matrix out = Matrix::Zero(fock_dim, fock_dim);
    for (int k = 0; k < 2 * m; ++k) out += std::conj(f(k)) * c[static_cast<size_t>(k)];
    return out;
  }

  Matrix c_star_field(const Vector& f) const {
    Matrix out = Matrix::Zero(fock_dim, fock_dim);
    for (int k = 0; k < 2 * m; ++k) out += f(k) * c[static_cast<size_t>(k)].adjoint();
    return out;
  }

  // One-particle fundamental symmetry: swaps mode j <-> m + j.
  Vector apply_one_particle_J(const Vector& f) const {
    Vector g(2 * m);
    for (int j = 0; j < m; ++j) {
      g(j) = f(m + j);
      g(m + j) = f(j);
    }
    return g;
  }

  // Krein-Hermitian Clifford field C(f) = (c(f) + c*(Jf)) / sqrt(2).
  Matrix C_field(const Vector& f) const {
    return (c_field(f) + c_star_field(apply_one_particle_J(f))) / std::sqrt(2.0);
  }
};

inline GhostRep build_ghost_rep(int m) {
  if (m < 1 || m > 5) throw SizeError("build_ghost_rep: need 1 <= m <= 5");
  GhostRep rep;
  rep.m = m;
  const int M = 2 * m;
  rep.fock_dim = Eigen::Index(1) << M;
  const Eigen::Index dim = rep.fock_dim;

  // Dense annihilators from the vector-level Jordan-Wigner action.
  rep.c.reserve(static_cast<size_t>(M));
  for (int k = 1; k <= M; ++k) {
    Matrix ck(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
      Vector e = Vector::Zero(dim);
      e(col) = 1.0;
      ck.col(col) = fermi::apply_c(M, k, e);
    }
    rep.c.push_back(std::move(ck));
  }

  std::vector<int> perm(static_cast<size_t>(M));
  for (int j = 1; j <= m; ++j) {
    perm[static_cast<size_t>(j - 1)] = m + j;
    perm[static_cast<size_t>(m + j - 1)] = j;
  }
  rep.J_g = fermi::gamma_permutation(M, perm);

  Matrix N1 = Matrix::Zero(dim, dim), N2 = Matrix::Zero(dim, dim);
  for (int k = 1; k <= m; ++k) N2 += rep.c_op(k).adjoint() * rep.c_op(k);
  for (int k = m + 1; k <= M; ++k) N1 += rep.c_op(k).adjoint() * rep.c_op(k);
  rep.G = N1 - N2;

  rep.parity = Matrix::Zero(dim, dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    int count = 0;
    for (int b = 0; b < M; ++b) count += static_cast<int>((n >> b) & 1);
    rep.parity(n, n) = (count % 2 == 0) ? 1.0 : -1.0;
  }
  return rep;
}

inline Matrix eta(const GhostRep& rep, int j) {
  if (j < 1 || j > rep.m) throw IndexError("eta: ghost index out of range");
  return (rep.c_op(j) + rep.c_op(rep.m + j).adjoint()) / std::sqrt(2.0);
}

inline Matrix rho(const GhostRep& rep, int j) {
  if (j < 1 || j > rep.m) throw IndexError("rho: ghost index out of range");
  return (rep.c_op(rep.m + j) + rep.c_op(j).adjoint()) / std::sqrt(2.0);
}

// Eigenspace of the superoperator A |-> [G, A] with eigenvalue n.  G is
// diagonal with integer spectrum in the occupation basis, so the eigenspace is
// spanned exactly by the elementary matrices E_ij with g_i - g_j = n.
inline OperatorSubspace ghost_grading(const GhostRep& rep, int n) {
  OperatorSubspace S;
  S.ambient_dim = rep.fock_dim;
  std::vector<long> g(static_cast<size_t>(rep.fock_dim));
  for (Eigen::Index i = 0; i < rep.fock_dim; ++i) {
    g[static_cast<size_t>(i)] = std::lround(rep.G(i, i).real());
  }
  for (Eigen::Index jcol = 0; jcol < rep.fock_dim; ++jcol) {
    for (Eigen::Index irow = 0; irow < rep.fock_dim; ++irow) {
      if (g[static_cast<size_t>(irow)] - g[static_cast<size_t>(jcol)] == n) {
        Matrix E = Matrix::Zero(rep.fock_dim, rep.fock_dim);
        E(irow, jcol) = 1.0;
        S.basis.push_back(std::move(E));
      }
    }
  }
  return S;
}

// ---------------------------------------------------------------------------
// Berezin (restricted) representation
// ---------------------------------------------------------------------------
//
// The 2^m-dimensional irreducible representation with a cyclic vector
// Omega_sf annihilated by every conjugate ghost.  It is constructed inside
// the full Fock space from
//   psi = rho_1 ... rho_m (eta_1 ... eta_m + i^{m(m-1)/2} 1) Omega,
//   Omega_sf = psi / (sqrt(2) ||eta_1...eta_m rho_1...rho_m Omega||),
// with basis S = { eta_{j1} ... eta_{jk} Omega_sf : j1 < ... < jk } ordered by
// the binary counter on subsets of {1..m} (bit j-1 <-> eta_j; Omega_sf first).

struct BerezinRep {
  int m = 0;
  Eigen::Index dim = 0;       // 2^m
  Matrix embed;               // isometry from Berezin space into full Fock space
  std::vector<Matrix> eta;    // eta_j on the Berezin space (0-based storage)
  std::vector<Matrix> rho;
  Matrix G_sf;                // ghost number, spectrum {k - m/2}
  Matrix J_bz;                // restricted fundamental symmetry
  Matrix grading;             // (-1)^(G_sf + m/2)
  Eigen::Index omega_sf_index = 0;
};

inline BerezinRep build_berezin(int m) {
  if (m < 1 || m > 6) throw SizeError("build_berezin: need 1 <= m <= 6");
  const int M = 2 * m;
  const Eigen::Index fock = Eigen::Index(1) << M;
  const Eigen::Index bdim = Eigen::Index(1) << m;

  auto apply_eta = [&](int j, const Vector& v) -> Vector {  // 1-based j
    return (fermi::apply_c(M, j, v) + fermi::apply_cstar(M, m + j, v)) /
           std::sqrt(2.0);
  };
  auto apply_rho = [&](int j, const Vector& v) -> Vector {
    return (fermi::apply_c(M, m + j, v) + fermi::apply_cstar(M, j, v)) /
           std::sqrt(2.0);
  };

  Vector omega = Vector::Zero(fock);
  omega(0) = 1.0;

  // eta_1 ... eta_m Omega and rho_1 ... rho_m Omega (rightmost factor first).
  Vector eta_all = omega;
  for (int j = m; j >= 1; --j) eta_all = apply_eta(j, eta_all);
  Vector rho_all = omega;
  for (int j = m; j >= 1; --j) rho_all = apply_rho(j, rho_all);

  // normalization vector eta_1..eta_m rho_1..rho_m Omega
  Vector nvec = rho_all;
  for (int j = m; j >= 1; --j) nvec = apply_eta(j, nvec);
  const double norm_const = std::sqrt(2.0) * nvec.norm();

  const int ph = (m * (m - 1) / 2) % 4;
  static const Cplx iphase[4] = {Cplx(1, 0), Cplx(0, 1), Cplx(-1, 0), Cplx(0, -1)};
  Vector inner = eta_all + iphase[ph] * omega;
  Vector psi = inner;
  for (int j = m; j >= 1; --j) psi = apply_rho(j, psi);
  const Vector omega_sf = psi / norm_const;

  // Basis S in binary-counter order.
  Matrix S(fock, bdim);
  for (Eigen::Index k = 0; k < bdim; ++k) {
    Vector v = omega_sf;
    for (int j = m; j >= 1; --j) {
      if ((k >> (j - 1)) & 1) v = apply_eta(j, v);
    }
    S.col(k) = v;
  }

  // Hilbert Gram-Schmidt via QR; S has full column rank.
  Eigen::HouseholderQR<Matrix> qr(S);
  Matrix E = qr.householderQ() * Matrix::Identity(fock, bdim);
  // Fix phases so that E^* S is upper triangular with positive diagonal.
  Matrix R = E.adjoint() * S;
  for (Eigen::Index k = 0; k < bdim; ++k) {
    Cplx r = R(k, k);
    if (std::abs(r) > 0) E.col(k) *= r / std::abs(r);
  }

  BerezinRep rep;
  rep.m = m;
  rep.dim = bdim;
  rep.embed = E;

  // Compress eta_j, rho_j columnwise (the Berezin space is invariant).
  for (int j = 1; j <= m; ++j) {
    Matrix ej(bdim, bdim), rj(bdim, bdim);
    for (Eigen::Index k = 0; k < bdim; ++k) {
      ej.col(k) = E.adjoint() * apply_eta(j, Vector(E.col(k)));
      rj.col(k) = E.adjoint() * apply_rho(j, Vector(E.col(k)));
    }
    rep.eta.push_back(std::move(ej));
    rep.rho.push_back(std::move(rj));
  }

  // J restricted: apply the mode permutation with fermionic signs columnwise.
  std::vector<int> perm(static_cast<size_t>(M));
  for (int j = 1; j <= m; ++j) {
    perm[static_cast<size_t>(j - 1)] = m + j;
    perm[static_cast<size_t>(m + j - 1)] = j;
  }
  const Matrix Jg = fermi::gamma_permutation(M, perm);
  rep.J_bz = E.adjoint() * Jg * E;

  Matrix num = Matrix::Zero(bdim, bdim);
  for (int j = 0; j < m; ++j) num += rep.eta[static_cast<size_t>(j)] * rep.rho[static_cast<size_t>(j)];
  rep.G_sf = num - (m / 2.0) * identity(bdim);

  // grading (-1)^(G_sf + m/2): diagonal in the counter basis (k ghosts applied).
  rep.grading = Matrix::Zero(bdim, bdim);
  for (Eigen::Index k = 0; k < bdim; ++k) {
    int count = 0;
    for (int b = 0; b < m; ++b) count += static_cast<int>((k >> b) & 1);
    rep.grading(k, k) = (count % 2 == 0) ? 1.0 : -1.0;
  }
  return rep;
}

} // namespace brstlab

#endif // BRSTLAB_GHOST_HPP
