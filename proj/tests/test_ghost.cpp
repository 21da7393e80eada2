#include <catch2/catch_amalgamated.hpp>

#include "brstlab/ghost.hpp"

using namespace brstlab;

namespace {

Matrix anticomm(const Matrix& A, const Matrix& B) { return A * B + B * A; }

} // namespace

TEST_CASE("CAR relations in the full Fock representation") {
  for (int m : {1, 2}) {
    const GhostRep rep = build_ghost_rep(m);
    const int M = 2 * m;
    REQUIRE(rep.fock_dim == (Eigen::Index(1) << M));
    for (int k = 1; k <= M; ++k) {
      for (int l = 1; l <= M; ++l) {
        const Matrix ck = rep.c_op(k), cl = rep.c_op(l);
        REQUIRE(fnorm(anticomm(ck, cl)) < 1e-12);
        const Matrix expect =
            (k == l) ? identity(rep.fock_dim) : Matrix::Zero(rep.fock_dim, rep.fock_dim);
        REQUIRE(fnorm(anticomm(ck, Matrix(cl.adjoint())) - expect) < 1e-12);
      }
    }
    // vacuum is annihilated by every c.
    for (int k = 1; k <= M; ++k) {
      REQUIRE(rep.c_op(k).col(rep.vacuum_index).norm() < 1e-12);
    }
  }
  REQUIRE_THROWS_AS(build_ghost_rep(0), SizeError);
  REQUIRE_THROWS_AS(build_ghost_rep(6), SizeError);
}

TEST_CASE("fundamental symmetry and ghost number, m=1") {
  const GhostRep rep = build_ghost_rep(1);
  REQUIRE(fnorm(rep.J_g * rep.J_g - identity(4)) < 1e-12);
  REQUIRE(fnorm(rep.J_g - rep.J_g.adjoint()) < 1e-12);
  // J fixes the vacuum and conjugates annihilators: J c(f) J = c(Jf).
  Vector omega = Vector::Zero(4);
  omega(rep.vacuum_index) = 1.0;
  REQUIRE((rep.J_g * omega - omega).norm() < 1e-12);
  Vector f(2);
  f << Cplx(0.3, 0.1), Cplx(-0.7, 0.4);
  REQUIRE(fnorm(rep.J_g * rep.c_field(f) * rep.J_g -
                rep.c_field(rep.apply_one_particle_J(f))) < 1e-12);

  // G spectrum {-1, 0, 0, 1}; G is Krein anti-symmetric: JG*J = -G.
  Eigen::SelfAdjointEigenSolver<Matrix> es(rep.G);
  RealVector ev = es.eigenvalues();
  REQUIRE(ev(0) == Catch::Approx(-1.0));
  REQUIRE(ev(1) == Catch::Approx(0.0).margin(1e-12));
  REQUIRE(ev(2) == Catch::Approx(0.0).margin(1e-12));
  REQUIRE(ev(3) == Catch::Approx(1.0));
  REQUIRE(fnorm(rep.J_g * rep.G.adjoint() * rep.J_g + rep.G) < 1e-12);
}

TEST_CASE("ghost and conjugate ghost fields") {
  for (int m : {1, 2}) {
    const GhostRep rep = build_ghost_rep(m);
    const KreinSpace K{rep.fock_dim, rep.J_g};
    for (int j = 1; j <= m; ++j) {
      const Matrix ej = eta(rep, j), rj = rho(rep, j);
      // Krein-Hermitian and graded: {eta_j, rho_k} = delta_jk, like-brackets 0.
      REQUIRE(fnorm(ej - krein_adjoint(ej, K)) < 1e-12);
      REQUIRE(fnorm(rj - krein_adjoint(rj, K)) < 1e-12);
      for (int k = 1; k <= m; ++k) {
        REQUIRE(fnorm(anticomm(ej, eta(rep, k))) < 1e-12);
        REQUIRE(fnorm(anticomm(rj, rho(rep, k))) < 1e-12);
        const Matrix expect = (j == k)
                                  ? identity(rep.fock_dim)
                                  : Matrix::Zero(rep.fock_dim, rep.fock_dim);
        REQUIRE(fnorm(anticomm(ej, rho(rep, k)) - expect) < 1e-12);
      }
      // [G, eta_j] = eta_j, [G, rho_j] = -rho_j.
      REQUIRE(fnorm(rep.G * ej - ej * rep.G - ej) < 1e-12);
      REQUIRE(fnorm(rep.G * rj - rj * rep.G + rj) < 1e-12);
      // odd under parity.
      REQUIRE(fnorm(rep.parity * ej * rep.parity + ej) < 1e-12);
    }
    REQUIRE_THROWS_AS(eta(rep, 0), IndexError);
    REQUIRE_THROWS_AS(rho(rep, m + 1), IndexError);
  }
}

TEST_CASE("ghost number grading eigenspaces, m=1") {
  const GhostRep rep = build_ghost_rep(1);
  // G has spectrum {-1, 0, 0, 1}; the ad(G) eigenspace at n = 0 has dimension
  // 1^2 + 2^2 + 1^2 = 6, and all eigenspaces tile the 16-dim matrix algebra.
  REQUIRE(ghost_grading(rep, 0).dim() == 6);
  REQUIRE(ghost_grading(rep, 1).dim() == 4);
  REQUIRE(ghost_grading(rep, -1).dim() == 4);
  REQUIRE(ghost_grading(rep, 2).dim() == 1);
  REQUIRE(ghost_grading(rep, -2).dim() == 1);
  REQUIRE(ghost_grading(rep, 3).dim() == 0);
  // every basis element satisfies [G, A] = n A exactly.
  for (int n : {-2, -1, 0, 1, 2}) {
    for (const Matrix& A : ghost_grading(rep, n).basis) {
      REQUIRE(fnorm(rep.G * A - A * rep.G - double(n) * A) < 1e-12);
    }
  }
}

TEST_CASE("Berezin representation invariants") {
  for (int m : {1, 2, 3, 4}) {
    const BerezinRep rep = build_berezin(m);
    REQUIRE(rep.dim == (Eigen::Index(1) << m));
    const KreinSpace K{rep.dim, rep.J_bz};

    // embed is an isometry; J restricts consistently.
    REQUIRE(fnorm(Matrix(rep.embed.adjoint() * rep.embed) - identity(rep.dim)) <
            1e-10);
    REQUIRE(fnorm(rep.J_bz * rep.J_bz - identity(rep.dim)) < 1e-10);
    REQUIRE(fnorm(rep.J_bz - rep.J_bz.adjoint()) < 1e-10);

    Vector osf = Vector::Zero(rep.dim);
    osf(rep.omega_sf_index) = 1.0;
    // the vacuum is annihilated by every conjugate ghost and is Krein-neutral.
    for (int j = 0; j < m; ++j) {
      REQUIRE((rep.rho[j] * osf).norm() < 1e-10);
    }
    REQUIRE(std::abs(K.indefinite_inner(osf, osf)) < 1e-10);

    for (int j = 0; j < m; ++j) {
      const Matrix& ej = rep.eta[j];
      const Matrix& rj = rep.rho[j];
      REQUIRE(fnorm(ej - krein_adjoint(ej, K)) < 1e-10);
      REQUIRE(fnorm(rj - krein_adjoint(rj, K)) < 1e-10);
      for (int k = 0; k < m; ++k) {
        REQUIRE(fnorm(anticomm(ej, rep.eta[k])) < 1e-10);
        REQUIRE(fnorm(anticomm(rj, rep.rho[k])) < 1e-10);
        const Matrix expect =
            (j == k) ? identity(rep.dim) : Matrix::Zero(rep.dim, rep.dim);
        REQUIRE(fnorm(anticomm(ej, rep.rho[k]) - expect) < 1e-10);
      }
      REQUIRE(fnorm(rep.grading * ej * rep.grading + ej) < 1e-10);
    }

    // ghost number spectrum {k - m/2}, k = 0..m.
    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(0.5 * (rep.G_sf + rep.G_sf.adjoint())));
    // G_sf is not Hermitian in general; its spectrum is real though: check via
    // the diagonal (it is diagonal in this basis).
    Matrix off = rep.G_sf;
    off.diagonal().setZero();
    REQUIRE(fnorm(off) < 1e-10);
    for (Eigen::Index k = 0; k < rep.dim; ++k) {
      int count = 0;
      for (int b = 0; b < m; ++b) count += static_cast<int>((k >> b) & 1);
      REQUIRE(std::abs(rep.G_sf(k, k) - Cplx(count - m / 2.0, 0.0)) < 1e-10);
    }

    // irreducibility: only scalars commute with all eta_j, rho_j.
    Matrix stacked(2 * m * rep.dim * rep.dim, rep.dim * rep.dim);
    Eigen::Index r = 0;
    for (int j = 0; j < m; ++j) {
      for (const Matrix* X : {&rep.eta[j], &rep.rho[j]}) {
        stacked.middleRows(r, rep.dim * rep.dim) =
            Eigen::kroneckerProduct(X->transpose(), identity(rep.dim)).eval() -
            Eigen::kroneckerProduct(identity(rep.dim), *X).eval();
        r += rep.dim * rep.dim;
      }
    }
    REQUIRE(kernel_basis(stacked).cols() == 1);
  }
  REQUIRE_THROWS_AS(build_berezin(0), SizeError);
  REQUIRE_THROWS_AS(build_berezin(7), SizeError);
}
