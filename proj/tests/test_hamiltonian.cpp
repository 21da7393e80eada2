#include <catch2/catch_amalgamated.hpp>

#include "brstlab/hamiltonian.hpp"

using namespace brstlab;

namespace {

Matrix diag2(double a, double b) {
  Matrix M = Matrix::Zero(2, 2);
  M(0, 0) = a;
  M(1, 1) = b;
  return M;
}

// Pauli matrices over 2 and the epsilon structure constants give su(2).
std::vector<Matrix> su2_constraints() {
  Matrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Cplx(0, -1), Cplx(0, 1), 0;
  sz << 1, 0, 0, -1;
  return {0.5 * sx, 0.5 * sy, 0.5 * sz};
}

std::vector<double> epsilon_tensor() {
  std::vector<double> C(27, 0.0);
  auto at = [&C](int c, int a, int b) -> double& { return C[size_t((c * 3 + a) * 3 + b)]; };
  at(0, 1, 2) = 1;
  at(0, 2, 1) = -1;
  at(1, 2, 0) = 1;
  at(1, 0, 2) = -1;
  at(2, 0, 1) = 1;
  at(2, 1, 0) = -1;
  return C;
}

} // namespace

TEST_CASE("constraint system validation") {
  REQUIRE_THROWS_AS(make_constraint_system(2, {}), ShapeError);
  REQUIRE_THROWS_AS(
      make_constraint_system(2, {(Matrix(2, 2) << 0, 1, 0, 0).finished()}),
      NotHermitianError);
  // linearly dependent pair
  REQUIRE_THROWS_AS(make_constraint_system(2, {diag2(0, 1), diag2(0, 2)}),
                    ShapeError);
  // wrong-size structure constants
  REQUIRE_THROWS_AS(
      make_constraint_system(2, {diag2(0, 1)}, std::vector<double>(3, 0.0)),
      ShapeError);
  // non-antisymmetric structure constants
  std::vector<double> badC(27, 0.0);
  badC[0] = 1.0;  // C^0_{00} != 0 cannot be antisymmetric
  REQUIRE_THROWS_AS(make_constraint_system(2, su2_constraints(), badC),
                    ClosureError);
  // wrong sign on epsilon: bracket fails to close.
  std::vector<double> wrong = epsilon_tensor();
  for (double& v : wrong) v = -v;
  REQUIRE_THROWS_AS(make_constraint_system(2, su2_constraints(), wrong),
                    ClosureError);
  REQUIRE_NOTHROW(make_constraint_system(2, su2_constraints(), epsilon_tensor()));
}

TEST_CASE("single projection charge, Berezin ghosts") {
  const ConstraintSystem sys = make_constraint_system(2, {diag2(0, 1)});
  const BrstComplex cplx = build_hamiltonian_Q(sys, sector_of(build_berezin(1)));
  REQUIRE(cplx.total_dim == 4);
  REQUIRE(fnorm(cplx.Q * cplx.Q) < 1e-12);
  const KreinSpace K = cplx.krein();
  REQUIRE(is_krein_selfadjoint(cplx.Q, K));
  // ghost number one and odd grading are enforced at construction.
  REQUIRE(fnorm(cplx.G_total * cplx.Q - cplx.Q * cplx.G_total - cplx.Q) < 1e-12);
  REQUIRE(fnorm(cplx.grading * cplx.Q * cplx.grading + cplx.Q) < 1e-12);

  // abelian Laplacian closed form: Delta = sum G_a^2 (x) 1.
  const Matrix Delta = delta_operator(cplx);
  const Matrix expect =
      Eigen::kroneckerProduct(Matrix(diag2(0, 1) * diag2(0, 1)), identity(2)).eval();
  REQUIRE(fnorm(Delta - expect) < 1e-12);

  // ghost-pair mismatch
  REQUIRE_THROWS_AS(build_hamiltonian_Q(sys, sector_of(build_berezin(2))),
                    ShapeError);
}

TEST_CASE("MCPS: multiple copies of the physical space") {
  const ConstraintSystem sys = make_constraint_system(2, {diag2(0, 1)});

  SECTION("Berezin m=1: Dirac dim 1, BRST dim 2, indefinite kernel") {
    const BrstComplex cplx =
        build_hamiltonian_Q(sys, sector_of(build_berezin(1)));
    const McpsReport rep = mcps_report(cplx, sys);
    REQUIRE(rep.dirac_dim == 1);
    REQUIRE(rep.brst_dim == 2);
    REQUIRE(rep.ghost_space_dim == 2);
    REQUIRE(rep.tensor_residual < 1e-10);
    // the Krein form on ker Delta is not semidefinite.
    REQUIRE(rep.kernel_signature.n_plus == 1);
    REQUIRE(rep.kernel_signature.n_minus == 1);
    REQUIRE(rep.kernel_signature.n_zero == 0);
  }

  SECTION("full ghosts m=1: four copies, signature (2,2,0)") {
    const BrstComplex cplx =
        build_hamiltonian_Q(sys, sector_of(build_ghost_rep(1)));
    const McpsReport rep = mcps_report(cplx, sys);
    REQUIRE(rep.dirac_dim == 1);
    REQUIRE(rep.brst_dim == 4);
    REQUIRE(rep.tensor_residual < 1e-10);
    REQUIRE(rep.kernel_signature.n_plus == 2);
    REQUIRE(rep.kernel_signature.n_minus == 2);
  }

  SECTION("zero constraint: BRST dim = matter dim x ghost dim") {
    // bypass the independence check: the zero constraint is the trivial edge.
    ConstraintSystem trivial;
    trivial.h0_dim = 2;
    trivial.G = {Matrix::Zero(2, 2)};
    const GhostSector ghosts = sector_of(build_berezin(1));
    BrstComplex cplx;
    cplx.total_dim = 4;
    cplx.matter_dim = 2;
    cplx.ghost_dim = 2;
    cplx.Q = Matrix::Zero(4, 4);
    cplx.J_T = Eigen::kroneckerProduct(identity(2), ghosts.J).eval();
    cplx.grading = Eigen::kroneckerProduct(identity(2), ghosts.grading).eval();
    cplx.G_total = Eigen::kroneckerProduct(identity(2), ghosts.ghost_number).eval();
    const McpsReport rep = mcps_report(cplx, trivial);
    REQUIRE(rep.dirac_dim == 2);
    REQUIRE(rep.brst_dim == 4);
  }

  SECTION("non-abelian systems are rejected") {
    const ConstraintSystem su2 =
        make_constraint_system(2, su2_constraints(), epsilon_tensor());
    const BrstComplex cplx = build_hamiltonian_Q(su2, sector_of(build_ghost_rep(3)));
    REQUIRE_THROWS_AS(mcps_report(cplx, su2), UnsupportedError);
  }
}

TEST_CASE("su(2) charge with full ghosts") {
  const ConstraintSystem sys =
      make_constraint_system(2, su2_constraints(), epsilon_tensor());
  const BrstComplex cplx = build_hamiltonian_Q(sys, sector_of(build_ghost_rep(3)));
  REQUIRE(cplx.total_dim == 128);
  const double qn = fnorm(cplx.Q);
  REQUIRE(fnorm(cplx.Q * cplx.Q) < 1e-12 * qn * qn);
  REQUIRE(is_krein_selfadjoint(cplx.Q, cplx.krein()));

  // non-abelian closed form:
  //   Delta = 1/2 sum_a G_a^2 (x) 1 + 1/2 sum_a (G_a (x) 1 + Sigma_a)^2.
  const Matrix Delta = delta_operator(cplx);
  Matrix half = Matrix::Zero(128, 128);
  const std::vector<Matrix> sig = sigma_operators(sys, sector_of(build_ghost_rep(3)));
  for (size_t a = 0; a < 3; ++a) {
    half += 0.5 * Eigen::kroneckerProduct(Matrix(sys.G[a] * sys.G[a]),
                                          identity(64)).eval();
    const Matrix t =
        Eigen::kroneckerProduct(sys.G[a], identity(64)).eval() + sig[a];
    half += 0.5 * t * t;
  }
  REQUIRE(fnorm(Delta - half) < 1e-10 * std::max(1.0, fnorm(Delta)));

  // the spin-1/2 matter sector has no invariant vector: ker Delta = 0,
  // and it coincides with ker(G_a (x) 1 + Sigma_a) for all a.
  REQUIRE(kernel_basis(Delta).cols() == 0);
  Matrix stacked(3 * 128, 128);
  for (Eigen::Index a = 0; a < 3; ++a) {
    stacked.middleRows(a * 128, 128) =
        Eigen::kroneckerProduct(sys.G[size_t(a)], identity(64)).eval() +
        sig[size_t(a)];
  }
  REQUIRE(kernel_basis(stacked).cols() == 0);

  // Sigma_a are Hermitian and Krein-Hermitian.
  const KreinSpace K = cplx.krein();
  for (const Matrix& S : sig) {
    REQUIRE(fnorm(S - S.adjoint()) < 1e-12);
    REQUIRE(fnorm(S - krein_adjoint(S, K)) < 1e-12);
  }
}

TEST_CASE("charge is stable under commuting perturbations of the constraints") {
  // perturbing an abelian family inside a common eigenbasis keeps Q nilpotent.
  Matrix G1 = Matrix::Zero(3, 3), G2 = Matrix::Zero(3, 3);
  G1.diagonal() << 0, 1, 2;
  G2.diagonal() << 1, 0, 1;
  const ConstraintSystem sys = make_constraint_system(3, {G1, G2});
  const BrstComplex cplx = build_hamiltonian_Q(sys, sector_of(build_berezin(2)));
  REQUIRE(fnorm(cplx.Q * cplx.Q) < 1e-12);

  Matrix G1p = G1;
  G1p.diagonal() << 0.25, 1.5, 2.0;
  const ConstraintSystem pert = make_constraint_system(3, {G1p, G2});
  const BrstComplex cplx2 = build_hamiltonian_Q(pert, sector_of(build_berezin(2)));
  REQUIRE(fnorm(cplx2.Q * cplx2.Q) < 1e-12);
  // kernel of Delta is unchanged: it only sees the joint kernel of the family.
  REQUIRE(fnorm(projection_onto(kernel_basis(delta_operator(cplx))) -
                projection_onto(kernel_basis(delta_operator(cplx2)))) < 1e-10);
}
