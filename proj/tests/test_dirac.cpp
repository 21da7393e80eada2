#include <catch2/catch_amalgamated.hpp>

#include "brstlab/dirac.hpp"
#include "brstlab/dsp.hpp"

using namespace brstlab;

namespace {

Matrix diag2(double a, double b) {
  Matrix M = Matrix::Zero(2, 2);
  M(0, 0) = a;
  M(1, 1) = b;
  return M;
}

std::vector<Matrix> pauli() {
  Matrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Cplx(0, -1), Cplx(0, 1), 0;
  sz << 1, 0, 0, -1;
  return {sx, sy, sz};
}

} // namespace

TEST_CASE("commutant computation") {
  // the identity commutes with everything.
  REQUIRE(commutant({identity(2)}).dim() == 4);
  // a projection: diagonal matrices, dim 2.
  const OperatorSubspace diag = commutant({diag2(0, 1)});
  REQUIRE(diag.dim() == 2);
  REQUIRE(distance_to(diag, diag2(3, -1)) < 1e-10);
  REQUIRE(distance_to(diag, Matrix((Matrix(2, 2) << 0, 1, 0, 0).finished())) > 0.9);
  // the Pauli set is irreducible: commutant is the scalars.
  const OperatorSubspace scalars = commutant(pauli());
  REQUIRE(scalars.dim() == 1);
  REQUIRE(distance_to(scalars, identity(2)) < 1e-10);
  // double commutant of an irreducible set is the full algebra.
  REQUIRE(commutant(scalars.basis).dim() == 4);

  REQUIRE_THROWS_AS(commutant({}), ShapeError);
  REQUIRE_THROWS_AS(commutant({identity(2), identity(3)}), DimensionError);
  REQUIRE_THROWS_AS(commutant({identity(128)}), SizeError);
}

TEST_CASE("dirac_constrain: single projection") {
  const ConstraintSystem sys = make_constraint_system(2, {diag2(0, 1)});
  const DiracResult res = dirac_constrain(sys);
  REQUIRE(res.phys_dim == 1);
  REQUIRE(!res.phys_space_empty);
  REQUIRE(fnorm(res.P_phys_space - diag2(1, 0)) < 1e-10);
  REQUIRE(fnorm(res.P_open + res.P_phys_space - identity(2)) < 1e-12);
  // observables are the diagonal 2x2 block algebra; physical algebra dim 1.
  REQUIRE(res.observables.dim() == 2);
  REQUIRE(res.physical_algebra.dim() == 1);
  REQUIRE(is_multiplicatively_closed(res.physical_algebra, 1e-8));
  REQUIRE(is_star_closed(res.physical_algebra, 1e-8));
  // the commutant-compression identity: P phys algebra = P {G}' P.
  std::vector<Matrix> comp;
  for (const Matrix& B : res.commutant_.basis) {
    comp.push_back(res.P_phys_space * B * res.P_phys_space);
  }
  REQUIRE(mutual_residual(span_of(2, comp), res.physical_algebra) < 1e-10);
}

TEST_CASE("dirac_constrain: further examples") {
  SECTION("two diagonal constraints on a 3-level system") {
    Matrix G1 = Matrix::Zero(3, 3), G2 = Matrix::Zero(3, 3);
    G1.diagonal() << 0, 0, 1;
    G2.diagonal() << 0, 1, 0;
    const DiracResult res = dirac_constrain(make_constraint_system(3, {G1, G2}));
    REQUIRE(res.phys_dim == 1);
    REQUIRE(res.physical_algebra.dim() == 1);
  }
  SECTION("zero constraint: everything is physical") {
    ConstraintSystem trivial;
    trivial.h0_dim = 2;
    trivial.G = {Matrix::Zero(2, 2)};
    const DiracResult res = dirac_constrain(trivial);
    REQUIRE(res.phys_dim == 2);
    REQUIRE(res.physical_algebra.dim() == 4);
    REQUIRE(res.observables.dim() == 4);
  }
  SECTION("invertible constraint: empty physical space is reported") {
    ConstraintSystem sys;
    sys.h0_dim = 2;
    sys.G = {identity(2)};
    const DiracResult res = dirac_constrain(sys);
    REQUIRE(res.phys_space_empty);
    REQUIRE(res.phys_dim == 0);
    REQUIRE(res.physical_algebra.dim() == 0);
  }
}

TEST_CASE("compare_dirac_brst verdicts") {
  // equal algebras.
  const OperatorSubspace scalars = span_of(2, {identity(2)});
  CompareReport eq = compare_dirac_brst(scalars, scalars, "identity embedding");
  REQUIRE(eq.verdict == CompareVerdict::equivalent);
  REQUIRE(eq.embedding == "identity embedding");

  // proper containment produces a witness outside the smaller algebra.
  const OperatorSubspace diag = span_of(2, {identity(2), diag2(1, -1)});
  CompareReport larger = compare_dirac_brst(scalars, diag, "identity embedding");
  REQUIRE(larger.verdict == CompareVerdict::brst_strictly_larger);
  REQUIRE(larger.witness.has_value());
  REQUIRE(distance_to(scalars, *larger.witness) > 1e-6);

  // incomparable spans.
  const OperatorSubspace off = span_of(2, {Matrix((Matrix(2, 2) << 0, 1, 0, 0).finished())});
  CompareReport inc = compare_dirac_brst(off, diag, "identity embedding");
  REQUIRE(inc.verdict == CompareVerdict::incomparable);

  REQUIRE_THROWS_AS(
      compare_dirac_brst(scalars, span_of(3, {identity(3)}), "bad"),
      ShapeError);
}

TEST_CASE("BRST strictly exceeds Dirac for the single projection (MCPS)") {
  const ConstraintSystem sys = make_constraint_system(2, {diag2(0, 1)});
  const BrstComplex cplx = build_hamiltonian_Q(sys, sector_of(build_berezin(1)));
  const KreinSpace K = cplx.krein();
  const DspData dsp = dsp_decompose(cplx.Q, K);
  const Matrix sup = superderivation_matrix(cplx.Q, cplx.grading);

  // the ghost-number-zero witness A = P2 (x) eta rho.
  const BerezinRep bz = build_berezin(1);
  const Matrix witness =
      Eigen::kroneckerProduct(diag2(1, 0), Matrix(bz.eta[0] * bz.rho[0])).eval();
  // in Ker delta and of ghost number zero.
  REQUIRE(fnorm(apply_super(sup, witness)) < 1e-10);
  REQUIRE(fnorm(cplx.G_total * witness - witness * cplx.G_total) < 1e-10);

  // outside Ran delta + Dirac image (Dirac image = A (x) 1 compressions).
  const OperatorSubspace ran = ran_delta(sup, 4);
  std::vector<Matrix> dirac_gens = ran.basis;
  const OperatorSubspace full2 = full_matrix_algebra(2);
  for (const Matrix& A : full2.basis) {
    dirac_gens.push_back(
        dsp.P_s * Eigen::kroneckerProduct(A, identity(2)).eval() * dsp.P_s);
  }
  const OperatorSubspace reach = span_of(4, dirac_gens);
  REQUIRE(distance_to(reach, witness) > 1e-6);
}
