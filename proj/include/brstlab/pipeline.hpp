#ifndef BRSTLAB_PIPELINE_HPP
#define BRSTLAB_PIPELINE_HPP

// Orchestration: parse a SystemSpec (JSON), run the full analysis pipeline
// (build -> nilpotency -> dsp -> structure theorem -> physical algebras ->
// Dirac comparison), and emit a deterministic Report as JSON (sorted keys,
// 17 significant digits) or a fixed text table.

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "brstlab/bose.hpp"
#include "brstlab/dirac.hpp"
#include "brstlab/dsp.hpp"

namespace brstlab {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// SystemSpec
// ---------------------------------------------------------------------------

struct BosonicSpec {
  Eigen::Index dt_dim = 0;
  Eigen::Index cutoff = 3;
};

struct SystemSpec {
  std::string kind;  // "hamiltonian" | "ko_abelian" | "combined"
  Eigen::Index h0_dim = 0;
  std::vector<Matrix> constraints;
  std::vector<double> structure_constants;  // flattened n^3, optional
  std::string ghost_rep = "berezin";        // "full" | "berezin"
  int m = 0;                                // ghost / constraint pair count
  std::optional<BosonicSpec> bosonic;
  Tolerance tol;
};

namespace detail {

inline Matrix parse_matrix(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    throw SchemaError(where + ": expected a non-empty array of rows");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  Matrix M(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw SchemaError(where + ": ragged rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& e = row[static_cast<size_t>(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
          !e[1].is_number()) {
        throw SchemaError(where + ": entries must be [re, im] pairs");
      }
      M(r, c) = Cplx(e[0].get<double>(), e[1].get<double>());
    }
  }
  return M;
}

inline Json dump_matrix(const Matrix& M) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < M.cols(); ++c) {
      row.push_back(Json::array({M(r, c).real(), M(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace detail

inline SystemSpec parse_system_spec(const Json& j) {
  if (!j.is_object()) throw SchemaError("top level: expected a JSON object");
  SystemSpec spec;
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw SchemaError("kind: required string");
  }
  spec.kind = j["kind"].get<std::string>();
  if (spec.kind != "hamiltonian" && spec.kind != "ko_abelian" &&
      spec.kind != "combined") {
    throw SchemaError("kind: must be hamiltonian, ko_abelian, or combined");
  }

  if (j.contains("h0_dim")) {
    if (!j["h0_dim"].is_number_integer() || j["h0_dim"].get<long>() < 1) {
      throw SchemaError("h0_dim: positive integer required");
    }
    spec.h0_dim = j["h0_dim"].get<Eigen::Index>();
  }

  if (j.contains("constraints")) {
    if (!j["constraints"].is_array()) {
      throw SchemaError("constraints: expected an array of matrices");
    }
    size_t k = 0;
    for (const Json& cj : j["constraints"]) {
      Matrix M =
          detail::parse_matrix(cj, "constraints[" + std::to_string(k) + "]");
      if (M.rows() != M.cols() ||
          (spec.h0_dim > 0 && M.rows() != spec.h0_dim)) {
        throw SchemaError("constraints[" + std::to_string(k) +
                          "]: shape inconsistent with h0_dim");
      }
      spec.constraints.push_back(std::move(M));
      ++k;
    }
    if (spec.h0_dim == 0 && !spec.constraints.empty()) {
      spec.h0_dim = spec.constraints[0].rows();
    }
  }

  if (j.contains("structure_constants")) {
    const Json& sc = j["structure_constants"];
    if (!sc.is_array()) throw SchemaError("structure_constants: expected array");
    // Accept either a flat n^3 list or a nested n x n x n tensor.
    std::function<void(const Json&)> flatten = [&](const Json& node) {
      if (node.is_array()) {
        for (const Json& c : node) flatten(c);
      } else if (node.is_number()) {
        spec.structure_constants.push_back(node.get<double>());
      } else {
        throw SchemaError("structure_constants: non-numeric entry");
      }
    };
    flatten(sc);
    const size_t n = spec.constraints.size();
    if (spec.structure_constants.size() != n * n * n) {
      throw SchemaError("structure_constants: expected n^3 entries");
    }
  }

  if (j.contains("ghost_rep")) {
    if (!j["ghost_rep"].is_string()) throw SchemaError("ghost_rep: string");
    spec.ghost_rep = j["ghost_rep"].get<std::string>();
    if (spec.ghost_rep != "full" && spec.ghost_rep != "berezin") {
      throw SchemaError("ghost_rep: must be full or berezin");
    }
  }

  if (j.contains("m")) {
    if (!j["m"].is_number_integer() || j["m"].get<int>() < 1) {
      throw SchemaError("m: positive integer required");
    }
    spec.m = j["m"].get<int>();
  } else {
    spec.m = static_cast<int>(spec.constraints.size());
  }

  if (j.contains("bosonic")) {
    const Json& b = j["bosonic"];
    if (!b.is_object()) throw SchemaError("bosonic: expected object");
    BosonicSpec bs;
    if (b.contains("dt_dim")) {
      if (!b["dt_dim"].is_number_integer() || b["dt_dim"].get<long>() < 0) {
        throw SchemaError("bosonic.dt_dim: nonnegative integer required");
      }
      bs.dt_dim = b["dt_dim"].get<Eigen::Index>();
    }
    if (b.contains("cutoff")) {
      if (!b["cutoff"].is_number_integer() || b["cutoff"].get<long>() < 2) {
        throw SchemaError("bosonic.cutoff: integer >= 2 required");
      }
      bs.cutoff = b["cutoff"].get<Eigen::Index>();
    }
    spec.bosonic = bs;
  }

  if (j.contains("tol")) {
    const Json& t = j["tol"];
    if (!t.is_object()) throw SchemaError("tol: expected object");
    if (t.contains("abs")) spec.tol.abs = t["abs"].get<double>();
    if (t.contains("rank_rel")) spec.tol.rank_rel = t["rank_rel"].get<double>();
    try {
      spec.tol.validate();
    } catch (const Error& e) {
      throw SchemaError(std::string("tol: ") + e.what());
    }
  }

  // Kind-specific requirements.
  if (spec.kind == "hamiltonian" || spec.kind == "combined") {
    if (spec.constraints.empty()) {
      throw SchemaError(spec.kind + ": at least one constraint matrix required");
    }
  }
  if (spec.kind == "ko_abelian" || spec.kind == "combined") {
    if (!spec.bosonic) throw SchemaError(spec.kind + ": bosonic block required");
    if (spec.m < 1) throw SchemaError(spec.kind + ": m >= 1 required");
  }
  if (spec.kind == "combined" && spec.bosonic->dt_dim != 0) {
    throw SchemaError("combined: bosonic.dt_dim must be 0");
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Report
// ---------------------------------------------------------------------------

struct CheckEntry {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct ReportDims {
  Eigen::Index d_d = 0, d_s = 0, d_p = 0;
  Eigen::Index dirac_phys = 0;  // dim of the Dirac physical algebra
  Eigen::Index brst_phys = 0;   // dim of the BRST physical algebra on H_s
  Eigen::Index ghost_dim = 0;
};

struct Report {
  std::vector<CheckEntry> checks;
  ReportDims dims;
  std::vector<double> delta_spectrum;
  std::string verdict;  // equivalent | brst_strictly_larger | trivial
  std::vector<std::pair<std::string, Matrix>> witnesses;

  bool all_pass() const {
    for (const CheckEntry& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
  void add(const std::string& name, double residual, double threshold) {
    checks.push_back({name, residual <= threshold, residual});
  }
  void add_exact(const std::string& name, bool pass) {
    checks.push_back({name, pass, pass ? 0.0 : 1.0});
  }
};

namespace detail {

// Span of the elementary matrices that commute with a diagonal grading
// operator: the ghost-number-zero operator subspace.
inline OperatorSubspace grading_zero_subspace(const Matrix& G,
                                              const Tolerance& tol) {
  const Eigen::Index d = G.rows();
  Matrix offdiag = G;
  offdiag.diagonal().setZero();
  if (fnorm(offdiag) > 100 * tol.abs) {
    throw UnsupportedError("ghost number operator is not diagonal in this basis");
  }
  OperatorSubspace S;
  S.ambient_dim = d;
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) {
      if (std::lround(2 * G(i, i).real()) == std::lround(2 * G(j, j).real())) {
        Matrix E = Matrix::Zero(d, d);
        E(i, j) = 1.0;
        S.basis.push_back(std::move(E));
      }
    }
  }
  return S;
}

inline std::vector<double> spectrum_of(const Matrix& Delta,
                                       const Tolerance& tol) {
  const HermitianEig eig = hermitian_eig(Delta, tol);
  return std::vector<double>(eig.eigenvalues.data(),
                             eig.eigenvalues.data() + eig.eigenvalues.size());
}

// The matter algebra pushed to the H_s frame V: span of V* (A (x) 1_rest) V.
inline OperatorSubspace matter_algebra_on_frame(const Matrix& V,
                                                Eigen::Index matter_dim,
                                                Eigen::Index rest_dim,
                                                const Matrix& matter_block,
                                                const Tolerance& tol) {
  std::vector<Matrix> gens;
  for (Eigen::Index j = 0; j < matter_dim; ++j) {
    for (Eigen::Index i = 0; i < matter_dim; ++i) {
      Matrix E = Matrix::Zero(matter_dim, matter_dim);
      E(i, j) = 1.0;
      const Matrix A = matter_block * E * matter_block;  // restrict if needed
      gens.push_back(V.adjoint() *
                     Eigen::kroneckerProduct(A, identity(rest_dim)).eval() * V);
    }
  }
  return span_of(V.cols(), gens, tol);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Pipelines
// ---------------------------------------------------------------------------

inline Report run_hamiltonian_pipeline(const SystemSpec& spec) {
  const Tolerance& tol = spec.tol;
  Report rep;
  const ConstraintSystem sys = make_constraint_system(
      spec.h0_dim, spec.constraints, spec.structure_constants, tol);

  GhostSector ghosts;
  if (spec.ghost_rep == "full") {
    ghosts = sector_of(build_ghost_rep(sys.n()));
  } else {
    ghosts = sector_of(build_berezin(sys.n()));
  }
  const BrstComplex cplx = build_hamiltonian_Q(sys, ghosts, tol);
  const KreinSpace K = cplx.krein();
  const double qn = std::max(1.0, fnorm(cplx.Q));

  rep.dims.ghost_dim = cplx.ghost_dim;
  rep.add("nilpotency", fnorm(cplx.Q * cplx.Q), tol.abs * qn * qn);
  rep.add("krein_symmetry", fnorm(cplx.Q - krein_adjoint(cplx.Q, K)),
          10 * tol.abs * qn);

  const Matrix Delta = delta_operator(cplx);
  rep.delta_spectrum = detail::spectrum_of(Delta, tol);
  if (sys.abelian()) {
    Matrix closed = Matrix::Zero(sys.h0_dim, sys.h0_dim);
    for (const Matrix& G : sys.G) closed += G * G;
    const Matrix expect =
        Eigen::kroneckerProduct(closed, identity(cplx.ghost_dim)).eval();
    rep.add("delta_closed_form", fnorm(Delta - expect),
            tol.abs * std::max(1.0, fnorm(Delta)));
  } else {
    Matrix half = Matrix::Zero(cplx.total_dim, cplx.total_dim);
    for (const Matrix& G : sys.G) {
      half += 0.5 * Eigen::kroneckerProduct(Matrix(G * G),
                                            identity(cplx.ghost_dim)).eval();
    }
    const std::vector<Matrix> sig = sigma_operators(sys, ghosts);
    for (size_t a = 0; a < sig.size(); ++a) {
      const Matrix t =
          Eigen::kroneckerProduct(sys.G[a], identity(cplx.ghost_dim)).eval() +
          sig[a];
      half += 0.5 * t * t;
    }
    rep.add("delta_closed_form", fnorm(Delta - half),
            tol.abs * std::max(1.0, fnorm(Delta)));
  }

  const DspData dsp = dsp_decompose(cplx.Q, K, tol);
  rep.dims.d_d = dsp.d_d;
  rep.dims.d_s = dsp.d_s;
  rep.dims.d_p = dsp.d_p;
  rep.add("dsp_completeness", dsp.completeness_residual, 1e-9);
  rep.add("dsp_orthogonality", dsp.orthogonality_residual, 1e-9);
  if (dsp.krein_selfadjoint) {
    rep.add("krein_projection_relations",
            std::max(dsp.krein_s_residual, dsp.krein_dp_residual), 1e-9);
  }

  const DiracResult dirac = dirac_constrain(sys, tol);
  rep.dims.dirac_phys = dirac.physical_algebra.dim();

  if (cplx.total_dim <= 64) {
    const Matrix sup = superderivation_matrix(cplx.Q, cplx.grading, tol);
    const StructureTheoremReport st = structure_theorem_check(sup, dsp, tol);
    rep.add("structure_theorem",
            std::max(st.residual_ran_in_kerphi, st.residual_kerphi_in_ran),
            1e-8);

    // BRST physical algebra from ghost-number-zero kernel elements.
    const OperatorSubspace zero =
        detail::grading_zero_subspace(cplx.G_total, tol);
    const PhysicalAlgebraReport pa =
        brst_physical_algebra(sup, dsp, K, zero, tol);
    rep.dims.brst_phys = pa.on_hs.dim();

    // Dirac side on the same H_s frame: Phi_s(A0 (x) 1).
    const Matrix V = range_basis(dsp.P_s, tol);
    const OperatorSubspace dirac_on_hs = detail::matter_algebra_on_frame(
        V, cplx.matter_dim, cplx.ghost_dim, identity(cplx.matter_dim), tol);
    const CompareReport cmp = compare_dirac_brst(
        dirac_on_hs, pa.on_hs, "Phi_s(A (x) 1) on an ON basis of Ran P_s", tol);
    rep.verdict = to_string(cmp.verdict);
    if (cmp.witness) rep.witnesses.emplace_back("brst_witness_on_hs", *cmp.witness);
  } else {
    // Superoperator work is capped; with no physical states the theory is
    // trivially comparable, otherwise we decline to decide.
    rep.verdict = (dsp.d_s == 0) ? "trivial" : "incomparable";
  }
  return rep;
}

inline Report run_ko_pipeline(const SystemSpec& spec) {
  const Tolerance& tol = spec.tol;
  Report rep;
  const BosonicSector sector =
      build_bosonic_sector(spec.bosonic->dt_dim, spec.m, spec.bosonic->cutoff);
  const GhostRep ghosts = build_ghost_rep(spec.m);
  const KoComplex ko = build_ko_abelian_Q(sector, ghosts, tol);
  const BrstComplex& cplx = ko.cplx;
  const KreinSpace K = cplx.krein();
  const double qn = std::max(1.0, fnorm(cplx.Q));

  rep.dims.ghost_dim = ghosts.fock_dim;
  rep.add("invariant_subspace", ko.invariance_residual, tol.abs * qn);
  rep.add("nilpotency", fnorm(cplx.Q * cplx.Q), tol.abs * qn * qn);
  rep.add("krein_symmetry", fnorm(cplx.Q - krein_adjoint(cplx.Q, K)),
          10 * tol.abs * qn);

  const Matrix Delta = delta_operator(cplx);
  rep.delta_spectrum = detail::spectrum_of(Delta, tol);

  const DspData dsp = dsp_decompose(cplx.Q, K, tol);
  rep.dims.d_d = dsp.d_d;
  rep.dims.d_s = dsp.d_s;
  rep.dims.d_p = dsp.d_p;
  rep.add("dsp_completeness", dsp.completeness_residual, 1e-9);
  rep.add("dsp_orthogonality", dsp.orthogonality_residual, 1e-9);
  const PhysicalityReport phys = physicality_check(dsp, K, tol);
  rep.add("physicality", phys.residual, 1e-9);

  if (cplx.total_dim <= 64) {
    const Matrix sup = superderivation_matrix(cplx.Q, cplx.grading, tol);
    const OperatorSubspace ker = ker_delta(sup, cplx.total_dim, std::nullopt, tol);
    const OperatorSubspace image = phi_s(ker, dsp, tol);
    rep.dims.brst_phys = image.dim();
  }

  if (sector.dt_dim >= 1) {
    const GuptaBleulerReport gb = gupta_bleuler_compare(sector, tol);
    rep.dims.dirac_phys = gb.quotient_dim;
    rep.add_exact("gupta_bleuler_quotient_matches_ds",
                  gb.quotient_dim == dsp.d_s);
    rep.add("gupta_bleuler_isometry", gb.isometry_residual, 100 * tol.abs);
    rep.verdict = "equivalent";
  } else {
    rep.dims.dirac_phys = 1;  // trivial theory: scalars only
    rep.verdict = (dsp.d_s == 1) ? "trivial" : "equivalent";
  }
  return rep;
}

inline Report run_combined_pipeline(const SystemSpec& spec) {
  const Tolerance& tol = spec.tol;
  Report rep;
  const ConstraintSystem sys = make_constraint_system(
      spec.h0_dim, spec.constraints, spec.structure_constants, tol);
  const BosonicSector sector =
      build_bosonic_sector(0, spec.m, spec.bosonic->cutoff);
  const GhostRep ghosts = build_ghost_rep(spec.m);
  const CombinedComplex cc = build_combined_Q(sys, sector, ghosts, tol);
  const double qn = std::max(1.0, fnorm(cc.Q));

  rep.dims.ghost_dim = ghosts.fock_dim;
  rep.add("guarded_nilpotency", cc.nilpotency_residual, tol.abs * qn * qn);
  rep.add("guarded_krein_symmetry", cc.krein_residual, 10 * tol.abs * qn);

  const Matrix Delta = cc.Q * cc.Q.adjoint() + cc.Q.adjoint() * cc.Q;
  rep.delta_spectrum =
      detail::spectrum_of(Matrix(cc.guard.adjoint() * Delta * cc.guard), tol);

  const Matrix V = combined_kernel_guard(cc, tol);
  rep.dims.d_s = V.cols();
  rep.dims.d_d = numerical_rank(Matrix(cc.Q * cc.guard), tol);
  rep.dims.d_p = numerical_rank(Matrix(cc.Q.adjoint() * cc.guard), tol);

  // Expected kernel: (∩ Ker G_a) (x) Omega_b (x) Omega_g.
  Matrix sq = Matrix::Zero(sys.h0_dim, sys.h0_dim);
  for (const Matrix& G : sys.G) sq += G.adjoint() * G;
  const Matrix km = kernel_basis(sq, tol);
  Matrix expect = Matrix::Zero(cc.total_dim, km.cols());
  for (Eigen::Index k = 0; k < km.cols(); ++k) {
    Vector rest = Vector::Zero(cc.bose_dim * cc.ghost_dim);
    rest(0) = 1.0;  // Omega_b (x) Omega_g is the joint index 0
    Vector full = Vector::Zero(cc.total_dim);
    for (Eigen::Index i = 0; i < sys.h0_dim; ++i) {
      full.segment(i * cc.bose_dim * cc.ghost_dim, cc.bose_dim * cc.ghost_dim) +=
          km(i, k) * rest;
    }
    expect.col(k) = full;
  }
  rep.add("kernel_matches_dirac_vacuum",
          fnorm(projection_onto(V) - projection_onto(expect)), 1e-9);

  // Algebra comparison on the kernel frame: Phi_s(Ker delta) equals
  // (1-P) A0 (1-P) (x) 1 (x) 1 pushed to the same frame.
  const DiracResult dirac = dirac_constrain(sys, tol);
  rep.dims.dirac_phys = dirac.physical_algebra.dim();
  const OperatorSubspace brst_on_hs = detail::matter_algebra_on_frame(
      V, sys.h0_dim, cc.bose_dim * cc.ghost_dim, identity(sys.h0_dim), tol);
  const OperatorSubspace dirac_on_hs = detail::matter_algebra_on_frame(
      V, sys.h0_dim, cc.bose_dim * cc.ghost_dim, dirac.P_phys_space, tol);
  rep.dims.brst_phys = brst_on_hs.dim();
  const CompareReport cmp = compare_dirac_brst(
      dirac_on_hs, brst_on_hs,
      "P_s (A (x) 1 (x) 1) P_s on the guarded kernel frame", tol);
  rep.verdict = to_string(cmp.verdict);
  if (cmp.witness) rep.witnesses.emplace_back("brst_witness_on_hs", *cmp.witness);
  return rep;
}

inline Report run_pipeline(const SystemSpec& spec) {
  if (spec.kind == "hamiltonian") return run_hamiltonian_pipeline(spec);
  if (spec.kind == "ko_abelian") return run_ko_pipeline(spec);
  return run_combined_pipeline(spec);
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

inline Json report_to_json(const Report& rep) {
  Json j;
  Json checks = Json::array();
  for (const CheckEntry& c : rep.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"pass", c.pass},
                          {"residual", c.residual}});
  }
  j["checks"] = std::move(checks);
  j["dims"] = Json{{"d_d", rep.dims.d_d},
                   {"d_s", rep.dims.d_s},
                   {"d_p", rep.dims.d_p},
                   {"dirac_phys", rep.dims.dirac_phys},
                   {"brst_phys", rep.dims.brst_phys},
                   {"ghost_dim", rep.dims.ghost_dim}};
  j["spectra"] = Json{{"delta", rep.delta_spectrum}};
  j["verdict"] = rep.verdict;
  Json w = Json::object();
  for (const auto& [name, M] : rep.witnesses) w[name] = detail::dump_matrix(M);
  j["witnesses"] = std::move(w);
  return j;
}

namespace detail {

inline void emit_number(std::string& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

// Deterministic serializer: sorted keys (nlohmann objects iterate sorted),
// doubles with 17 significant digits, no whitespace variation.
inline void emit_value(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<size_t>(indent) * 2, ' ');
  const std::string pad2(static_cast<size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad2 + Json(it.key()).dump() + ": ";
        emit_value(out, it.value(), indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const Json& e : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad2;
        emit_value(out, e, indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float:
      emit_number(out, j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

} // namespace detail

inline std::string emit_json(const Json& j) {
  std::string out;
  detail::emit_value(out, j, 0);
  out += "\n";
  return out;
}

inline std::string emit_text(const Report& rep) {
  std::string out;
  out += "== checks ==\n";
  for (const CheckEntry& c : rep.checks) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "  %-36s %s  residual=%.3e\n",
                  c.name.c_str(), c.pass ? "PASS" : "FAIL", c.residual);
    out += buf;
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "== dims ==\n  d_d=%lld d_s=%lld d_p=%lld dirac_phys=%lld "
                "brst_phys=%lld ghost_dim=%lld\n",
                static_cast<long long>(rep.dims.d_d),
                static_cast<long long>(rep.dims.d_s),
                static_cast<long long>(rep.dims.d_p),
                static_cast<long long>(rep.dims.dirac_phys),
                static_cast<long long>(rep.dims.brst_phys),
                static_cast<long long>(rep.dims.ghost_dim));
  out += buf;
  out += "== verdict ==\n  " + rep.verdict + "\n";
  return out;
}

} // namespace brstlab

#endif // BRSTLAB_PIPELINE_HPP
