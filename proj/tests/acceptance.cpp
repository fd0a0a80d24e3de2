// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every check is exact rational arithmetic except criterion 11, whose
// floating-point tolerances are pinned below.

#include <chrono>
#include <cmath>
#include <complex>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liedense/certify.hpp"
#include "liedense/errors.hpp"
#include "liedense/flows.hpp"
#include "liedense/json_io.hpp"
#include "liedense/lie_algebra.hpp"
#include "liedense/polynomial.hpp"
#include "liedense/representation.hpp"
#include "liedense/root_system.hpp"

namespace {

using namespace liedense;

// Pinned numeric tolerances (criterion 11; everything else is exact).
constexpr double kEulerImprovementMin = 8.0;  // error drop from N=10 to N=100
constexpr double kCommutatorRelTol = 0.05;    // slope vs exact bracket
constexpr double kShearIntegratorTol = 1e-8;  // closed form vs integrator
// Desk-scale budget for one adjoint certification (criterion 6).
constexpr double kCertifySecondsMax = 300.0;

const std::filesystem::path kOutDir = LIEDENSE_ACCEPT_OUTDIR;

std::vector<std::string> all_types_rank8() {
  std::vector<std::string> t;
  for (int l = 1; l <= 8; ++l) t.push_back("A" + std::to_string(l));
  for (int l = 2; l <= 8; ++l) t.push_back("B" + std::to_string(l));
  for (int l = 3; l <= 8; ++l) t.push_back("C" + std::to_string(l));
  for (int l = 4; l <= 8; ++l) t.push_back("D" + std::to_string(l));
  t.insert(t.end(), {"E6", "E7", "E8", "F4", "G2"});
  return t;
}

std::vector<std::string> all_types_rank6() {
  std::vector<std::string> t;
  for (int l = 1; l <= 6; ++l) t.push_back("A" + std::to_string(l));
  for (int l = 2; l <= 6; ++l) t.push_back("B" + std::to_string(l));
  for (int l = 3; l <= 6; ++l) t.push_back("C" + std::to_string(l));
  for (int l = 4; l <= 6; ++l) t.push_back("D" + std::to_string(l));
  t.insert(t.end(), {"E6", "F4", "G2"});
  return t;
}

// --------------------------------------------------------------------------

std::pair<bool, std::string> root_system_integrity() {
  int types = 0;
  for (const std::string& name : all_types_rank8()) {
    RootSystem rs = RootSystem::build(name);
    ++types;
    if (static_cast<int>(rs.roots().size()) != classical_root_count(rs.type()))
      return {false, name + ": root count mismatch"};
    const Eigen::MatrixXi& c = rs.cartan_matrix();
    for (int i = 0; i < rs.rank(); ++i)
      if (c(i, i) != 2) return {false, name + ": Cartan diagonal"};
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j)
        if (pairing(rs.fundamental_weights()[static_cast<std::size_t>(i)],
                    rs.simple_roots()[static_cast<std::size_t>(j)]) !=
            Rational(i == j ? 1 : 0))
          return {false, name + ": fundamental-weight pairing is not the identity"};
  }
  return {true, std::to_string(types) + " types: classical counts, integral Cartan data, "
                "identity pairing"};
}

std::pair<bool, std::string> chevalley_soundness() {
  long long triples = 0;
  for (const std::string& name :
       {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "G2", "F4"}) {
    auto g = LieAlgebra::build(RootSystem::build(name));
    JacobiReport jr = verify_jacobi(*g);
    if (!jr.ok) return {false, std::string(name) + ": Jacobi identity fails"};
    triples += jr.checked_triples;
    for (int k = 0; k < g->num_positive(); ++k) {
      LieAlgebra::Element lhs = g->bracket(g->basis_element(g->e_index(k)),
                                           g->basis_element(g->f_index(k)));
      const QVec& alpha = g->root_system().positive_roots()[static_cast<std::size_t>(k)];
      if (lhs != g->coroot_element(alpha))
        return {false, std::string(name) + ": raising/lowering bracket is not the coroot"};
    }
  }
  return {true, "Jacobi identity on " + std::to_string(triples) +
                " basis triples; raising/lowering brackets equal coroots"};
}

std::pair<bool, std::string> momega_campaign() {
  long long cases = 0, violations = 0, witnessless = 0;
  for (const std::string& name : all_types_rank8()) {
    MomegaReport r = verify_momega(RootSystem::build(name), 12);
    if (!r.all_ok) return {false, name + ": a premise-respecting case failed"};
    cases += static_cast<long long>(r.cases.size());
    violations += r.premise_violations;
    for (const MomegaCase& c : r.cases)
      if (!c.ok) ++witnessless;
  }
  // The divisibility premise stated for odd-rank A types (rank+1 | m) is not
  // implied by lattice membership; exactly four in-lattice odd multiples in
  // A5 consequently lack any even pairing, and they are recorded as premise
  // violations rather than counterexamples.
  if (witnessless != 4)
    return {false, std::to_string(witnessless) + " witnessless cases, pinned 4 (all in A5)"};
  return {true, std::to_string(cases) + " in-lattice multiples witnessed or verified; " +
                std::to_string(violations) + " stated-premise violations recorded, " +
                "4 of them (odd multiples in A5) necessarily witnessless"};
}

std::pair<bool, std::string> even_coroot_campaign() {
  long long checked = 0;
  for (const std::string& name : all_types_rank6()) {
    EvenCorootReport r = verify_even_coroot(RootSystem::build(name), 5);
    if (!r.all_ok)
      return {false, name + ": " + std::to_string(r.failures.size()) + " weights lack a witness"};
    checked += r.checked;
  }
  return {true, std::to_string(checked) +
                " non-extremal dominant weights all admit a positive even pairing"};
}

std::pair<bool, std::string> rank_one_tensor_generation() {
  std::filesystem::create_directories(kOutDir);
  for (int n : {1, 2, 4, 6, 8, 10, 12}) {
    Certificate cert = certify(sl2_irrep(n), "V(" + std::to_string(n) + ")");
    write_json_file(json_certificate(cert),
                    (kOutDir / ("certificate-A1-V" + std::to_string(n) + ".json")).string());
    if (!cert.generated) return {false, "V(" + std::to_string(n) + ") not generated"};
  }
  // Soundness guard: the first odd weight above one must be refused.
  Certificate odd = certify(sl2_irrep(3), "V(3)");
  write_json_file(json_certificate(odd), (kOutDir / "certificate-A1-V3.json").string());
  if (odd.generated) return {false, "V(3) wrongly reported as generated"};
  return {true, "V(1) and even V(n), n <= 12, generated; V(3) correctly refused at closure "
                "dimension " + std::to_string(odd.closure_dims.back()) + " of " +
                std::to_string(odd.target_dim) + "; certificates archived"};
}

std::pair<bool, std::string> adjoint_generation() {
  std::filesystem::create_directories(kOutDir);
  double slowest = 0.0;
  std::string slowest_type;
  for (const std::string& name :
       {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"}) {
    auto t0 = std::chrono::steady_clock::now();
    Certificate cert =
        certify(adjoint_rep(LieAlgebra::build(RootSystem::build(name))), name + " adjoint module");
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_json_file(json_certificate(cert),
                    (kOutDir / ("certificate-" + name + "-adjoint.json")).string());
    if (!cert.generated) return {false, name + " adjoint not generated"};
    if (secs > kCertifySecondsMax)
      return {false, name + " certification exceeded " + std::to_string(kCertifySecondsMax) + " s"};
    if (secs > slowest) {
      slowest = secs;
      slowest_type = name;
    }
  }
  for (const std::string& name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    AdjointCasesReport r = verify_adjoint_cases(LieAlgebra::build(RootSystem::build(name)));
    if (!r.ok) return {false, name + ": a dual-adjoint case identity fails"};
  }
  std::ostringstream note;
  note << "12 adjoint modules generated (slowest " << slowest_type << " at " << std::fixed
       << std::setprecision(1) << slowest << " s); case identities hold through rank 3";
  return {true, note.str()};
}

std::pair<bool, std::string> lowering_power_identities() {
  int positions = 0;
  for (int n : {6, 8, 10}) {
    for (int k = 2; k <= n - 1; ++k) {
      if (n - 2 * k == 0) continue;
      OldSl2Report r = verify_old_sl2(n, k);
      ++positions;
      if (!r.ok)
        return {false, "V(" + std::to_string(n) + "), position " + std::to_string(k) + " fails"};
    }
  }
  return {true, std::to_string(positions) +
                " admissible positions: both displayed identities exact, vectors independent"};
}

std::pair<bool, std::string> highest_weight_construction() {
  for (const std::string& name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    RootSystem rs = RootSystem::build(name);
    Weight theta = rs.highest_root();
    long long expect = weyl_dim(rs, theta);
    Representation rep = construct_irrep(rs, theta, 2);
    if (rep.dim != expect) return {false, name + ": highest-root dimension mismatch"};
    if (!certify(rep, name + " highest-root module").generated)
      return {false, name + ": highest-root module not generated"};
  }
  for (const std::string& name : {"A1", "A2"}) {
    RootSystem rs = RootSystem::build(name);
    Weight two_theta = Rational(2) * rs.highest_root();
    long long expect = weyl_dim(rs, two_theta);
    Representation rep = construct_irrep(rs, two_theta, 2);
    if (rep.dim != expect) return {false, name + ": doubled-highest-root dimension mismatch"};
    if (!certify(rep, name + " doubled-highest-root module").generated)
      return {false, name + ": doubled-highest-root module not generated"};
  }
  return {true, "highest-root modules (rank <= 3) and doubled highest root on A1, A2: "
                "dimensions match the product formula, all generated"};
}

std::pair<bool, std::string> boundedness_values() {
  // Standard orthogonal modules.  Odd ambient dimensions pair 2 against a
  // short coroot, so the unit bound claimed for them holds only for the
  // rotation generators (half-coroots); the pairing values are pinned here.
  struct Case {
    int n;
    long long expect;
  };
  for (Case c : {Case{2, 2}, Case{4, 2}, Case{5, 1}, Case{6, 2}}) {
    long long got = boundedness(so_standard_rep(c.n));
    if (got != c.expect)
      return {false, "so(" + std::to_string(c.n + 1) + ") standard module: boundedness " +
                     std::to_string(got) + ", pinned " + std::to_string(c.expect)};
  }
  auto [f1, f2] = so4_factor_reps();
  if (boundedness(f1) != 1 || boundedness(f2) != 1)
    return {false, "so(4) factor modules are not bounded by 1"};

  auto sp_adjoint = [](const std::string& name) {
    return boundedness(adjoint_rep(LieAlgebra::build(RootSystem::build(name))));
  };
  if (sp_adjoint("A1") != 2) return {false, "sp(2) adjoint boundedness is not 2"};
  if (sp_adjoint("C2") != 2) return {false, "sp(4) adjoint boundedness is not 2"};
  if (sp_adjoint("C3") != 2) return {false, "sp(6) adjoint boundedness is not 2"};
  if (sp_adjoint("G2") != 3) return {false, "G2 adjoint boundedness is not 3"};
  return {true, "orthogonal standard modules bounded by 2 (even ambient dimension: 2; "
                "so(6) and both so(4) factors: 1), symplectic adjoints 2, G2 adjoint 3"};
}

std::pair<bool, std::string> quadric_and_symplectic() {
  for (int n = 2; n <= 6; ++n) {
    std::vector<PolyVectorField> fields = quadric_fields(n);
    const int m = n + 1;
    Polynomial q = Polynomial::constant(m, GaussianRational(-1));
    for (int i = 0; i < m; ++i) {
      Polynomial x = Polynomial::variable(m, i);
      q += x * x;
    }
    for (const PolyVectorField& f : fields)
      if (!apply_field(f, q).is_zero())
        return {false, "a rotation field is not tangent to the quadric, n = " + std::to_string(n)};

    auto field_at = [&](int i, int j) {
      PolyVectorField out;
      out.n = m;
      out.components.assign(static_cast<std::size_t>(m), Polynomial(m));
      if (i == j) return out;
      int a = std::min(i, j), b = std::max(i, j);
      int idx = 0;
      for (int r = 0; r < a; ++r) idx += n - r;
      idx += b - a - 1;
      out = fields[static_cast<std::size_t>(idx)];
      if (i > j)
        for (Polynomial& c : out.components) c = -c;
      return out;
    };
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = 0; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) {
            PolyVectorField lhs = bracket_fields(field_at(i, j), field_at(k, l));
            PolyVectorField rhs;
            rhs.n = m;
            rhs.components.assign(static_cast<std::size_t>(m), Polynomial(m));
            auto add = [&](int sgn, const PolyVectorField& f) {
              for (int p = 0; p < m; ++p)
                rhs.components[static_cast<std::size_t>(p)] +=
                    GaussianRational(sgn) * f.components[static_cast<std::size_t>(p)];
            };
            if (j == k) add(1, field_at(i, l));
            if (i == k) add(-1, field_at(j, l));
            if (i == l) add(1, field_at(j, k));
            if (j == l) add(-1, field_at(i, k));
            for (int p = 0; p < m; ++p)
              if (!(lhs.components[static_cast<std::size_t>(p)] ==
                    rhs.components[static_cast<std::size_t>(p)]))
                return {false, "bracket relation fails at n = " + std::to_string(n)};
          }
  }
  for (int n : {2, 3})
    for (unsigned seed = 1; seed <= 20; ++seed)
      if (!symplectic_orbit_check(n, random_symplectic(n, seed, 5)))
        return {false, "orbit equations fail in Sp(" + std::to_string(2 * n) + ")"};
  return {true, "tangency and index-pair brackets symbolic through n = 6; orbit equations "
                "exact on 20 random matrices each in Sp(4) and Sp(6)"};
}

std::pair<bool, std::string> flow_numerics() {
  PolyVectorField rot;
  rot.n = 2;
  rot.components = {-Polynomial::variable(2, 1), Polynomial::variable(2, 0)};
  CVec p(2);
  p << std::complex<double>(1, 0), std::complex<double>(0, 0);
  const double t = 1.0;
  CVec target(2);
  target << std::complex<double>(std::cos(t), 0), std::complex<double>(std::sin(t), 0);
  auto euler_step = [&](std::complex<double> s, const CVec& x) {
    std::vector<std::complex<double>> at = {x(0), x(1)};
    CVec v(2);
    v(0) = rot.components[0].evaluate_numeric(at);
    v(1) = rot.components[1].evaluate_numeric(at);
    return CVec(x + s * v);
  };
  double e10 = (euler_product(euler_step, t, 10, p) - target).norm();
  double e100 = (euler_product(euler_step, t, 100, p) - target).norm();
  if (!(e10 / e100 >= kEulerImprovementMin))
    return {false, "Euler-product error improved only " + std::to_string(e10 / e100) + "x"};

  PolyVectorField eta;
  eta.n = 2;
  Polynomial x0 = Polynomial::variable(2, 0);
  eta.components = {Polynomial(2), x0 * x0};
  PolyVectorField br = bracket_fields(rot, eta);
  CVec base(2);
  base << std::complex<double>(1.0, 0), std::complex<double>(0.5, 0);
  std::vector<std::complex<double>> at = {base(0), base(1)};
  CVec exact(2);
  exact << br.components[0].evaluate_numeric(at), br.components[1].evaluate_numeric(at);
  const double s = 0.01;
  CVec slope = (commutator_flow(rot, eta, s, base, 400) - base) / (s * s);
  double rel = (slope - exact).norm() / exact.norm();
  if (!(rel < kCommutatorRelTol))
    return {false, "commutator slope off by " + std::to_string(rel)};

  PolyVectorField dw;
  dw.n = 2;
  dw.components = {Polynomial(2), Polynomial::constant(2, GaussianRational(1))};
  Polynomial z = Polynomial::variable(2, 0);
  Polynomial cube = z * z * z;
  PolyVectorField cube_dw;
  cube_dw.n = 2;
  cube_dw.components = {Polynomial(2), cube};
  CVec start(2);
  start << std::complex<double>(2, 0), std::complex<double>(0, 0);
  double d1 =
      (shear_flow(dw, cube, 1.0, start) - flow_rk4(cube_dw, start, 1.0, 2000).endpoint).norm();
  Polynomial one = Polynomial::constant(2, GaussianRational(1));
  double d2 = (shear_flow(rot, one, 0.9, start) - flow_rk4(rot, start, 0.9, 2000).endpoint).norm();
  if (!(d1 < kShearIntegratorTol && d2 < kShearIntegratorTol))
    return {false, "integrator strays from the closed forms"};

  std::ostringstream note;
  note << std::scientific << std::setprecision(2) << "Euler error " << e10 << " -> " << e100
       << " (" << std::fixed << std::setprecision(1) << e10 / e100 << "x), slope error "
       << std::setprecision(3) << rel << ", integrator vs closed forms " << std::scientific
       << std::setprecision(1) << std::max(d1, d2);
  return {true, note.str()};
}

}  // namespace

int main() {
  struct Criterion {
    std::string title;
    std::function<std::pair<bool, std::string>()> body;
  };
  const std::vector<Criterion> criteria = {
      {"root-system integrity", root_system_integrity},
      {"Chevalley-basis soundness", chevalley_soundness},
      {"fundamental-weight multiples campaign", momega_campaign},
      {"even-pairing witnesses campaign", even_coroot_campaign},
      {"rank-one tensor modules generate", rank_one_tensor_generation},
      {"adjoint tensor modules generate", adjoint_generation},
      {"lowering-power identities", lowering_power_identities},
      {"highest-weight construction and generation", highest_weight_construction},
      {"boundedness values", boundedness_values},
      {"quadric identities and symplectic orbits", quadric_and_symplectic},
      {"flow numerics", flow_numerics},
  };

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      std::tie(ok, note) = criteria[i].body();
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << "criterion " << (i + 1) << ": " << (ok ? "pass" : "FAIL") << " - "
         << criteria[i].title << " [" << std::fixed << std::setprecision(1) << secs << " s] ("
         << note << ")";
    std::cout << line.str() << std::endl;
    all_ok = all_ok && ok;
  }
  std::cout << (all_ok ? "all criteria passed" : "ACCEPTANCE FAILED") << std::endl;
  return all_ok ? 0 : 1;
}
