// Batch verification driver.  Each subcommand runs one campaign, prints a
// report (JSON by default, --format text for a summary), optionally persists
// the report under --out, and exits 0 when every check passed, 1 when a
// check failed or an input was rejected, 2 on usage errors.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
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

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;    // "A2" or family letter combined with --rank
  int rank = 0;        // rank when --type is a bare family letter
  std::string rep = "adjoint";
  int m_max = 12;
  int k_max = 3;
  std::string lambda;  // fundamental coordinates, comma-separated
  std::string out_dir;
  std::string format = "json";
};

std::string resolved_type(const Options& o) {
  if (o.type.empty()) throw UsageError("--type is required for this command");
  if (o.type.size() == 1) {
    if (o.rank <= 0) throw UsageError("--type " + o.type + " needs --rank");
    return o.type + std::to_string(o.rank);
  }
  if (o.rank > 0) throw UsageError("--rank conflicts with the rank inside --type " + o.type);
  return o.type;
}

RootSystem build_rs(const Options& o) { return RootSystem::build(resolved_type(o)); }

// Prints the report and, when --out is set, also writes <name>.json there.
void emit(const Options& o, const Json& report, const std::string& text,
          const std::string& file_name) {
  if (o.format == "text")
    std::cout << text;
  else
    std::cout << json_dump(report);
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    write_json_file(report, (std::filesystem::path(o.out_dir) / (file_name + ".json")).string());
  }
}

std::string vec_text(const QVec& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v(i);
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

bool run_roots(const Options& o) {
  RootSystem rs = build_rs(o);
  bool ok = static_cast<int>(rs.roots().size()) == classical_root_count(rs.type());
  Json report = json_roots(rs);
  report["count_matches_classical"] = ok;
  std::ostringstream text;
  text << "type " << rs.type().str() << "\n";
  if (!rs.notice().empty()) text << rs.notice() << "\n";
  text << rs.roots().size() << " roots\n";
  for (const QVec& a : rs.roots()) text << "  " << vec_text(a) << "\n";
  text << "count matches classical value: " << (ok ? "yes" : "NO") << "\n";
  emit(o, report, text.str(), "roots-" + rs.type().str());
  return ok;
}

bool run_pairing(const Options& o) {
  RootSystem rs = build_rs(o);
  Json report = json_pairing(rs);
  bool ok = report["omega_alpha_is_delta"].get<bool>();
  std::ostringstream text;
  text << "type " << rs.type().str() << "\n"
       << "fundamental weights pair against simple roots as the identity: "
       << (ok ? "yes" : "NO") << "\n";
  emit(o, report, text.str(), "pairing-" + rs.type().str());
  return ok;
}

bool run_lattice(const Options& o) {
  RootSystem rs = build_rs(o);
  if (o.m_max < 1) throw UsageError("--m-max must be positive");
  Json report = json_lattice(rs, o.m_max);
  std::ostringstream text;
  text << "type " << rs.type().str() << ", multiples up to " << o.m_max << "\n";
  for (const Json& e : report["entries"])
    if (e["in_root_lattice"].get<bool>())
      text << "  " << e["m"].get<int>() << " * omega_" << e["i"].get<int>()
           << " lies in the root lattice\n";
  emit(o, report, text.str(), "lattice-" + rs.type().str());
  return true;
}

bool run_momega(const Options& o) {
  RootSystem rs = build_rs(o);
  if (o.m_max < 1) throw UsageError("--m-max must be positive");
  MomegaReport r = verify_momega(rs, o.m_max);
  std::ostringstream text;
  text << "type " << rs.type().str() << ", " << r.cases.size()
       << " in-lattice (i, m) cases up to m = " << o.m_max << "\n"
       << "all witnessed/verified: " << (r.all_ok ? "yes" : "NO") << "\n";
  emit(o, json_momega(r), text.str(), "momega-" + rs.type().str());
  return r.all_ok;
}

bool run_even_coroot(const Options& o) {
  RootSystem rs = build_rs(o);
  if (o.m_max < 1) throw UsageError("--m-max must be positive");
  EvenCorootReport r = verify_even_coroot(rs, o.m_max);
  std::ostringstream text;
  text << "type " << rs.type().str() << ", coordinate sums up to " << o.m_max << "\n"
       << r.checked << " dominant weights checked, " << r.skipped_multiples
       << " fundamental-weight multiples skipped\n"
       << "all admit a positive even pairing: " << (r.all_ok ? "yes" : "NO") << "\n";
  emit(o, json_even_coroot(r), text.str(), "even-coroot-" + rs.type().str());
  return r.all_ok;
}

bool run_chevalley(const Options& o) {
  RootSystem rs = build_rs(o);
  std::shared_ptr<const LieAlgebra> g = LieAlgebra::build(rs);
  JacobiReport jr = verify_jacobi(*g);
  Json report = json_chevalley(*g, jr);
  std::ostringstream text;
  text << "type " << rs.type().str() << ", dimension " << g->dim() << "\n"
       << "bracket table entries: " << report["brackets"].size() << "\n"
       << "Jacobi identity on " << jr.checked_triples
       << " basis triples: " << (jr.ok ? "yes" : "NO") << "\n";
  emit(o, report, text.str(), "chevalley-" + rs.type().str());
  return jr.ok;
}

struct ResolvedRep {
  Representation rep;
  std::string file_tag;  // used in report file names
  std::string desc;      // human-readable module description
};

ResolvedRep resolve_rep(const Options& o) {
  if (o.rep == "adjoint") {
    RootSystem rs = build_rs(o);
    std::string t = rs.type().str();
    return {adjoint_rep(LieAlgebra::build(rs)), t + "-adjoint", t + " adjoint module"};
  }
  if (o.rep.rfind("sl2:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(o.rep.substr(4));
    } catch (const std::exception&) {
      throw UsageError("--rep sl2:<n> needs an integer highest weight");
    }
    if (!o.type.empty() && resolved_type(o) != "A1")
      throw UsageError("--rep sl2:<n> is a rank-one module; --type must be A1 or omitted");
    return {sl2_irrep(n), "A1-sl2-" + std::to_string(n), "V(" + std::to_string(n) + ")"};
  }
  if (o.rep.rfind("file:", 0) == 0) {
    std::string path = o.rep.substr(5);
    Representation rep = load_representation_file(path);
    std::string t = rep.algebra->root_system().type().str();
    if (!o.type.empty() && resolved_type(o) != t)
      throw UsageError("--type disagrees with the algebra stored in " + path);
    std::string stem = std::filesystem::path(path).stem().string();
    return {std::move(rep), t + "-file-" + stem, t + " module from " + stem};
  }
  throw UsageError("--rep must be adjoint, sl2:<n>, or file:<path>");
}

bool run_certify(const Options& o) {
  auto [rep, desc, human] = resolve_rep(o);
  Certificate cert = certify(rep, human);
  std::ostringstream text;
  text << cert.module_desc << ": seed rank " << cert.seed_dim << ", closure reaches "
       << (cert.closure_dims.empty() ? cert.seed_dim : cert.closure_dims.back()) << " of "
       << cert.target_dim << "\n"
       << "generated: " << (cert.generated ? "yes" : "NO") << "\n";
  emit(o, json_certificate(cert), text.str(), "certify-" + desc);
  return cert.generated;
}

bool run_irrep(const Options& o) {
  RootSystem rs = build_rs(o);
  if (o.k_max < 1) throw UsageError("--k-max must be positive");
  QVec coeffs;
  std::string tag;
  if (o.lambda.empty()) {
    coeffs = fundamental_coords(rs, rs.highest_root());
    tag = "highest-root";
  } else {
    std::vector<Rational> parts;
    std::stringstream ss(o.lambda);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        parts.push_back(Rational::parse(item));
      } catch (const std::exception&) {
        throw UsageError("--lambda entry '" + item + "' is not a rational");
      }
    }
    if (static_cast<int>(parts.size()) != rs.rank())
      throw UsageError("--lambda needs " + std::to_string(rs.rank()) + " coordinates");
    coeffs = QVec(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) coeffs(i) = parts[static_cast<std::size_t>(i)];
    tag = o.lambda;
    for (char& c : tag)
      if (c == ',') c = '-';
  }
  Weight lambda = weight_from_fundamental(rs, coeffs);
  long long expect = weyl_dim(rs, lambda);
  Representation rep = construct_irrep(rs, lambda, o.k_max);
  bool dims_match = rep.dim == expect;
  Certificate cert = certify(rep, rs.type().str() + " irreducible of dimension " +
                                      std::to_string(rep.dim));
  Json report;
  report["type"] = rs.type().str();
  report["lambda_fundamental"] = json_vec(coeffs);
  report["k_max"] = o.k_max;
  report["dim"] = rep.dim;
  report["dim_formula"] = expect;
  report["dims_match"] = dims_match;
  report["certificate"] = json_certificate(cert);
  bool ok = dims_match && cert.generated;
  std::ostringstream text;
  text << "type " << rs.type().str() << ", highest weight coordinates " << vec_text(coeffs)
       << "\nconstructed dimension " << rep.dim << ", formula gives " << expect << "\n"
       << "generated: " << (cert.generated ? "yes" : "NO") << "\n";
  emit(o, report, text.str(), "irrep-" + rs.type().str() + "-" + tag);
  return ok;
}

bool run_adjoint_cases(const Options& o) {
  RootSystem rs = build_rs(o);
  AdjointCasesReport r = verify_adjoint_cases(LieAlgebra::build(rs));
  std::ostringstream text;
  text << "type " << rs.type().str() << ", " << r.pairs.size() << " positive-root pairs\n"
       << "all case identities hold: " << (r.ok ? "yes" : "NO") << "\n";
  emit(o, json_adjoint_cases(r), text.str(), "adjoint-cases-" + rs.type().str());
  return r.ok;
}

bool run_old_sl2(const Options& o) {
  if (o.rep.rfind("sl2:", 0) != 0)
    throw UsageError("old-sl2 needs --rep sl2:<n> to pick the module");
  int n = 0;
  try {
    n = std::stoi(o.rep.substr(4));
  } catch (const std::exception&) {
    throw UsageError("--rep sl2:<n> needs an integer highest weight");
  }
  if (n < 0) throw UsageError("--rep sl2:<n> needs n >= 0");
  bool all_ok = true;
  Json cases = Json::array();
  int admissible = 0;
  // Admissible positions: nonzero weight, raising and lowering both act,
  // and the largest raising power is at least two.
  for (int k = 2; k <= n - 1; ++k) {
    if (n - 2 * k == 0) continue;
    OldSl2Report r = verify_old_sl2(n, k);
    ++admissible;
    all_ok = all_ok && r.ok;
    cases.push_back(json_old_sl2(r));
  }
  Json report;
  report["n"] = n;
  report["admissible_positions"] = admissible;
  report["all_ok"] = all_ok;
  report["cases"] = std::move(cases);
  std::ostringstream text;
  text << "module V(" << n << "), " << admissible << " admissible positions\n"
       << "all identities hold: " << (all_ok ? "yes" : "NO") << "\n";
  emit(o, report, text.str(), "old-sl2-V" + std::to_string(n));
  return all_ok;
}

bool run_quadric(const Options& o) {
  int n = o.rank > 0 ? o.rank : 4;
  std::vector<PolyVectorField> fields = quadric_fields(n);
  const int m = n + 1;

  Polynomial q = Polynomial::constant(m, GaussianRational(-1));
  for (int i = 0; i < m; ++i) {
    Polynomial x = Polynomial::variable(m, i);
    q += x * x;
  }
  bool tangent = true;
  for (const PolyVectorField& f : fields) tangent = tangent && apply_field(f, q).is_zero();

  // Signed lookup: reversing the index pair negates the field.
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
  bool bracket_ok = true;
  for (int i = 0; i <= n && bracket_ok; ++i)
    for (int j = i + 1; j <= n && bracket_ok; ++j)
      for (int k = 0; k <= n && bracket_ok; ++k)
        for (int l = k + 1; l <= n && bracket_ok; ++l) {
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
          for (int p = 0; p < m && bracket_ok; ++p)
            bracket_ok = lhs.components[static_cast<std::size_t>(p)] ==
                         rhs.components[static_cast<std::size_t>(p)];
        }

  bool ok = tangent && bracket_ok;
  Json report;
  report["n"] = n;
  report["field_count"] = static_cast<int>(fields.size());
  report["tangency_ok"] = tangent;
  report["bracket_identity_ok"] = bracket_ok;
  report["ok"] = ok;
  Json jf = Json::array();
  for (const PolyVectorField& f : fields) jf.push_back(json_polynomial_list(f.components));
  report["fields"] = std::move(jf);
  std::ostringstream text;
  text << fields.size() << " rotation fields on the " << n << "-dimensional quadric\n"
       << "tangency: " << (tangent ? "yes" : "NO") << "\n"
       << "index-pair bracket relation: " << (bracket_ok ? "yes" : "NO") << "\n";
  emit(o, report, text.str(), "quadric-n" + std::to_string(n));
  return ok;
}

bool run_euler(const Options& o) {
  // Rotation benchmark: compare the N-fold Euler step against the closed form.
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
  double e1000 = (euler_product(euler_step, t, 1000, p) - target).norm();
  bool euler_ok = e10 / e100 >= 8.0 && e100 / e1000 >= 8.0;

  // Commutator-of-flows slope against the exact symbolic bracket.
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
  bool slope_ok = rel < 0.05;

  // Closed-form shear flows against the integrator.
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
  double shear_diff =
      (shear_flow(dw, cube, 1.0, start) - flow_rk4(cube_dw, start, 1.0, 2000).endpoint).norm();
  Polynomial one = Polynomial::constant(2, GaussianRational(1));
  double rot_diff =
      (shear_flow(rot, one, 0.9, start) - flow_rk4(rot, start, 0.9, 2000).endpoint).norm();
  bool shear_ok = shear_diff < 1e-8 && rot_diff < 1e-8;

  bool ok = euler_ok && slope_ok && shear_ok;
  Json report;
  report["euler_error_10"] = e10;
  report["euler_error_100"] = e100;
  report["euler_error_1000"] = e1000;
  report["euler_ratio_10_100"] = e10 / e100;
  report["euler_ratio_100_1000"] = e100 / e1000;
  report["euler_first_order_ok"] = euler_ok;
  report["commutator_relative_error"] = rel;
  report["commutator_slope_ok"] = slope_ok;
  report["shear_vs_rk4_cubic"] = shear_diff;
  report["shear_vs_rk4_rotation"] = rot_diff;
  report["shear_vs_rk4_ok"] = shear_ok;
  report["ok"] = ok;
  std::ostringstream text;
  text << "Euler-product error: N=10 " << e10 << ", N=100 " << e100 << ", N=1000 " << e1000
       << " (first-order decay: " << (euler_ok ? "yes" : "NO") << ")\n"
       << "commutator slope relative error " << rel << " (" << (slope_ok ? "ok" : "NO") << ")\n"
       << "closed-form shear vs integrator: " << shear_diff << ", " << rot_diff << " ("
       << (shear_ok ? "ok" : "NO") << ")\n";
  emit(o, report, text.str(), "euler");
  return ok;
}

bool run_symplectic(const Options& o) {
  int n = o.rank > 0 ? o.rank : 2;
  const int trials = 20;
  bool all_ok = true;
  Json checked = Json::array();
  for (unsigned seed = 1; seed <= trials; ++seed) {
    QMat g = random_symplectic(n, seed, 5);
    bool ok = symplectic_orbit_check(n, g);
    all_ok = all_ok && ok;
    Json e;
    e["seed"] = seed;
    e["ok"] = ok;
    checked.push_back(std::move(e));
  }
  Json report;
  report["n"] = n;
  report["group"] = "Sp(" + std::to_string(2 * n) + ")";
  report["trials"] = trials;
  report["all_ok"] = all_ok;
  report["cases"] = std::move(checked);
  std::ostringstream text;
  text << trials << " random integer matrices in Sp(" << 2 * n << ")\n"
       << "orbit equations hold exactly: " << (all_ok ? "yes" : "NO") << "\n";
  emit(o, report, text.str(), "symplectic-Sp" + std::to_string(2 * n));
  return all_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification campaigns for root systems, Chevalley bases, "
               "module generation, and flow numerics"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_type) {
    if (with_type) {
      sub->add_option("type,--type", o.type, "root-system type, e.g. A2 (or a family letter)");
      sub->add_option("--rank", o.rank, "rank when --type is a bare family letter");
    }
    sub->add_option("--out", o.out_dir, "directory for JSON report files");
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* roots = app.add_subcommand("roots", "enumerate the roots of a type");
  add_common(roots, true);
  CLI::App* pairing = app.add_subcommand("pairing", "pairing tables and the identity check");
  add_common(pairing, true);
  CLI::App* lattice = app.add_subcommand("lattice",
                                         "root-lattice membership of fundamental-weight multiples");
  add_common(lattice, true);
  lattice->add_option("--m-max", o.m_max, "largest multiple to test");
  CLI::App* momega = app.add_subcommand("momega",
                                        "even-pairing witnesses for in-lattice multiples");
  add_common(momega, true);
  momega->add_option("--m-max", o.m_max, "largest multiple to test");
  CLI::App* even = app.add_subcommand("even-coroot",
                                      "even-pairing witnesses for non-extremal dominant weights");
  add_common(even, true);
  even->add_option("--m-max", o.m_max, "largest fundamental-coordinate sum");
  CLI::App* chevalley = app.add_subcommand("chevalley",
                                           "bracket table export and the Jacobi identity");
  add_common(chevalley, true);
  CLI::App* certify_cmd = app.add_subcommand("certify", "seed-generation certificate for W (x) g");
  add_common(certify_cmd, true);
  certify_cmd->add_option("--rep", o.rep, "module: adjoint, sl2:<n>, or file:<path>");
  CLI::App* irrep = app.add_subcommand("irrep",
                                       "construct an irreducible module and certify generation");
  add_common(irrep, true);
  irrep->add_option("--k-max", o.k_max, "largest adjoint tensor power to search");
  irrep->add_option("--lambda", o.lambda,
                    "highest weight in fundamental coordinates, comma-separated "
                    "(default: the highest root)");
  CLI::App* adjoint_cases = app.add_subcommand("adjoint-cases",
                                               "case identities in the dual adjoint module");
  add_common(adjoint_cases, true);
  CLI::App* old_sl2 = app.add_subcommand("old-sl2",
                                         "lowering-power identities in V(n) (x) sl2");
  add_common(old_sl2, false);
  old_sl2->add_option("--rep", o.rep, "module selector sl2:<n>");
  CLI::App* quadric = app.add_subcommand("quadric",
                                         "tangency and bracket relations of the quadric fields");
  add_common(quadric, false);
  quadric->add_option("--rank", o.rank, "quadric dimension n (default 4)");
  CLI::App* euler = app.add_subcommand("euler", "product-formula and flow numerics benchmarks");
  add_common(euler, false);
  CLI::App* symplectic = app.add_subcommand("symplectic",
                                            "orbit equations for random symplectic matrices");
  add_common(symplectic, false);
  symplectic->add_option("--rank", o.rank, "half-rank n of Sp(2n) (default 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    bool ok = false;
    if (roots->parsed()) ok = run_roots(o);
    else if (pairing->parsed()) ok = run_pairing(o);
    else if (lattice->parsed()) ok = run_lattice(o);
    else if (momega->parsed()) ok = run_momega(o);
    else if (even->parsed()) ok = run_even_coroot(o);
    else if (chevalley->parsed()) ok = run_chevalley(o);
    else if (certify_cmd->parsed()) ok = run_certify(o);
    else if (irrep->parsed()) ok = run_irrep(o);
    else if (adjoint_cases->parsed()) ok = run_adjoint_cases(o);
    else if (old_sl2->parsed()) ok = run_old_sl2(o);
    else if (quadric->parsed()) ok = run_quadric(o);
    else if (euler->parsed()) ok = run_euler(o);
    else if (symplectic->parsed()) ok = run_symplectic(o);
    return ok ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
