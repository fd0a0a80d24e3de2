#include "liedense/json_io.hpp"

#include <exception>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "liedense/errors.hpp"

namespace liedense {

namespace {

[[noreturn]] void load_fail(const std::string& msg) { fail(ErrorKind::LoadError, msg); }

}  // namespace

Json json_vec(const QVec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

Json json_mat(const QMat& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(std::move(row));
  }
  return out;
}

Json json_int_mat(const Eigen::MatrixXi& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

Json json_roots(const RootSystem& rs) {
  Json out;
  out["type"] = rs.type().str();
  if (!rs.notice().empty()) out["notice"] = rs.notice();
  out["rank"] = rs.rank();
  out["ambient_dim"] = static_cast<int>(rs.ambient_dim());
  out["root_count"] = static_cast<int>(rs.roots().size());
  Json simple = Json::array(), positive = Json::array(), all = Json::array();
  for (const QVec& a : rs.simple_roots()) simple.push_back(json_vec(a));
  for (const QVec& a : rs.positive_roots()) positive.push_back(json_vec(a));
  for (const QVec& a : rs.roots()) all.push_back(json_vec(a));
  out["simple_roots"] = std::move(simple);
  out["positive_roots"] = std::move(positive);
  out["roots"] = std::move(all);
  Json fw = Json::array();
  for (const QVec& w : rs.fundamental_weights()) fw.push_back(json_vec(w));
  out["fundamental_weights"] = std::move(fw);
  out["cartan_matrix"] = json_int_mat(rs.cartan_matrix());
  return out;
}

Json json_pairing(const RootSystem& rs) {
  const int l = rs.rank();
  Json out;
  out["type"] = rs.type().str();
  out["cartan_matrix"] = json_int_mat(rs.cartan_matrix());
  QMat simple(l, l), omega(l, l);
  bool delta_ok = true;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      simple(i, j) = pairing(rs.simple_roots()[static_cast<std::size_t>(i)],
                             rs.simple_roots()[static_cast<std::size_t>(j)]);
      omega(i, j) = pairing(rs.fundamental_weights()[static_cast<std::size_t>(i)],
                            rs.simple_roots()[static_cast<std::size_t>(j)]);
      if (omega(i, j) != Rational(i == j ? 1 : 0)) delta_ok = false;
    }
  out["simple_pairings"] = json_mat(simple);
  out["omega_alpha_pairings"] = json_mat(omega);
  out["omega_alpha_is_delta"] = delta_ok;
  return out;
}

Json json_lattice(const RootSystem& rs, int m_max) {
  Json out;
  out["type"] = rs.type().str();
  out["m_max"] = m_max;
  Json entries = Json::array();
  for (int i = 1; i <= rs.rank(); ++i) {
    const Weight& w = rs.fundamental_weights()[static_cast<std::size_t>(i - 1)];
    for (int m = 1; m <= m_max; ++m) {
      LatticeCoords lc = in_root_lattice(rs, Weight(Rational(m) * w));
      Json e;
      e["i"] = i;
      e["m"] = m;
      e["in_root_lattice"] = lc.integral;
      e["simple_root_coords"] = json_vec(lc.coeffs);
      entries.push_back(std::move(e));
    }
  }
  out["entries"] = std::move(entries);
  return out;
}

Json json_momega(const MomegaReport& r) {
  Json out;
  out["type"] = r.rtype.str();
  out["m_max"] = r.m_max;
  out["all_ok"] = r.all_ok;
  out["premise_violations"] = r.premise_violations;
  Json cases = Json::array();
  for (const MomegaCase& c : r.cases) {
    Json e;
    e["type"] = r.rtype.str();
    e["i"] = c.i;
    e["m"] = c.m;
    e["part"] = std::string(1, c.part);
    e["ok"] = c.ok;
    if (!c.premise_holds) e["premise_holds"] = false;
    if (c.part == 'c') {
      Json v;
      v["plus_not_multiple"] = c.plus_not_multiple;
      v["minus_not_multiple"] = c.minus_not_multiple;
      v["plus_not_extremal"] = c.plus_not_extremal;
      v["minus_not_extremal"] = c.minus_not_extremal;
      e["verification"] = std::move(v);
    } else {
      e["witness"] = c.witness ? json_vec(*c.witness) : Json();
      e["value"] = c.value.str();
    }
    cases.push_back(std::move(e));
  }
  out["cases"] = std::move(cases);
  return out;
}

Json json_even_coroot(const EvenCorootReport& r) {
  Json out;
  out["type"] = r.rtype.str();
  out["coeff_sum_max"] = r.coeff_sum_max;
  out["checked"] = r.checked;
  out["skipped_multiples"] = r.skipped_multiples;
  out["all_ok"] = r.all_ok;
  Json fails = Json::array();
  for (const QVec& f : r.failures) fails.push_back(json_vec(f));
  out["failures"] = std::move(fails);
  return out;
}

Json json_chevalley(const LieAlgebra& g, const JacobiReport& jacobi) {
  Json out;
  out["type"] = g.root_system().type().str();
  out["dim"] = g.dim();
  Json labels = Json::array();
  for (int b = 0; b < g.dim(); ++b) labels.push_back(g.basis_label(b));
  out["basis"] = std::move(labels);
  out["jacobi_ok"] = jacobi.ok;
  out["jacobi_triples_checked"] = jacobi.checked_triples;
  Json brackets = Json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) {
      const BasisCombo& combo = g.bracket_basis(i, j);
      if (combo.empty()) continue;
      Json terms = Json::array();
      for (const auto& [k, c] : combo) terms.push_back(Json::array({k, c.str()}));
      brackets.push_back(Json::array({i, j, std::move(terms)}));
    }
  out["brackets"] = std::move(brackets);
  return out;
}

Json json_certificate(const Certificate& c) {
  Json out;
  out["module"] = c.module_desc;
  out["target_dim"] = c.target_dim;
  out["seed_dim"] = c.seed_dim;
  out["closure_dims"] = c.closure_dims;
  out["generated"] = c.generated;
  return out;
}

Json json_adjoint_cases(const AdjointCasesReport& r) {
  Json out;
  out["type"] = r.rtype.str();
  out["ok"] = r.ok;
  Json pairs = Json::array();
  for (const AdjointPairCase& p : r.pairs) {
    Json e;
    e["alpha"] = p.alpha;
    e["beta"] = p.beta;
    e["shear_ok"] = p.shear_ok;
    e["overshear_ok"] = p.overshear_ok;
    e["case2_ok"] = p.case2_ok;
    e["case3_ok"] = p.case3_ok;
    e["case4_ok"] = p.case4_ok;
    e["n2"] = p.n2.str();
    e["r2"] = p.r2.str();
    e["n3"] = p.n3.str();
    e["c4"] = p.c4.str();
    pairs.push_back(std::move(e));
  }
  out["pairs"] = std::move(pairs);
  return out;
}

Json json_old_sl2(const OldSl2Report& r) {
  Json out;
  out["n"] = r.n;
  out["k"] = r.k;
  out["j"] = r.j;
  out["lambda"] = r.lambda;
  out["lowering_identity_ok"] = r.lowering_identity_ok;
  out["top_power_identity_ok"] = r.top_power_identity_ok;
  out["next_power_identity_ok"] = r.next_power_identity_ok;
  out["overshears_ok"] = r.overshears_ok;
  out["independent"] = r.independent;
  out["ok"] = r.ok;
  return out;
}

Json json_odd_weight_cases(const OddWeightCasesReport& r) {
  Json out;
  out["n"] = r.n;
  out["cartan_checked"] = r.cartan_checked;
  out["raising_checked"] = r.raising_checked;
  out["lowering_checked"] = r.lowering_checked;
  out["skipped_even"] = r.skipped_even;
  out["coefficients_odd"] = r.coefficients_odd;
  out["ok"] = r.ok;
  return out;
}

Json json_cartan_generation(const CartanGenerationReport& r) {
  Json out;
  out["identity_ok"] = r.identity_ok;
  out["pairs_checked"] = r.pairs_checked;
  out["ambient_dim"] = r.ambient_dim;
  out["closure_dim"] = r.closure_dim;
  out["generates"] = r.generates;
  out["ok"] = r.ok;
  return out;
}

Json json_polynomial(const Polynomial& p) {
  Json out;
  out["nvars"] = p.nvars();
  Json coeffs = Json::object();
  for (const auto& [e, c] : p.terms()) {
    std::ostringstream key;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k) key << ',';
      key << e[k];
    }
    coeffs[key.str()] = c.str();
  }
  out["coefficients"] = std::move(coeffs);
  return out;
}

Json json_polynomial_list(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const Polynomial& p : ps) out.push_back(json_polynomial(p));
  return out;
}

Json json_representation(const Representation& rep) {
  Json out;
  out["algebra"] = rep.algebra->root_system().type().str();
  out["dim"] = rep.dim;
  Json mats = Json::object();
  for (int b = 0; b < rep.algebra->dim(); ++b)
    mats[rep.algebra->basis_label(b)] = json_mat(rep.matrix(b));
  out["matrices"] = std::move(mats);
  return out;
}

Representation representation_from_json(const Json& j) {
  if (!j.is_object()) load_fail("module file: top level is not an object");
  if (!j.contains("algebra") || !j["algebra"].is_string())
    load_fail("module file: missing string field 'algebra'");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    load_fail("module file: missing integer field 'dim'");
  if (!j.contains("matrices") || !j["matrices"].is_object())
    load_fail("module file: missing object field 'matrices'");

  Representation rep;
  try {
    rep.algebra = LieAlgebra::build(RootSystem::build(j["algebra"].get<std::string>()));
  } catch (const Error& e) {
    load_fail(std::string("module file: bad algebra type: ") + e.what());
  }
  long long dim = j["dim"].get<long long>();
  if (dim < 0) load_fail("module file: negative dimension");
  check_dense_dim(dim);
  rep.dim = static_cast<int>(dim);

  const Json& mats = j["matrices"];
  if (static_cast<int>(mats.size()) != rep.algebra->dim())
    load_fail("module file: expected " + std::to_string(rep.algebra->dim()) +
              " matrices, found " + std::to_string(mats.size()));
  rep.matrices.reserve(static_cast<std::size_t>(rep.algebra->dim()));
  for (int b = 0; b < rep.algebra->dim(); ++b) {
    const std::string label = rep.algebra->basis_label(b);
    if (!mats.contains(label)) load_fail("module file: missing matrix for basis label " + label);
    const Json& rows = mats[label];
    if (!rows.is_array() || static_cast<int>(rows.size()) != rep.dim)
      load_fail("module file: matrix " + label + " is not " + std::to_string(rep.dim) + " rows");
    QMat m(rep.dim, rep.dim);
    for (int r = 0; r < rep.dim; ++r) {
      const Json& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<int>(row.size()) != rep.dim)
        load_fail("module file: matrix " + label + " row " + std::to_string(r) +
                  " is not " + std::to_string(rep.dim) + " entries");
      for (int c = 0; c < rep.dim; ++c) {
        const Json& cell = row[static_cast<std::size_t>(c)];
        if (!cell.is_string())
          load_fail("module file: matrix " + label + " entry (" + std::to_string(r) + "," +
                    std::to_string(c) + ") is not a string");
        try {
          m(r, c) = Rational::parse(cell.get<std::string>());
        } catch (const std::exception& e) {
          load_fail("module file: matrix " + label + ": " + e.what());
        }
      }
    }
    rep.matrices.push_back(std::move(m));
  }
  if (!homomorphism_ok(rep))
    load_fail("module file: matrices do not satisfy the bracket relations");
  return rep;
}

Representation load_representation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) load_fail("cannot open module file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    load_fail("module file " + path + ": " + e.what());
  }
  return representation_from_json(j);
}

void save_representation_file(const Representation& rep, const std::string& path) {
  write_json_file(json_representation(rep), path);
}

std::string json_dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const Json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) load_fail("cannot open for writing: " + path);
  out << json_dump(j);
  if (!out) load_fail("write failed: " + path);
}

}  // namespace liedense
