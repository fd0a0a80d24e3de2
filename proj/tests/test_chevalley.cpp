#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "liedense/errors.hpp"
#include "liedense/lie_algebra.hpp"

using namespace liedense;
using Element = LieAlgebra::Element;

namespace {

std::shared_ptr<const LieAlgebra> alg(const char* name) {
  return LieAlgebra::build(RootSystem::build(name));
}

// Independent chain counter: largest k with beta - k*alpha a root.
int chain_p(const RootSystem& rs, const QVec& alpha, const QVec& beta) {
  int p = 0;
  QVec v = beta - alpha;
  while (rs.is_root(v)) {
    ++p;
    v -= alpha;
  }
  return p;
}

bool is_zero_vec(const QVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("rank-one algebra has the textbook relations and Killing values") {
  auto g = alg("A1");
  CHECK(g->dim() == 3);
  CHECK(g->num_positive() == 1);
  Element e = g->basis_element(g->e_index(0));
  Element f = g->basis_element(g->f_index(0));
  Element h = g->basis_element(g->h_index(0));
  CHECK(g->bracket(h, e) == Element(Rational(2) * e));
  CHECK(g->bracket(h, f) == Element(Rational(-2) * f));
  CHECK(g->bracket(e, f) == h);
  CHECK(g->bracket(f, e) == Element(-h));
  // tr(ad h . ad h) = 2^2 + (-2)^2 = 8; tr(ad e . ad f) = 4.
  CHECK(g->killing_form(h, h) == Rational(8));
  CHECK(g->killing_form(e, f) == Rational(4));
  CHECK(g->killing_form(e, e) == Rational(0));
  CHECK(g->killing_form(h, e) == Rational(0));
}

TEST_CASE("basis labels and indices round-trip") {
  auto g = alg("B2");
  const int m = g->num_positive();
  CHECK(m == 4);
  CHECK(g->dim() == 10);
  for (int b = 0; b < g->dim(); ++b) CHECK(g->basis_index(g->basis_label(b)) == b);
  CHECK(g->basis_label(0) == "E1");
  CHECK(g->basis_label(m) == "F1");
  CHECK(g->basis_label(2 * m) == "H1");
  CHECK(g->basis_index("E0") == -1);
  CHECK(g->basis_index("E5") == -1);
  CHECK(g->basis_index("H3") == -1);
  CHECK(g->basis_index("X1") == -1);
  CHECK(g->basis_index("E") == -1);
  CHECK(g->basis_index("") == -1);
}

TEST_CASE("basis weights are the roots for E/F vectors and zero on the Cartan") {
  auto g = alg("A3");
  const RootSystem& rs = g->root_system();
  const int m = g->num_positive();
  for (int k = 0; k < m; ++k) {
    CHECK(g->basis_weight(g->e_index(k)) == rs.positive_roots()[static_cast<std::size_t>(k)]);
    CHECK(g->basis_weight(g->f_index(k)) ==
          QVec(-rs.positive_roots()[static_cast<std::size_t>(k)]));
  }
  for (int i = 0; i < g->rank(); ++i) CHECK(is_zero_vec(g->basis_weight(g->h_index(i))));
}

TEST_CASE("product of raising vectors in rank two type A lands on the highest root") {
  auto g = alg("A2");
  const RootSystem& rs = g->root_system();
  // Positive roots in (height, lex) order: alpha_2 < alpha_1, then the sum.
  REQUIRE(g->num_positive() == 3);
  QVec sum = rs.positive_roots()[0] + rs.positive_roots()[1];
  CHECK(rs.positive_root_index(sum) == 2);
  const BasisCombo& c = g->bracket_basis(g->e_index(0), g->e_index(1));
  REQUIRE(c.size() == 1);
  CHECK(c[0].first == g->e_index(2));
  CHECK(c[0].second == Rational(1));
  // 2 alpha_1 + alpha_2 is not a root, so that product vanishes.
  int i1 = rs.positive_root_index(rs.simple_roots()[0]);
  CHECK(g->bracket_basis(g->e_index(i1), g->e_index(2)).empty());
}

TEST_CASE("structure constants have magnitude p+1 and respect root addition") {
  for (const char* name : {"A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    auto g = alg(name);
    const RootSystem& rs = g->root_system();
    const auto& pos = rs.positive_roots();
    const int m = g->num_positive();
    std::set<long long> magnitudes;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        const BasisCombo& c = g->bracket_basis(g->e_index(a), g->e_index(b));
        QVec sum = pos[static_cast<std::size_t>(a)] + pos[static_cast<std::size_t>(b)];
        int s = rs.positive_root_index(sum);
        if (s < 0) {
          CHECK(c.empty());
          continue;
        }
        REQUIRE(c.size() == 1);
        CHECK(c[0].first == g->e_index(s));
        Rational n = c[0].second;
        int p = chain_p(rs, pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
        CHECK(abs(n) == Rational(p + 1));
        magnitudes.insert(abs(n).to_integer().convert_to<long long>());
      }
    if (std::string(name)[0] == 'A' || std::string(name)[0] == 'D') {
      // Simply laced: all root strings through a root have length two.
      CHECK(magnitudes == std::set<long long>{1});
    } else if (std::string(name) == "G2") {
      CHECK(magnitudes == std::set<long long>{1, 2, 3});
    } else {
      CHECK(magnitudes == std::set<long long>{1, 2});
    }
  }
}

TEST_CASE("raising and lowering vectors for each root bracket to its coroot") {
  for (const char* name : {"A2", "B3", "C3", "G2", "F4"}) {
    auto g = alg(name);
    const RootSystem& rs = g->root_system();
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      const QVec& alpha = rs.positive_roots()[k];
      Element e = g->basis_element(g->e_index(static_cast<int>(k)));
      Element f = g->basis_element(g->f_index(static_cast<int>(k)));
      Element h = g->coroot_element(alpha);
      CHECK(g->bracket(e, f) == h);
      CHECK(g->bracket(h, e) == Element(Rational(2) * e));
      CHECK(g->bracket(h, f) == Element(Rational(-2) * f));
    }
  }
}

TEST_CASE("opposite root vectors with non-root difference commute") {
  auto g = alg("A2");
  const RootSystem& rs = g->root_system();
  int i1 = rs.positive_root_index(rs.simple_roots()[0]);
  int i2 = rs.positive_root_index(rs.simple_roots()[1]);
  // alpha_1 - alpha_2 is not a root in type A, so [E_{alpha_1}, F_{alpha_2}] = 0.
  CHECK(g->bracket_basis(g->e_index(i1), g->f_index(i2)).empty());
  CHECK(g->bracket_basis(g->e_index(i2), g->f_index(i1)).empty());
}

TEST_CASE("coroot coordinates of the highest root match the dual labels") {
  struct Case {
    const char* name;
    std::vector<long long> coords;
  };
  // Coefficients of the highest coroot in the simple coroots.
  for (const Case& c : {Case{"A2", {1, 1}}, {"B2", {1, 1}}, {"B3", {1, 2, 1}},
                        {"C3", {1, 1, 1}}, {"G2", {1, 2}}, {"F4", {2, 3, 2, 1}}}) {
    auto g = alg(c.name);
    QVec got = g->coroot_coords(g->root_system().highest_root());
    REQUIRE(got.size() == static_cast<Eigen::Index>(c.coords.size()));
    for (Eigen::Index i = 0; i < got.size(); ++i)
      CHECK(got(i) == Rational(c.coords[static_cast<std::size_t>(i)]));
  }
}

TEST_CASE("negative roots have negated coroot coordinates and non-roots are rejected") {
  auto g = alg("B3");
  const RootSystem& rs = g->root_system();
  for (const QVec& alpha : rs.positive_roots())
    CHECK(g->coroot_coords(QVec(-alpha)) == QVec(-g->coroot_coords(alpha)));
  QVec bogus = QVec::Constant(rs.ambient_dim(), Rational(7));
  CHECK_THROWS_AS(g->coroot_coords(bogus), Error);
  try {
    g->coroot_coords(bogus);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotARoot);
  }
}

TEST_CASE("jacobi identity holds on every basis triple") {
  for (const char* name :
       {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "G2", "F4"}) {
    auto g = alg(name);
    JacobiReport rep = verify_jacobi(*g);
    CHECK(rep.ok);
    long long n = g->dim();
    CHECK(rep.checked_triples == n * (n - 1) * (n - 2) / 6);
  }
}

TEST_CASE("bracket of an element with itself vanishes") {
  auto g = alg("B2");
  Element x = Element::Constant(g->dim(), Rational(0));
  for (int b = 0; b < g->dim(); ++b) x(b) = Rational(2 * b - 3, b + 2);
  CHECK(is_zero_vec(g->bracket(x, x)));
}

TEST_CASE("bracket and killing form reject elements of the wrong dimension") {
  auto g = alg("A2");
  Element x = g->basis_element(0);
  Element bad = Element::Constant(g->dim() + 1, Rational(1));
  CHECK_THROWS_AS(g->bracket(x, bad), Error);
  CHECK_THROWS_AS(g->killing_form(bad, x), Error);
  try {
    g->bracket(bad, x);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::AlgebraMismatch);
  }
}

TEST_CASE("killing form restricted to the Cartan equals the root-sum formula") {
  for (const char* name : {"A1", "A2", "B2", "B3", "G2"}) {
    auto g = alg(name);
    const RootSystem& rs = g->root_system();
    for (int i = 0; i < g->rank(); ++i)
      for (int j = 0; j < g->rank(); ++j) {
        // ad H_i is diagonal with eigenvalue <gamma, alpha_i^vee> on each root
        // vector and zero on the Cartan, so the trace is a sum over all roots.
        Rational expect(0);
        for (const QVec& gamma : rs.roots())
          expect += pairing(gamma, rs.simple_roots()[i]) * pairing(gamma, rs.simple_roots()[j]);
        CHECK(g->killing_form(g->basis_element(g->h_index(i)),
                              g->basis_element(g->h_index(j))) == expect);
      }
  }
}

TEST_CASE("killing form is symmetric, invariant, and pairs opposite root spaces") {
  for (const char* name : {"A2", "B2", "G2"}) {
    auto g = alg(name);
    const int n = g->dim();
    const QMat& k = g->killing_matrix();
    CHECK(k == QMat(k.transpose()));
    // Root-space vectors pair to zero unless the roots sum to zero.
    const int m = g->num_positive();
    for (int a = 0; a < 2 * m; ++a)
      for (int b = 0; b < 2 * m; ++b) {
        bool opposite = (a < m) ? (b == a + m) : (b == a - m);
        if (!opposite) CHECK(k(a, b) == Rational(0));
        else CHECK(k(a, b) != Rational(0));
      }
    // Cartan pairs to zero against every root vector.
    for (int i = 0; i < g->rank(); ++i)
      for (int a = 0; a < 2 * m; ++a) CHECK(k(g->h_index(i), a) == Rational(0));
    // Invariance: B([x,y],z) + B(y,[x,z]) = 0 on all basis triples.
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          Rational s(0);
          for (const auto& [w, c] : g->bracket_basis(x, y)) s += c * k(w, z);
          for (const auto& [w, c] : g->bracket_basis(x, z)) s += c * k(y, w);
          CHECK(s == Rational(0));
        }
  }
}

TEST_CASE("killing pairing of opposite root vectors is half the coroot norm") {
  auto g = alg("B3");
  const RootSystem& rs = g->root_system();
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    Element e = g->basis_element(g->e_index(static_cast<int>(k)));
    Element f = g->basis_element(g->f_index(static_cast<int>(k)));
    Element h = g->coroot_element(rs.positive_roots()[k]);
    CHECK(Rational(2) * g->killing_form(e, f) == g->killing_form(h, h));
  }
}

TEST_CASE("distinguished three-element subalgebras satisfy the rank-one relations") {
  auto g = alg("G2");
  const RootSystem& rs = g->root_system();
  for (const QVec& alpha : rs.positive_roots()) {
    Sl2Triple t = sl2_triple(*g, alpha);
    CHECK(g->bracket(t.e, t.f) == t.h);
    CHECK(g->bracket(t.h, t.e) == Element(Rational(2) * t.e));
    CHECK(g->bracket(t.h, t.f) == Element(Rational(-2) * t.f));
  }
  // Only positive roots name a triple.
  CHECK_THROWS_AS(sl2_triple(*g, QVec(-rs.highest_root())), Error);
  try {
    sl2_triple(*g, QVec(-rs.highest_root()));
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotARoot);
  }
}
