#include "liedense/lie_algebra.hpp"

#include <map>

namespace liedense {

namespace {

// Structure-constant builder.  N[a,b] is defined for positive-root index
// pairs a < b with P[a] + P[b] a root; the remaining values follow from
// antisymmetry, negation, and the cyclic relation.
struct ConstantBuilder {
  const RootSystem& rs;
  const std::vector<QVec>& pos;
  std::map<std::pair<int, int>, Rational> npos;

  explicit ConstantBuilder(const RootSystem& r) : rs(r), pos(r.positive_roots()) {}

  // Largest k >= 0 with b - k*a a root.
  int chain_down(const QVec& a, const QVec& b) const {
    int p = 0;
    QVec v = b - a;
    while (rs.is_root(v)) {
      ++p;
      v -= a;
    }
    return p;
  }

  bool positive(const QVec& r) const { return rs.positive_root_index(r) >= 0; }

  // N for an arbitrary pair of roots whose sum is a root.
  Rational nval(const QVec& u, const QVec& v) const {
    bool up = positive(u), vp = positive(v);
    if (up && vp) {
      int a = rs.positive_root_index(u), b = rs.positive_root_index(v);
      auto it = npos.find({std::min(a, b), std::max(a, b)});
      if (it == npos.end()) fail(ErrorKind::Internal, "structure constant requested before computed");
      return a < b ? it->second : -it->second;
    }
    if (!up && !vp) return -nval(QVec(-u), QVec(-v));
    QVec s = u + v;
    if (positive(s)) {
      if (up) return -(inner(s, s) / inner(u, u)) * nval(QVec(-v), s);
      return -nval(v, u);
    }
    return -nval(QVec(-u), QVec(-v));
  }

  void run() {
    const int m = static_cast<int>(pos.size());
    for (int g = 0; g < m; ++g) {
      const QVec& gamma = pos[g];
      // Special pairs (a, b), a < b, P[a] + P[b] = gamma, in order of a.
      std::vector<std::pair<int, int>> special;
      for (int a = 0; a < m; ++a) {
        int b = rs.positive_root_index(QVec(gamma - pos[a]));
        if (b > a) special.emplace_back(a, b);
      }
      if (special.empty()) continue;
      // Extraspecial pair: minimal first component; its constant is p+1.
      auto [x, h] = special.front();
      const QVec &xi = pos[x], &eta = pos[h];
      Rational nxh = Rational(chain_down(xi, eta) + 1);
      npos[{x, h}] = nxh;
      for (std::size_t s = 1; s < special.size(); ++s) {
        auto [ai, bi] = special[s];
        const QVec &alpha = pos[ai], &beta = pos[bi];
        // Four-term relation on (xi, eta, -alpha, -beta), which sum to zero.
        Rational t(0);
        QVec d2 = eta - alpha;
        if (rs.is_root(d2)) t += nval(eta, QVec(-alpha)) * nval(xi, QVec(-beta)) / inner(d2, d2);
        QVec d3 = xi - alpha;
        if (rs.is_root(d3)) t += nval(QVec(-alpha), xi) * nval(eta, QVec(-beta)) / inner(d3, d3);
        Rational n = inner(gamma, gamma) * t / nxh;
        if (!n.is_integer()) fail(ErrorKind::Internal, "non-integer structure constant");
        if (abs(n) != Rational(chain_down(alpha, beta) + 1))
          fail(ErrorKind::Internal, "structure constant magnitude differs from p+1");
        npos[{ai, bi}] = n;
      }
    }
  }
};

}  // namespace

std::shared_ptr<const LieAlgebra> LieAlgebra::build(const RootSystem& rs) {
  std::shared_ptr<LieAlgebra> g(new LieAlgebra(rs));
  const RootSystem& r = g->rs_;
  const std::vector<QVec>& pos = r.positive_roots();
  const int m = static_cast<int>(pos.size());
  const int l = r.rank();
  const int dim = 2 * m + l;

  ConstantBuilder cb(r);
  cb.run();

  // Coroots of positive roots in the simple-coroot basis.
  QMat simple_coroots(r.ambient_dim(), l);
  for (int i = 0; i < l; ++i) simple_coroots.col(i) = RootSystem::coroot(r.simple_roots()[i]);
  g->coroot_h_.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    auto c = solve_linear(simple_coroots, RootSystem::coroot(pos[k]));
    if (!c) fail(ErrorKind::Internal, "coroot outside the simple-coroot span");
    for (int i = 0; i < l; ++i)
      if (!(*c)(i).is_integer()) fail(ErrorKind::Internal, "non-integer coroot coordinates");
    g->coroot_h_.push_back(*c);
  }

  // Signed-root view of the first 2m basis vectors.
  auto root_of = [&](int b) -> QVec {
    return b < m ? pos[b] : QVec(-pos[b - m]);
  };
  auto signed_index = [&](const QVec& v) -> int {
    int k = r.positive_root_index(v);
    if (k >= 0) return k;  // E_k
    k = r.positive_root_index(QVec(-v));
    return m + k;  // F_k
  };

  g->basis_weights_.resize(static_cast<std::size_t>(dim));
  for (int b = 0; b < 2 * m; ++b) g->basis_weights_[static_cast<std::size_t>(b)] = root_of(b);
  for (int i = 0; i < l; ++i)
    g->basis_weights_[static_cast<std::size_t>(2 * m + i)] =
        QVec::Constant(r.ambient_dim(), Rational(0));

  g->table_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), {});
  auto at = [&](int a, int b) -> BasisCombo& {
    return g->table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(dim) +
                     static_cast<std::size_t>(b)];
  };
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      BasisCombo combo;
      bool aroot = a < 2 * m, broot = b < 2 * m;
      if (aroot && broot) {
        QVec u = root_of(a), v = root_of(b);
        QVec s = u + v;
        bool zero = true;
        for (Eigen::Index i = 0; i < s.size(); ++i) zero = zero && s(i).is_zero();
        if (zero) {
          // [E_a, F_a] = H_a: the coroot of the first argument's root.
          const QVec& hc = g->coroot_h_[static_cast<std::size_t>(a < m ? a : a - m)];
          Rational sign(a < m ? 1 : -1);
          for (int i = 0; i < l; ++i)
            if (!hc(i).is_zero()) combo.emplace_back(2 * m + i, sign * hc(i));
        } else if (r.is_root(s)) {
          combo.emplace_back(signed_index(s), cb.nval(u, v));
        }
      } else if (!aroot && !broot) {
        // Cartan is abelian.
      } else {
        // One Cartan element H_i, one root vector e_v: [H_i, e_v] = v(H_i) e_v.
        int hi = (aroot ? b : a) - 2 * m;
        int rv = aroot ? a : b;
        Rational c = pairing(root_of(rv), r.simple_roots()[hi]);
        if (!c.is_zero()) combo.emplace_back(rv, aroot ? -c : c);
      }
      BasisCombo neg;
      neg.reserve(combo.size());
      for (const auto& [k, c] : combo) neg.emplace_back(k, -c);
      at(a, b) = std::move(combo);
      at(b, a) = std::move(neg);
    }
  return g;
}

std::string LieAlgebra::basis_label(int b) const {
  const int m = num_positive();
  if (b < m) return "E" + std::to_string(b + 1);
  if (b < 2 * m) return "F" + std::to_string(b - m + 1);
  return "H" + std::to_string(b - 2 * m + 1);
}

int LieAlgebra::basis_index(const std::string& label) const {
  if (label.size() < 2) return -1;
  int k = -1;
  try {
    k = std::stoi(label.substr(1)) - 1;
  } catch (...) {
    return -1;
  }
  const int m = num_positive();
  if (label[0] == 'E' && k >= 0 && k < m) return e_index(k);
  if (label[0] == 'F' && k >= 0 && k < m) return f_index(k);
  if (label[0] == 'H' && k >= 0 && k < rank()) return h_index(k);
  return -1;
}

LieAlgebra::Element LieAlgebra::basis_element(int b) const {
  Element x = Element::Constant(dim(), Rational(0));
  x(b) = Rational(1);
  return x;
}

LieAlgebra::Element LieAlgebra::bracket(const Element& x, const Element& y) const {
  if (x.size() != dim() || y.size() != dim())
    fail(ErrorKind::AlgebraMismatch, "bracket operands have the wrong dimension");
  Element out = Element::Constant(dim(), Rational(0));
  for (int a = 0; a < dim(); ++a) {
    if (x(a).is_zero()) continue;
    for (int b = 0; b < dim(); ++b) {
      if (y(b).is_zero()) continue;
      Rational xy = x(a) * y(b);
      for (const auto& [k, c] : bracket_basis(a, b)) out(k) += xy * c;
    }
  }
  return out;
}

QVec LieAlgebra::coroot_coords(const QVec& alpha) const {
  int k = rs_.positive_root_index(alpha);
  if (k >= 0) return coroot_h_[static_cast<std::size_t>(k)];
  k = rs_.positive_root_index(QVec(-alpha));
  if (k >= 0) return QVec(-coroot_h_[static_cast<std::size_t>(k)]);
  fail(ErrorKind::NotARoot, "coroot coordinates requested for a non-root");
}

LieAlgebra::Element LieAlgebra::coroot_element(const QVec& alpha) const {
  QVec c = coroot_coords(alpha);
  Element x = Element::Constant(dim(), Rational(0));
  for (int i = 0; i < rank(); ++i) x(h_index(i)) = c(i);
  return x;
}

const QMat& LieAlgebra::killing_matrix() const {
  if (killing_.size() == 0) {
    const int n = dim();
    killing_ = QMat::Constant(n, n, Rational(0));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Rational s(0);
        for (int k = 0; k < n; ++k)
          for (const auto& [mm, c1] : bracket_basis(j, k))
            for (const auto& [k2, c2] : bracket_basis(i, mm))
              if (k2 == k) s += c1 * c2;
        killing_(i, j) = s;
        killing_(j, i) = s;
      }
  }
  return killing_;
}

Rational LieAlgebra::killing_form(const Element& x, const Element& y) const {
  if (x.size() != dim() || y.size() != dim())
    fail(ErrorKind::AlgebraMismatch, "killing_form operands have the wrong dimension");
  const QMat& k = killing_matrix();
  Rational s(0);
  for (int i = 0; i < dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < dim(); ++j)
      if (!y(j).is_zero()) s += x(i) * k(i, j) * y(j);
  }
  return s;
}

Sl2Triple sl2_triple(const LieAlgebra& g, const QVec& alpha) {
  int k = g.root_system().positive_root_index(alpha);
  if (k < 0) fail(ErrorKind::NotARoot, "sl2_triple requires a positive root");
  return Sl2Triple{g.basis_element(g.e_index(k)), g.basis_element(g.f_index(k)),
                   g.coroot_element(alpha)};
}

JacobiReport verify_jacobi(const LieAlgebra& g) {
  const int n = g.dim();
  JacobiReport rep;
  auto add_bracket = [&](int a, const BasisCombo& c, std::map<int, Rational>& acc) {
    for (const auto& [b, cb] : c)
      for (const auto& [k, ck] : g.bracket_basis(a, b)) acc[k] += cb * ck;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::map<int, Rational> acc;
        add_bracket(i, g.bracket_basis(j, k), acc);
        add_bracket(j, g.bracket_basis(k, i), acc);
        add_bracket(k, g.bracket_basis(i, j), acc);
        ++rep.checked_triples;
        for (const auto& [b, c] : acc)
          if (!c.is_zero()) {
            if (rep.ok) {
              rep.ok = false;
              rep.bad_i = i;
              rep.bad_j = j;
              rep.bad_k = k;
            }
          }
      }
  return rep;
}

}  // namespace liedense
