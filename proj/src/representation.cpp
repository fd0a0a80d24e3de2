#include "liedense/representation.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "liedense/certify.hpp"
#include "liedense/errors.hpp"

namespace liedense {

int max_dense_dim() {
  if (const char* env = std::getenv("LIEDENSE_MAX_DIM")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v <= std::numeric_limits<int>::max())
      return static_cast<int>(v);
  }
  return 3000;
}

void check_dense_dim(long long n) {
  if (n > max_dense_dim())
    fail(ErrorKind::DimensionOverflow, "dense construction of dimension " + std::to_string(n) +
                                           " exceeds the limit " + std::to_string(max_dense_dim()));
}

namespace {

bool same_algebra(const Representation& a, const Representation& b) {
  RootSystemType ta = a.algebra->root_system().type();
  RootSystemType tb = b.algebra->root_system().type();
  return ta.family == tb.family && ta.rank == tb.rank;
}

QMat zeros(Eigen::Index r, Eigen::Index c) { return QMat::Constant(r, c, Rational(0)); }

// Kronecker product, first factor major: index (i, j) -> i * B.rows() + j.
QMat kron(const QMat& a, const QMat& b) {
  QMat out = zeros(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (Eigen::Index r = 0; r < b.rows(); ++r)
        for (Eigen::Index c = 0; c < b.cols(); ++c)
          if (!b(r, c).is_zero()) out(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return out;
}

}  // namespace

QMat Representation::matrix_of(const LieAlgebra::Element& x) const {
  if (x.size() != algebra->dim())
    fail(ErrorKind::AlgebraMismatch, "element size does not match the algebra dimension");
  QMat out = zeros(dim, dim);
  for (int b = 0; b < algebra->dim(); ++b)
    if (!x(b).is_zero()) out += x(b) * matrix(b);
  return out;
}

bool homomorphism_ok(const Representation& rep) {
  const LieAlgebra& g = *rep.algebra;
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a + 1; b < g.dim(); ++b) {
      QMat comm = rep.matrix(a) * rep.matrix(b) - rep.matrix(b) * rep.matrix(a);
      for (const auto& [k, c] : g.bracket_basis(a, b)) comm -= c * rep.matrix(k);
      for (Eigen::Index i = 0; i < comm.rows(); ++i)
        for (Eigen::Index j = 0; j < comm.cols(); ++j)
          if (!comm(i, j).is_zero()) return false;
    }
  return true;
}

Representation trivial_rep(std::shared_ptr<const LieAlgebra> g) {
  Representation rep{std::move(g), 1, {}};
  rep.matrices.assign(static_cast<std::size_t>(rep.algebra->dim()), zeros(1, 1));
  return rep;
}

Representation adjoint_rep(std::shared_ptr<const LieAlgebra> g) {
  const int n = g->dim();
  check_dense_dim(n);
  Representation rep{std::move(g), n, {}};
  rep.matrices.reserve(static_cast<std::size_t>(n));
  for (int b = 0; b < n; ++b) {
    QMat m = zeros(n, n);
    for (int c = 0; c < n; ++c)
      for (const auto& [k, v] : rep.algebra->bracket_basis(b, c)) m(k, c) = v;
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

Representation sl2_irrep(int n) {
  if (n < 0) fail(ErrorKind::HypothesisNotMet, "highest weight must be nonnegative");
  check_dense_dim(n + 1);
  auto g = LieAlgebra::build(RootSystem::build("A1"));
  QMat e = zeros(n + 1, n + 1), f = zeros(n + 1, n + 1), h = zeros(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    h(k, k) = Rational(n - 2 * k);
    if (k < n) f(k + 1, k) = Rational(1);
    if (k > 0) e(k - 1, k) = Rational(static_cast<long long>(k) * (n - k + 1));
  }
  Representation rep{g, n + 1, {}};
  rep.matrices = {std::move(e), std::move(f), std::move(h)};
  return rep;
}

Representation dual(const Representation& rep) {
  Representation out{rep.algebra, rep.dim, {}};
  out.matrices.reserve(rep.matrices.size());
  for (const QMat& m : rep.matrices) out.matrices.push_back(QMat(-m.transpose()));
  return out;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!same_algebra(a, b))
    fail(ErrorKind::AlgebraMismatch, "direct sum requires modules over the same algebra");
  check_dense_dim(static_cast<long long>(a.dim) + b.dim);
  Representation out{a.algebra, a.dim + b.dim, {}};
  out.matrices.reserve(a.matrices.size());
  for (std::size_t i = 0; i < a.matrices.size(); ++i) {
    QMat m = zeros(out.dim, out.dim);
    m.topLeftCorner(a.dim, a.dim) = a.matrices[i];
    m.bottomRightCorner(b.dim, b.dim) = b.matrices[i];
    out.matrices.push_back(std::move(m));
  }
  return out;
}

Representation tensor(const Representation& a, const Representation& b) {
  if (!same_algebra(a, b))
    fail(ErrorKind::AlgebraMismatch, "tensor product requires modules over the same algebra");
  check_dense_dim(static_cast<long long>(a.dim) * b.dim);
  Representation out{a.algebra, a.dim * b.dim, {}};
  QMat ia = QMat::Identity(a.dim, a.dim), ib = QMat::Identity(b.dim, b.dim);
  out.matrices.reserve(a.matrices.size());
  for (std::size_t i = 0; i < a.matrices.size(); ++i)
    out.matrices.push_back(QMat(kron(a.matrices[i], ib) + kron(ia, b.matrices[i])));
  return out;
}

Representation module_tensor_g(const Representation& w) {
  return tensor(w, adjoint_rep(w.algebra));
}

WeightDecomposition weight_decomposition(const Representation& rep) {
  const LieAlgebra& g = *rep.algebra;
  const RootSystem& rs = g.root_system();
  const int l = g.rank();
  std::vector<QMat> cartan;
  cartan.reserve(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) cartan.push_back(rep.matrix(g.h_index(i)));

  // Integer eigenvalue candidates from a row-sum bound on the Cartan action.
  Rational bound(0);
  for (const QMat& m : cartan)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Rational s(0);
      for (Eigen::Index j = 0; j < m.cols(); ++j) s += abs(m(i, j));
      if (s > bound) bound = s;
    }
  long long b = 0;
  if (!bound.is_zero()) {
    Integer fl = bound.numerator() / bound.denominator();
    b = fl.convert_to<long long>();
    if (Rational(b) < bound) ++b;
  }
  std::vector<Rational> candidates;
  for (long long v = -b; v <= b; ++v) candidates.emplace_back(v);

  WeightDecomposition wd;
  for (const auto& blk : simultaneous_eigensplit(cartan, candidates)) {
    QVec coords(l);
    for (int i = 0; i < l; ++i) coords(i) = blk.eigenvalues[static_cast<std::size_t>(i)];
    WeightSpace ws;
    ws.weight = weight_from_fundamental(rs, coords);
    ws.space = Subspace::from_rows(QMat(blk.basis.transpose()));
    wd.spaces.push_back(std::move(ws));
  }
  std::sort(wd.spaces.begin(), wd.spaces.end(),
            [](const WeightSpace& x, const WeightSpace& y) { return QVecLess{}(x.weight, y.weight); });
  return wd;
}

long long boundedness(const Representation& rep) {
  const RootSystem& rs = rep.algebra->root_system();
  Rational best(0);
  for (const WeightSpace& ws : weight_decomposition(rep).spaces)
    for (const QVec& alpha : rs.positive_roots()) {
      Rational p = abs(pairing(ws.weight, alpha));
      if (p > best) best = p;
    }
  if (!best.is_integer()) fail(ErrorKind::Internal, "non-integer weight pairing");
  return best.to_integer().convert_to<long long>();
}

long long weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (lambda.size() != rs.ambient_dim())
    fail(ErrorKind::DimensionMismatch, "weight has the wrong ambient dimension");
  QVec coords(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    Rational p = pairing(lambda, rs.simple_roots()[static_cast<std::size_t>(i)]);
    if (!p.is_integer()) fail(ErrorKind::NonIntegral, "weight is not integral");
    if (p.sign() < 0) fail(ErrorKind::NonDominant, "weight is not dominant");
    coords(i) = p;
  }
  if (weight_from_fundamental(rs, coords) != lambda)
    fail(ErrorKind::NotInSpan, "weight has a component outside the root span");
  Weight rho = QVec::Constant(rs.ambient_dim(), Rational(0));
  for (const Weight& w : rs.fundamental_weights()) rho += w;
  Rational prod(1);
  for (const QVec& alpha : rs.positive_roots())
    prod *= inner(Weight(lambda + rho), alpha) / inner(rho, alpha);
  if (!prod.is_integer() || prod.sign() <= 0)
    fail(ErrorKind::Internal, "dimension product is not a positive integer");
  Integer d = prod.to_integer();
  if (d > Integer(std::numeric_limits<long long>::max()))
    fail(ErrorKind::DimensionOverflow, "dimension exceeds the representable range");
  return d.convert_to<long long>();
}

Representation construct_irrep(const RootSystem& rs, const Weight& lambda, int k_max) {
  if (!in_root_lattice(rs, lambda).integral)
    fail(ErrorKind::HypothesisNotMet, "highest weight must lie in the root lattice");
  const long long target = weyl_dim(rs, lambda);  // also checks dominance
  auto g = LieAlgebra::build(rs);
  const Representation ad = adjoint_rep(g);
  const int l = g->rank();
  QVec coords(l);
  for (int i = 0; i < l; ++i)
    coords(i) = pairing(lambda, rs.simple_roots()[static_cast<std::size_t>(i)]);
  std::vector<int> simple_e;
  for (int i = 0; i < l; ++i)
    simple_e.push_back(g->e_index(rs.positive_root_index(rs.simple_roots()[static_cast<std::size_t>(i)])));

  Representation power = ad;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) power = tensor(power, ad);
    const int d = power.dim;
    // Joint conditions: (rho(H_i) - <lambda, alpha_i^vee>) v = 0 and
    // rho(E_i) v = 0 for all simple raising operators.
    QMat cond = zeros(static_cast<Eigen::Index>(2 * l) * d, d);
    for (int i = 0; i < l; ++i) {
      QMat block = power.matrix(g->h_index(i));
      for (int r = 0; r < d; ++r) block(r, r) -= coords(i);
      cond.middleRows(static_cast<Eigen::Index>(i) * d, d) = block;
      cond.middleRows(static_cast<Eigen::Index>(l + i) * d, d) =
          power.matrix(simple_e[static_cast<std::size_t>(i)]);
    }
    QMat ker = kernel_basis(cond);
    if (ker.cols() == 0) continue;
    EchelonBasis<Rational> eb(d);
    for (Eigen::Index c = 0; c < ker.cols(); ++c) eb.insert(QRowVec(ker.col(c).transpose()));
    QVec v = QVec(eb.matrix().row(0).transpose());  // first echelon vector

    Subspace sub = generated_submodule({v}, power);
    if (sub.rank() != target)
      fail(ErrorKind::DimensionMismatch,
           "generated submodule has dimension " + std::to_string(sub.rank()) +
               ", product formula gives " + std::to_string(target));
    // Restrict each basis action to the invariant subspace.
    EchelonBasis<Rational> basis(d);
    for (Eigen::Index r = 0; r < sub.basis.rows(); ++r) basis.insert(QRowVec(sub.basis.row(r)));
    const int sd = static_cast<int>(sub.rank());
    Representation out{g, sd, {}};
    out.matrices.reserve(static_cast<std::size_t>(g->dim()));
    for (int b = 0; b < g->dim(); ++b) {
      QMat m = zeros(sd, sd);
      for (int c = 0; c < sd; ++c) {
        QRowVec image = QRowVec(sub.basis.row(c)) * power.matrix(b).transpose();
        auto cc = basis.coordinates(image);
        if (!cc) fail(ErrorKind::Internal, "submodule is not invariant under the action");
        m.col(c) = *cc;
      }
      out.matrices.push_back(std::move(m));
    }
    return out;
  }
  fail(ErrorKind::NotFoundWithinBound,
       "no highest-weight vector of the requested weight in tensor powers up to " +
           std::to_string(k_max));
}

}  // namespace liedense
