#include "liedense/flows.hpp"

#include <cmath>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "liedense/errors.hpp"
#include "liedense/linalg.hpp"

namespace liedense {

namespace {

constexpr double kMagnitudeGuard = 1e12;

void require_field(const PolyVectorField& xi) {
  if (static_cast<int>(xi.components.size()) != xi.n)
    fail(ErrorKind::DimensionMismatch, "field component count differs from its dimension");
  for (const Polynomial& c : xi.components)
    if (c.nvars() != xi.n)
      fail(ErrorKind::DimensionMismatch, "field component over the wrong variable count");
}

CVec eval_field(const PolyVectorField& xi, const CVec& x) {
  std::vector<std::complex<double>> pt(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) pt[static_cast<std::size_t>(i)] = x(i);
  CVec out(xi.n);
  for (int p = 0; p < xi.n; ++p) out(p) = xi.components[static_cast<std::size_t>(p)].evaluate_numeric(pt);
  return out;
}

void guard_finite(const CVec& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    double a = std::abs(x(i));
    if (!std::isfinite(a) || a > kMagnitudeGuard)
      fail(ErrorKind::NonFinite, "trajectory left the guarded magnitude range");
  }
}

}  // namespace

std::vector<PolyVectorField> quadric_fields(int n) {
  if (n < 2) fail(ErrorKind::HypothesisNotMet, "quadric fields need dimension at least two");
  const int m = n + 1;
  std::vector<PolyVectorField> out;
  out.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      PolyVectorField f;
      f.n = m;
      f.components.assign(static_cast<std::size_t>(m), Polynomial(m));
      f.components[static_cast<std::size_t>(j)] = Polynomial::variable(m, i);
      f.components[static_cast<std::size_t>(i)] = -Polynomial::variable(m, j);
      out.push_back(std::move(f));
    }
  return out;
}

Polynomial apply_field(const PolyVectorField& xi, const Polynomial& f) {
  require_field(xi);
  if (f.nvars() != xi.n)
    fail(ErrorKind::DimensionMismatch, "polynomial over a different variable count");
  Polynomial out(xi.n);
  for (int p = 0; p < xi.n; ++p)
    out += xi.components[static_cast<std::size_t>(p)] * f.derivative(p);
  return out;
}

PolyVectorField bracket_fields(const PolyVectorField& xi, const PolyVectorField& eta) {
  require_field(xi);
  require_field(eta);
  if (xi.n != eta.n) fail(ErrorKind::DimensionMismatch, "fields on different spaces");
  PolyVectorField out;
  out.n = xi.n;
  out.components.reserve(static_cast<std::size_t>(xi.n));
  for (int p = 0; p < xi.n; ++p)
    out.components.push_back(apply_field(xi, eta.components[static_cast<std::size_t>(p)]) -
                             apply_field(eta, xi.components[static_cast<std::size_t>(p)]));
  return out;
}

IntegralClass integrals(const PolyVectorField& xi, const Polynomial& f) {
  Polynomial once = apply_field(xi, f);
  if (once.is_zero()) return IntegralClass::FirstIntegral;
  if (apply_field(xi, once).is_zero()) return IntegralClass::SecondIntegral;
  return IntegralClass::Neither;
}

CVec shear_flow(const PolyVectorField& xi, const Polynomial& f, std::complex<double> t,
                const CVec& p) {
  require_field(xi);
  const int n = xi.n;
  if (f.nvars() != n || p.size() != n)
    fail(ErrorKind::DimensionMismatch, "mismatched field, function, and point dimensions");
  for (const Polynomial& c : xi.components)
    if (c.degree() > 1) fail(ErrorKind::NotAShear, "field is not affine linear");
  if (!apply_field(xi, f).is_zero())
    fail(ErrorKind::NotAShear, "function is not annihilated by the field");

  // Homogeneous embedding: the affine field x -> Ax + b flows by the
  // exponential of [[A, b], [0, 0]].
  CMat aug = CMat::Zero(n + 1, n + 1);
  for (int comp = 0; comp < n; ++comp)
    for (const auto& [e, c] : xi.components[static_cast<std::size_t>(comp)].terms()) {
      std::complex<double> cv(c.re.to_double(), c.im.to_double());
      int var = -1;
      for (int q = 0; q < n; ++q)
        if (e[static_cast<std::size_t>(q)] == 1) var = q;
      if (var < 0)
        aug(comp, n) += cv;  // constant term
      else
        aug(comp, var) += cv;
    }
  std::vector<std::complex<double>> pt(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pt[static_cast<std::size_t>(i)] = p(i);
  aug *= t * f.evaluate_numeric(pt);
  CMat ex = aug.exp();
  return ex.topLeftCorner(n, n) * p + ex.topRightCorner(n, 1);
}

FlowResult flow_rk4(const PolyVectorField& xi, const CVec& p, std::complex<double> t,
                    long long steps) {
  require_field(xi);
  if (p.size() != xi.n) fail(ErrorKind::DimensionMismatch, "point dimension differs from field");
  if (steps < 1) fail(ErrorKind::HypothesisNotMet, "need at least one step");
  const double h = 1.0 / static_cast<double>(steps);
  CVec x = p;
  for (long long s = 0; s < steps; ++s) {
    CVec k1 = t * eval_field(xi, x);
    CVec k2 = t * eval_field(xi, CVec(x + 0.5 * h * k1));
    CVec k3 = t * eval_field(xi, CVec(x + 0.5 * h * k2));
    CVec k4 = t * eval_field(xi, CVec(x + h * k3));
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    guard_finite(x);
  }
  return FlowResult{x, steps, "rk4"};
}

CVec euler_product(const MapFamily& family, std::complex<double> t, long long n_steps,
                   const CVec& p) {
  if (n_steps < 1) fail(ErrorKind::HypothesisNotMet, "need at least one factor");
  CVec x = p;
  std::complex<double> slice = t / static_cast<double>(n_steps);
  for (long long s = 0; s < n_steps; ++s) {
    x = family(slice, x);
    guard_finite(x);
  }
  return x;
}

CVec commutator_flow(const PolyVectorField& xi, const PolyVectorField& eta, double s,
                     const CVec& p, long long steps_per_leg) {
  CVec x = flow_rk4(xi, p, s, steps_per_leg).endpoint;
  x = flow_rk4(eta, x, s, steps_per_leg).endpoint;
  x = flow_rk4(xi, x, -s, steps_per_leg).endpoint;
  x = flow_rk4(eta, x, -s, steps_per_leg).endpoint;
  return x;
}

namespace {

bool mat_eq(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

}  // namespace

bool symplectic_orbit_check(int n, const QMat& g) {
  if (n < 1) fail(ErrorKind::HypothesisNotMet, "need n >= 1");
  const int d = 2 * n;
  if (g.rows() != d || g.cols() != d)
    fail(ErrorKind::DimensionMismatch, "matrix size differs from 2n");
  QMat j = QMat::Constant(d, d, Rational(0));
  for (int i = 0; i < n; ++i) {
    j(i, n + i) = Rational(1);
    j(n + i, i) = Rational(-1);
  }
  if (!mat_eq(QMat(g.transpose() * j * g), j))
    fail(ErrorKind::NotSymplectic, "matrix does not preserve the symplectic form");

  QMat lambda = QMat::Constant(d, d, Rational(0));
  for (int i = 0; i < n; ++i) {
    lambda(i, i) = Rational(1);
    lambda(n + i, n + i) = Rational(-1);
  }
  QMat m = g * lambda * inverse_of(g);
  QMat x = m.topLeftCorner(n, n);
  QMat y = m.topRightCorner(n, n);
  QMat z = m.bottomLeftCorner(n, n);
  QMat w = m.bottomRightCorner(n, n);
  QMat id = QMat::Identity(n, n);
  bool ok = mat_eq(QMat(y.transpose()), y) && mat_eq(QMat(z.transpose()), z) &&
            mat_eq(QMat(x * x + y * z), id) && mat_eq(w, QMat(-x.transpose())) &&
            mat_eq(QMat(m * m), QMat::Identity(d, d));
  return ok;
}

QMat random_symplectic(int n, unsigned seed, int factors) {
  if (n < 1 || factors < 0) fail(ErrorKind::HypothesisNotMet, "need n >= 1 and factors >= 0");
  const int d = 2 * n;
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> index(0, n - 1);
  QMat g = QMat::Identity(d, d);
  for (int f = 0; f < factors; ++f) {
    QMat h = QMat::Identity(d, d);
    switch (kind(gen)) {
      case 0: {  // upper block shear with symmetric block
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j) {
            Rational v(entry(gen));
            h(i, n + j) = v;
            h(j, n + i) = v;
          }
        break;
      }
      case 1: {  // lower block shear with symmetric block
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j) {
            Rational v(entry(gen));
            h(n + i, j) = v;
            h(n + j, i) = v;
          }
        break;
      }
      default: {  // diag(A, A^{-T}) for an elementary unimodular A
        int i = index(gen), j = index(gen);
        if (i != j) {
          Rational v(entry(gen));
          h(i, j) = v;          // A = I + v E_ij
          h(n + j, n + i) = -v;  // A^{-T} = I - v E_ji
        }
        break;
      }
    }
    g = QMat(g * h);
  }
  return g;
}

namespace {

// ---- The standard orthogonal module from the quadric fields. ----
//
// Everything happens in the hyperbolic basis q_j^+ = e_{2j} + i e_{2j+1}
// (column j), q_j^- = e_{2j} - i e_{2j+1} (column l + j), last column e_m-1
// when the ambient dimension m is odd.  There the quadratic form has the
// rational Gram matrix below, the algebra of the quadric fields becomes the
// split orthogonal algebra, and the rotation generators i X_{2j,2j+1} turn
// into integer diagonal torus matrices.

QMat hyperbolic_gram(int m) {
  const int l = m / 2;
  QMat s = QMat::Constant(m, m, Rational(0));
  for (int j = 0; j < l; ++j) {
    s(j, l + j) = Rational(2);
    s(l + j, j) = Rational(2);
  }
  if (m % 2 == 1) s(m - 1, m - 1) = Rational(1);
  return s;
}

GMat hyperbolic_basis(int m) {
  const int l = m / 2;
  GMat p = GMat::Constant(m, m, GaussianRational(0));
  for (int j = 0; j < l; ++j) {
    p(2 * j, j) = GaussianRational(1);
    p(2 * j + 1, j) = GaussianRational::i();
    p(2 * j, l + j) = GaussianRational(1);
    p(2 * j + 1, l + j) = -GaussianRational::i();
  }
  if (m % 2 == 1) p(m - 1, m - 1) = GaussianRational(1);
  return p;
}

Eigen::Index flat(int i, int j, int m) { return static_cast<Eigen::Index>(j) * m + i; }

QMat unflatten(const QVec& v, int m) {
  QMat out(m, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) out(i, j) = v(flat(i, j, m));
  return out;
}

// Rational basis of {A : A^T S + S A = 0}.
std::vector<QMat> split_so_basis(int m) {
  QMat s = hyperbolic_gram(m);
  const int nu = m * m;
  DMatrix<Rational> eqs = DMatrix<Rational>::Constant(
      static_cast<Eigen::Index>(m) * (m + 1) / 2, nu, Rational(0));
  Eigen::Index row = 0;
  for (int r = 0; r < m; ++r)
    for (int c = r; c < m; ++c, ++row)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          Rational coeff(0);
          if (j == r) coeff += s(i, c);
          if (j == c) coeff += s(r, i);
          if (!coeff.is_zero()) eqs(row, flat(i, j, m)) += coeff;
        }
  QMat ker = kernel_basis(QMat(eqs));
  if (ker.cols() != static_cast<Eigen::Index>(m) * (m - 1) / 2)
    fail(ErrorKind::Internal, "split orthogonal algebra has the wrong dimension");
  std::vector<QMat> out;
  out.reserve(static_cast<std::size_t>(ker.cols()));
  for (Eigen::Index c = 0; c < ker.cols(); ++c) out.push_back(unflatten(ker.col(c), m));
  return out;
}

std::vector<QMat> torus_matrices(int m) {
  const int l = m / 2;
  std::vector<QMat> t;
  for (int j = 0; j < l; ++j) {
    QMat d = QMat::Constant(m, m, Rational(0));
    d(j, j) = Rational(1);
    d(l + j, l + j) = Rational(-1);
    t.push_back(std::move(d));
  }
  return t;
}

// One-dimensional eigenspace of the torus action with eigenvalue tuple
// gamma inside the split algebra.
QMat root_space(const std::vector<QMat>& so, const std::vector<QMat>& t, const QVec& gamma,
                int m) {
  const int dso = static_cast<int>(so.size()), l = static_cast<int>(t.size());
  DMatrix<Rational> eqs = DMatrix<Rational>::Constant(
      static_cast<Eigen::Index>(l) * m * m, dso, Rational(0));
  for (int k = 0; k < dso; ++k)
    for (int j = 0; j < l; ++j) {
      QMat r = t[static_cast<std::size_t>(j)] * so[static_cast<std::size_t>(k)] -
               so[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(j)] -
               gamma(j) * so[static_cast<std::size_t>(k)];
      for (int c = 0; c < m; ++c)
        for (int i = 0; i < m; ++i)
          eqs(static_cast<Eigen::Index>(j) * m * m + flat(i, c, m), k) = r(i, c);
    }
  QMat ker = kernel_basis(QMat(eqs));
  if (ker.cols() != 1) fail(ErrorKind::Internal, "root space is not one dimensional");
  QMat x = QMat::Constant(m, m, Rational(0));
  for (int k = 0; k < dso; ++k)
    if (!ker(k, 0).is_zero()) x += ker(k, 0) * so[static_cast<std::size_t>(k)];
  return x;
}

bool gmat_eq(const GMat& a, const GMat& b) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

// Verifies the Gaussian bridge back to the quadric fields: the torus came
// from i X_{2j,2j+1}, and every constructed matrix lies in the span of the
// linearized rotation fields.
void verify_quadric_origin(const std::vector<QMat>& mats, const std::vector<QMat>& torus,
                           int m) {
  GMat p = hyperbolic_basis(m);
  GMat pinv = inverse_of(p);
  // Linearizations of x_i d/dx_j - x_j d/dx_i.
  std::vector<GMat> rot;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      GMat a = GMat::Constant(m, m, GaussianRational(0));
      a(j, i) = GaussianRational(1);
      a(i, j) = GaussianRational(-1);
      rot.push_back(std::move(a));
    }
  GMat span(static_cast<Eigen::Index>(m) * m, static_cast<Eigen::Index>(rot.size()));
  for (std::size_t k = 0; k < rot.size(); ++k)
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < m; ++i) span(flat(i, j, m), static_cast<Eigen::Index>(k)) = rot[k](i, j);

  const int l = m / 2;
  for (int j = 0; j < l; ++j) {
    GMat back = p * torus[static_cast<std::size_t>(j)].cast<GaussianRational>() * pinv;
    GMat expect = GaussianRational::i() * rot[static_cast<std::size_t>(
        // index of the pair (2j, 2j+1) in the (i < j) enumeration
        [&] {
          int idx = 0;
          for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b, ++idx)
              if (a == 2 * j && b == 2 * j + 1) return idx;
          return -1;
        }())];
    if (!gmat_eq(back, expect))
      fail(ErrorKind::Internal, "torus does not come from the rotation fields");
  }
  for (const QMat& r : mats) {
    GMat back = p * r.cast<GaussianRational>() * pinv;
    GVec target(static_cast<Eigen::Index>(m) * m);
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < m; ++i) target(flat(i, j, m)) = back(i, j);
    if (!solve_linear(span, target))
      fail(ErrorKind::Internal, "constructed matrix leaves the span of the quadric fields");
  }
}

// Builds the module by matching the split orthogonal algebra to the
// abstract Chevalley basis.  `phi` maps abstract ambient coordinates to
// torus eigenvalue tuples and must carry the abstract roots bijectively
// onto the concrete ones.
Representation fit_orthogonal_rep(const std::shared_ptr<const LieAlgebra>& g, const QMat& phi,
                                  int m) {
  const RootSystem& rs = g->root_system();
  const int l = m / 2;
  if (rs.rank() != l) fail(ErrorKind::Internal, "torus rank differs from the abstract rank");
  const auto& pos = rs.positive_roots();
  const int mp = g->num_positive();

  std::vector<QMat> so = split_so_basis(m);
  std::vector<QMat> torus = torus_matrices(m);
  auto concrete = [&](const QVec& alpha) { return QVec(phi * alpha); };
  auto coroot_combo = [&](const QVec& gamma) {
    QVec cc = RootSystem::coroot(gamma);
    QMat h = QMat::Constant(m, m, Rational(0));
    for (int j = 0; j < l; ++j)
      if (!cc(j).is_zero()) h += cc(j) * torus[static_cast<std::size_t>(j)];
    return h;
  };

  std::vector<QMat> e_mats(static_cast<std::size_t>(mp)), f_mats(static_cast<std::size_t>(mp));
  for (int a = 0; a < mp; ++a) {
    QVec gamma = concrete(pos[static_cast<std::size_t>(a)]);
    if (rs.height(pos[static_cast<std::size_t>(a)]) == 1) {
      e_mats[static_cast<std::size_t>(a)] = root_space(so, torus, gamma, m);
    } else {
      // First decomposition in positive-root order fixes the scale, exactly
      // as in the abstract structure-constant recursion.
      int s = -1, b = -1;
      for (int cand = 0; cand < mp && s < 0; ++cand) {
        QVec diff = pos[static_cast<std::size_t>(a)] - pos[static_cast<std::size_t>(cand)];
        int idx = rs.positive_root_index(diff);
        if (idx >= 0) {
          s = cand;
          b = idx;
        }
      }
      if (s < 0 || b <= s) fail(ErrorKind::Internal, "no decomposition for a composite root");
      Rational n_const;
      for (const auto& [idx, val] : g->bracket_basis(g->e_index(s), g->e_index(b)))
        if (idx == g->e_index(a)) n_const = val;
      if (n_const.is_zero()) fail(ErrorKind::Internal, "vanishing structure constant");
      const QMat& es = e_mats[static_cast<std::size_t>(s)];
      const QMat& eb = e_mats[static_cast<std::size_t>(b)];
      e_mats[static_cast<std::size_t>(a)] = (Rational(1) / n_const) * QMat(es * eb - eb * es);
    }
    QMat y = root_space(so, torus, QVec(-gamma), m);
    QMat h = coroot_combo(gamma);
    QMat c = e_mats[static_cast<std::size_t>(a)] * y - y * e_mats[static_cast<std::size_t>(a)];
    Rational kappa;
    for (int j = 0; j < m && kappa.is_zero(); ++j)
      for (int i = 0; i < m && kappa.is_zero(); ++i)
        if (!h(i, j).is_zero()) kappa = c(i, j) / h(i, j);
    if (kappa.is_zero() || !mat_eq(c, QMat(kappa * h)))
      fail(ErrorKind::Internal, "opposite root vector does not pair onto the coroot");
    f_mats[static_cast<std::size_t>(a)] = (Rational(1) / kappa) * y;
  }

  std::vector<QMat> mats;
  mats.reserve(static_cast<std::size_t>(2 * mp + l));
  for (int a = 0; a < mp; ++a) mats.push_back(e_mats[static_cast<std::size_t>(a)]);
  for (int a = 0; a < mp; ++a) mats.push_back(f_mats[static_cast<std::size_t>(a)]);
  for (int i = 0; i < l; ++i)
    mats.push_back(coroot_combo(concrete(rs.simple_roots()[static_cast<std::size_t>(i)])));

  Representation rep{g, m, std::move(mats)};
  if (!homomorphism_ok(rep))
    fail(ErrorKind::Internal, "constructed module fails the bracket relations");
  verify_quadric_origin(rep.matrices, torus, m);
  return rep;
}

}  // namespace

Representation so_standard_rep(int n) {
  if (n < 2) fail(ErrorKind::HypothesisNotMet, "need n >= 2");
  if (n == 3)
    fail(ErrorKind::InvalidType,
         "the four-dimensional orthogonal algebra splits into two rank-one factors; "
         "use the factor construction");
  const int m = n + 1;
  if (n == 2) {
    auto g = LieAlgebra::build(RootSystem::build("A1"));
    QMat phi(1, 2);
    phi << Rational(1, 2), Rational(-1, 2);
    return fit_orthogonal_rep(g, phi, m);
  }
  if (n == 5) {
    // The six-dimensional orthogonal algebra in its rank-three realization:
    // the map sends the rank-three simple roots onto the torus roots
    // (0,1,-1), (1,-1,0), (0,1,1).
    auto g = LieAlgebra::build(RootSystem::build("A3"));
    QMat phi(3, 4);
    phi << Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2),
        Rational(1, 2), Rational(-1, 2), Rational(1, 2), Rational(-1, 2),
        Rational(-1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2);
    return fit_orthogonal_rep(g, phi, m);
  }
  if (n % 2 == 0) {
    const int l = n / 2;
    auto g = LieAlgebra::build(RootSystem::build(RootSystemType{'B', l}));
    return fit_orthogonal_rep(g, QMat::Identity(l, l), m);
  }
  const int l = (n + 1) / 2;  // n odd, n >= 7
  auto g = LieAlgebra::build(RootSystem::build(RootSystemType{'D', l}));
  return fit_orthogonal_rep(g, QMat::Identity(l, l), m);
}

std::pair<Representation, Representation> so4_factor_reps() {
  const int m = 4;
  auto g = LieAlgebra::build(RootSystem::build("A1"));
  std::vector<QMat> so = split_so_basis(m);
  std::vector<QMat> torus = torus_matrices(m);

  auto factor = [&](const Rational& sign) {
    QMat h = torus[0] + sign * torus[1];
    QVec gamma(2);
    gamma << Rational(1), sign;
    QMat e = root_space(so, torus, gamma, m);
    QMat y = root_space(so, torus, QVec(-gamma), m);
    QMat c = e * y - y * e;
    Rational kappa;
    for (int j = 0; j < m && kappa.is_zero(); ++j)
      for (int i = 0; i < m && kappa.is_zero(); ++i)
        if (!h(i, j).is_zero()) kappa = c(i, j) / h(i, j);
    if (kappa.is_zero() || !mat_eq(c, QMat(kappa * h)))
      fail(ErrorKind::Internal, "factor root vectors do not pair onto the coroot");
    QMat f = (Rational(1) / kappa) * y;
    Representation rep{g, m, {e, f, h}};
    if (!homomorphism_ok(rep))
      fail(ErrorKind::Internal, "factor module fails the bracket relations");
    verify_quadric_origin(rep.matrices, torus, m);
    return rep;
  };

  return {factor(Rational(1)), factor(Rational(-1))};
}

}  // namespace liedense
