#include "liedense/root_system.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace liedense {

namespace {

QVec make_vec(std::initializer_list<Rational> entries) {
  QVec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const Rational& e : entries) v(i++) = e;
  return v;
}

QVec unit(Eigen::Index dim, Eigen::Index k) {
  QVec v = QVec::Constant(dim, Rational(0));
  v(k) = Rational(1);
  return v;
}

// Simple roots in Bourbaki numbering for an admissible type.
std::vector<QVec> bourbaki_simple_roots(const RootSystemType& t) {
  const int l = t.rank;
  std::vector<QVec> s;
  auto chain = [&](Eigen::Index dim, int count) {
    // e_i - e_{i+1} for i = 1..count
    for (int i = 0; i < count; ++i) s.push_back(unit(dim, i) - unit(dim, i + 1));
  };
  switch (t.family) {
    case 'A':
      chain(l + 1, l);
      break;
    case 'B':
      chain(l, l - 1);
      s.push_back(unit(l, l - 1));
      break;
    case 'C':
      chain(l, l - 1);
      s.push_back(Rational(2) * unit(l, l - 1));
      break;
    case 'D':
      chain(l, l - 1);
      s.push_back(unit(l, l - 2) + unit(l, l - 1));
      break;
    case 'G':
      s.push_back(make_vec({1, -1, 0}));
      s.push_back(make_vec({-2, 1, 1}));
      break;
    case 'F':
      s.push_back(unit(4, 1) - unit(4, 2));
      s.push_back(unit(4, 2) - unit(4, 3));
      s.push_back(unit(4, 3));
      s.push_back(make_vec({Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)}));
      break;
    case 'E': {
      QVec a1 = QVec::Constant(8, Rational(-1, 2));
      a1(0) = Rational(1, 2);
      a1(7) = Rational(1, 2);
      s.push_back(a1);
      s.push_back(unit(8, 0) + unit(8, 1));
      for (int i = 3; i <= l; ++i) s.push_back(unit(8, i - 2) - unit(8, i - 3));
      break;
    }
    default:
      fail(ErrorKind::Internal, "unhandled family");
  }
  return s;
}

}  // namespace

RootSystemType RootSystemType::parse(const std::string& name) {
  if (name.size() < 2 || name[0] < 'A' || name[0] > 'G')
    fail(ErrorKind::InvalidType, "cannot parse root-system type '" + name + "'");
  for (std::size_t k = 1; k < name.size(); ++k)
    if (name[k] < '0' || name[k] > '9')
      fail(ErrorKind::InvalidType, "cannot parse root-system type '" + name + "'");
  return RootSystemType{name[0], std::stoi(name.substr(1))};
}

bool is_admissible(const RootSystemType& t) {
  switch (t.family) {
    case 'A': return t.rank >= 1;
    case 'B': return t.rank >= 2;
    case 'C': return t.rank >= 3;
    case 'D': return t.rank >= 4;
    case 'E': return t.rank >= 6 && t.rank <= 8;
    case 'F': return t.rank == 4;
    case 'G': return t.rank == 2;
    default: return false;
  }
}

RootSystemType normalize_type(const RootSystemType& t, std::string* notice) {
  if (t.family == 'C' && t.rank == 2) {
    if (notice) *notice = "C2 is isomorphic to B2; normalized to B2";
    return RootSystemType{'B', 2};
  }
  if (!is_admissible(t)) fail(ErrorKind::InvalidType, "inadmissible type " + t.str());
  return t;
}

int classical_root_count(const RootSystemType& t) {
  const int l = t.rank;
  switch (t.family) {
    case 'A': return l * (l + 1);
    case 'B':
    case 'C': return 2 * l * l;
    case 'D': return 2 * l * (l - 1);
    case 'G': return 12;
    case 'F': return 48;
    case 'E': return l == 6 ? 72 : (l == 7 ? 126 : 240);
    default: fail(ErrorKind::Internal, "unhandled family");
  }
}

Rational inner(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) fail(ErrorKind::Internal, "inner: length mismatch");
  Rational s(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

Rational pairing(const Weight& lambda, const QVec& alpha) {
  Rational n2 = inner(alpha, alpha);
  if (n2.is_zero()) fail(ErrorKind::ZeroVector, "pairing against the zero vector");
  return Rational(2) * inner(lambda, alpha) / n2;
}

RootSystem RootSystem::build(const std::string& name) {
  std::string notice;
  RootSystemType t = normalize_type(RootSystemType::parse(name), &notice);
  RootSystem rs = build(t);
  rs.notice_ = notice;
  return rs;
}

RootSystem RootSystem::build(const RootSystemType& t) {
  if (!is_admissible(t)) fail(ErrorKind::InvalidType, "inadmissible type " + t.str());
  RootSystem rs;
  rs.type_ = t;
  rs.simple_roots_ = bourbaki_simple_roots(t);
  rs.ambient_ = rs.simple_roots_.front().size();
  const int l = t.rank;

  // Enumerate all roots as the closure of the simple roots under the simple
  // reflections s_i(b) = b - pairing(b, a_i) a_i.
  std::set<QVec, QVecLess> closed(rs.simple_roots_.begin(), rs.simple_roots_.end());
  std::deque<QVec> queue(rs.simple_roots_.begin(), rs.simple_roots_.end());
  while (!queue.empty()) {
    QVec b = queue.front();
    queue.pop_front();
    for (const QVec& a : rs.simple_roots_) {
      QVec r = b - pairing(b, a) * a;
      if (closed.insert(r).second) queue.push_back(r);
    }
  }
  rs.roots_.assign(closed.begin(), closed.end());
  if (static_cast<int>(rs.roots_.size()) != classical_root_count(t))
    fail(ErrorKind::Internal, t.str() + ": root count " + std::to_string(rs.roots_.size()) +
                                  " differs from the classical value");
  for (int k = 0; k < static_cast<int>(rs.roots_.size()); ++k) rs.root_index_[rs.roots_[k]] = k;
  for (const QVec& r : rs.roots_)
    if (!rs.root_index_.count(QVec(-r))) fail(ErrorKind::Internal, "roots not closed under negation");

  rs.simple_matrix_.resize(rs.ambient_, l);
  for (int i = 0; i < l; ++i) rs.simple_matrix_.col(i) = rs.simple_roots_[i];

  // Split positive/negative by simple coordinates; verify integrality.
  std::vector<std::pair<Integer, QVec>> positives;  // (height, root)
  for (const QVec& r : rs.roots_) {
    QVec c = rs.simple_coords(r);
    int sign = 0;
    Integer ht(0);
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      if (!c(i).is_integer()) fail(ErrorKind::Internal, "non-integer simple coordinates for a root");
      Integer ci = c(i).to_integer();
      ht += ci;
      if (ci != 0) {
        int s = ci > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        if (sign != s) fail(ErrorKind::Internal, "mixed-sign simple coordinates for a root");
      }
    }
    if (sign > 0) positives.emplace_back(ht, r);
  }
  std::sort(positives.begin(), positives.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return QVecLess{}(x.second, y.second);
  });
  for (auto& [ht, r] : positives) {
    rs.positive_index_[r] = static_cast<int>(rs.positive_roots_.size());
    rs.positive_roots_.push_back(r);
  }
  if (rs.positive_roots_.size() * 2 != rs.roots_.size())
    fail(ErrorKind::Internal, "positive roots are not half of all roots");

  // Cartan matrix and fundamental weights.
  rs.cartan_.resize(l, l);
  QMat cart(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rational p = pairing(rs.simple_roots_[i], rs.simple_roots_[j]);
      if (!p.is_integer()) fail(ErrorKind::Internal, "non-integer Cartan entry");
      rs.cartan_(i, j) = static_cast<int>(p.to_integer());
      cart(i, j) = p;
    }
  for (int i = 0; i < l; ++i)
    if (rs.cartan_(i, i) != 2) fail(ErrorKind::Internal, "Cartan diagonal entry differs from 2");
  QMat cinv = inverse_of(cart);
  for (int i = 0; i < l; ++i) {
    QVec w = QVec::Constant(rs.ambient_, Rational(0));
    for (int k = 0; k < l; ++k) w += cinv(i, k) * rs.simple_roots_[k];
    rs.fundamental_weights_.push_back(w);
  }
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rational p = pairing(rs.fundamental_weights_[i], rs.simple_roots_[j]);
      if (p != Rational(i == j ? 1 : 0))
        fail(ErrorKind::Internal, "fundamental weights fail the defining pairing identity");
    }

  // Dual system.
  std::set<QVec, QVecLess> cr;
  for (const QVec& r : rs.roots_) cr.insert(coroot(r));
  rs.coroots_.assign(cr.begin(), cr.end());
  for (int k = 0; k < static_cast<int>(rs.coroots_.size()); ++k) rs.coroot_index_[rs.coroots_[k]] = k;
  return rs;
}

int RootSystem::positive_root_index(const QVec& v) const {
  auto it = positive_index_.find(v);
  return it == positive_index_.end() ? -1 : it->second;
}

QVec RootSystem::simple_coords(const QVec& v) const {
  auto c = solve_linear(simple_matrix_, v);
  if (!c) fail(ErrorKind::NotInSpan, "vector outside the span of the simple roots");
  return *c;
}

Integer RootSystem::height(const QVec& root) const {
  QVec c = simple_coords(root);
  Integer h(0);
  for (Eigen::Index i = 0; i < c.size(); ++i) h += c(i).to_integer();
  return h;
}

QVec RootSystem::coroot(const QVec& alpha) {
  Rational n2 = inner(alpha, alpha);
  if (n2.is_zero()) fail(ErrorKind::ZeroVector, "coroot of the zero vector");
  return QVec(Rational(2) / n2 * alpha);
}

bool RootSystem::is_coroot(const QVec& v) const { return coroot_index_.count(v) > 0; }

Weight weight_from_fundamental(const RootSystem& rs, const QVec& coeffs) {
  if (coeffs.size() != rs.rank()) fail(ErrorKind::IndexOutOfRange, "coefficient count differs from rank");
  QVec w = QVec::Constant(rs.ambient_dim(), Rational(0));
  for (int i = 0; i < rs.rank(); ++i) w += coeffs(i) * rs.fundamental_weights()[i];
  return w;
}

QVec fundamental_coords(const RootSystem& rs, const Weight& lambda) {
  QVec c(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) c(i) = pairing(lambda, rs.simple_roots()[i]);
  return c;
}

bool is_integral_weight(const RootSystem& rs, const Weight& lambda) {
  for (int i = 0; i < rs.rank(); ++i)
    if (!pairing(lambda, rs.simple_roots()[i]).is_integer()) return false;
  return true;
}

LatticeCoords in_root_lattice(const RootSystem& rs, const Weight& lambda) {
  QVec c = rs.simple_coords(lambda);  // NotInSpan if outside
  LatticeCoords out;
  out.coeffs = c;
  out.integral = true;
  for (Eigen::Index i = 0; i < c.size(); ++i)
    if (!c(i).is_integer()) out.integral = false;
  return out;
}

Weight dominant_representative(const RootSystem& rs, Weight lambda) {
  if (!is_integral_weight(rs, lambda))
    fail(ErrorKind::NonIntegral, "dominant_representative requires an integral weight");
  bool moved = true;
  while (moved) {
    moved = false;
    for (const QVec& a : rs.simple_roots()) {
      Rational p = pairing(lambda, a);
      if (p < Rational(0)) {
        lambda -= p * a;
        moved = true;
      }
    }
  }
  return lambda;
}

bool is_extremal(const RootSystem& rs, const Weight& lambda) {
  Weight mu = dominant_representative(rs, lambda);
  QVec c = fundamental_coords(rs, mu);
  int nonzero = 0;
  for (Eigen::Index i = 0; i < c.size(); ++i)
    if (!c(i).is_zero()) ++nonzero;
  return nonzero <= 1;
}

std::optional<QVec> find_even_coroot(const RootSystem& rs, const Weight& lambda) {
  if (!is_integral_weight(rs, lambda))
    fail(ErrorKind::NonIntegral, "find_even_coroot requires an integral weight");
  for (int i = 0; i < rs.rank(); ++i)
    if (pairing(lambda, rs.simple_roots()[i]) < Rational(0))
      fail(ErrorKind::HypothesisNotMet, "find_even_coroot requires a dominant weight");
  for (const QVec& a : rs.positive_roots()) {
    Rational p = pairing(lambda, a);
    if (p > Rational(0) && p.to_integer() % 2 == 0) return a;
  }
  return std::nullopt;
}

bool coroot_sum_check(const RootSystem& rs, int i, int j) {
  if (i < 1 || j < i || j > rs.rank())
    fail(ErrorKind::IndexOutOfRange, "coroot_sum_check indices out of range");
  QVec h = QVec::Constant(rs.ambient_dim(), Rational(0));
  for (int k = i; k <= j; ++k) h += RootSystem::coroot(rs.simple_roots()[k - 1]);
  return rs.is_coroot(h);
}

char momega_part(const RootSystemType& t, int i) {
  if (t.family == 'A' && t.rank % 2 == 0) return 'c';
  // E6: the two end columns i = 1 and i = 6 are exchanged by the diagram
  // automorphism and pair only to {0, +-1} against coroots, so their odd
  // multiples admit no even witness; both take the shifted-weight route.
  if (t.family == 'E' && t.rank == 6) return (i == 1 || i == 6) ? 'c' : 'b';
  return 'a';
}

namespace {

// True iff mu equals c * omega_j for some index j and integer c (including 0).
bool is_fundamental_multiple(const RootSystem& rs, const Weight& mu) {
  QVec f = fundamental_coords(rs, mu);
  int nonzero = 0;
  Rational c(0);
  for (Eigen::Index k = 0; k < f.size(); ++k)
    if (!f(k).is_zero()) {
      ++nonzero;
      c = f(k);
    }
  if (nonzero == 0) return true;  // mu = 0 = 0 * omega_j
  return nonzero == 1 && c.is_integer();
}

}  // namespace

MomegaReport verify_momega(const RootSystem& rs, int m_max) {
  if (m_max < 1) fail(ErrorKind::HypothesisNotMet, "verify_momega requires m_max >= 1");
  MomegaReport report;
  report.rtype = rs.type();
  report.m_max = m_max;
  for (int i = 1; i <= rs.rank(); ++i) {
    const Weight& omega = rs.fundamental_weights()[i - 1];
    for (int m = 1; m <= m_max; ++m) {
      Weight lambda = Rational(m) * omega;
      if (!in_root_lattice(rs, lambda).integral) continue;
      MomegaCase c;
      c.i = i;
      c.m = m;
      c.part = momega_part(rs.type(), i);
      // Stated divisibility premise for odd-rank A types: rank+1 divides m.
      if (rs.type().family == 'A' && rs.rank() % 2 == 1 && m % (rs.rank() + 1) != 0) {
        c.premise_holds = false;
        ++report.premise_violations;
      }
      if (c.part == 'c') {
        const QVec& alpha = rs.simple_roots()[i - 1];
        Weight plus = lambda + alpha, minus = lambda - alpha;
        c.plus_not_multiple = !is_fundamental_multiple(rs, plus);
        c.minus_not_multiple = !is_fundamental_multiple(rs, minus);
        c.plus_not_extremal = !is_extremal(rs, plus);
        c.minus_not_extremal = !is_extremal(rs, minus);
        c.ok = c.plus_not_multiple && c.minus_not_multiple;
      } else {
        c.witness = find_even_coroot(rs, lambda);
        if (c.witness) {
          c.value = pairing(lambda, *c.witness);
          c.ok = true;
        }
      }
      report.all_ok = report.all_ok && (c.ok || !c.premise_holds);
      report.cases.push_back(std::move(c));
    }
  }
  return report;
}

EvenCorootReport verify_even_coroot(const RootSystem& rs, int coeff_sum_max) {
  if (coeff_sum_max < 1)
    fail(ErrorKind::HypothesisNotMet, "verify_even_coroot requires coeff_sum_max >= 1");
  EvenCorootReport report;
  report.rtype = rs.type();
  report.coeff_sum_max = coeff_sum_max;
  const int l = rs.rank();
  QVec coeffs = QVec::Zero(l);
  // Enumerate nonnegative integer coordinate vectors with bounded sum.
  auto walk = [&](auto&& self, int pos, int budget) -> void {
    if (pos == l) {
      int nonzero = 0;
      for (Eigen::Index k = 0; k < l; ++k)
        if (!coeffs(k).is_zero()) ++nonzero;
      if (nonzero < 2) {
        if (nonzero == 1) ++report.skipped_multiples;
        return;
      }
      ++report.checked;
      Weight lambda = weight_from_fundamental(rs, coeffs);
      if (!find_even_coroot(rs, lambda)) {
        report.all_ok = false;
        report.failures.push_back(coeffs);
      }
      return;
    }
    for (int c = 0; c <= budget; ++c) {
      coeffs(pos) = Rational(c);
      self(self, pos + 1, budget - c);
    }
    coeffs(pos) = Rational(0);
  };
  walk(walk, 0, coeff_sum_max);
  return report;
}

}  // namespace liedense
