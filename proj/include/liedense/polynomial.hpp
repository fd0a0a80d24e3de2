#pragma once

#include <complex>
#include <map>
#include <vector>

#include "liedense/errors.hpp"
#include "liedense/rational.hpp"

namespace liedense {

// Sparse multivariate polynomial with exact Gaussian-rational coefficients.
// Terms are keyed by exponent tuples of fixed length nvars(); zero
// coefficients are never stored, so is_zero() is a container check.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0) fail(ErrorKind::DimensionMismatch, "negative variable count");
  }

  static Polynomial variable(int nvars, int i) {
    Polynomial p(nvars);
    if (i < 0 || i >= nvars) fail(ErrorKind::IndexOutOfRange, "variable index out of range");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.terms_.emplace(std::move(e), GaussianRational(1));
    return p;
  }

  static Polynomial constant(int nvars, const GaussianRational& c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Exponents(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, GaussianRational>& terms() const { return terms_; }

  // Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int t = 0;
      for (int x : e) t += x;
      if (t > d) d = t;
    }
    return d;
  }

  void add_term(const Exponents& e, const GaussianRational& c) {
    if (static_cast<int>(e.size()) != nvars_)
      fail(ErrorKind::DimensionMismatch, "exponent tuple length differs from variable count");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same(b);
    Polynomial out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e = ea;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  friend Polynomial operator*(const GaussianRational& s, const Polynomial& p) {
    Polynomial out(p.nvars_);
    for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
    return out;
  }
  Polynomial operator-() const { return GaussianRational(-1) * *this; }

  Polynomial derivative(int var) const {
    if (var < 0 || var >= nvars_) fail(ErrorKind::IndexOutOfRange, "variable index out of range");
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      int k = e[static_cast<std::size_t>(var)];
      if (k == 0) continue;
      Exponents d = e;
      --d[static_cast<std::size_t>(var)];
      out.add_term(d, GaussianRational(k) * c);
    }
    return out;
  }

  GaussianRational evaluate(const std::vector<GaussianRational>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
      fail(ErrorKind::DimensionMismatch, "evaluation point has the wrong dimension");
    GaussianRational total(0);
    for (const auto& [e, c] : terms_) {
      GaussianRational term = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) term *= x[i];
      total += term;
    }
    return total;
  }

  std::complex<double> evaluate_numeric(const std::vector<std::complex<double>>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
      fail(ErrorKind::DimensionMismatch, "evaluation point has the wrong dimension");
    std::complex<double> total = 0.0;
    for (const auto& [e, c] : terms_) {
      std::complex<double> term(c.re.to_double(), c.im.to_double());
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) term *= x[i];
      total += term;
    }
    return total;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void require_same(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
      fail(ErrorKind::DimensionMismatch, "polynomials over different variable counts");
  }

  int nvars_ = 0;
  std::map<Exponents, GaussianRational> terms_;
};

}  // namespace liedense
