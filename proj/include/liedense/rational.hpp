#pragma once

// Exact scalar types used throughout: arbitrary-precision rationals and
// Gaussian rationals, usable as Eigen matrix scalars.

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liedense {

using Integer = boost::multiprecision::cpp_int;

// Value wrapper around boost's cpp_rational.  The wrapper (rather than the raw
// boost type) is what Eigen sees: it has only non-template constructors, so
// Eigen's scalar-promotion probes never instantiate boost's container traits,
// which are not SFINAE-safe against Eigen expression types.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<long long>(n)) {}
  Rational(long long n) : v_(n) {}
  Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
  }
  explicit Rational(const boost::multiprecision::cpp_rational& v) : v_(v) {}

  // Parses "p", "-p", or "p/q" (no whitespace).
  static Rational parse(std::string_view s);

  Integer numerator() const { return boost::multiprecision::numerator(v_); }
  Integer denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  // Requires is_integer().
  Integer to_integer() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
    return numerator();
  }
  int sign() const { return v_.sign(); }

  std::string str() const;

  const boost::multiprecision::cpp_rational& raw() const { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ == b.v_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  double to_double() const { return static_cast<double>(v_); }

 private:
  boost::multiprecision::cpp_rational v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline std::string Rational::str() const {
  std::string s = numerator().str();
  if (!is_integer()) s += "/" + denominator().str();
  return s;
}

inline Rational Rational::parse(std::string_view s) {
  auto bad = [&] { throw std::invalid_argument("Rational::parse: bad literal '" + std::string(s) + "'"); };
  if (s.empty()) bad();
  auto to_int = [&](std::string_view t) {
    bool neg = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
      neg = t[0] == '-';
      t.remove_prefix(1);
    }
    if (t.empty()) bad();
    for (char ch : t)
      if (ch < '0' || ch > '9') bad();
    Integer v{std::string(t)};
    return neg ? Integer(-v) : v;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(to_int(s));
  Integer n = to_int(s.substr(0, slash));
  Integer d = to_int(s.substr(slash + 1));
  if (d.is_zero()) bad();
  return Rational(n, d);
}

// Gaussian rational a + b*i with exact components.  Used for the complex
// eigen-decompositions of real orthogonal actions.
struct GaussianRational {
  Rational re, im;

  GaussianRational() = default;
  GaussianRational(int n) : re(n) {}
  GaussianRational(long long n) : re(n) {}
  GaussianRational(const Rational& r) : re(r) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }
  // Parses "p/q" or "p/q+r/si" / "p/q-r/si" (imaginary unit suffix 'i').
  static GaussianRational parse(std::string_view s);

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  std::string str() const {
    if (im.is_zero()) return re.str();
    std::string s = re.is_zero() ? std::string() : re.str();
    s += (im.sign() < 0) ? "-" : (s.empty() ? "" : "+");
    s += liedense::abs(im).str() + "i";
    return s;
  }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.norm2();
    if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    GaussianRational p = a * b.conj();
    return {p.re / n, p.im / n};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }
  GaussianRational& operator/=(const GaussianRational& o) { *this = *this / o; return *this; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  // Lexicographic; used only for container keying, not as a field order.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    if (auto c = a.re <=> b.re; c != std::strong_ordering::equal) return c;
    return a.im <=> b.im;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }
};

inline GaussianRational GaussianRational::parse(std::string_view s) {
  auto bad = [&] {
    throw std::invalid_argument("GaussianRational::parse: bad literal '" + std::string(s) + "'");
  };
  if (s.empty()) bad();
  if (s.back() != 'i') return GaussianRational(Rational::parse(s));
  std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last top-level +/- that is not the leading sign.
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
      Rational re = Rational::parse(body.substr(0, k));
      std::string_view ims = body.substr(k);
      Rational im = (ims == "+") ? Rational(1) : (ims == "-") ? Rational(-1) : Rational::parse(ims);
      return {re, im};
    }
  }
  if (body.empty()) return GaussianRational::i();
  if (body == "-") return {Rational(0), Rational(-1)};
  return {Rational(0), Rational::parse(body)};
}

}  // namespace liedense

namespace Eigen {

template <>
struct NumTraits<liedense::Rational> {
  using Real = liedense::Rational;
  using NonInteger = liedense::Rational;
  using Literal = liedense::Rational;
  using Nested = liedense::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 40,
  };
  static inline liedense::Rational epsilon() { return liedense::Rational(0); }
  static inline liedense::Rational dummy_precision() { return liedense::Rational(0); }
  static inline int digits10() { return 0; }
};

// Treated as an opaque exact field scalar; code using these matrices never
// relies on Eigen's complex-aware paths (adjoint, norms).
template <>
struct NumTraits<liedense::GaussianRational> {
  using Real = liedense::GaussianRational;
  using NonInteger = liedense::GaussianRational;
  using Literal = liedense::GaussianRational;
  using Nested = liedense::GaussianRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 60,
    MulCost = 160,
  };
  static inline liedense::GaussianRational epsilon() { return liedense::GaussianRational(0); }
  static inline liedense::GaussianRational dummy_precision() { return liedense::GaussianRational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
