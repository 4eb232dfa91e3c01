#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "umbral/errors.hpp"
#include "umbral/poly.hpp"
#include "umbral/rational.hpp"

namespace umbral {

// Coefficient rings a Series can carry. Only these two are supported.
template <typename R>
struct CoefficientRing;

template <>
struct CoefficientRing<Rational> {
  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& r) { return r.is_zero(); }
  static Rational unit_inverse(const Rational& r) {
    if (r.is_zero()) throw NonUnitConstantTerm("constant term is zero");
    return r.inverse();
  }
};

template <>
struct CoefficientRing<Poly> {
  static Poly zero() { return Poly(); }
  static Poly one() { return Poly::constant(Rational(1)); }
  static bool is_zero(const Poly& p) { return p.is_zero(); }
  static Poly unit_inverse(const Poly& p) {
    if (p.is_zero()) throw NonUnitConstantTerm("constant term is zero");
    if (!p.is_constant()) throw NonUnitConstantTerm("constant term is a non-constant polynomial");
    return Poly::constant(p.coeff(0).inverse());
  }
};

/// Truncated formal power series in t: coefficients of t^0..t^order.
/// Binary operations truncate to the smaller of the operand orders.
template <typename R>
class Series {
 public:
  using Ring = CoefficientRing<R>;

  explicit Series(std::size_t order) : coeffs_(order + 1, Ring::zero()) {}
  Series(std::vector<R> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, Ring::zero());
  }

  static Series constant(const R& c, std::size_t order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
  }
  static Series one(std::size_t order) { return constant(Ring::one(), order); }
  /// The series "t" itself.
  static Series variable(std::size_t order) {
    Series s(order);
    if (order >= 1) s.coeffs_[1] = Ring::one();
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const R> coeffs() const { return coeffs_; }
  const R& operator[](std::size_t m) const { return coeffs_.at(m); }
  R& operator[](std::size_t m) { return coeffs_.at(m); }

  Series truncated(std::size_t order) const {
    std::vector<R> v(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1);
    return Series(std::move(v), std::min(order, this->order()));
  }

  Series operator-() const {
    Series r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t m = 0; m <= r.order(); ++m) r.coeffs_[m] = a.coeffs_[m] + b.coeffs_[m];
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

  /// Cauchy product.
  friend Series operator*(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) {
      if (Ring::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j <= r.order(); ++j) {
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }

  friend Series operator*(const Series& a, const Rational& c) {
    Series r = a;
    for (auto& v : r.coeffs_) v *= c;
    return r;
  }
  friend Series operator*(const Rational& c, const Series& a) { return a * c; }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<R> coeffs_;
};

template <typename R>
Series<R> series_mul(const Series<R>& a, const Series<R>& b) {
  return a * b;
}

template <typename R>
Series<R> series_pow(const Series<R>& a, unsigned exponent) {
  Series<R> acc = Series<R>::one(a.order());
  for (unsigned i = 0; i < exponent; ++i) acc = acc * a;
  return acc;
}

/// b with a*b = 1 up to the order of a. Throws NonUnitConstantTerm.
template <typename R>
Series<R> series_inv(const Series<R>& a) {
  using Ring = CoefficientRing<R>;
  const R c0_inv = Ring::unit_inverse(a[0]);
  Series<R> b(a.order());
  b[0] = c0_inv;
  for (std::size_t m = 1; m <= a.order(); ++m) {
    R acc = Ring::zero();
    for (std::size_t i = 1; i <= m; ++i) acc += a[i] * b[m - i];
    b[m] = -(acc * c0_inv);
  }
  return b;
}

/// outer(inner(t)) by Horner accumulation. Throws NonzeroInnerConstant.
template <typename R>
Series<R> series_compose(const Series<R>& outer, const Series<R>& inner) {
  using Ring = CoefficientRing<R>;
  if (!Ring::is_zero(inner[0])) throw NonzeroInnerConstant("inner series has nonzero constant term");
  const std::size_t order = std::min(outer.order(), inner.order());
  const Series<R> in = inner.truncated(order);
  Series<R> acc(order);
  for (std::size_t k = outer.order() + 1; k-- > 0;) {
    acc = acc * in;
    acc[0] += outer[k];
  }
  return acc;
}

/// Embeds a rational series into the polynomial-coefficient ring.
Series<Poly> lift(const Series<Rational>& s);

/// (1+t)^lambda
Series<Rational> binomial_series(const Rational& lambda, std::size_t order);
/// (1+t)^x with symbolic x: coefficient of t^m is binom(x, m) = (x)_m/m!.
Series<Poly> binomial_series_symbolic(std::size_t order);
/// e^t - 1
Series<Rational> exp_minus_one(std::size_t order);
/// e^{xt} with symbolic x: coefficient of t^m is x^m/m!.
Series<Poly> exp_xt_symbolic(std::size_t order);

}  // namespace umbral
