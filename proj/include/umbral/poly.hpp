#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Dense univariate polynomial over the rationals. coeffs()[i] is the
/// coefficient of x^i; the zero polynomial has no stored coefficients and
/// the highest stored coefficient is never zero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);
  static Poly x() { return monomial(Rational(1), 1); }

  std::span<const Rational> coeffs() const { return coeffs_; }
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of x^i; zero beyond the degree.
  Rational coeff(std::size_t i) const;
  Rational leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly& operator/=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator/(Poly a, const Rational& c) { return a /= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Rational operator()(const Rational& r) const { return eval(r); }
  Rational eval(const Rational& r) const;
  Poly derivative() const;

  /// Human-readable form, highest degree first, e.g. "1/2*x^2 - x + 3".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// (x)_n = x(x-1)...(x-n+1)
Poly falling_factorial_poly(std::size_t n);
/// x^(n) = x(x+1)...(x+n-1)
Poly rising_factorial_poly(std::size_t n);

/// q(x) = p(scale*x + offset), expanded exactly.
Poly poly_compose_affine(const Poly& p, const Rational& scale, const Rational& offset);
/// q(x) = p(x + c)
Poly poly_shift(const Poly& p, const Rational& c);
Rational poly_eval(const Poly& p, const Rational& r);

}  // namespace umbral
