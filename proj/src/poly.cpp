#include "umbral/poly.hpp"

#include <sstream>

#include "umbral/errors.hpp"

namespace umbral {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

Rational Poly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

Poly& Poly::operator/=(const Rational& c) {
  if (c.is_zero()) throw InvalidArgument("polynomial division by zero");
  for (auto& v : coeffs_) v /= c;
  return *this;
}

Rational Poly::eval(const Rational& r) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= r;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  }
  return Poly(std::move(out));
}

std::string Poly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly falling_factorial_poly(std::size_t n) {
  Poly acc = Poly::constant(Rational(1));
  for (std::size_t i = 0; i < n; ++i) acc *= Poly{Rational(-static_cast<long>(i)), Rational(1)};
  return acc;
}

Poly rising_factorial_poly(std::size_t n) {
  Poly acc = Poly::constant(Rational(1));
  for (std::size_t i = 0; i < n; ++i) acc *= Poly{Rational(static_cast<long>(i)), Rational(1)};
  return acc;
}

Poly poly_compose_affine(const Poly& p, const Rational& scale, const Rational& offset) {
  // Horner in the polynomial ring with the linear form scale*x + offset.
  const Poly linear{offset, scale};
  Poly acc;
  auto cs = p.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) {
    acc = acc * linear;
    acc += Poly::constant(cs[k]);
  }
  return acc;
}

Poly poly_shift(const Poly& p, const Rational& c) { return poly_compose_affine(p, Rational(1), c); }

Rational poly_eval(const Poly& p, const Rational& r) { return p.eval(r); }

}  // namespace umbral
