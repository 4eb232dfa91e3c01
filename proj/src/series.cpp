#include "umbral/series.hpp"

namespace umbral {

Series<Poly> lift(const Series<Rational>& s) {
  Series<Poly> out(s.order());
  for (std::size_t m = 0; m <= s.order(); ++m) out[m] = Poly::constant(s[m]);
  return out;
}

Series<Rational> binomial_series(const Rational& lambda, std::size_t order) {
  Series<Rational> s(order);
  Rational term(1);
  for (std::size_t m = 0; m <= order; ++m) {
    s[m] = term;
    term *= (lambda - Rational(static_cast<long>(m))) / Rational(static_cast<long>(m + 1));
  }
  return s;
}

Series<Poly> binomial_series_symbolic(std::size_t order) {
  Series<Poly> s(order);
  for (std::size_t m = 0; m <= order; ++m) {
    s[m] = falling_factorial_poly(m) / Rational(factorial(m));
  }
  return s;
}

Series<Rational> exp_minus_one(std::size_t order) {
  Series<Rational> s(order);
  for (std::size_t m = 1; m <= order; ++m) s[m] = Rational(Integer(1), factorial(m));
  return s;
}

Series<Poly> exp_xt_symbolic(std::size_t order) {
  Series<Poly> s(order);
  for (std::size_t m = 0; m <= order; ++m) {
    s[m] = Poly::monomial(Rational(Integer(1), factorial(m)), m);
  }
  return s;
}

}  // namespace umbral
