#include "umbral/euler.hpp"

#include "umbral/errors.hpp"
#include "umbral/series.hpp"

namespace umbral {

EulerSequence euler_polys(unsigned k, std::size_t max_n) {
  if (k == 0) throw InvalidArgument("Euler order k must be positive");
  // (e^t + 1)/2 = 1 + (e^t - 1)/2
  Series<Rational> half_sum = Series<Rational>::one(max_n) + exp_minus_one(max_n) * Rational(1, 2);
  Series<Rational> base = series_pow(series_inv(half_sum), k);
  Series<Poly> gf = lift(base) * exp_xt_symbolic(max_n);

  EulerSequence seq;
  seq.order_k = k;
  seq.max_n = max_n;
  seq.polys.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) seq.polys.push_back(gf[n] * Rational(factorial(n)));
  return seq;
}

std::shared_ptr<const EulerSequence> EulerCache::get(unsigned k, std::size_t max_n) {
  {
    std::lock_guard lock(mu_);
    auto it = entries_.find(k);
    if (it != entries_.end() && it->second->max_n >= max_n) return it->second;
  }
  auto fresh = std::make_shared<const EulerSequence>(euler_polys(k, max_n));
  std::lock_guard lock(mu_);
  auto& slot = entries_[k];
  if (!slot || slot->max_n < fresh->max_n) slot = fresh;
  return slot;
}

EulerCache& EulerCache::shared() {
  static EulerCache cache;
  return cache;
}

Rational euler_value(std::size_t n, unsigned k, const Rational& a) {
  return EulerCache::shared().get(k, n)->polys[n].eval(a);
}

Rational fermionic_moment(std::size_t n) { return euler_value(n, 1, Rational()); }

Rational integrate_poly(const Poly& f) {
  auto cs = f.coeffs();
  if (cs.empty()) return Rational();
  auto seq = EulerCache::shared().get(1, cs.size() - 1);
  Rational acc;
  for (std::size_t i = 0; i < cs.size(); ++i) acc += cs[i] * seq->polys[i].coeff(0);
  return acc;
}

}  // namespace umbral
