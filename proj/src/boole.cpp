#include "umbral/boole.hpp"

#include "umbral/errors.hpp"
#include "umbral/series.hpp"
#include "umbral/stirling.hpp"

namespace umbral {

const char* to_string(BooleKind kind) { return kind == BooleKind::First ? "first" : "second"; }

BooleKind parse_boole_kind(const std::string& text) {
  if (text == "first") return BooleKind::First;
  if (text == "second") return BooleKind::Second;
  throw ParseError("kind must be 'first' or 'second', got '" + text + "'");
}

namespace {

void check_order(const BooleParams& params) {
  if (params.order_k == 0) throw InvalidArgument("Boole order k must be positive");
}

Rational two_pow(unsigned k) { return Rational(2).pow(k); }

}  // namespace

BooleSequence boole_polys_gf(const BooleParams& params, std::size_t max_n) {
  check_order(params);
  const Series<Rational> lambda_power = binomial_series(params.lambda, max_n);
  const Series<Rational> denom_inv = series_inv(Series<Rational>::one(max_n) + lambda_power);

  Series<Rational> base = params.kind == BooleKind::First ? denom_inv * Rational(2)
                                                          : lambda_power * denom_inv;
  Series<Poly> gf = lift(series_pow(base, params.order_k)) * binomial_series_symbolic(max_n);

  const Rational scale = params.kind == BooleKind::First ? two_pow(params.order_k).inverse()
                                                         : Rational(1);
  BooleSequence seq{params, max_n, {}};
  seq.polys.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    seq.polys.push_back(gf[n] * (Rational(factorial(n)) * scale));
  }
  return seq;
}

BooleSequence boole_polys_euler(const BooleParams& params, std::size_t max_n, EulerCache& euler) {
  check_order(params);
  if (params.lambda.is_zero()) throw ZeroLambda();
  const auto es = euler.get(params.order_k, max_n);
  const bool second = params.kind == BooleKind::Second;
  const Rational arg_scale = second ? -params.lambda.inverse() : params.lambda.inverse();
  const Rational weight_base = second ? -params.lambda : params.lambda;

  // terms[l] = weight_base^l E_l^(k)(arg_scale * x)
  std::vector<Poly> terms;
  terms.reserve(max_n + 1);
  for (std::size_t l = 0; l <= max_n; ++l) {
    terms.push_back(poly_compose_affine(es->polys[l], arg_scale, Rational()) *
                    weight_base.pow(l));
  }

  const Rational norm = two_pow(params.order_k).inverse();
  BooleSequence seq{params, max_n, {}};
  seq.polys.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) {
    Poly acc;
    for (std::size_t l = 0; l <= n; ++l) {
      acc += terms[l] * Rational(stirling1(static_cast<long>(n), static_cast<long>(l)));
    }
    seq.polys.push_back(acc * norm);
  }
  return seq;
}

Poly changhee_poly(std::size_t n) {
  return boole_polys_gf(BooleParams{Rational(1), BooleKind::First, 1}, n).polys[n] * Rational(2);
}

Poly changhee_poly_direct(std::size_t n) {
  // 2/(t+2) = 1/(1 + t/2)
  Series<Rational> half_shift = Series<Rational>::one(n) + Series<Rational>::variable(n) * Rational(1, 2);
  Series<Poly> gf = lift(series_inv(half_shift)) * binomial_series_symbolic(n);
  return gf[n] * Rational(factorial(n));
}

Rational boole_value(const BooleSequence& seq, std::size_t n, const Rational& a) {
  if (n > seq.max_n || n >= seq.polys.size()) {
    throw IndexOutOfRange("index " + std::to_string(n) + " beyond computed sequence");
  }
  return seq.polys[n].eval(a);
}

std::shared_ptr<const BooleSequence> BooleCache::get(const BooleParams& params, std::size_t max_n) {
  const Key key{static_cast<int>(params.kind), params.lambda.str(), params.order_k};
  {
    std::lock_guard lock(mu_);
    auto it = entries_.find(key);
    if (it != entries_.end() && it->second->max_n >= max_n) return it->second;
  }
  auto fresh = std::make_shared<const BooleSequence>(boole_polys_gf(params, max_n));
  std::lock_guard lock(mu_);
  auto& slot = entries_[key];
  if (!slot || slot->max_n < fresh->max_n) slot = fresh;
  return slot;
}

}  // namespace umbral
