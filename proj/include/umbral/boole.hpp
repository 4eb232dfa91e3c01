#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "umbral/euler.hpp"
#include "umbral/poly.hpp"
#include "umbral/rational.hpp"

namespace umbral {

enum class BooleKind { First, Second };

const char* to_string(BooleKind kind);
BooleKind parse_boole_kind(const std::string& text);

struct BooleParams {
  Rational lambda{1};
  BooleKind kind = BooleKind::First;
  unsigned order_k = 1;
};

/// polys[n] is Bl_n^(k)(x|lambda) for the first kind and the hatted second-kind
/// polynomial otherwise. polys[0] = 1/2^k and every polys[n] has leading
/// coefficient 1/2^k.
struct BooleSequence {
  BooleParams params;
  std::size_t max_n = 0;
  std::vector<Poly> polys;
};

/// Generating-function route:
///   first:  2^k sum Bl_n t^n/n! = (2/(1+(1+t)^lambda))^k (1+t)^x
///   second: sum Bl^_n t^n/n!  = ((1+t)^lambda/(1+(1+t)^lambda))^k (1+t)^x
/// lambda = 0 is accepted.
BooleSequence boole_polys_gf(const BooleParams& params, std::size_t max_n);

/// Stirling/Euler route:
///   first:  2^k Bl_n  = sum_l S1(n,l) lambda^l E_l^(k)(x/lambda)
///   second: 2^k Bl^_n = sum_l S1(n,l) (-lambda)^l E_l^(k)(-x/lambda)
/// Throws ZeroLambda.
BooleSequence boole_polys_euler(const BooleParams& params, std::size_t max_n,
                                EulerCache& euler = EulerCache::shared());

/// Ch_n(x) = 2 Bl_n(x|1).
Poly changhee_poly(std::size_t n);
/// Ch_n(x) read directly from 2/(t+2) (1+t)^x.
Poly changhee_poly_direct(std::size_t n);

Rational boole_value(const BooleSequence& seq, std::size_t n, const Rational& a);

/// Cache of generating-function sequences keyed by (kind, lambda, k).
class BooleCache {
 public:
  std::shared_ptr<const BooleSequence> get(const BooleParams& params, std::size_t max_n);
  const Poly& poly(const BooleParams& params, std::size_t n) { return get(params, n)->polys[n]; }

 private:
  using Key = std::tuple<int, std::string, unsigned>;
  std::mutex mu_;
  std::map<Key, std::shared_ptr<const BooleSequence>> entries_;
};

}  // namespace umbral
