#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "umbral/poly.hpp"
#include "umbral/rational.hpp"

namespace umbral {

/// E_n^(k)(x) for n = 0..max_n, from (2/(e^t+1))^k e^{xt}.
struct EulerSequence {
  unsigned order_k = 1;
  std::size_t max_n = 0;
  std::vector<Poly> polys;
};

EulerSequence euler_polys(unsigned k, std::size_t max_n);

/// Write-once cache of Euler sequences keyed by order. A request for a longer
/// sequence replaces the cached one; returned sequences are immutable.
class EulerCache {
 public:
  std::shared_ptr<const EulerSequence> get(unsigned k, std::size_t max_n);
  const Poly& poly(unsigned k, std::size_t n) { return get(k, n)->polys[n]; }

  static EulerCache& shared();

 private:
  std::mutex mu_;
  std::map<unsigned, std::shared_ptr<const EulerSequence>> entries_;
};

Rational euler_value(std::size_t n, unsigned k, const Rational& a);

/// E_n = E_n(0), the fermionic integral of y^n.
Rational fermionic_moment(std::size_t n);

/// Fermionic integral of a polynomial, extended linearly from the moments.
Rational integrate_poly(const Poly& f);

}  // namespace umbral
