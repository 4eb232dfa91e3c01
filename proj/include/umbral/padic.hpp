#pragma once

#include <cstdint>
#include <string>

#include "umbral/boole.hpp"
#include "umbral/poly.hpp"
#include "umbral/rational.hpp"

namespace umbral {

inline constexpr std::uint64_t kDefaultTermBudget = 10'000'000;

/// Reads UMBRAL_TERM_BUDGET, falling back to kDefaultTermBudget.
std::uint64_t term_budget_from_env();

bool is_prime(std::uint64_t n);

/// Arithmetic modulo p^M for an odd prime p. p^M must stay below 2^62.
class PadicContext {
 public:
  PadicContext(std::uint64_t p, unsigned precision);

  std::uint64_t p() const { return p_; }
  unsigned precision() const { return precision_; }
  std::uint64_t modulus() const { return modulus_; }
  /// p^j for 0 <= j <= precision.
  std::uint64_t p_power(unsigned j) const;

  friend bool operator==(const PadicContext&, const PadicContext&) = default;

 private:
  std::uint64_t p_;
  unsigned precision_;
  std::uint64_t modulus_;
};

class PadicInt {
 public:
  PadicInt(const PadicContext& ctx, std::uint64_t residue);
  static PadicInt from_signed(const PadicContext& ctx, std::int64_t value);

  const PadicContext& context() const { return ctx_; }
  std::uint64_t residue() const { return residue_; }
  bool is_unit() const { return residue_ % ctx_.p() != 0; }

  PadicInt operator-() const;
  PadicInt& operator+=(const PadicInt& o);
  PadicInt& operator-=(const PadicInt& o);
  PadicInt& operator*=(const PadicInt& o);
  friend PadicInt operator+(PadicInt a, const PadicInt& b) { return a += b; }
  friend PadicInt operator-(PadicInt a, const PadicInt& b) { return a -= b; }
  friend PadicInt operator*(PadicInt a, const PadicInt& b) { return a *= b; }
  friend bool operator==(const PadicInt&, const PadicInt&) = default;

  /// Throws DenominatorNotUnit when the residue is divisible by p.
  PadicInt inverse() const;
  /// Residue reduced modulo p^j.
  std::uint64_t reduced(unsigned j) const { return residue_ % ctx_.p_power(j); }

 private:
  void check_same(const PadicInt& o) const;
  PadicContext ctx_;
  std::uint64_t residue_;
};

/// Inverse of a modulo m by the extended Euclidean algorithm; gcd(a, m) must be 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

/// numerator * denominator^{-1} mod p^M. Throws DenominatorNotUnit.
PadicInt embed_rational(const Rational& a, const PadicContext& ctx);

/// sum_{y=0}^{p^N-1} f(y) (-1)^y mod p^M.
PadicInt fermionic_sum(const Poly& f, const PadicContext& ctx, unsigned N,
                       std::uint64_t budget = kDefaultTermBudget);

/// k-fold truncated sum over (y_1..y_k) in [0, p^N)^k of g(y_1+...+y_k)(-1)^{y_1+...+y_k}.
/// The integrand is given as a polynomial g in the sum s = y_1+...+y_k, which
/// covers every integrand of the form (x + c*(y_1+...+y_k))_n. The sum is
/// evaluated by convolving the one-variable counting distribution k times.
/// Throws BudgetExceeded when p^{Nk} exceeds the budget.
PadicInt fermionic_sum_multi(const Poly& g, unsigned k, const PadicContext& ctx, unsigned N,
                             std::uint64_t budget = kDefaultTermBudget);

struct WittQuery {
  BooleKind kind = BooleKind::First;
  unsigned order_k = 1;
  std::size_t n = 0;
  Rational lambda{1};
  Rational x{0};
  unsigned N = 1;
  unsigned slack = 0;
  std::uint64_t budget = kDefaultTermBudget;
};

struct CongruenceReport {
  std::uint64_t p = 0;
  unsigned M = 0;
  unsigned N = 0;
  std::size_t n = 0;
  unsigned k = 1;
  BooleKind kind = BooleKind::First;
  Rational lambda;
  Rational x;
  std::uint64_t lhs_residue = 0;  // truncated fermionic sum, mod p^M
  std::uint64_t rhs_residue = 0;  // closed form 2^k Bl_n^(k)(x|lambda), mod p^M
  std::uint64_t modulus = 1;      // p^{N - slack}
  bool agree = false;
};

/// The integrand (x + lambda*s)_n (first kind) or (x - lambda*s)_n (second
/// kind) as a polynomial in s.
Poly witt_integrand(BooleKind kind, std::size_t n, const Rational& lambda, const Rational& x);

/// Compares the truncated k-fold fermionic sum of the Witt integrand against
/// 2^k times the Boole closed form, modulo p^{N - slack}. Requires M >= N.
CongruenceReport witt_check(const WittQuery& query, const PadicContext& ctx, BooleCache& cache);
CongruenceReport witt_check(const WittQuery& query, const PadicContext& ctx);

}  // namespace umbral
