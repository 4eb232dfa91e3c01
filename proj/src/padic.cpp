#include "umbral/padic.hpp"

#include <cstdlib>
#include <limits>
#include <vector>

#include "umbral/errors.hpp"

namespace umbral {
namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));

// Floor remainder, always in [0, m).
std::uint64_t mpz_mod_u64(const Integer& value, std::uint64_t m) {
  return mpz_fdiv_ui(value.get_mpz_t(), m);
}

bool mpz_divisible_by(const Integer& value, std::uint64_t p) { return mpz_mod_u64(value, p) == 0; }

// Saturating power: returns false if base^exp exceeds limit.
bool power_within(std::uint64_t base, unsigned long exp, std::uint64_t limit, std::uint64_t& out) {
  u128 acc = 1;
  for (unsigned long i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > limit) return false;
  }
  out = static_cast<std::uint64_t>(acc);
  return true;
}

}  // namespace

std::uint64_t term_budget_from_env() {
  const char* raw = std::getenv("UMBRAL_TERM_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultTermBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw InvalidArgument("UMBRAL_TERM_BUDGET must be a positive integer");
  return v;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PadicContext::PadicContext(std::uint64_t p, unsigned precision) : p_(p), precision_(precision) {
  if (p < 3 || !is_prime(p)) throw InvalidArgument("p must be an odd prime");
  if (precision < 1) throw InvalidArgument("precision M must be at least 1");
  if (!power_within(p, precision, kMaxModulus, modulus_)) {
    throw InvalidArgument("p^M exceeds the 2^62 residue range");
  }
}

std::uint64_t PadicContext::p_power(unsigned j) const {
  if (j > precision_) throw InvalidArgument("power of p beyond working precision");
  std::uint64_t out = 1;
  power_within(p_, j, kMaxModulus, out);
  return out;
}

PadicInt::PadicInt(const PadicContext& ctx, std::uint64_t residue)
    : ctx_(ctx), residue_(residue % ctx.modulus()) {}

PadicInt PadicInt::from_signed(const PadicContext& ctx, std::int64_t value) {
  const auto m = static_cast<std::int64_t>(ctx.modulus());
  std::int64_t r = value % m;
  if (r < 0) r += m;
  return PadicInt(ctx, static_cast<std::uint64_t>(r));
}

void PadicInt::check_same(const PadicInt& o) const {
  if (!(ctx_ == o.ctx_)) throw InvalidArgument("mixed p-adic contexts");
}

PadicInt PadicInt::operator-() const { return PadicInt(ctx_, residue_ == 0 ? 0 : ctx_.modulus() - residue_); }

PadicInt& PadicInt::operator+=(const PadicInt& o) {
  check_same(o);
  residue_ = static_cast<std::uint64_t>((static_cast<u128>(residue_) + o.residue_) % ctx_.modulus());
  return *this;
}

PadicInt& PadicInt::operator-=(const PadicInt& o) { return *this += -o; }

PadicInt& PadicInt::operator*=(const PadicInt& o) {
  check_same(o);
  residue_ = mul_mod(residue_, o.residue_, ctx_.modulus());
  return *this;
}

PadicInt PadicInt::inverse() const {
  if (!is_unit()) throw DenominatorNotUnit("element divisible by p has no inverse");
  return PadicInt(ctx_, mod_inverse(residue_, ctx_.modulus()));
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  // Invariant: old_r = old_s * a (mod m), r = s * a (mod m).
  __int128 old_r = a % m, r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DenominatorNotUnit("value is not invertible modulo p^M");
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

PadicInt embed_rational(const Rational& a, const PadicContext& ctx) {
  const Integer den = a.denominator();
  if (mpz_divisible_by(den, ctx.p())) {
    throw DenominatorNotUnit("denominator of " + a.str() + " is divisible by p = " +
                             std::to_string(ctx.p()));
  }
  const std::uint64_t m = ctx.modulus();
  return PadicInt(ctx, mul_mod(mpz_mod_u64(a.numerator(), m), mod_inverse(mpz_mod_u64(den, m), m), m));
}

namespace {

std::vector<PadicInt> embed_coeffs(const Poly& f, const PadicContext& ctx) {
  std::vector<PadicInt> out;
  for (const auto& c : f.coeffs()) out.push_back(embed_rational(c, ctx));
  return out;
}

PadicInt eval_mod(const std::vector<PadicInt>& coeffs, std::uint64_t y, const PadicContext& ctx) {
  PadicInt acc(ctx, 0);
  const PadicInt point(ctx, y);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= point;
    acc += *it;
  }
  return acc;
}

std::uint64_t level_length(const PadicContext& ctx, unsigned N, unsigned k, std::uint64_t budget) {
  if (N < 1) throw InvalidArgument("truncation level N must be at least 1");
  std::uint64_t grid = 0;
  if (!power_within(ctx.p(), static_cast<unsigned long>(N) * k, budget, grid)) {
    throw BudgetExceeded("p^(N*k) = " + std::to_string(ctx.p()) + "^" + std::to_string(N * k) +
                         " terms exceeds the budget of " + std::to_string(budget));
  }
  std::uint64_t length = 0;
  power_within(ctx.p(), N, std::numeric_limits<std::uint64_t>::max(), length);
  return length;
}

}  // namespace

PadicInt fermionic_sum(const Poly& f, const PadicContext& ctx, unsigned N, std::uint64_t budget) {
  const std::uint64_t length = level_length(ctx, N, 1, budget);
  const auto coeffs = embed_coeffs(f, ctx);
  PadicInt acc(ctx, 0);
  for (std::uint64_t y = 0; y < length; ++y) {
    PadicInt v = eval_mod(coeffs, y, ctx);
    if (y % 2 == 0) {
      acc += v;
    } else {
      acc -= v;
    }
  }
  return acc;
}

PadicInt fermionic_sum_multi(const Poly& g, unsigned k, const PadicContext& ctx, unsigned N,
                             std::uint64_t budget) {
  if (k < 1) throw InvalidArgument("number of integration variables k must be at least 1");
  const std::uint64_t length = level_length(ctx, N, k, budget);
  const auto coeffs = embed_coeffs(g, ctx);
  const std::uint64_t m = ctx.modulus();

  // counts[s] = #{(y_1..y_j) in [0, length)^j : sum = s}, mod p^M.
  std::vector<std::uint64_t> counts(length, 1);
  for (unsigned j = 1; j < k; ++j) {
    std::vector<std::uint64_t> next(counts.size() + length - 1, 0);
    // Sliding window: next[s] = sum_{y=0}^{length-1} counts[s-y].
    std::uint64_t window = 0;
    for (std::size_t s = 0; s < next.size(); ++s) {
      if (s < counts.size()) window = (window + counts[s]) % m;
      if (s >= length) window = (window + m - counts[s - length]) % m;
      next[s] = window;
    }
    counts = std::move(next);
  }

  PadicInt acc(ctx, 0);
  for (std::uint64_t s = 0; s < counts.size(); ++s) {
    PadicInt term = eval_mod(coeffs, s, ctx) * PadicInt(ctx, counts[s]);
    if (s % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

Poly witt_integrand(BooleKind kind, std::size_t n, const Rational& lambda, const Rational& x) {
  const Rational slope = kind == BooleKind::First ? lambda : -lambda;
  return poly_compose_affine(falling_factorial_poly(n), slope, x);
}

CongruenceReport witt_check(const WittQuery& q, const PadicContext& ctx, BooleCache& cache) {
  if (q.order_k < 1) throw InvalidArgument("order k must be at least 1");
  if (ctx.precision() < q.N) throw InvalidArgument("precision M must be at least N");

  const Poly integrand = witt_integrand(q.kind, q.n, q.lambda, q.x);
  const PadicInt lhs = fermionic_sum_multi(integrand, q.order_k, ctx, q.N, q.budget);

  const auto seq = cache.get(BooleParams{q.lambda, q.kind, q.order_k}, q.n);
  const Rational closed = boole_value(*seq, q.n, q.x) * Rational(2).pow(q.order_k);
  const PadicInt rhs = embed_rational(closed, ctx);

  const unsigned level = q.slack >= q.N ? 0 : q.N - q.slack;
  CongruenceReport r;
  r.p = ctx.p();
  r.M = ctx.precision();
  r.N = q.N;
  r.n = q.n;
  r.k = q.order_k;
  r.kind = q.kind;
  r.lambda = q.lambda;
  r.x = q.x;
  r.lhs_residue = lhs.residue();
  r.rhs_residue = rhs.residue();
  r.modulus = ctx.p_power(level);
  r.agree = lhs.reduced(level) == rhs.reduced(level);
  return r;
}

CongruenceReport witt_check(const WittQuery& query, const PadicContext& ctx) {
  BooleCache cache;
  return witt_check(query, ctx, cache);
}

}  // namespace umbral
