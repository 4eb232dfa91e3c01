#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "umbral/errors.hpp"
#include "umbral/padic.hpp"

using namespace umbral;

namespace {

Rational R(long a, long b = 1) { return Rational(a, b); }

// Exact alternating sum reduced mod p^M; the embedding is computed here by
// brute-force search for the residue r with den*r = num (mod p^M).
std::uint64_t brute_residue(const Rational& v, std::uint64_t modulus) {
  const long m = static_cast<long>(modulus);
  const long num = Integer((v.numerator() % m + m) % m).get_si();
  const long den = Integer(v.denominator() % m).get_si();
  for (long r = 0; r < m; ++r) {
    if ((den * r - num) % m == 0) return static_cast<std::uint64_t>(r);
  }
  FAIL("no residue");
  return 0;
}

}  // namespace

TEST_CASE("context validation") {
  CHECK_THROWS_AS(PadicContext(2, 3), InvalidArgument);
  CHECK_THROWS_AS(PadicContext(9, 2), InvalidArgument);
  CHECK_THROWS_AS(PadicContext(4, 1), InvalidArgument);
  CHECK_THROWS_AS(PadicContext(5, 0), InvalidArgument);
  CHECK_THROWS_AS(PadicContext(3, 60), InvalidArgument);
  CHECK(PadicContext(3, 4).modulus() == 81);
  CHECK(PadicContext(7, 2).p_power(1) == 7);
}

TEST_CASE("embed_rational examples") {
  CHECK(embed_rational(R(1, 2), PadicContext(3, 2)).residue() == 5);
  CHECK(embed_rational(R(-1, 2), PadicContext(3, 2)).residue() == 4);
  CHECK(embed_rational(R(7), PadicContext(5, 1)).residue() == 2);
  CHECK_THROWS_AS(embed_rational(R(1, 3), PadicContext(3, 2)), DenominatorNotUnit);
  CHECK_THROWS_AS(embed_rational(R(5, 12), PadicContext(3, 2)), DenominatorNotUnit);
}

TEST_CASE("mod_inverse and units") {
  CHECK(mod_inverse(2, 9) == 5);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK_THROWS_AS(mod_inverse(3, 9), DenominatorNotUnit);
  const PadicContext ctx(5, 3);
  CHECK_THROWS_AS(PadicInt(ctx, 10).inverse(), DenominatorNotUnit);
  for (std::uint64_t a = 1; a < 125; ++a) {
    if (a % 5 == 0) continue;
    CHECK((PadicInt(ctx, a) * PadicInt(ctx, a).inverse()).residue() == 1);
  }
}

TEST_CASE("embed_rational is a ring homomorphism") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 60);
  for (std::uint64_t p : {3, 5, 7}) {
    const PadicContext ctx(p, 4);
    int tested = 0;
    while (tested < 50) {
      long da = den(rng), db = den(rng);
      if (da % static_cast<long>(p) == 0 || db % static_cast<long>(p) == 0) continue;
      const Rational a(num(rng), da), b(num(rng), db);
      CHECK(embed_rational(a + b, ctx) == embed_rational(a, ctx) + embed_rational(b, ctx));
      CHECK(embed_rational(a * b, ctx) == embed_rational(a, ctx) * embed_rational(b, ctx));
      CHECK(embed_rational(a, ctx).residue() == brute_residue(a, ctx.modulus()));
      ++tested;
    }
  }
}

TEST_CASE("fermionic_sum examples") {
  for (std::uint64_t p : {3, 5, 7, 11}) {
    for (unsigned N = 1; N <= 3; ++N) CHECK(fermionic_sum(Poly{R(1)}, PadicContext(p, 3), N).residue() == 1);
  }
  CHECK(fermionic_sum(Poly::x(), PadicContext(3, 1), 1).residue() == 1);
  const PadicContext ctx(3, 2);
  CHECK(fermionic_sum(Poly::x(), ctx, 2).residue() == 4);
  CHECK(fermionic_sum(Poly::x(), ctx, 2) == embed_rational(R(-1, 2), ctx));
}

TEST_CASE("fermionic_sum matches the exact alternating sum") {
  const Poly f{R(1, 2), R(-3), R(0), R(5, 4), R(1)};
  for (std::uint64_t p : {3, 5}) {
    for (unsigned N = 1; N <= 3; ++N) {
      const PadicContext ctx(p, 5);
      long L = 1;
      for (unsigned i = 0; i < N; ++i) L *= static_cast<long>(p);
      const Rational exact = oracle::brute_alternating_sum([&](long s) { return f.eval(R(s)); }, 1, L);
      CHECK(fermionic_sum(f, ctx, N).residue() == brute_residue(exact, ctx.modulus()));
    }
  }
}

TEST_CASE("fermionic_sum_multi examples") {
  const PadicContext ctx(3, 2);
  const Poly g{R(2, 5), R(-1), R(3)};
  for (unsigned N = 1; N <= 2; ++N) CHECK(fermionic_sum_multi(g, 1, ctx, N) == fermionic_sum(g, ctx, N));
  for (std::uint64_t p : {3, 5, 7}) CHECK(fermionic_sum_multi(Poly{R(1)}, 2, PadicContext(p, 1), 1).residue() == 1);
  CHECK(fermionic_sum_multi(Poly::x(), 2, ctx, 2).residue() == 8);
  CHECK(fermionic_sum_multi(Poly::x(), 2, ctx, 2) == embed_rational(R(-1), ctx));
}

TEST_CASE("convolution matches brute-force enumeration of the grid") {
  const Poly g = poly_compose_affine(falling_factorial_poly(4), R(2), R(1));
  for (std::uint64_t p : {3, 5}) {
    for (int k = 1; k <= 3; ++k) {
      for (unsigned N = 1; N <= 2; ++N) {
        if (p == 5 && k == 3 && N == 2) continue;
        const PadicContext ctx(p, 4);
        long L = 1;
        for (unsigned i = 0; i < N; ++i) L *= static_cast<long>(p);
        const Rational exact = oracle::brute_alternating_sum([&](long s) { return g.eval(R(s)); }, k, L);
        CHECK(fermionic_sum_multi(g, static_cast<unsigned>(k), ctx, N).residue() ==
              brute_residue(exact, ctx.modulus()));
      }
    }
  }
}

TEST_CASE("budget") {
  const PadicContext ctx(7, 4);
  CHECK_THROWS_AS(fermionic_sum_multi(Poly{R(1)}, 3, ctx, 4), BudgetExceeded);
  CHECK_NOTHROW(fermionic_sum_multi(Poly{R(1)}, 2, ctx, 4));
  CHECK_THROWS_AS(fermionic_sum(Poly{R(1)}, ctx, 4, 100), BudgetExceeded);
  CHECK_THROWS_AS(fermionic_sum_multi(Poly{R(1)}, 0, ctx, 1), InvalidArgument);
  CHECK_THROWS_AS(fermionic_sum(Poly{R(1, 7)}, ctx, 1), DenominatorNotUnit);
}

TEST_CASE("truncated sums converge at rate p^N") {
  for (std::uint64_t p : {3, 5, 7}) {
    const PadicContext ctx(p, 5);
    for (const Rational& lambda : {R(1), R(2), R(-3)}) {
      for (const Rational& x : {R(0), R(1), R(4)}) {
        for (std::size_t n = 0; n <= 4; ++n) {
          const Poly f = witt_integrand(BooleKind::First, n, lambda, x);
          for (unsigned N = 1; N <= 4; ++N) {
            CHECK(fermionic_sum(f, ctx, N).reduced(N) == fermionic_sum(f, ctx, N + 1).reduced(N));
          }
        }
      }
    }
  }
}

TEST_CASE("witt_check examples") {
  for (std::uint64_t p : {3, 5, 7}) {
    for (const Rational& lambda : {R(1), R(2)}) {
      WittQuery q;
      q.n = 0;
      q.lambda = lambda;
      q.x = R(1);
      q.N = 2;
      const auto r = witt_check(q, PadicContext(p, 2));
      CHECK(r.agree);
      CHECK(r.lhs_residue == 1);
      CHECK(r.rhs_residue == 1);
    }
  }
  WittQuery q;
  q.n = 1;
  q.lambda = R(1);
  q.x = R(0);
  q.N = 2;
  auto r = witt_check(q, PadicContext(3, 2));
  CHECK(r.agree);
  CHECK(r.lhs_residue == 4);
  CHECK(r.rhs_residue == 4);
  CHECK(r.modulus == 9);

  q.kind = BooleKind::Second;
  q.lambda = R(2);
  r = witt_check(q, PadicContext(3, 2));
  CHECK(r.agree);
  CHECK(r.rhs_residue == 1);
  CHECK(r.lhs_residue == brute_residue(R(1), 9));

  q.N = 3;
  CHECK_THROWS_AS(witt_check(q, PadicContext(3, 2)), InvalidArgument);
  q.N = 1;
  q.lambda = R(1, 3);
  CHECK_THROWS_AS(witt_check(q, PadicContext(3, 2)), DenominatorNotUnit);
}

TEST_CASE("witt_check slack lowers the modulus") {
  WittQuery q;
  q.n = 3;
  q.lambda = R(2);
  q.x = R(1);
  q.N = 3;
  q.slack = 1;
  const auto r = witt_check(q, PadicContext(5, 3));
  CHECK(r.modulus == 25);
  CHECK(r.agree);
  q.slack = 5;
  CHECK(witt_check(q, PadicContext(5, 3)).modulus == 1);
}

TEST_CASE("functional equation holds on truncated sums") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<int> dexp(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c(1 + trial % 11);
    for (auto& v : c) v = Rational(num(rng), 1L << dexp(rng));
    const Poly f(std::move(c));
    for (std::uint64_t p : {3, 5, 7}) {
      for (unsigned N = 1; N <= 4; ++N) {
        const PadicContext ctx(p, N);
        const PadicInt lhs = fermionic_sum(poly_shift(f, R(1)), ctx, N) + fermionic_sum(f, ctx, N);
        CHECK(lhs == embed_rational(R(2) * f.eval(R(0)), ctx));
      }
    }
  }
}
