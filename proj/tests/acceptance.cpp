// Acceptance suite: one pass/fail line per criterion. Exact criteria compare
// with zero tolerance; runtime limits are hard bounds.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "umbral/boole.hpp"
#include "umbral/euler.hpp"
#include "umbral/padic.hpp"
#include "umbral/stirling.hpp"
#include "umbral/verify.hpp"

#ifndef UMBRAL_CLI_PATH
#error "UMBRAL_CLI_PATH must point at the CLI binary"
#endif

using namespace umbral;

namespace {

const std::vector<Rational> kLambdaGrid{Rational(1), Rational(2), Rational(3), Rational(1, 2),
                                        Rational(-1, 3)};

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string describe(const VerificationCase& c) {
  std::string s = to_string(c.id);
  for (const auto& [k, v] : c.params) s += " " + k + "=" + v;
  return s + " -> " + to_string(c.status) + (c.error.empty() ? "" : " (" + c.error + ")");
}

void require_all_pass(Outcome& o, const std::vector<VerificationCase>& cases) {
  o.require(!cases.empty(), "no cases generated");
  for (const auto& c : cases) o.require(c.status == CaseStatus::Pass, describe(c));
}

Outcome thm1_exact() {
  Outcome o;
  Engine e;
  for (const auto& lambda : kLambdaGrid) {
    for (const Rational& x : {Rational(0), Rational(1), Rational(2), Rational(-1, 2)}) {
      require_all_pass(o, verify_thm1_exact(e, lambda, x, 12));
    }
  }
  return o;
}

Outcome witt_padic() {
  Outcome o;
  BooleCache cache;
  std::size_t checked = 0;
  for (std::uint64_t p : {3, 5, 7}) {
    for (unsigned N = 1; N <= 4; ++N) {
      const PadicContext ctx(p, N);
      for (auto kind : {BooleKind::First, BooleKind::Second}) {
        for (unsigned k = 1; k <= 2; ++k) {
          for (const Rational& lambda : {Rational(1), Rational(2), Rational(4)}) {
            for (const Rational& x : {Rational(0), Rational(1), Rational(2)}) {
              for (std::size_t n = 0; n <= 5; ++n) {
                WittQuery q{kind, k, n, lambda, x, N, 0, kDefaultTermBudget};
                const auto r = witt_check(q, ctx, cache);
                ++checked;
                o.require(r.agree && r.modulus == ctx.p_power(N),
                          "p=" + std::to_string(p) + " N=" + std::to_string(N) + " kind=" +
                              to_string(kind) + " k=" + std::to_string(k) + " lambda=" +
                              lambda.str() + " x=" + x.str() + " n=" + std::to_string(n));
              }
            }
          }
        }
      }
    }
  }
  o.require(checked == 3 * 4 * 2 * 2 * 3 * 3 * 6, "grid size");
  return o;
}

Outcome stirling_transform_theorems() {
  Outcome o;
  Engine e;
  for (const auto& lambda : kLambdaGrid) {
    require_all_pass(o, verify_thm2(e, lambda, 12));
    require_all_pass(o, verify_remark(e, lambda, 12));
    require_all_pass(o, verify_thm3(e, lambda, 4, 12));
    require_all_pass(o, verify_thm4(e, lambda, 12));
    require_all_pass(o, verify_thm5(e, lambda, 4, 12));
  }
  return o;
}

Outcome binomial_reciprocity() {
  Outcome o;
  Engine e;
  bool printed_witness_small_n = false;
  for (const auto& lambda : kLambdaGrid) {
    for (const auto& c : verify_thm6(e, lambda, 12)) {
      if (c.id != IdentityId::Thm6bPrinted) {
        o.require(c.status == CaseStatus::Pass, describe(c));
        continue;
      }
      if (c.status != CaseStatus::Fail) continue;
      o.require(c.witness.has_value() && c.witness->at_x.has_value() &&
                    *c.witness->lhs_value != *c.witness->rhs_value,
                "printed-form failure without a concrete witness: " + describe(c));
      const auto again = reevaluate(c);
      o.require(again.status == CaseStatus::Fail && again.witness == c.witness,
                "witness not reproducible: " + describe(c));
      const auto n = std::stoul(c.params.back().second);
      if (n <= 3) printed_witness_small_n = true;
    }
  }
  o.require(printed_witness_small_n, "printed form did not fail at any n <= 3");
  return o;
}

Outcome changhee() {
  Outcome o;
  for (std::size_t n = 0; n <= 20; ++n) {
    const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
    o.require(changhee_poly_direct(n).eval(Rational()) == sign * Rational(factorial(n)) / Rational(2).pow(n),
              "Ch_n(0) at n=" + std::to_string(n));
  }
  const auto bl = boole_polys_gf({Rational(1), BooleKind::First, 1}, 16);
  for (std::size_t n = 0; n <= 16; ++n) {
    o.require(bl.polys[n] * Rational(2) == changhee_poly_direct(n), "2 Bl_n(x|1) at n=" + std::to_string(n));
  }
  return o;
}

Outcome functional_equation() {
  Outcome o;
  Engine e;
  constexpr std::uint64_t kSeed = 20141014;
  const auto exact = verify_eq2_exact(e, kSeed, 50, 10);
  o.require(exact.size() == 50, "expected 50 exact cases");
  require_all_pass(o, exact);
  for (std::uint64_t p : {3, 5, 7}) {
    for (unsigned N = 1; N <= 4; ++N) require_all_pass(o, verify_eq2_padic(e, kSeed, 50, 10, p, N));
  }
  return o;
}

Outcome cross_route() {
  Outcome o;
  for (const auto& lambda : kLambdaGrid) {
    for (unsigned k = 1; k <= 4; ++k) {
      for (auto kind : {BooleKind::First, BooleKind::Second}) {
        const BooleParams p{lambda, kind, k};
        o.require(boole_polys_gf(p, 12).polys == boole_polys_euler(p, 12).polys,
                  "gf vs Euler route: lambda=" + lambda.str() + " k=" + std::to_string(k) +
                      " kind=" + to_string(kind));
      }
    }
  }
  for (long n = 0; n <= 12; ++n) {
    for (long l = 0; l <= n; ++l) {
      o.require(stirling2(n, l) == stirling2_via_series(n, l), "S2 routes at " + std::to_string(n));
    }
    for (long m = 0; m <= 12; ++m) {
      Integer acc(0);
      for (long l = m; l <= n; ++l) acc += stirling1(n, l) * stirling2(l, m);
      o.require(acc == (n == m ? 1 : 0), "orthogonality at n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
  }
  return o;
}

Outcome reflection() {
  Outcome o;
  for (const auto& lambda : kLambdaGrid) {
    const auto first = boole_polys_gf({lambda, BooleKind::First, 1}, 12);
    const auto second = boole_polys_gf({lambda, BooleKind::Second, 1}, 12);
    for (std::size_t n = 0; n <= 12; ++n) {
      o.require(second.polys[n] == poly_shift(first.polys[n], lambda),
                "lambda=" + lambda.str() + " n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome cli_verify() {
  Outcome o;
  const std::string cmd = std::string("\"") + UMBRAL_CLI_PATH + "\" verify > /dev/null";
  const int status = std::system(cmd.c_str());
  o.require(status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0,
            "verify exited with status " + std::to_string(WEXITSTATUS(status)));
  return o;
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;  // 0 means no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Witt integral, exact moment route", 5, thm1_exact},
      {2, "Witt integrals, p-adic truncated sums (slack 0)", 30, witt_padic},
      {3, "Stirling-transform and Euler-expansion identities", 10, stirling_transform_theorems},
      {4, "binomial reciprocity, printed vs corrected mirror", 0, binomial_reciprocity},
      {5, "Changhee closed form and 2 Bl_n(x|1) = Ch_n(x)", 0, changhee},
      {6, "functional equation, exact and mod p^N", 0, functional_equation},
      {7, "cross-route agreement and Stirling orthogonality", 0, cross_route},
      {8, "second kind equals first kind shifted by lambda", 0, reflection},
      {9, "full verify CLI run on defaults, exit 0", 60, cli_verify},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.require(false, "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.limit_seconds) + " s");
    }
    std::printf("[%s] AC%d %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.number, c.name.c_str(), secs,
                o.ok ? "" : ": ", o.detail.c_str());
    if (!o.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
