#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "umbral/serialize.hpp"
#include "umbral/verify.hpp"

using namespace umbral;

namespace {

Rational R(long a, long b = 1) { return Rational(a, b); }

bool all_pass(const std::vector<VerificationCase>& cases) {
  for (const auto& c : cases) {
    if (c.status != CaseStatus::Pass) {
      MESSAGE(to_json(c).dump());
      return false;
    }
  }
  return !cases.empty();
}

}  // namespace

TEST_CASE("identity names round trip") {
  for (IdentityId id : kAllIdentities) CHECK(parse_identity(to_string(id)) == id);
  CHECK_THROWS(parse_identity("thm7"));
  CHECK(is_expected_failure(IdentityId::Thm6bPrinted));
  CHECK(!is_expected_failure(IdentityId::Thm6bCorrected));
}

TEST_CASE("verify_thm1") {
  Engine e;
  auto n0 = verify_thm1_exact(e, R(3), R(1, 2), 0);
  CHECK(all_pass(n0));
  // I(y) = -1/2 = 2 Bl_1(0|1)
  CHECK(integrate_poly(witt_integrand(BooleKind::First, 1, R(1), R(0))) == R(-1, 2));
  CHECK(all_pass(verify_thm1_exact(e, R(1), R(0), 1)));
  CHECK(all_pass(verify_thm1_exact(e, R(2), R(1), 8)));
  CHECK(all_pass(verify_thm1(e, R(2), R(1), 5, 5, 2)));
}

TEST_CASE("verify_thm2") {
  Engine e;
  CHECK(all_pass(verify_thm2(e, R(1), 2)));
  CHECK(all_pass(verify_thm2(e, R(1, 2), 12)));
  const auto bad = verify_thm2(e, R(0), 1);
  CHECK(bad.size() == 2);
  for (const auto& c : bad) {
    CHECK(c.status == CaseStatus::Error);
    CHECK(!c.error.empty());
  }
}

TEST_CASE("verify_remark") {
  Engine e;
  for (const Rational& lambda : {R(1), R(2), R(3)}) CHECK(all_pass(verify_remark(e, lambda, 12)));
}

TEST_CASE("verify_thm3") {
  Engine e;
  for (const Rational& lambda : {R(1), R(2), R(1, 2)}) CHECK(all_pass(verify_thm3(e, lambda, 4, 10)));
}

TEST_CASE("verify_thm4") {
  Engine e;
  for (const Rational& lambda : {R(1), R(2), R(3), R(1, 2)}) CHECK(all_pass(verify_thm4(e, lambda, 12)));
}

TEST_CASE("verify_thm5") {
  Engine e;
  CHECK(all_pass(verify_thm5(e, R(2), 4, 10)));
  CHECK(all_pass(verify_thm5(e, R(-1, 3), 4, 10)));
}

TEST_CASE("verify_thm6: printed mirror fails, corrected holds") {
  Engine e;
  for (const Rational& lambda : {R(0), R(1), R(2), R(-1, 3)}) {
    const auto cases = verify_thm6(e, lambda, 6);
    for (const auto& c : cases) {
      if (c.id == IdentityId::Thm6bPrinted) continue;
      CHECK(c.status == CaseStatus::Pass);
    }
  }
  const auto cases = verify_thm6(e, R(1), 3);
  std::size_t printed_fail = 0;
  for (const auto& c : cases) {
    if (c.id != IdentityId::Thm6bPrinted) continue;
    const std::size_t n = std::stoul(c.params.back().second);
    if (n == 1) {
      CHECK(c.status == CaseStatus::Pass);
      continue;
    }
    REQUIRE(c.status == CaseStatus::Fail);
    ++printed_fail;
    const Witness& w = *c.witness;
    REQUIRE(w.at_x.has_value());
    CHECK(*w.lhs_value != *w.rhs_value);
    CHECK(w.lhs.eval(*w.at_x) == *w.lhs_value);
    if (n == 2) {
      // Independent scalar route at lambda = 1, x = 0:
      // lhs = Bl^_2(0|1)/2!, rhs = (Bl_1(0|1) + Bl_2(0|1))/2!
      const Rational lhs = oracle::boole_value(true, 1, R(1), R(0), 2) / R(2);
      const Rational rhs =
          (oracle::boole_value(false, 1, R(1), R(0), 1) + oracle::boole_value(false, 1, R(1), R(0), 2)) / R(2);
      CHECK(lhs != rhs);
      CHECK(w.lhs.eval(R(0)) == lhs);
      CHECK(w.rhs.eval(R(0)) == rhs);
    }
  }
  CHECK(printed_fail == 2);
}

TEST_CASE("failing cases reproduce from scratch") {
  Engine e;
  for (const auto& c : verify_thm6(e, R(2), 4)) {
    const auto again = reevaluate(c);
    CHECK(again.status == c.status);
    CHECK(again.witness == c.witness);
  }
}

TEST_CASE("eq2 cases") {
  Engine e;
  CHECK(all_pass(verify_eq2_exact(e, 99, 10, 10)));
  CHECK(all_pass(verify_eq2_padic(e, 99, 10, 10, 5, 3)));
  CHECK(eq2_test_poly(1, 2, 10) == eq2_test_poly(1, 2, 10));
  CHECK(eq2_test_poly(1, 2, 10) != eq2_test_poly(1, 3, 10));
}

TEST_CASE("witt cases are filed by kind and order") {
  Engine e;
  CHECK(verify_witt(e, BooleKind::First, 1, R(1), R(0), 0, 3, 1).front().id == IdentityId::Thm1);
  CHECK(verify_witt(e, BooleKind::First, 2, R(1), R(0), 0, 3, 1).front().id == IdentityId::Thm3);
  CHECK(verify_witt(e, BooleKind::Second, 1, R(1), R(0), 0, 3, 1).front().id == IdentityId::Thm4b);
  CHECK(verify_witt(e, BooleKind::Second, 2, R(1), R(0), 0, 3, 1).front().id == IdentityId::Thm5b);
  const auto bad = verify_witt(e, BooleKind::First, 1, R(1, 3), R(0), 1, 3, 1);
  CHECK(bad.front().status == CaseStatus::Pass);  // n = 0 integrand does not involve lambda
  CHECK(bad.back().status == CaseStatus::Error);
}

TEST_CASE("empty grid gives an empty report") {
  const auto report = verify_all(VerifyConfig::empty());
  CHECK(report.cases.empty());
  CHECK(report.summary.size() == kAllIdentities.size());
  for (const auto& [id, s] : report.summary) CHECK(s == StatusCounts{});
  CHECK(report.exit_code() == 0);
}

TEST_CASE("lambda = 0 on Euler-route identities is recorded as an error") {
  VerifyConfig cfg = VerifyConfig::empty();
  cfg.ids = {IdentityId::Thm2, IdentityId::Thm4a, IdentityId::Thm6a};
  cfg.lambdas = {R(0)};
  cfg.n_max = 3;
  cfg.k_max = 1;
  const auto report = verify_all(cfg);
  CHECK(report.summary.at(IdentityId::Thm2).error == 4);
  CHECK(report.summary.at(IdentityId::Thm4a).error == 4);
  CHECK(report.summary.at(IdentityId::Thm6a).pass == 3);
  CHECK(report.summary.at(IdentityId::Thm4b).pass + report.summary.at(IdentityId::Thm4b).error == 0);
  CHECK(report.exit_code() == 1);
}

TEST_CASE("id filter, canonical ordering and determinism") {
  VerifyConfig cfg;
  cfg.ids = {IdentityId::Thm6bPrinted, IdentityId::Thm4b, IdentityId::Thm2};
  cfg.n_max = 4;
  cfg.padic_n_max = 2;
  cfg.N_max = 2;
  const auto a = verify_all(cfg);
  const auto b = verify_all(cfg);
  CHECK(to_json(a).dump() == to_json(b).dump());
  int last = -1;
  for (const auto& c : a.cases) {
    CHECK(cfg.ids.count(c.id) == 1);
    CHECK(static_cast<int>(c.id) >= last);
    last = static_cast<int>(c.id);
  }
  CHECK(a.summary.at(IdentityId::Thm6bPrinted).fail > 0);
  CHECK(a.exit_code() == 0);
  CHECK(summarize(a.cases) == a.summary);
}

TEST_CASE("render_table lists counts and the first counterexample") {
  VerifyConfig cfg = VerifyConfig::empty();
  cfg.ids = {IdentityId::Thm6bPrinted};
  cfg.lambdas = {R(1)};
  cfg.n_max = 3;
  const std::string table = render_table(verify_all(cfg));
  CHECK(table.find("thm6b_printed") != std::string::npos);
  CHECK(table.find("first fail for thm6b_printed: lambda=1 n=2") != std::string::npos);
  CHECK(table.find("result: ok") != std::string::npos);
}

TEST_CASE("exact and p-adic routes never disagree") {
  Engine e;
  for (const Rational& lambda : {R(1), R(2), R(4), R(-2, 5)}) {
    for (const Rational& x : {R(0), R(2), R(1, 2)}) {
      const auto exact = verify_thm1_exact(e, lambda, x, 5);
      for (std::uint64_t p : {3, 7}) {
        for (unsigned N = 1; N <= 3; ++N) {
          const auto padic = verify_witt(e, BooleKind::First, 1, lambda, x, 5, p, N);
          for (std::size_t n = 0; n <= 5; ++n) {
            if (exact[n].status == CaseStatus::Pass) CHECK(padic[n].status == CaseStatus::Pass);
          }
        }
      }
    }
  }
}
