// Command-line front end: compute sequences, dump Stirling tables, run the
// identity verification suite and single Witt-type congruence checks.
//
// Exit status: 0 success (including expected-fail categories), 1 identity or
// computation failure, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "umbral/boole.hpp"
#include "umbral/errors.hpp"
#include "umbral/euler.hpp"
#include "umbral/padic.hpp"
#include "umbral/serialize.hpp"
#include "umbral/stirling.hpp"
#include "umbral/verify.hpp"

namespace {

using namespace umbral;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::vector<Rational> parse_rational_list(const std::string& flag, const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  for (const auto& t : texts) out.push_back(parse_rational_flag(flag, t));
  return out;
}

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw UsageError("p must be an odd prime");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + path + "'");
  out << text;
}

struct ComputeArgs {
  std::string sequence;
  long n = -1;
  unsigned k = 1;
  std::string lambda;
  std::string x;
  std::string route = "gf";
  std::string format = "plain";
  std::string output;
};

std::string run_compute(const ComputeArgs& a) {
  if (a.n < 0) throw UsageError("--n must be a nonnegative integer");
  if (a.k < 1) throw UsageError("--k must be at least 1");
  const auto n = static_cast<std::size_t>(a.n);
  const bool boole_kind = a.sequence == "boole" || a.sequence == "boole2";
  if (boole_kind && a.lambda.empty()) throw UsageError("--lambda is required for " + a.sequence);
  const std::optional<Rational> lambda =
      a.lambda.empty() ? std::nullopt : std::optional(parse_rational_flag("--lambda", a.lambda));
  const std::optional<Rational> x =
      a.x.empty() ? std::nullopt : std::optional(parse_rational_flag("--x", a.x));

  std::vector<Poly> polys;
  Json header = Json::object();
  if (a.sequence == "euler") {
    polys = euler_polys(a.k, n).polys;
  } else if (a.sequence == "changhee") {
    for (std::size_t i = 0; i <= n; ++i) polys.push_back(changhee_poly(i));
  } else {
    const BooleParams params{*lambda, a.sequence == "boole" ? BooleKind::First : BooleKind::Second, a.k};
    const BooleSequence seq =
        a.route == "euler" ? boole_polys_euler(params, n) : boole_polys_gf(params, n);
    polys = seq.polys;
    header = to_json(seq);
    header.erase("polys");
  }

  std::ostringstream os;
  if (a.format == "plain") {
    os << (x ? polys[n].eval(*x).str() : polys[n].str()) << '\n';
  } else if (a.format == "csv") {
    for (std::size_t i = 0; i <= n; ++i) {
      if (x) {
        os << i << ',' << polys[i].eval(*x) << '\n';
        continue;
      }
      auto cs = polys[i].coeffs();
      for (std::size_t d = 0; d < cs.size(); ++d) os << i << ',' << d << ',' << cs[d] << '\n';
    }
  } else {
    Json body = Json::array();
    for (const auto& p : polys) body.push_back(x ? to_json(p.eval(*x)) : to_json(p));
    Json out;
    if (boole_kind) {
      out = header;
      if (x) out["x"] = x->str();
      out[x ? "values" : "polys"] = std::move(body);
    } else {
      out = std::move(body);
    }
    os << out.dump() << '\n';
  }
  return os.str();
}

struct TableArgs {
  std::string kind;
  long max_n = -1;
  long cap = 64;
  std::string format = "csv";
  std::string output;
};

std::string run_table(const TableArgs& a) {
  if (a.max_n < 0) throw UsageError("--max-n must be a nonnegative integer");
  if (a.max_n > a.cap) {
    throw UsageError("--max-n " + std::to_string(a.max_n) + " exceeds the cap of " + std::to_string(a.cap));
  }
  const StirlingKind kind = a.kind == "s1"    ? StirlingKind::FirstSigned
                            : a.kind == "s1u" ? StirlingKind::FirstUnsigned
                                              : StirlingKind::Second;
  const auto max_n = static_cast<std::size_t>(a.max_n);
  if (a.format == "csv") return stirling_csv(kind, max_n);

  const StirlingTable table(kind, max_n);
  std::ostringstream os;
  if (a.format == "json") {
    Json rows = Json::array();
    for (std::size_t n = 0; n <= max_n; ++n) {
      for (std::size_t l = 0; l <= n; ++l) rows.push_back(Json{{"n", n}, {"l", l}, {"value", table(n, l).get_str()}});
    }
    os << rows.dump() << '\n';
  } else {
    for (std::size_t n = 0; n <= max_n; ++n) {
      for (std::size_t l = 0; l <= n; ++l) os << (l ? " " : "") << table(n, l).get_str();
      os << '\n';
    }
  }
  return os.str();
}

struct VerifyArgs {
  std::vector<std::string> ids;
  long n_max = 12;
  unsigned k_max = 4;
  std::vector<std::string> lambdas;
  std::vector<std::string> xs;
  std::vector<std::uint64_t> primes;
  unsigned N_max = 4;
  long padic_n_max = 5;
  unsigned padic_k_max = 2;
  std::vector<std::string> padic_lambdas;
  std::vector<std::string> padic_xs;
  std::size_t trials = 50;
  std::string format = "plain";
  std::string output;
};

int run_verify(const VerifyArgs& a) {
  VerifyConfig cfg;
  for (const auto& id : a.ids) {
    try {
      cfg.ids.insert(parse_identity(id));
    } catch (const Error& e) {
      throw UsageError(std::string("--id: ") + e.what());
    }
  }
  if (a.n_max < -1 || a.padic_n_max < -1) throw UsageError("grid bounds must be >= -1 (-1 disables)");
  cfg.n_max = a.n_max < 0 ? std::nullopt : std::optional<std::size_t>(a.n_max);
  cfg.padic_n_max = a.padic_n_max < 0 ? std::nullopt : std::optional<std::size_t>(a.padic_n_max);
  cfg.k_max = a.k_max;
  cfg.N_max = a.N_max;
  cfg.padic_k_max = a.padic_k_max;
  cfg.eq2_trials = a.trials;
  if (!a.lambdas.empty()) cfg.lambdas = parse_rational_list("--lambda", a.lambdas);
  if (!a.xs.empty()) cfg.thm1_xs = parse_rational_list("--x", a.xs);
  if (!a.padic_lambdas.empty()) cfg.padic_lambdas = parse_rational_list("--padic-lambda", a.padic_lambdas);
  if (!a.padic_xs.empty()) cfg.padic_xs = parse_rational_list("--padic-x", a.padic_xs);
  if (!a.primes.empty()) {
    for (auto p : a.primes) require_odd_prime(p);
    cfg.primes = a.primes;
  }

  const VerificationReport report = verify_all(cfg);
  const std::string json = to_json(report).dump(2) + "\n";
  if (!a.output.empty()) emit(json, a.output);
  std::cout << (a.format == "json" ? json : render_table(report));
  return report.exit_code() == 0 ? 0 : kExitFailure;
}

struct WittArgs {
  std::uint64_t p = 0;
  long n = -1;
  std::string lambda;
  std::string x;
  unsigned N = 0;
  unsigned M = 0;
  std::string kind = "first";
  unsigned k = 1;
  unsigned slack = 0;
  std::string format = "plain";
  std::string output;
};

int run_witt(const WittArgs& a) {
  require_odd_prime(a.p);
  if (a.n < 0) throw UsageError("--n must be a nonnegative integer");
  if (a.N < 1) throw UsageError("--N must be at least 1");
  if (a.k < 1) throw UsageError("--k must be at least 1");
  const unsigned M = a.M == 0 ? a.N : a.M;
  if (M < a.N) throw UsageError("--M must be at least --N");

  WittQuery q;
  q.kind = a.kind == "first" ? BooleKind::First : BooleKind::Second;
  q.order_k = a.k;
  q.n = static_cast<std::size_t>(a.n);
  q.lambda = parse_rational_flag("--lambda", a.lambda);
  q.x = parse_rational_flag("--x", a.x);
  q.N = a.N;
  q.slack = a.slack;
  try {
    q.budget = term_budget_from_env();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }

  std::optional<PadicContext> ctx;
  try {
    ctx.emplace(a.p, M);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  const CongruenceReport r = witt_check(q, *ctx);
  std::ostringstream os;
  if (a.format == "json") {
    os << to_json(r).dump() << '\n';
  } else {
    os << (r.agree ? "agree" : "disagree") << ": " << r.lhs_residue << (r.agree ? " == " : " != ")
       << r.rhs_residue << " (mod " << r.modulus << ")\n";
  }
  emit(os.str(), a.output);
  return r.agree ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Euler, Boole and Changhee polynomial sequences and identity checks"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"plain", "json", "csv"};

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute a polynomial sequence up to index n");
  c->add_option("sequence", compute.sequence, "euler | boole | boole2 | changhee")
      ->required()
      ->check(CLI::IsMember({"euler", "boole", "boole2", "changhee"}));
  c->add_option("--n", compute.n, "Highest index")->required();
  c->add_option("--k", compute.k, "Order k (default 1)");
  c->add_option("--lambda", compute.lambda, "Rational parameter a/b (boole kinds)");
  c->add_option("--x", compute.x, "Evaluate at this rational point");
  c->add_option("--route", compute.route, "Boole route: gf | euler")->check(CLI::IsMember({"gf", "euler"}));
  c->add_option("--format", compute.format)->check(CLI::IsMember(formats));
  c->add_option("--output", compute.output, "Write to file instead of stdout");

  TableArgs table;
  auto* t = app.add_subcommand("table", "Dump a Stirling number triangle as n,l,value rows");
  t->add_option("--kind", table.kind, "s1 | s1u | s2")->required()->check(CLI::IsMember({"s1", "s1u", "s2"}));
  t->add_option("--max-n", table.max_n)->required();
  t->add_option("--cap", table.cap, "Largest permitted max-n (default 64)");
  t->add_option("--format", table.format)->check(CLI::IsMember(formats));
  t->add_option("--output", table.output);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the identity verification suite");
  v->add_option("--id", verify.ids, "Restrict to these identities (repeatable)");
  v->add_option("--n-max", verify.n_max, "Exact-grid bound on n and m (-1 disables)");
  v->add_option("--k-max", verify.k_max, "Exact-grid bound on the order k");
  v->add_option("--lambda", verify.lambdas, "Exact-grid lambda values");
  v->add_option("--x", verify.xs, "Evaluation points for the exact integral check");
  v->add_option("--p", verify.primes, "Primes for the p-adic cases");
  v->add_option("--N-max", verify.N_max, "Largest truncation level N");
  v->add_option("--padic-n-max", verify.padic_n_max, "p-adic bound on n (-1 disables)");
  v->add_option("--padic-k-max", verify.padic_k_max, "p-adic bound on the order k");
  v->add_option("--padic-lambda", verify.padic_lambdas, "p-adic lambda values");
  v->add_option("--padic-x", verify.padic_xs, "p-adic x values");
  v->add_option("--trials", verify.trials, "Random polynomials for the functional equation");
  v->add_option("--format", verify.format)->check(CLI::IsMember({"plain", "json"}));
  v->add_option("--output", verify.output, "Also write the JSON report to this file");

  WittArgs witt;
  auto* w = app.add_subcommand("witt", "Check one Witt-type congruence");
  w->add_option("--p", witt.p, "Odd prime")->required();
  w->add_option("--n", witt.n)->required();
  w->add_option("--lambda", witt.lambda)->required();
  w->add_option("--x", witt.x)->required();
  w->add_option("--N", witt.N, "Truncation level")->required();
  w->add_option("--M", witt.M, "Working precision (default N)");
  w->add_option("--kind", witt.kind)->check(CLI::IsMember({"first", "second"}));
  w->add_option("--k", witt.k, "Order k (default 1)");
  w->add_option("--slack", witt.slack, "Compare modulo p^(N - slack)");
  w->add_option("--format", witt.format)->check(CLI::IsMember({"plain", "json"}));
  w->add_option("--output", witt.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c) {
      emit(run_compute(compute), compute.output);
      return 0;
    }
    if (*t) {
      emit(run_table(table), table.output);
      return 0;
    }
    if (*v) return run_verify(verify);
    if (*w) return run_witt(witt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
