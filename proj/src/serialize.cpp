#include "umbral/serialize.hpp"

#include <sstream>

#include "umbral/errors.hpp"

namespace umbral {

namespace {

template <typename R, typename FromJson>
Series<R> series_from_json(const Json& j, FromJson&& from) {
  const auto order = j.at("order").get<std::size_t>();
  const auto& arr = j.at("coeffs");
  if (!arr.is_array() || arr.size() != order + 1) {
    throw ParseError("series needs exactly order + 1 coefficients");
  }
  std::vector<R> coeffs;
  for (const auto& c : arr) coeffs.push_back(from(c));
  return Series<R>(std::move(coeffs), order);
}

template <typename R>
Json series_to_json(const Series<R>& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Json params_to_json(const Params& params) {
  Json out = Json::object();
  for (const auto& [k, v] : params) out[k] = v;
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a JSON string");
  return Rational::parse(j.get<std::string>());
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Poly(std::move(coeffs));
}

Json to_json(const Series<Rational>& s) { return series_to_json(s); }
Json to_json(const Series<Poly>& s) { return series_to_json(s); }

Series<Rational> rational_series_from_json(const Json& j) {
  return series_from_json<Rational>(j, rational_from_json);
}

Series<Poly> poly_series_from_json(const Json& j) {
  return series_from_json<Poly>(j, poly_from_json);
}

Json to_json(const EulerSequence& seq) {
  Json out = Json::array();
  for (const auto& p : seq.polys) out.push_back(to_json(p));
  return out;
}

Json to_json(const BooleSequence& seq) {
  Json polys = Json::array();
  for (const auto& p : seq.polys) polys.push_back(to_json(p));
  return Json{{"kind", to_string(seq.params.kind)},
              {"lambda", seq.params.lambda.str()},
              {"order_k", seq.params.order_k},
              {"polys", std::move(polys)}};
}

Json to_json(const CongruenceReport& r) {
  return Json{{"p", r.p},
              {"M", r.M},
              {"N", r.N},
              {"n", r.n},
              {"k", r.k},
              {"kind", to_string(r.kind)},
              {"lambda", r.lambda.str()},
              {"x", r.x.str()},
              {"lhs_residue", r.lhs_residue},
              {"rhs_residue", r.rhs_residue},
              {"modulus", r.modulus},
              {"agree", r.agree}};
}

CongruenceReport congruence_report_from_json(const Json& j) {
  CongruenceReport r;
  r.p = j.at("p").get<std::uint64_t>();
  r.M = j.at("M").get<unsigned>();
  r.N = j.at("N").get<unsigned>();
  r.n = j.at("n").get<std::size_t>();
  r.k = j.at("k").get<unsigned>();
  r.kind = parse_boole_kind(j.at("kind").get<std::string>());
  r.lambda = rational_from_json(j.at("lambda"));
  r.x = rational_from_json(j.at("x"));
  r.lhs_residue = j.at("lhs_residue").get<std::uint64_t>();
  r.rhs_residue = j.at("rhs_residue").get<std::uint64_t>();
  r.modulus = j.at("modulus").get<std::uint64_t>();
  r.agree = j.at("agree").get<bool>();
  return r;
}

Json to_json(const VerificationCase& c) {
  Json out{{"id", to_string(c.id)}, {"params", params_to_json(c.params)},
           {"status", to_string(c.status)}};
  if (c.witness) {
    const Witness& w = *c.witness;
    Json wj{{"lhs", to_json(w.lhs)}, {"rhs", to_json(w.rhs)}};
    if (w.at_x) {
      wj["x"] = w.at_x->str();
      wj["lhs_value"] = w.lhs_value->str();
      wj["rhs_value"] = w.rhs_value->str();
    }
    out["witness"] = std::move(wj);
  }
  if (c.status == CaseStatus::Error) out["error"] = c.error;
  return out;
}

Json to_json(const VerificationReport& r) {
  Json summary = Json::object();
  for (const auto& [id, s] : r.summary) {
    summary[to_string(id)] = Json{{"pass", s.pass}, {"fail", s.fail}, {"error", s.error}};
  }
  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back(to_json(c));
  return Json{{"assumptions", r.assumptions},
              {"summary", std::move(summary)},
              {"exit_code", r.exit_code()},
              {"cases", std::move(cases)}};
}

VerificationReport verification_report_from_json(const Json& j) {
  VerificationReport r;
  r.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  for (const auto& cj : j.at("cases")) {
    VerificationCase c;
    c.id = parse_identity(cj.at("id").get<std::string>());
    for (const auto& [k, v] : cj.at("params").items()) c.params.emplace_back(k, v.get<std::string>());
    const auto status = cj.at("status").get<std::string>();
    if (status == "pass") {
      c.status = CaseStatus::Pass;
    } else if (status == "fail") {
      c.status = CaseStatus::Fail;
    } else if (status == "error") {
      c.status = CaseStatus::Error;
    } else {
      throw ParseError("unknown case status '" + status + "'");
    }
    if (cj.contains("witness")) {
      const auto& wj = cj.at("witness");
      Witness w{poly_from_json(wj.at("lhs")), poly_from_json(wj.at("rhs")), std::nullopt,
                std::nullopt, std::nullopt};
      if (wj.contains("x")) {
        w.at_x = rational_from_json(wj.at("x"));
        w.lhs_value = rational_from_json(wj.at("lhs_value"));
        w.rhs_value = rational_from_json(wj.at("rhs_value"));
      }
      c.witness = std::move(w);
    }
    if (cj.contains("error")) c.error = cj.at("error").get<std::string>();
    r.cases.push_back(std::move(c));
  }
  r.summary = summarize(r.cases);
  return r;
}

std::string stirling_csv(StirlingKind kind, std::size_t max_n) {
  const StirlingTable table(kind, max_n);
  std::ostringstream os;
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (std::size_t l = 0; l <= n; ++l) os << n << ',' << l << ',' << table(n, l).get_str() << '\n';
  }
  return os.str();
}

}  // namespace umbral
