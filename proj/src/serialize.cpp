#include "aqecc/serialize.hpp"

#include <stdexcept>

namespace aqecc {

Json field_to_json(const FiniteField& f) {
  return Json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

FieldPtr field_from_json(const Json& j) {
  auto field = FiniteField::make(j.at("p").get<std::uint32_t>(),
                                 j.at("m").get<std::uint32_t>());
  if (j.contains("modulus")) {
    auto mod = j.at("modulus").get<std::vector<std::uint32_t>>();
    if (mod != field->modulus())
      throw std::invalid_argument("non-canonical field modulus");
  }
  return field;
}

Json code_to_json(const LinearCode& c) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < c.k(); ++r) {
    auto row = c.row(r);
    rows.push_back(std::vector<GfElem>(row.begin(), row.end()));
  }
  return Json{{"field", field_to_json(*c.field())},
              {"n", c.n()},
              {"k", c.k()},
              {"generator", std::move(rows)}};
}

LinearCode code_from_json(const Json& j) {
  auto field = field_from_json(j.at("field"));
  auto n = j.at("n").get<std::size_t>();
  auto rows = j.at("generator").get<std::vector<std::vector<GfElem>>>();
  LinearCode c(field, n, rows);
  if (j.contains("k") && c.k() != j.at("k").get<std::size_t>())
    throw std::invalid_argument("generator rank disagrees with stored k");
  return c;
}

Json pair_to_json(const CssPair& p) {
  return Json{{"c1", code_to_json(p.c1())}, {"c2", code_to_json(p.c2())}};
}

CssPair pair_from_json(const Json& j) {
  return CssPair(code_from_json(j.at("c1")), code_from_json(j.at("c2")));
}

Json weight_report_to_json(const WeightReport& r) {
  Json j{{"kind", to_string(r.kind)},
         {"status", to_string(r.status)},
         {"method", to_string(r.method)},
         {"enumerated", r.enumerated},
         {"code", Json{{"q", r.q}, {"n", r.n}, {"k", r.k}}}};
  if (r.status == OracleStatus::exact) j["value"] = r.value;
  if (r.kind == WeightKind::relative) j["code"]["k2"] = r.k2;
  return j;
}

Json params_to_json(const AqeccParams& p) {
  Json j{{"q", p.q},
         {"n", p.n},
         {"k", p.k},
         {"K", p.K},
         {"dz", Json{{"value", p.dz.value}, {"exact", p.dz.exact}}},
         {"dx", Json{{"value", p.dx.value}, {"exact", p.dx.exact}}}};
  j["pure"] = p.pure ? Json(*p.pure) : Json(nullptr);
  return j;
}

Json claim_to_json(const TheoremClaim& c) {
  Json inputs = Json::object();
  for (const auto& [k, v] : c.inputs) inputs[k] = v;
  Json claims = Json::object();
  if (c.claimed_n) claims["n"] = *c.claimed_n;
  if (c.claimed_k) claims["k"] = *c.claimed_k;
  if (c.claimed_dz) claims["dz_min"] = *c.claimed_dz;
  if (c.claimed_dx) claims["dx_min"] = *c.claimed_dx;
  Json oracle = Json::object();
  if (c.oracle_dz) oracle["dz"] = *c.oracle_dz;
  if (c.oracle_dx) oracle["dx"] = *c.oracle_dx;
  Json j{{"theorem", c.theorem},
         {"inputs", std::move(inputs)},
         {"claims", std::move(claims)},
         {"oracle", std::move(oracle)},
         {"status", to_string(c.status)}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json additive_to_json(const AdditiveCode& c) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < c.rank(); ++r) {
    auto row = c.prime_generators().row(r);
    rows.push_back(std::vector<GfElem>(row.begin(), row.end()));
  }
  return Json{{"p", c.field()->p()},
              {"t", c.t()},
              {"n", c.n()},
              {"generators", std::move(rows)}};
}

AdditiveCode additive_from_json(const Json& j) {
  auto field = FiniteField::make(j.at("p").get<std::uint32_t>(),
                                 j.at("t").get<std::uint32_t>());
  return AdditiveCode::from_prime_rows(
      field, j.at("n").get<std::size_t>(),
      j.at("generators").get<std::vector<std::vector<GfElem>>>());
}

Json derivation_to_json(const AqeccDerivation& d) {
  Json j{{"claim", claim_to_json(d.claim)}};
  j["params"] = d.params ? params_to_json(*d.params) : Json(nullptr);
  j["pair"] = d.pair ? pair_to_json(*d.pair) : Json(nullptr);
  return j;
}

Json additive_derivation_to_json(const AdditiveDerivation& d) {
  Json j{{"claim", claim_to_json(d.claim)}};
  j["params"] = d.params ? params_to_json(*d.params) : Json(nullptr);
  j["code"] = d.code ? additive_to_json(*d.code) : Json(nullptr);
  return j;
}

}  // namespace aqecc
