#include "dmf/json_io.hpp"

#include "dmf/errors.hpp"

namespace dmf {

Json series_to_json(const USeries& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({{"exp", e}, {"coeff", c.to_string()}});
  const int val = s.valuation().value_or(s.prec());
  return {{"val", std::min(val, s.prec() - 1)}, {"prec", s.prec()}, {"terms", terms}};
}

USeries series_from_json(const FieldCtx& field, const Json& j) {
  try {
    const int val = j.at("val").get<int>();
    const int prec = j.at("prec").get<int>();
    if (prec <= val) throw Error(ErrorCode::ParseError, "series needs prec > val");
    std::vector<RatFunc> c(std::size_t(prec - val), RatFunc::zero(field));
    for (const auto& t : j.at("terms")) {
      const int e = t.at("exp").get<int>();
      if (e < val || e >= prec) throw Error(ErrorCode::ParseError, "term exponent outside [val, prec)");
      c[std::size_t(e - val)] = parse_ratfunc(field, t.at("coeff").get<std::string>());
    }
    return USeries(field, val, prec, std::move(c));
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
}

Json witness_to_json(const CongruenceWitness& w) {
  return {{"q", w.q},
          {"k", w.spec.k},
          {"l", w.spec.l},
          {"d", w.d},
          {"a", w.a},
          {"b", w.b},
          {"form", w.form},
          {"exp", w.target_exp},
          {"coeff", w.coeff.to_string()},
          {"modulus", w.modulus.to_string()},
          {"residue", w.residue.to_string()},
          {"verdict", std::string(verdict_name(w.verdict))}};
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const RatFunc& c : v) out.push_back(c.to_string());
  return out;
}

Json relation_to_json(const FieldCtx& field, const RelationVector& v) {
  return {{"q", field.q()}, {"k", v.spec.k}, {"l", v.spec.l}, {"N", v.N}, {"basis_g", v.basis_g},
          {"b", vector_to_json(v.c)}};
}

Json report_to_json(const FieldCtx& field, const RelationReport& rep) {
  Json rows = Json::array();
  for (const auto& v : rep.phi.rows) rows.push_back(relation_to_json(field, v));
  Json kernel = Json::array();
  for (const auto& v : rep.kernel) kernel.push_back(vector_to_json(v));
  return {{"q", field.q()},
          {"k", rep.phi.spec.k},
          {"l", rep.phi.spec.l},
          {"N", rep.phi.N},
          {"phi", rows},
          {"kernel", kernel},
          {"phi_rank", rep.phi_rank},
          {"kernel_dim", rep.kernel_dim},
          {"annihilates", rep.annihilates},
          {"integral", rep.integral},
          {"spans_equal", rep.spans_equal}};
}

}  // namespace dmf
