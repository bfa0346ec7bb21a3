#include "dmf/errors.hpp"
#include "dmf/form_expr.hpp"

#include <doctest.h>

using namespace dmf;

TEST_CASE("parse and render") {
  const FieldCtx& f = make_field(3, 1);
  CHECK(FormExpr::parse(f, "E_T").to_string() == "E_T");
  CHECK(FormExpr::parse(f, "Delta_W*Delta_T - E_T^2").to_string() == "Delta_W*Delta_T - E_T^2");
  CHECK(FormExpr::parse(f, "(T+1)*h").to_string() == "(T + 1)*h");
  CHECK(FormExpr::parse(f, "2*T*3").is_scalar());
  CHECK(FormExpr::parse(f, "2*T*3").to_string() == "0");
  CHECK(FormExpr::parse(f, "E_T^(-3)").to_string() == "E_T^-3");
  CHECK(FormExpr::parse(f, "E_T^-3").to_string() == "E_T^-3");
  CHECK(FormExpr::parse(f, "-g1 + (E - E)").to_string() == "-g1 + (E - E)");
  // rendering parses back to the same text
  for (const char* s : {"h*Delta_T + E_T^3", "-(E_T + h)^2*T", "T^-1*Delta_W*E_T", "g1^2 - 2*Delta_W"}) {
    const std::string once = FormExpr::parse(f, s).to_string();
    CHECK(FormExpr::parse(f, once).to_string() == once);
  }
}

TEST_CASE("parse errors") {
  const FieldCtx& f = make_field(3, 1);
  for (const char* s : {"", "E_T +* 3", "E_X", "(E_T", "E_T^", "E_T^x", "w", "E_T)"}) {
    try {
      FormExpr::parse(f, s);
      CHECK_MESSAGE(false, s);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
  const FieldCtx& f9 = make_field(3, 2);
  CHECK(FormExpr::parse(f9, "w*E_T").to_string() == "w*E_T");
}

TEST_CASE("weight and type") {
  const FieldCtx& f = make_field(5, 1);
  CHECK(FormExpr::parse(f, "E_T").weight_type(f) == std::pair{2, 1});
  CHECK(FormExpr::parse(f, "h").weight_type(f) == std::pair{6, 1});
  CHECK(FormExpr::parse(f, "Delta_W^2*E_T^3").weight_type(f) == std::pair{14, 3});
  CHECK(FormExpr::parse(f, "E_T^4 - Delta_W*Delta_T").weight_type(f) == std::pair{8, 0});
  CHECK_FALSE(FormExpr::parse(f, "E_T + Delta_W").weight_type(f).has_value());
  CHECK_FALSE(FormExpr::parse(f, "E").weight_type(f).has_value());
  CHECK(FormExpr::parse(f, "E_T^-1").weight_type(f) == std::pair{-2, 3});
  CHECK(FormExpr::monomial({0, 0, 0}).weight_type(f) == std::pair{0, 0});
}

TEST_CASE("expansions of identities") {
  for (auto [p, r] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
    const FieldCtx& f = make_field(p, r);
    const int q = f.q();
    const USeries a = expand(FormExpr::parse(f, "Delta_W*Delta_T - E_T^" + std::to_string(q - 1)), f, 60);
    CHECK(a.is_zero());
    CHECK(a.prec() == 60);
    CHECK(expand(FormExpr::parse(f, "h + Delta_W*E_T"), f, 60).is_zero());
    const USeries one = expand(FormExpr::parse(f, "E_T^0"), f, 10);
    CHECK(one.terms() == USeries::one(f, 10).terms());
    const USeries c = expand(FormExpr::parse(f, "T + 1"), f, 5);
    CHECK(c.coeff(0) == RatFunc(Poly::T(f) + Poly::one(f)));
  }
}

TEST_CASE("expand reaches the target precision with negative powers") {
  const FieldCtx& f = make_field(3, 1);
  const FormExpr e = FormExpr::parse(f, "Delta_T^-9*E_T^2");
  const USeries s = expand(e, f, 5);
  CHECK(s.prec() == 5);
  CHECK(s.valuation() == -16);
  // same coefficients when asked for more
  CHECK(agree_to_precision(s, expand(e, f, 40)));
  // a quotient that is a form again: E_T^q / Delta_T = -h
  CHECK(agree_to_precision(expand(FormExpr::parse(f, "E_T^3*Delta_T^-1"), f, 30),
                           expand(FormExpr::parse(f, "-h"), f, 30)));
}

TEST_CASE("evaluator caches generator powers") {
  const FieldCtx& f = make_field(5, 1);
  const Evaluator ev(f, 50);
  const USeries a = ev.generator_power(Generator::E_T, 4);
  const USeries b = ev.generator_power(Generator::E_T, 4);
  CHECK(a.terms() == b.terms());
  CHECK(agree_to_precision(a, ev.evaluate(FormExpr::parse(f, "E_T*E_T*E_T*E_T"))));
  CHECK(ev.input_prec() >= 50);
}
