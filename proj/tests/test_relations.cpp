#include "dmf/errors.hpp"
#include "dmf/relations.hpp"

#include <doctest.h>

using namespace dmf;

TEST_CASE("dual coefficients on the basis") {
  for (auto [p, r] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
    const FieldCtx& f = make_field(p, r);
    const int q = f.q();
    for (int l = 0; l <= std::min(q - 2, 3); ++l) {
      const int k = 3 * (q - 1) + 2 * l;
      const auto bs = basis(f, k, l);
      for (int j = 0; j < int(bs.size()); ++j) {
        const USeries s = expand(FormExpr::monomial(bs[std::size_t(j)]), f, 5 * (q - 1) + l);
        for (int i = 0; i < j; ++i) CHECK(dual_coeff(s, i, l).is_zero());
        CHECK(dual_coeff(s, j, l) == RatFunc::one(f));
      }
      if (l > 0) {
        const USeries et = expand(FormExpr::parse(f, "E_T^" + std::to_string(l)), f, q + l);
        CHECK(dual_coeff(et, 0, l) == RatFunc::one(f));
      }
    }
  }
  const FieldCtx& f = make_field(3, 1);
  CHECK_THROWS_AS(dual_coeff(USeries::one(f, 3), 2, 0), Error);
}

TEST_CASE("the worked b-vector") {
  const FieldCtx& f = make_field(3, 1);
  const RelationVector v = compute_b_vector(f, 2, 1, 0, FormExpr::parse(f, "E_T"));
  REQUIRE(v.c.size() == 2);
  CHECK(v.c[0] == -RatFunc(Poly::T(f)));
  CHECK(v.c[1] == -RatFunc::one(f));
  CHECK(v.basis_g == "E_T");
  // annihilates E_T: -T a(1) - a(3) = -T + T
  const USeries et = expand(FormExpr::parse(f, "E_T"), f, 4);
  CHECK((v.c[0] * dual_coeff(et, 0, 1) + v.c[1] * dual_coeff(et, 1, 1)).is_zero());
  // the underlying expansion is -Delta_W / Delta_T = -u^-2 - T + ...
  const USeries q = expand(FormExpr::parse(f, "-Delta_W*Delta_T^-1"), f, 2);
  CHECK(q.coeff(-2) == -RatFunc::one(f));
  CHECK(q.coeff(0) == -RatFunc(Poly::T(f)));
}

TEST_CASE("b-vector shape and errors") {
  const FieldCtx& f = make_field(5, 1);
  for (int N = 0; N <= 2; ++N) {
    const int kg = N * 4 + 2;
    for (const auto& m : basis(f, kg, 1)) {
      const RelationVector v = compute_b_vector(f, 10, 1, N, FormExpr::monomial(m));
      CHECK(int(v.c.size()) == r_kl(f, 10, 1).value() + N + 2);
      for (const RatFunc& c : v.c) CHECK(c.is_integral());
    }
  }
  try {
    compute_b_vector(f, 10, 1, 1, FormExpr::parse(f, "E_T"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadWeight);
  }
  CHECK_THROWS_AS(r_klN(f, 10, 1, -1), Error);
}

TEST_CASE("phi and the kernel oracle") {
  const FieldCtx& f = make_field(3, 1);
  const auto k = kernel_oracle(f, 2, 1, 0);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vector{RatFunc::one(f), RatFunc(Poly::one(f), Poly::T(f))});
  const BMatrix b = phi(f, 2, 1, 0);
  CHECK(b.rows.size() == 1);
  CHECK(b.matrix(f).rank() == 1);
  for (auto [p, r] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
    const FieldCtx& g = make_field(p, r);
    const int q = g.q();
    for (int l : {0, 1, q - 2})
      for (int rr = 0; rr <= 2; ++rr)
        for (int N = 0; N <= 2; ++N) {
          const int kk = rr * (q - 1) + 2 * l;
          if (kk < 1) continue;
          const RelationReport rep = relation_report(g, kk, l, N);
          CHECK(rep.ok());
          CHECK(rep.phi_rank == N + 1);
          CHECK(rep.kernel_dim == N + 1);
          CHECK(dual_matrix(g, kk, l, N).rows() == rr + N + 2);
        }
  }
}

TEST_CASE("isomorphism with the type-0 relation space") {
  const FieldCtx& f = make_field(3, 1);
  for (int l = 0; l <= 1; ++l)
    for (int k = 2 * l; k <= 12; k += 2) {
      if (k < 1 && l == 0) continue;
      for (int N = 0; N <= 3; ++N) {
        const IsoReport rep = corollary_iso_check(f, k, l, N);
        CHECK(rep.equal());
        CHECK(rep.dim_kl == N + 1);
      }
    }
  const IsoReport z = corollary_iso_check(make_field(5, 1), 6, 3, 0);
  CHECK(z.dim_kl == 1);
  CHECK(z.dim_k2l0 == 1);
  CHECK_THROWS_AS(corollary_iso_check(f, 3, 1, 0), Error);
}
