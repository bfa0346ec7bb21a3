#include "dmf/errors.hpp"
#include "dmf/field.hpp"
#include "dmf/matrix.hpp"
#include "dmf/poly.hpp"
#include "dmf/ratfunc.hpp"

#include <doctest.h>

#include <random>

using namespace dmf;

namespace {

Poly P(const FieldCtx& f, std::vector<long long> c) { return Poly::from_ints(f, c); }

Poly random_poly(const FieldCtx& f, std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(-1, max_deg), el(0, f.q() - 1);
  const int d = deg(rng);
  std::vector<FqElem> c;
  for (int i = 0; i <= d; ++i) c.push_back(f.element(el(rng)));
  return Poly(f, c);
}

// brute force: monic of degree r over F_p without a factor of lower degree
bool irreducible_by_trial(const FieldCtx& fp, const Poly& m) {
  for (int d = 1; d <= m.degree() / 2; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= fp.p();
    for (long long x = 0; x < count; ++x) {
      std::vector<long long> c(std::size_t(d) + 1, 0);
      long long y = x;
      for (int i = 0; i < d; ++i) {
        c[std::size_t(i)] = y % fp.p();
        y /= fp.p();
      }
      c[std::size_t(d)] = 1;
      if ((m % Poly::from_ints(fp, c)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("make_field moduli and errors") {
  CHECK(make_field(3, 1).q() == 3);
  CHECK(make_field(3, 1).modulus() == std::vector<int>{0, 1});
  CHECK(make_field(3, 2).q() == 9);
  CHECK(make_field(3, 2).modulus() == std::vector<int>{1, 0, 1});
  CHECK(&make_field(3, 2) == &make_field(3, 2));
  CHECK_THROWS_AS(make_field(2, 3), Error);
  try {
    make_field(9, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOddPrime);
  }
  try {
    make_field(3, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadDegree);
  }
}

TEST_CASE("modulus is the smallest irreducible by brute-force search") {
  for (auto [p, r] : {std::pair{3, 2}, {3, 3}, {5, 2}, {7, 2}, {3, 4}}) {
    const FieldCtx& fp = make_field(p, 1);
    // enumerate monic degree-r polynomials low-degree-first lexicographically
    long long count = 1;
    for (int i = 0; i < r; ++i) count *= p;
    std::vector<int> first;
    for (long long x = 0; x < count && first.empty(); ++x) {
      // lexicographic on (c0, c1, ...): c0 most significant
      std::vector<long long> c(std::size_t(r) + 1, 0);
      long long y = x;
      for (int i = r - 1; i >= 0; --i) {
        c[std::size_t(i)] = y % p;
        y /= p;
      }
      c[std::size_t(r)] = 1;
      if (irreducible_by_trial(fp, Poly::from_ints(fp, c))) first.assign(c.begin(), c.end());
    }
    CHECK(make_field(p, r).modulus() == first);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(20240611);
  for (auto [p, r] : {std::pair{3, 1}, {7, 1}, {3, 2}, {5, 2}, {3, 3}}) {
    const FieldCtx& f = make_field(p, r);
    std::uniform_int_distribution<int> el(0, f.q() - 1);
    for (int t = 0; t < 500; ++t) {
      const FqElem a = f.element(el(rng)), b = f.element(el(rng)), c = f.element(el(rng));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == f.zero());
      if (!a.is_zero()) CHECK(f.mul(a, f.inv(a)) == f.one());
      CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
      CHECK(f.pow(a, f.q()) == a);
    }
  }
}

TEST_CASE("field element rendering round trip") {
  const FieldCtx& f = make_field(3, 2);
  for (int i = 0; i < f.q(); ++i) CHECK(f.parse(f.render(f.element(i))) == f.element(i));
  CHECK(f.render(f.from_coords(std::vector<int>{1, 1})) == "w+1");
  CHECK(f.render(f.from_coords(std::vector<int>{1, 2})) == "2*w+1");
}

TEST_CASE("polynomial examples over F_3") {
  const FieldCtx& f = make_field(3, 1);
  const Poly T = Poly::T(f);
  CHECK((P(f, {1, 1}) + P(f, {2, 1})) == P(f, {0, 2}));
  auto [qt, rm] = divrem(T.pow(3), T.pow(3) - T);
  CHECK(qt == Poly::one(f));
  CHECK(rm == T);
  CHECK(gcd(P(f, {2, 0, 1}), P(f, {1, 1})) == P(f, {1, 1}));
  CHECK_THROWS_AS(divrem(T, Poly::zero(f)), Error);
  CHECK(P(f, {1, 1, 0, 2}).to_string() == "2*T^3 + T + 1");
  CHECK(Poly::zero(f).degree() == kZeroDegree);
  CHECK_THROWS_AS(exact_div(T, P(f, {1, 1})), Error);
}

TEST_CASE("special modulus and lcm of monics") {
  const FieldCtx& f = make_field(3, 1);
  CHECK(special_modulus(f, 1).to_string() == "T^3 + 2*T");
  CHECK(special_modulus(f, 2).to_string() == "T^9 + 2*T");
  CHECK_THROWS_AS(special_modulus(f, 0), Error);
  CHECK(lcm_monics(f, 0) == Poly::one(f));
  for (auto [p, r] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
    const FieldCtx& g = make_field(p, r);
    const int q = g.q();
    const Poly T = Poly::T(g);
    CHECK(lcm_monics(g, 1) == T.pow(q) - T);
    CHECK(lcm_monics(g, 2) == (T.pow(q) - T) * (T.pow(q * q) - T));
    for (int d = 1; d <= 2; ++d) CHECK((lcm_monics(g, d) % special_modulus(g, d)).is_zero());
  }
  // L_2 is the lcm of all monics of degree 2 (q = 3): iterated lcm oracle
  Poly acc = Poly::one(f);
  for (long long c0 = 0; c0 < 3; ++c0)
    for (long long c1 = 0; c1 < 3; ++c1) {
      const Poly a = P(f, {c0, c1, 1});
      acc = exact_div(acc * a, gcd(acc, a));
    }
  CHECK(acc == lcm_monics(f, 2));
}

TEST_CASE("division with remainder and gcd properties") {
  std::mt19937 rng(7);
  for (auto [p, r] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
    const FieldCtx& f = make_field(p, r);
    for (int t = 0; t < 200; ++t) {
      const Poly a = random_poly(f, rng, 12), b = random_poly(f, rng, 6);
      if (b.is_zero()) continue;
      auto [qt, rm] = divrem(a, b);
      CHECK(qt * b + rm == a);
      CHECK(rm.degree() < b.degree());
      const Poly g = gcd(a, b);
      CHECK(g.is_monic());
      CHECK((a % g).is_zero());
      CHECK((b % g).is_zero());
    }
  }
}

TEST_CASE("polynomial text round trip") {
  const FieldCtx& f9 = make_field(3, 2);
  const FqElem w = f9.from_coords(std::vector<int>{0, 1});
  const FqElem w1 = f9.from_coords(std::vector<int>{1, 1});
  const Poly x = Poly::monomial(f9, w1, 2) + Poly::constant(f9, w);
  CHECK(x.to_string() == "(w+1)*T^2 + w");
  CHECK(parse_poly(f9, x.to_string()) == x);
  std::mt19937 rng(11);
  for (auto [p, r] : {std::pair{3, 1}, {7, 1}, {3, 2}, {5, 2}}) {
    const FieldCtx& f = make_field(p, r);
    for (int t = 0; t < 100; ++t) {
      const Poly a = random_poly(f, rng, 8);
      CHECK(parse_poly(f, a.to_string()) == a);
    }
  }
  CHECK_THROWS_AS(parse_poly(make_field(3, 1), "T^"), Error);
}

TEST_CASE("rational functions are canonical") {
  std::mt19937 rng(5);
  for (auto [p, r] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
    const FieldCtx& f = make_field(p, r);
    for (int t = 0; t < 200; ++t) {
      const Poly a = random_poly(f, rng, 5), b = random_poly(f, rng, 5), c = random_poly(f, rng, 4);
      if (b.is_zero() || c.is_zero()) continue;
      const RatFunc x(a, b), y(a * c, b * c);
      CHECK(x == y);
      CHECK(x.to_string() == y.to_string());
      CHECK(x.den().is_monic());
      CHECK(gcd(x.num(), x.den()).degree() <= 0);
      CHECK(parse_ratfunc(f, x.to_string()) == x);
      if (!a.is_zero()) CHECK(x * x.inv() == RatFunc::one(f));
    }
  }
  const FieldCtx& f = make_field(3, 1);
  CHECK_THROWS_AS(RatFunc(Poly::one(f), Poly::zero(f)), Error);
  CHECK(RatFunc(Poly::one(f), Poly::T(f)).to_string() == "(1)/(T)");
}

TEST_CASE("left kernel examples") {
  const FieldCtx& f = make_field(3, 1);
  const RatFunc one = RatFunc::one(f), zero = RatFunc::zero(f), T(Poly::T(f));
  CHECK(left_kernel(Matrix::from_rows(f, {{one, zero}, {zero, one}}, 2)).empty());
  const auto k = left_kernel(Matrix::from_rows(f, {{one, T}, {T, T * T}}, 2));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vector{one, -one / T});
  const auto z = left_kernel(Matrix::from_rows(f, {{zero, zero}}, 2));
  REQUIRE(z.size() == 1);
  CHECK(z[0] == Vector{one});
}

TEST_CASE("left kernel properties on random matrices") {
  std::mt19937 rng(3);
  const FieldCtx& f = make_field(5, 1);
  for (int t = 0; t < 60; ++t) {
    const int rows = 1 + int(rng() % 5), cols = 1 + int(rng() % 4);
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        const Poly d = random_poly(f, rng, 2);
        m(i, j) = RatFunc(random_poly(f, rng, 2), d.is_zero() ? Poly::one(f) : d);
      }
    // force dependencies now and then
    if (rows > 1 && t % 3 == 0)
      for (int j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * RatFunc(Poly::T(f));
    const auto k = left_kernel(m);
    CHECK(m.rank() + int(k.size()) == rows);
    for (const Vector& v : k) {
      for (const RatFunc& c : row_times(v, m)) CHECK(c.is_zero());
      std::size_t lead = 0;
      while (v[lead].is_zero()) ++lead;
      CHECK(v[lead] == RatFunc::one(f));
    }
    CHECK(echelon_basis(f, k, rows) == k);
  }
}
