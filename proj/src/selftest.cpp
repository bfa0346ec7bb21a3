#include "dmf/selftest.hpp"

#include "dmf/carlitz.hpp"
#include "dmf/congruence.hpp"
#include "dmf/errors.hpp"
#include "dmf/kernels.hpp"
#include "dmf/relations.hpp"

#include <functional>
#include <sstream>

namespace dmf {

namespace {

const FieldCtx& field_for_q(int q) {
  switch (q) {
    case 3: return make_field(3, 1);
    case 5: return make_field(5, 1);
    case 7: return make_field(7, 1);
    case 9: return make_field(3, 2);
    case 25: return make_field(5, 2);
    case 27: return make_field(3, 3);
  }
  throw Error(ErrorCode::Unsupported, "no field of size " + std::to_string(q) + " in the suite");
}

constexpr std::size_t kMaxFailures = 8;

class Tally {
 public:
  Tally(std::string id, std::string title) {
    r_.id = std::move(id);
    r_.title = std::move(title);
  }

  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (!ok && r_.failures.size() < kMaxFailures) r_.failures.push_back(what);
    if (!ok) failed_ = true;
  }

  CriterionResult done() {
    r_.pass = !failed_ && r_.checks > 0;
    return r_;
  }

 private:
  CriterionResult r_;
  bool failed_ = false;
};

struct ItemOutcome {
  long long checks = 0;
  std::vector<std::string> failures;
};

// Runs independent items, possibly in parallel; outcomes merge in item order.
void run_items(Tally& tally, std::size_t count, const std::function<void(std::size_t, ItemOutcome&)>& item) {
  std::vector<ItemOutcome> out(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < static_cast<long long>(count); ++i) {
    try {
      item(std::size_t(i), out[std::size_t(i)]);
    } catch (const std::exception& ex) {
      out[std::size_t(i)].checks += 1;
      out[std::size_t(i)].failures.push_back(ex.what());
    }
  }
  for (const ItemOutcome& o : out) {
    const long long passed = o.checks - static_cast<long long>(o.failures.size());
    for (long long k = 0; k < passed; ++k) tally.check(true, "");
    for (const std::string& f : o.failures) tally.check(false, f);
  }
}

void expect(ItemOutcome& o, bool ok, const std::string& what) {
  ++o.checks;
  if (!ok) o.failures.push_back(what);
}

std::string qtag(const FieldCtx& f) { return "q=" + std::to_string(f.q()); }

RatFunc T_pow(const FieldCtx& f, int n) { return RatFunc(Poly::monomial(f, f.one(), n)); }

struct Space {
  int q, k, l, r;
};

// Every (k, l) with 0 <= l <= q-2, r_{k,l} <= r_max and k >= 1.
std::vector<Space> spaces(const std::vector<int>& qs, int r_max) {
  std::vector<Space> out;
  for (int q : qs)
    for (int l = 0; l <= q - 2; ++l)
      for (int r = 0; r <= r_max; ++r) {
        const int k = r * (q - 1) + 2 * l;
        if (k >= 1) out.push_back({q, k, l, r});
      }
  return out;
}

struct SweepCase {
  int q, k, l, d, a, b;
  BasisMonomial f;
};

// The congruence sweep: p^b <= 27, d in {1, 2}, every basis monomial.
std::vector<SweepCase> sweep_cases(const std::vector<int>& qs, const std::vector<int>& ds) {
  std::vector<SweepCase> out;
  for (const Space& s : spaces(qs, 7)) {
    const FieldCtx& field = field_for_q(s.q);
    int b_max = 0;
    for (long long pb = field.p(); pb <= 27; pb *= field.p()) ++b_max;
    for (int d : ds)
      for (auto [a, b] : find_ab(field, s.k, s.l, d, b_max))
        for (const BasisMonomial& m : basis(field, s.k, s.l)) out.push_back({s.q, s.k, s.l, d, a, b, m});
  }
  return out;
}

std::string case_name(const SweepCase& c) {
  std::ostringstream os;
  os << "q=" << c.q << " (k,l)=(" << c.k << "," << c.l << ") d=" << c.d << " (a,b)=(" << c.a << "," << c.b
     << ") f=" << c.f.to_string();
  return os.str();
}

}  // namespace

std::vector<int> profile_qs(Profile profile, const std::vector<int>& full) {
  if (profile == Profile::Full) return full;
  std::vector<int> out;
  for (int q : full)
    if (q == 3) out.push_back(q);
  return out;
}

CriterionResult ac_displayed(Profile profile) {
  Tally t("AC1", "displayed expansions of E_T, Delta_T, Delta_W, h");
  for (int q : profile_qs(profile, {3, 5, 9})) {
    const FieldCtx& f = field_for_q(q);
    const int m = q - 1;
    const int prec = q * m + 1;
    const RatFunc one = RatFunc::one(f);
    const RatFunc T = T_pow(f, 1);
    auto pin = [&](std::string_view name, int e, const RatFunc& want) {
      const USeries s = expand(FormExpr::parse(f, name), f, prec);
      const RatFunc got = s.coeff(e);
      t.check(got == want, qtag(f) + " " + std::string(name) + " at u^" + std::to_string(e) + ": got " +
                               got.to_string() + ", want " + want.to_string());
    };
    pin("E_T", 1, one);
    pin("E_T", q, -T);
    pin("Delta_T", m, one);
    pin("Delta_T", q * m, -one);
    pin("Delta_W", 0, one);
    pin("Delta_W", m, T);
    pin("Delta_W", q * m, -T_pow(f, q));
    pin("h", 1, -one);
    pin("h", m * m + 1, -one);
  }
  return t.done();
}

CriterionResult ac_identities(Profile profile) {
  Tally t("AC2", "E_T^(q-1) = Delta_W Delta_T and h = -Delta_W E_T");
  for (int q : profile_qs(profile, {3, 5, 9})) {
    const FieldCtx& f = field_for_q(q);
    // "terms" are nonzero coefficients of E_T^(q-1); the precision grows until
    // that many are compared.
    const int terms = q == 9 ? 100 : 150;
    const FormExpr power = FormExpr::parse(f, "E_T^" + std::to_string(q - 1));
    int prec = terms * (q - 1) + 2;
    USeries lhs = expand(power, f, prec);
    while (int(lhs.terms().size()) < terms && prec < 20000) {
      prec += prec / 2;
      lhs = expand(power, f, prec);
    }
    const USeries rhs = expand(FormExpr::parse(f, "Delta_W*Delta_T"), f, prec);
    int nonzero = 0;
    bool equal = true;
    for (int e = 0; e < prec; ++e) {
      const RatFunc a = lhs.coeff(e);
      if (!a.is_zero()) ++nonzero;
      if (!(a == rhs.coeff(e))) equal = false;
    }
    t.check(equal, qtag(f) + ": E_T^(q-1) and Delta_W*Delta_T differ below u^" + std::to_string(prec));
    t.check(nonzero >= terms, qtag(f) + ": only " + std::to_string(nonzero) + " nonzero terms compared");

    const USeries h = expand(FormExpr::parse(f, "h"), f, prec);
    const USeries dwet = expand(FormExpr::parse(f, "-Delta_W*E_T"), f, prec);
    t.check(agree_to_precision(h, dwet) && h.prec() >= prec && dwet.prec() >= prec,
            qtag(f) + ": h and -Delta_W*E_T differ");
    // Independent of how h is stored: h Delta_T = -E_T^q.
    const USeries hq = expand(FormExpr::parse(f, "h*Delta_T + E_T^" + std::to_string(q)), f, prec);
    t.check(hq.is_zero() && hq.prec() >= prec, qtag(f) + ": h*Delta_T + E_T^q is not zero");
  }
  return t.done();
}

CriterionResult ac_routes(Profile profile) {
  Tally t("AC3", "Delta_T routes agree; u(Taz) = u(az)(Tz)");
  for (int q : profile_qs(profile, {3, 5, 9})) {
    const FieldCtx& f = field_for_q(q);
    const int prec = (q == 9 ? 100 : 150) * (q - 1) + 1;
    const USeries a = build_DeltaT(f, prec, DeltaRoute::Definitional);
    const USeries b = build_DeltaT(f, prec, DeltaRoute::Direct);
    t.check(a.prec() == b.prec() && agree_to_precision(a, b), qtag(f) + ": Delta_T routes differ");
    const USeries wa = build_DeltaW(f, prec, DeltaRoute::Definitional);
    const USeries wb = build_DeltaW(f, prec, DeltaRoute::Direct);
    t.check(wa.prec() == wb.prec() && agree_to_precision(wa, wb), qtag(f) + ": Delta_W routes differ");

    std::vector<Poly> as;
    for (int deg = 0; deg <= 3; ++deg)
      for (const Poly& x : monics(f, deg)) as.push_back(x);
    run_items(t, as.size(), [&](std::size_t i, ItemOutcome& o) {
      const Poly& x = as[i];
      long long qd = 1;
      for (int j = 0; j < x.degree(); ++j) qd *= q;
      // input precision so the substituted side carries 12 blocks beyond its valuation
      const int in_prec = int(qd) + 12 * (q - 1);
      const USeries lhs = u_sub_a(Poly::T(f) * x, q * in_prec);
      const USeries rhs = substitute_Tz(u_sub_a(x, in_prec));
      expect(o, lhs.prec() == rhs.prec() && agree_to_precision(lhs, rhs),
             qtag(f) + ": u_sub_a(T*a) != substitute_Tz(u_sub_a(a)) for a = " + x.to_string());
    });
  }
  return t.done();
}

CriterionResult ac_congruence_sweep(Profile profile) {
  Tally t("AC4", "congruence sweep r <= 7, d in {1,2}, p^b <= 27");
  const auto cases = sweep_cases(profile_qs(profile, {3, 5}), {1, 2});
  run_items(t, cases.size(), [&](std::size_t i, ItemOutcome& o) {
    const SweepCase& c = cases[i];
    const FieldCtx& f = field_for_q(c.q);
    const CongruenceWitness w = check_MT1(FormExpr::monomial(c.f), f, c.k, c.l, c.d, c.a, c.b);
    expect(o, w.residue.is_zero(), case_name(c) + ": residue " + w.residue.to_string());
    if (c.a == 0) expect(o, w.verdict == Verdict::ExactZero, case_name(c) + ": coefficient " + w.coeff.to_string());
  });
  return t.done();
}

CriterionResult ac_worked_examples(Profile profile) {
  Tally t("AC5", "worked congruence examples");
  const std::vector<int> qs = profile_qs(profile, {3, 9});
  for (int q : qs) {
    const FieldCtx& f = field_for_q(q);
    const int p = f.p();
    if (q == 9) {
      const CongruenceWitness w = check_corollary(FormExpr::parse(f, "E_T^6"), f, 12, 6, 1, 1);
      t.check(w.target_exp == 22 && w.passed(), "q=9: a_{E_T^6}(22) mod T^9-T = " + w.residue.to_string());
      for (int m = 1; p * m < q - 1; ++m) {
        const int l = p * m;
        const int e = (p - 1) * (q - 1) + l;
        const USeries s = expand(FormExpr::parse(f, "E_T^" + std::to_string(l)), f, e + 1);
        t.check(s.coeff(e).is_zero(), "q=9: a_{E_T^" + std::to_string(l) + "}(" + std::to_string(e) +
                                          ") = " + s.coeff(e).to_string());
      }
    }
    // g1^(p-2) E_T^l for p | l
    for (int l = 0; l <= q - 2; l += p) {
      const int k = (q - 1) * (p - 2) + 2 * l;
      const std::string text = "g1^" + std::to_string(p - 2) + "*E_T^" + std::to_string(l);
      const CongruenceWitness w = check_corollary(FormExpr::parse(f, text), f, k, l, 1, 1);
      t.check(w.target_exp == (p - 1) * (q - 1) + l && w.passed(),
              qtag(f) + ": " + text + " residue " + w.residue.to_string());
    }
  }
  return t.done();
}

CriterionResult ac_residues(Profile profile) {
  Tally t("AC6", "a_{G(a)}(1) = 0 for every d = 1 sweep case");
  const auto cases = sweep_cases(profile_qs(profile, {3, 5}), {1});
  run_items(t, cases.size(), [&](std::size_t i, ItemOutcome& o) {
    const SweepCase& c = cases[i];
    const FieldCtx& f = field_for_q(c.q);
    const USeries g = build_G(FormExpr::monomial(c.f), f, c.k, c.l, c.a, 2);
    const RatFunc res = residue_normalized(g);
    expect(o, res.is_zero(), case_name(c) + ": a_G(1) = " + res.to_string());
  });
  return t.done();
}

CriterionResult ac_relations(Profile profile) {
  Tally t("AC7", "phi rows annihilate, rank N+1, span equals the kernel");
  {
    const FieldCtx& f = field_for_q(3);
    const RelationVector v = compute_b_vector(f, 2, 1, 0, FormExpr::parse(f, "E_T"));
    const Vector want{-T_pow(f, 1), -RatFunc::one(f)};
    t.check(echelon_basis(f, {v.c}, 2) == echelon_basis(f, {want}, 2),
            "q=3 (2,1,0): b = " + vector_to_string(v.c) + ", want a multiple of (-T, -1)");
  }
  struct Item {
    int q, k, l, N;
  };
  std::vector<Item> items;
  for (const Space& s : spaces(profile_qs(profile, {3, 5}), 5))
    for (int N = 0; N <= 3; ++N) items.push_back({s.q, s.k, s.l, N});
  run_items(t, items.size(), [&](std::size_t i, ItemOutcome& o) {
    const Item& it = items[i];
    const FieldCtx& f = field_for_q(it.q);
    const RelationReport rep = relation_report(f, it.k, it.l, it.N);
    std::ostringstream name;
    name << "q=" << it.q << " (k,l,N)=(" << it.k << "," << it.l << "," << it.N << ")";
    expect(o, rep.annihilates, name.str() + ": a phi row does not annihilate M_{k,l}");
    expect(o, rep.integral, name.str() + ": non-integral b_i");
    expect(o, rep.phi_rank == it.N + 1, name.str() + ": rank(phi) = " + std::to_string(rep.phi_rank));
    expect(o, rep.kernel_dim == it.N + 1, name.str() + ": kernel dimension " + std::to_string(rep.kernel_dim));
    expect(o, rep.spans_equal, name.str() + ": spans differ");
  });
  return t.done();
}

CriterionResult ac_triangularity(Profile profile) {
  Tally t("AC8", "[a_i*(S_j)] unitriangular");
  const auto ss = spaces(profile_qs(profile, {3, 5}), 7);
  run_items(t, ss.size(), [&](std::size_t i, ItemOutcome& o) {
    const Space& s = ss[i];
    const FieldCtx& f = field_for_q(s.q);
    const auto fs = basis(f, s.k, s.l);
    for (int j = 0; j <= s.r; ++j) {
      const USeries sj = expand(FormExpr::monomial(fs[std::size_t(j)]), f, s.r * (s.q - 1) + s.l + 1);
      for (int row = 0; row <= s.r; ++row) {
        const RatFunc c = dual_coeff(sj, row, s.l);
        const bool ok = row < j ? c.is_zero() : row == j ? c == RatFunc::one(f) : true;
        expect(o, ok, "q=" + std::to_string(s.q) + " (k,l)=(" + std::to_string(s.k) + "," + std::to_string(s.l) +
                          "): a_" + std::to_string(row) + "*(S_" + std::to_string(j) + ") = " + c.to_string());
      }
    }
  });
  return t.done();
}

bool SelftestReport::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return !results.empty();
}

std::string SelftestReport::render() const {
  std::ostringstream os;
  int passed = 0;
  for (const auto& r : results) {
    os << r.id << ' ' << (r.pass ? "PASS" : "FAIL") << ' ' << r.title << " (" << r.checks << " checks)\n";
    for (const auto& f : r.failures) os << "  " << f << '\n';
    if (r.pass) ++passed;
  }
  os << passed << "/" << results.size() << " criteria passed\n";
  return os.str();
}

SelftestReport run_selftest(Profile profile, int jobs) {
  const int saved = kernels::threads();
  kernels::set_threads(jobs);
  SelftestReport rep;
  using Fn = CriterionResult (*)(Profile);
  const std::pair<const char*, Fn> all[] = {{"AC1", ac_displayed},      {"AC2", ac_identities},
                                            {"AC3", ac_routes},         {"AC4", ac_congruence_sweep},
                                            {"AC5", ac_worked_examples}, {"AC6", ac_residues},
                                            {"AC7", ac_relations},      {"AC8", ac_triangularity}};
  for (const auto& [id, fn] : all) {
    try {
      rep.results.push_back(fn(profile));
    } catch (const std::exception& ex) {
      rep.results.push_back({id, "aborted", false, 1, {ex.what()}});
    }
  }
  kernels::set_threads(saved);
  return rep;
}

}  // namespace dmf
