// dmf: expansions, dimensions, congruences and relation spaces for Drinfeld
// modular forms of level Gamma_0(T).
#include "dmf/congruence.hpp"
#include "dmf/errors.hpp"
#include "dmf/json_io.hpp"
#include "dmf/kernels.hpp"
#include "dmf/relations.hpp"
#include "dmf/selftest.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace dmf;

namespace {

enum Exit { kOk = 0, kMathFailure = 1, kUsage = 2, kPrecision = 3 };

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::PrecisionExceeded: return kPrecision;
    case ErrorCode::DivisionNotExact:
    case ErrorCode::NonIntegralCoefficient:
    case ErrorCode::MixedField: return kMathFailure;
    default: return kUsage;
  }
}

struct Globals {
  int p = 3;
  int r = 1;
  std::optional<int> prec;
  std::string format = "text";
  int jobs = 1;

  bool json() const { return format == "json"; }
  // --prec only ever raises the derived precision
  int precision(int derived) const { return prec ? std::max(*prec, derived) : derived; }
};

void print_witnesses(const Globals& g, const std::vector<CongruenceWitness>& ws) {
  if (g.json()) {
    Json arr = Json::array();
    for (const auto& w : ws) arr.push_back(witness_to_json(w));
    std::cout << arr.dump(2) << '\n';
    return;
  }
  for (const auto& w : ws) {
    std::cout << "q=" << w.q << " k=" << w.spec.k << " l=" << w.spec.l << " d=" << w.d << " a=" << w.a
              << " b=" << w.b << " f=" << w.form << " exp=" << w.target_exp << " coeff=" << w.coeff.to_string()
              << " residue=" << w.residue.to_string() << " " << verdict_name(w.verdict) << '\n';
  }
}

std::vector<FormExpr> forms_or_basis(const FieldCtx& field, const std::string& text, int k, int l) {
  if (!text.empty()) return {FormExpr::parse(field, text)};
  std::vector<FormExpr> out;
  for (const auto& m : basis(field, k, l)) out.push_back(FormExpr::monomial(m));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drinfeld modular forms for Gamma_0(T) over F_q[T]"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--p", g.p, "characteristic (odd prime)");
  app.add_option("--r", g.r, "q = p^r");
  app.add_option("--prec", g.prec, "raise the working precision");
  app.add_option("--format", g.format)->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", g.jobs, "threads for kernels and sweeps");

  std::string expr;
  int k = 0, l = 0, d = 1, b_max = 3, m = 1, N = 0;
  std::optional<int> alpha, a_opt;
  std::string form;
  std::string profile = "quick";

  auto* expand_cmd = app.add_subcommand("expand", "u-expansion of a form expression");
  expand_cmd->add_option("expr", expr)->required();

  auto* dim_cmd = app.add_subcommand("dim", "dimension of M_{k,l}");
  dim_cmd->add_option("--k", k)->required();
  dim_cmd->add_option("--l", l)->required();

  auto* basis_cmd = app.add_subcommand("basis", "monomial basis of M_{k,l}");
  basis_cmd->add_option("--k", k)->required();
  basis_cmd->add_option("--l", l)->required();

  auto* cong_cmd = app.add_subcommand("congruence", "coefficient congruences of f*E_T^(q-l) mod T^(q^d)-T");
  cong_cmd->add_option("--k", k)->required();
  cong_cmd->add_option("--l", l)->required();
  cong_cmd->add_option("--d", d);
  cong_cmd->add_option("--b-max", b_max);
  cong_cmd->add_option("--form", form, "check this form instead of the basis");

  auto* cor_cmd = app.add_subcommand("corollary", "a_f((p^m-1)(q-1)+l) mod T^q-T");
  cor_cmd->add_option("--k", k)->required();
  cor_cmd->add_option("--l", l)->required();
  cor_cmd->add_option("--m", m)->required();
  cor_cmd->add_option("--alpha", alpha, "defaults to m");
  cor_cmd->add_option("--form", form);

  auto* rel_cmd = app.add_subcommand("relations", "relation space L_{k,l;N} two ways");
  rel_cmd->add_option("--k", k)->required();
  rel_cmd->add_option("--l", l)->required();
  rel_cmd->add_option("--N", N)->required();

  auto* res_cmd = app.add_subcommand("residue", "coefficient of u in an expansion, or in G(a)");
  res_cmd->add_option("expr", expr)->required();
  res_cmd->add_option("--a", a_opt, "residue of G(a) for the form instead");

  auto* self_cmd = app.add_subcommand("selftest", "acceptance suite");
  self_cmd->add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (g.jobs < 1) throw Error(ErrorCode::ParseError, "--jobs must be positive");
    kernels::set_threads(g.jobs);
    const FieldCtx& field = make_field(g.p, g.r);
    const int q = field.q();

    if (*expand_cmd) {
      const FormExpr e = FormExpr::parse(field, expr);
      const USeries s = expand(e, field, g.precision(q * (q - 1) + 1));
      if (g.json()) std::cout << series_to_json(s).dump(2) << '\n';
      else std::cout << s.to_string() << '\n';
      return kOk;
    }
    if (*dim_cmd) {
      const int n = space_dim(field, k, l);
      if (g.json()) std::cout << Json{{"q", q}, {"k", k}, {"l", l}, {"dim", n}}.dump(2) << '\n';
      else std::cout << n << '\n';
      return kOk;
    }
    if (*basis_cmd) {
      const auto bs = basis(field, k, l);
      if (g.json()) {
        Json arr = Json::array();
        for (const auto& b : bs) arr.push_back(b.to_string());
        std::cout << Json{{"q", q}, {"k", k}, {"l", l}, {"basis", arr}}.dump(2) << '\n';
      } else {
        for (const auto& b : bs) std::cout << b.to_string() << '\n';
      }
      return kOk;
    }
    if (*cong_cmd) {
      if (b_max < 1) throw Error(ErrorCode::ParseError, "--b-max must be at least 1");
      const auto fs = forms_or_basis(field, form, k, l);
      std::vector<CongruenceWitness> ws;
      for (auto [a, b] : find_ab(field, k, l, d, b_max))
        for (const auto& f : fs) ws.push_back(check_MT1(f, field, k, l, d, a, b));
      print_witnesses(g, ws);
      for (const auto& w : ws)
        if (!w.passed()) return kMathFailure;
      return kOk;
    }
    if (*cor_cmd) {
      std::vector<CongruenceWitness> ws;
      for (const auto& f : forms_or_basis(field, form, k, l))
        ws.push_back(check_corollary(f, field, k, l, alpha.value_or(m), m));
      print_witnesses(g, ws);
      for (const auto& w : ws)
        if (!w.passed()) return kMathFailure;
      return kOk;
    }
    if (*rel_cmd) {
      if (N < 0) throw Error(ErrorCode::ParseError, "--N must be non-negative");
      const RelationReport rep = relation_report(field, k, l, N);
      if (g.json()) {
        std::cout << report_to_json(field, rep).dump(2) << '\n';
      } else {
        std::cout << "phi rows (b-vectors):\n";
        for (const auto& row : rep.phi.rows) std::cout << "  " << row.basis_g << ": " << vector_to_string(row.c) << '\n';
        std::cout << "kernel basis:\n";
        for (const auto& v : rep.kernel) std::cout << "  " << vector_to_string(v) << '\n';
        std::cout << "phi_rank=" << rep.phi_rank << " kernel_dim=" << rep.kernel_dim
                  << " annihilates=" << (rep.annihilates ? "true" : "false")
                  << " spans_equal=" << (rep.spans_equal ? "true" : "false") << '\n';
      }
      return rep.ok() ? kOk : kMathFailure;
    }
    if (*res_cmd) {
      const FormExpr e = FormExpr::parse(field, expr);
      RatFunc res;
      if (a_opt) {
        const auto wt = e.weight_type(field);
        if (!wt) throw Error(ErrorCode::BadWeight, "'" + expr + "' is not a homogeneous modular form");
        res = residue_normalized(build_G(e, field, wt->first, wt->second, *a_opt, g.precision(2)));
      } else {
        res = residue_normalized(expand(e, field, g.precision(2)));
      }
      if (g.json()) std::cout << Json{{"q", q}, {"form", e.to_string()}, {"residue", res.to_string()}}.dump(2) << '\n';
      else std::cout << res.to_string() << '\n';
      return kOk;
    }
    if (*self_cmd) {
      const SelftestReport rep = run_selftest(profile == "full" ? Profile::Full : Profile::Quick, g.jobs);
      if (g.json()) {
        Json arr = Json::array();
        for (const auto& c : rep.results)
          arr.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"checks", c.checks},
                         {"failures", c.failures}});
        std::cout << Json{{"profile", profile}, {"criteria", arr}, {"all_pass", rep.all_pass()}}.dump(2) << '\n';
      } else {
        std::cout << rep.render();
      }
      return rep.all_pass() ? kOk : kMathFailure;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kMathFailure;
  }
  return kUsage;
}
