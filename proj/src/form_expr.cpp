#include "dmf/form_expr.hpp"

#include "dmf/errors.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <variant>

namespace dmf {

struct FormExpr::Node {
  Kind kind;
  Generator gen = Generator::E;
  RatFunc scalar;
  int exponent = 0;
  std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

using NodePtr = std::shared_ptr<const FormExpr::Node>;

NodePtr make_node(FormExpr::Kind kind, std::vector<NodePtr> kids, int exponent = 0) {
  auto n = std::make_shared<FormExpr::Node>();
  n->kind = kind;
  n->kids = std::move(kids);
  n->exponent = exponent;
  return n;
}

int precedence(FormExpr::Kind k) {
  switch (k) {
    case FormExpr::Kind::Add:
    case FormExpr::Kind::Sub: return 1;
    case FormExpr::Kind::Neg: return 2;
    case FormExpr::Kind::Mul: return 3;
    case FormExpr::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string render(const FormExpr::Node& n);

std::string render_child(const FormExpr::Node& child, int min_prec) {
  std::string s = render(child);
  if (precedence(child.kind) < min_prec) return "(" + s + ")";
  return s;
}

std::string render(const FormExpr::Node& n) {
  using K = FormExpr::Kind;
  switch (n.kind) {
    case K::Generator: return std::string(generator_name(n.gen));
    case K::Scalar: {
      const std::string s = n.scalar.to_string();
      const bool atomic = s.find_first_of(" /") == std::string::npos && s.find('*') == std::string::npos &&
                          s.find('^') == std::string::npos;
      return atomic ? s : "(" + s + ")";
    }
    case K::Add: return render(*n.kids[0]) + " + " + render_child(*n.kids[1], 2);
    case K::Sub: return render(*n.kids[0]) + " - " + render_child(*n.kids[1], 2);
    case K::Neg: return "-" + render_child(*n.kids[0], 3);
    case K::Mul: return render_child(*n.kids[0], 3) + "*" + render_child(*n.kids[1], 4);
    case K::Pow: return render_child(*n.kids[0], 5) + "^" + std::to_string(n.exponent);
  }
  return "?";
}

class Parser {
 public:
  Parser(const FieldCtx& field, std::string_view text) : field_(field), text_(text) {}

  FormExpr parse() {
    FormExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long long integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc()) fail("integer out of range");
    (void)ptr;
    return v;
  }

  FormExpr expr() {
    FormExpr e = accept('-') ? -term() : term();
    for (;;) {
      if (accept('+')) e = e + term();
      else if (accept('-')) e = e - term();
      else return e;
    }
  }

  FormExpr term() {
    FormExpr e = factor();
    for (;;) {
      if (accept('*')) e = e * factor();
      else if (accept('/')) e = e * factor().pow(-1);
      else return e;
    }
  }

  FormExpr factor() {
    FormExpr base = primary();
    if (!accept('^')) return base;
    long long n = 0;
    if (accept('(')) {
      const bool neg = accept('-');
      n = integer();
      if (neg) n = -n;
      if (!accept(')')) fail("expected ')'");
    } else {
      const bool neg = accept('-');
      n = integer();
      if (neg) n = -n;
    }
    if (n > 1'000'000 || n < -1'000'000) fail("exponent out of range");
    return base.pow(int(n));
  }

  FormExpr primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      FormExpr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return FormExpr::scalar(RatFunc::from_int(field_, integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string_view ident = text_.substr(start, pos_ - start);
      if (auto g = generator_from_name(ident)) return FormExpr::generator(*g);
      if (ident == "T") return FormExpr::scalar(RatFunc(Poly::T(field_)));
      if (ident == "w" && !field_.is_prime_field()) {
        std::vector<int> coords(std::size_t(field_.r()), 0);
        coords[1] = 1;
        return FormExpr::scalar(RatFunc(Poly::constant(field_, field_.from_coords(coords))));
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(ident) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const FieldCtx& field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FormExpr FormExpr::generator(Generator g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Generator;
  n->gen = g;
  return FormExpr(n);
}

FormExpr FormExpr::scalar(const RatFunc& c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Scalar;
  n->scalar = c;
  return FormExpr(n);
}

FormExpr FormExpr::parse(const FieldCtx& field, std::string_view text) { return Parser(field, text).parse(); }

FormExpr FormExpr::monomial(const BasisMonomial& m) {
  std::optional<FormExpr> e;
  auto part = [&e](Generator g, int n) {
    if (n == 0) return;
    FormExpr f = n == 1 ? generator(g) : generator(g).pow(n);
    e = e ? *e * f : f;
  };
  part(Generator::Delta_W, m.e_W);
  part(Generator::Delta_T, m.e_T);
  part(Generator::E_T, m.e_E);
  // The empty product: 1 over whichever field the caller evaluates in.
  if (!e) return generator(Generator::E_T).pow(0);
  return *e;
}

FormExpr::Kind FormExpr::kind() const { return node_->kind; }

FormExpr FormExpr::pow(int n) const {
  if (is_scalar()) return scalar(node_->scalar.pow(n));
  return FormExpr(make_node(Kind::Pow, {node_}, n));
}

FormExpr operator+(const FormExpr& a, const FormExpr& b) {
  if (a.is_scalar() && b.is_scalar()) return FormExpr::scalar(a.node_->scalar + b.node_->scalar);
  return FormExpr(make_node(FormExpr::Kind::Add, {a.node_, b.node_}));
}

FormExpr operator-(const FormExpr& a, const FormExpr& b) {
  if (a.is_scalar() && b.is_scalar()) return FormExpr::scalar(a.node_->scalar - b.node_->scalar);
  return FormExpr(make_node(FormExpr::Kind::Sub, {a.node_, b.node_}));
}

FormExpr operator*(const FormExpr& a, const FormExpr& b) {
  if (a.is_scalar() && b.is_scalar()) return FormExpr::scalar(a.node_->scalar * b.node_->scalar);
  return FormExpr(make_node(FormExpr::Kind::Mul, {a.node_, b.node_}));
}

FormExpr FormExpr::operator-() const {
  if (is_scalar()) return scalar(-node_->scalar);
  return FormExpr(make_node(Kind::Neg, {node_}));
}

std::string FormExpr::to_string() const { return render(*node_); }

namespace {

using WT = std::optional<std::pair<int, int>>;

WT weight_type_of(const FormExpr::Node& n, const FieldCtx& field) {
  using K = FormExpr::Kind;
  const int m = field.q() - 1;
  auto norm = [m](int t) { return ((t % m) + m) % m; };
  switch (n.kind) {
    case K::Generator: return generator_weight_type(field, n.gen);
    case K::Scalar: return std::pair{0, 0};
    case K::Neg: return weight_type_of(*n.kids[0], field);
    case K::Add:
    case K::Sub: {
      const WT a = weight_type_of(*n.kids[0], field);
      const WT b = weight_type_of(*n.kids[1], field);
      if (a && b && *a == *b) return a;
      return std::nullopt;
    }
    case K::Mul: {
      const WT a = weight_type_of(*n.kids[0], field);
      const WT b = weight_type_of(*n.kids[1], field);
      if (!a || !b) return std::nullopt;
      return std::pair{a->first + b->first, norm(a->second + b->second)};
    }
    case K::Pow: {
      const WT a = weight_type_of(*n.kids[0], field);
      if (!a) return std::nullopt;
      return std::pair{a->first * n.exponent, norm(a->second * n.exponent)};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<int, int>> FormExpr::weight_type(const FieldCtx& field) const {
  return weight_type_of(*node_, field);
}

struct Evaluator::PowerCache {
  std::mutex mutex;
  std::map<std::pair<int, int>, USeries> powers;
};

struct Evaluator::Value {
  std::variant<RatFunc, USeries> v;
  bool is_scalar() const { return v.index() == 0; }
  const RatFunc& scalar() const { return std::get<0>(v); }
  const USeries& series() const { return std::get<1>(v); }
};

Evaluator::Evaluator(const FieldCtx& field, int input_prec)
    : field_(&field), cache_(std::make_shared<PowerCache>()) {
  auto all = generators(field, input_prec);
  const int want = std::max(input_prec, field.q() * (field.q() - 1) + 1);
  if (all->prec <= want) {
    gens_ = std::move(all);
    return;
  }
  // The memo may hold much longer series; products cost by length.
  auto t = std::make_shared<Generators>();
  t->prec = want;
  t->E = all->E.truncated(want);
  t->E_T = all->E_T.truncated(want);
  t->g1 = all->g1.truncated(want);
  t->Delta_T = all->Delta_T.truncated(want);
  t->Delta_W = all->Delta_W.truncated(want);
  t->h = all->h.truncated(want);
  gens_ = std::move(t);
}

USeries Evaluator::generator_power(Generator g, int n) const {
  const std::pair<int, int> key{int(g), n};
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->powers.find(key);
    if (it != cache_->powers.end()) return it->second;
  }
  const USeries result = n == 1 ? gens_->get(g) : series_pow(gens_->get(g), n);
  std::lock_guard lock(cache_->mutex);
  return cache_->powers.try_emplace(key, result).first->second;
}

Evaluator::Value Evaluator::eval_node(const FormExpr::Node& n) const {
  using K = FormExpr::Kind;
  const FieldCtx& field = *field_;
  switch (n.kind) {
    case K::Generator: return {gens_->get(n.gen)};
    case K::Scalar: return {n.scalar.field_ptr() ? n.scalar : RatFunc::zero(field)};
    case K::Neg: {
      Value a = eval_node(*n.kids[0]);
      if (a.is_scalar()) return {-a.scalar()};
      return {-a.series()};
    }
    case K::Add:
    case K::Sub: {
      Value a = eval_node(*n.kids[0]);
      Value b = eval_node(*n.kids[1]);
      if (n.kind == K::Sub) b = b.is_scalar() ? Value{-b.scalar()} : Value{-b.series()};
      if (a.is_scalar() && b.is_scalar()) return {a.scalar() + b.scalar()};
      if (a.is_scalar()) return {b.series() + USeries::constant(field, a.scalar(), b.series().prec())};
      if (b.is_scalar()) return {a.series() + USeries::constant(field, b.scalar(), a.series().prec())};
      return {a.series() + b.series()};
    }
    case K::Mul: {
      Value a = eval_node(*n.kids[0]);
      Value b = eval_node(*n.kids[1]);
      if (a.is_scalar() && b.is_scalar()) return {a.scalar() * b.scalar()};
      if (a.is_scalar()) return {b.series().scaled(a.scalar())};
      if (b.is_scalar()) return {a.series().scaled(b.scalar())};
      return {a.series() * b.series()};
    }
    case K::Pow: {
      if (n.kids[0]->kind == K::Generator) return {generator_power(n.kids[0]->gen, n.exponent)};
      Value a = eval_node(*n.kids[0]);
      if (a.is_scalar()) return {a.scalar().pow(n.exponent)};
      return {series_pow(a.series(), n.exponent)};
    }
  }
  throw std::logic_error("bad expression node");
}

USeries Evaluator::evaluate(const FormExpr& e) const {
  Value v = eval_node(*e.node_);
  if (v.is_scalar()) return USeries::constant(*field_, v.scalar(), gens_->prec);
  return v.series();
}

USeries expand(const FormExpr& e, const FieldCtx& field, int target_prec) {
  auto fail = [&] {
    return Error(ErrorCode::PrecisionExceeded, "expanding '" + e.to_string() + "' to u^" +
                                                   std::to_string(target_prec) + " needs precision beyond " +
                                                   std::to_string(kMaxPrecision));
  };
  if (target_prec > kMaxPrecision) throw fail();
  const int block = field.q() - 1;
  long long input = std::max(target_prec, 1) + block;
  for (int attempt = 0; attempt < 16; ++attempt) {
    const USeries r = Evaluator(field, int(input)).evaluate(e);
    if (r.prec() >= target_prec) return r.truncated(target_prec);
    input += (static_cast<long long>(target_prec) - r.prec()) + block;
    if (input > kMaxPrecision) break;
  }
  throw fail();
}

}  // namespace dmf
