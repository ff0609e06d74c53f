#include "stab/parser.hpp"

#include <cctype>

#include "stab/error.hpp"

namespace stab {

bool operator==(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.exponent != b.exponent ||
      a.args.size() != b.args.size())
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

namespace {

NodePtr make(NodeKind k, std::vector<NodePtr> args = {}) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->args = std::move(args);
  return n;
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  NodePtr run() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, "syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expr() {
    NodePtr left;
    if (accept('-')) {
      NodePtr t = term();
      left = make(NodeKind::Neg, {t});
    } else {
      left = term();
    }
    for (;;) {
      if (accept('+')) {
        NodePtr right = term();
        left = make(NodeKind::Add, {left, right});
      } else if (accept('-')) {
        NodePtr right = term();
        left = make(NodeKind::Sub, {left, right});
      } else {
        return left;
      }
    }
  }

  NodePtr term() {
    NodePtr left = factor();
    for (;;) {
      if (accept('*')) {
        NodePtr right = factor();
        left = make(NodeKind::Mul, {left, right});
      } else if (accept('/')) {
        NodePtr right = factor();
        left = make(NodeKind::Div, {left, right});
      } else {
        return left;
      }
    }
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(s_.substr(start, pos_ - start));
  }

  long small_integer() {
    bool paren = accept('(');
    bool neg = accept('-');
    std::string d = digits();
    if (d.size() > 6) fail("exponent too large");
    long v = std::stol(d);
    if (paren) expect(')');
    return neg ? -v : v;
  }

  NodePtr factor() {
    NodePtr b = base();
    if (accept('^')) {
      auto p = std::make_shared<Node>();
      p->kind = NodeKind::Pow;
      p->args = {b};
      p->exponent = small_integer();
      return p;
    }
    return b;
  }

  NodePtr base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = std::make_shared<Node>();
      n->kind = NodeKind::Num;
      n->value = Int(digits());
      return n;
    }
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      if (id == "log" || id == "exp") {
        expect('(');
        NodePtr arg = expr();
        expect(')');
        return make(id == "log" ? NodeKind::Log : NodeKind::Exp, {arg});
      }
      for (const auto& v : vars_) {
        if (v == id) {
          auto n = std::make_shared<Node>();
          n->kind = NodeKind::Var;
          n->name = id;
          return n;
        }
      }
      pos_ = start;
      fail("unknown name '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

int level(const Node& n) {
  switch (n.kind) {
    case NodeKind::Add:
    case NodeKind::Sub:
    case NodeKind::Neg: return 1;
    case NodeKind::Mul:
    case NodeKind::Div: return 2;
    case NodeKind::Pow: return 3;
    default: return 4;
  }
}

std::string at_level(const Node& n, int required) {
  std::string s = print(n);
  return level(n) < required ? "(" + s + ")" : s;
}

}  // namespace

NodePtr parse(std::string_view text, const std::vector<std::string>& vars) { return Parser(text, vars).run(); }

std::string print(const Node& n) {
  switch (n.kind) {
    case NodeKind::Num: return n.value.get_str();
    case NodeKind::Var: return n.name;
    case NodeKind::Log: return "log(" + print(*n.args[0]) + ")";
    case NodeKind::Exp: return "exp(" + print(*n.args[0]) + ")";
    case NodeKind::Neg: return "-" + at_level(*n.args[0], 2);
    case NodeKind::Add: return at_level(*n.args[0], 1) + " + " + at_level(*n.args[1], 2);
    case NodeKind::Sub: return at_level(*n.args[0], 1) + " - " + at_level(*n.args[1], 2);
    case NodeKind::Mul: return at_level(*n.args[0], 2) + "*" + at_level(*n.args[1], 3);
    case NodeKind::Div: return at_level(*n.args[0], 2) + "/" + at_level(*n.args[1], 3);
    case NodeKind::Pow: {
      std::string e = n.exponent < 0 ? "(" + std::to_string(n.exponent) + ")" : std::to_string(n.exponent);
      return at_level(*n.args[0], 4) + "^" + e;
    }
  }
  return "?";
}

// ------------------------------------------------------------ normalization

namespace {

[[noreturn]] void reject(const std::string& why) { throw Error(ErrorCode::NormalizationReject, why); }

// sum_j logs[j]*log(x)^j * exp(g)
struct Value {
  std::vector<RatFunc> logs;
  std::optional<RatFunc> g;

  bool is_zero() const {
    for (const auto& f : logs)
      if (!f.is_zero()) return false;
    return true;
  }
  bool is_rational() const {
    if (g) return false;
    for (std::size_t j = 1; j < logs.size(); ++j)
      if (!logs[j].is_zero()) return false;
    return true;
  }
  RatFunc rational() const { return logs.empty() ? RatFunc() : logs[0]; }
};

Value constant(const RatFunc& f) { return Value{{f}, std::nullopt}; }

bool same_exp(const Value& a, const Value& b) {
  RatFunc ga = a.g ? *a.g : RatFunc();
  RatFunc gb = b.g ? *b.g : RatFunc();
  return ga == gb;
}

Value add(const Value& a, const Value& b, bool subtract) {
  if (a.is_zero() && !subtract) return b;
  if (b.is_zero()) return a;
  if (!a.is_zero() && !same_exp(a, b)) reject("sum of terms with different exponentials");
  Value r;
  r.g = a.is_zero() ? b.g : a.g;
  r.logs.resize(std::max(a.logs.size(), b.logs.size()));
  for (std::size_t j = 0; j < a.logs.size(); ++j) r.logs[j] += a.logs[j];
  for (std::size_t j = 0; j < b.logs.size(); ++j) r.logs[j] += subtract ? -b.logs[j] : b.logs[j];
  return r;
}

Value mul(const Value& a, const Value& b) {
  Value r;
  if (a.logs.empty() || b.logs.empty()) return r;
  r.logs.resize(a.logs.size() + b.logs.size() - 1);
  for (std::size_t i = 0; i < a.logs.size(); ++i)
    for (std::size_t j = 0; j < b.logs.size(); ++j) r.logs[i + j] += a.logs[i] * b.logs[j];
  if (a.g || b.g) r.g = (a.g ? *a.g : RatFunc()) + (b.g ? *b.g : RatFunc());
  return r;
}

Value inverse(const Value& v) {
  for (std::size_t j = 1; j < v.logs.size(); ++j)
    if (!v.logs[j].is_zero()) reject("division by an expression containing log(x)");
  RatFunc f = v.rational();
  if (f.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  Value r = constant(RatFunc(1) / f);
  if (v.g) r.g = -*v.g;
  return r;
}

Value power(const Value& v, long e) {
  Value base = e < 0 ? inverse(v) : v;
  Value r = constant(1);
  for (long k = 0; k < std::labs(e); ++k) r = mul(r, base);
  return r;
}

Value eval(const Node& n) {
  switch (n.kind) {
    case NodeKind::Num: return constant(Rat(n.value));
    case NodeKind::Var: return constant(RatFunc::x());
    case NodeKind::Neg: return add(Value{}, eval(*n.args[0]), true);
    case NodeKind::Add: return add(eval(*n.args[0]), eval(*n.args[1]), false);
    case NodeKind::Sub: return add(eval(*n.args[0]), eval(*n.args[1]), true);
    case NodeKind::Mul: return mul(eval(*n.args[0]), eval(*n.args[1]));
    case NodeKind::Div: return mul(eval(*n.args[0]), inverse(eval(*n.args[1])));
    case NodeKind::Pow: return power(eval(*n.args[0]), n.exponent);
    case NodeKind::Exp: {
      Value a = eval(*n.args[0]);
      if (!a.is_rational()) reject("exp of a non-rational argument");
      return Value{{RatFunc(1)}, a.rational()};
    }
    case NodeKind::Log: {
      Value a = eval(*n.args[0]);
      if (!a.is_rational()) reject("log of a non-rational argument");
      auto lr = is_laurent(a.rational());
      if (!lr || lr->terms.size() != 1 || lr->terms.begin()->second != 1)
        reject("only log(x) and log(x^k) are supported, got log(" + print(*n.args[0]) + ")");
      int k = lr->terms.begin()->first;
      if (k == 0) return Value{};
      return Value{{RatFunc(), RatFunc(k)}, std::nullopt};
    }
  }
  reject("unknown node");
}

}  // namespace

ElemExpr normalize(const Node& n) {
  Value v = eval(n);
  ElemExpr e{v.logs, v.g};
  e.canonicalize();
  return e;
}

RatFunc to_ratfunc(const Node& n) {
  Value v = eval(n);
  if (!v.is_rational()) reject("expected a rational function");
  return v.rational();
}

RatFunc parse_ratfunc(std::string_view text, std::string_view var) {
  return to_ratfunc(*parse(text, {std::string(var)}));
}

OreOperator to_operator(const Node& n, OreKind kind) {
  auto scalar = [&](const RatFunc& r) { return OreOperator::scalar(kind, r); };
  switch (n.kind) {
    case NodeKind::Num: return scalar(Rat(n.value));
    case NodeKind::Var:
      if (n.name == "D" || n.name == "S") return OreOperator::generator(kind);
      return scalar(RatFunc::x());
    case NodeKind::Neg: return -to_operator(*n.args[0], kind);
    case NodeKind::Add: return to_operator(*n.args[0], kind) + to_operator(*n.args[1], kind);
    case NodeKind::Sub: return to_operator(*n.args[0], kind) - to_operator(*n.args[1], kind);
    case NodeKind::Mul: return multiply(to_operator(*n.args[0], kind), to_operator(*n.args[1], kind));
    case NodeKind::Div: {
      OreOperator a = to_operator(*n.args[0], kind);
      OreOperator b = to_operator(*n.args[1], kind);
      if (b.order() != 0) throw Error(ErrorCode::InvalidArgument, "division by an operator of positive order");
      if (a.order() > 0 && !b.lc().is_constant())
        throw Error(ErrorCode::InvalidArgument, "operators may only be divided by constants");
      return (RatFunc(1) / b.lc()) * a;
    }
    case NodeKind::Pow: {
      OreOperator b = to_operator(*n.args[0], kind);
      if (n.exponent < 0) {
        if (b.order() != 0) throw Error(ErrorCode::InvalidArgument, "negative power of an operator");
        return scalar(b.lc().pow(static_cast<int>(n.exponent)));
      }
      OreOperator r = scalar(1);
      for (long k = 0; k < n.exponent; ++k) r = multiply(r, b);
      return r;
    }
    case NodeKind::Log:
    case NodeKind::Exp: throw Error(ErrorCode::InvalidArgument, "log and exp are not operator atoms");
  }
  throw Error(ErrorCode::InvalidArgument, "unknown node");
}

OreOperator parse_operator(std::string_view text, OreKind kind) {
  std::vector<std::string> vars = kind == OreKind::Diff ? std::vector<std::string>{"x", "D"}
                                                        : std::vector<std::string>{"n", "S"};
  return to_operator(*parse(text, vars), kind);
}

}  // namespace stab
