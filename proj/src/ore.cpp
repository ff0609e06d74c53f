#include "stab/ore.hpp"

#include <algorithm>

#include "stab/error.hpp"

namespace stab {

namespace {

const RatFunc kZeroCoeff;

void check_kind(const OreOperator& a, const OreOperator& b) {
  if (a.kind() != b.kind()) throw Error(ErrorCode::KindMismatch, "operators of different kinds");
}

// Generator times operator: D*L or S*L.
OreOperator left_by_generator(const OreOperator& l) {
  if (l.is_zero()) return l;
  std::vector<RatFunc> r(l.coeffs().size() + 1);
  for (int j = 0; j <= l.order(); ++j) {
    const RatFunc& c = l.coeff(j);
    if (l.kind() == OreKind::Diff) {
      r[j + 1] += c;
      r[j] += derivative(c);
    } else {
      r[j + 1] += c.shift(1);
    }
  }
  return OreOperator(l.kind(), std::move(r));
}

}  // namespace

const char* coeff_var(OreKind kind) { return kind == OreKind::Diff ? "x" : "n"; }

OreOperator::OreOperator(OreKind kind, std::vector<RatFunc> coeffs)
    : kind_(kind), c_(std::move(coeffs)) {
  trim();
}

void OreOperator::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

OreOperator OreOperator::scalar(OreKind kind, const RatFunc& r) {
  return OreOperator(kind, std::vector<RatFunc>{r});
}

OreOperator OreOperator::generator(OreKind kind) {
  return OreOperator(kind, std::vector<RatFunc>{RatFunc(), RatFunc(1)});
}

const RatFunc& OreOperator::coeff(int i) const {
  if (i < 0 || i > order()) return kZeroCoeff;
  return c_[i];
}

bool OreOperator::has_polynomial_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const RatFunc& r) { return r.is_polynomial(); });
}

int OreOperator::degree() const {
  if (is_zero()) return -1;
  int d = 0;
  for (const auto& c : normalized().c_) d = std::max(d, c.num().degree());
  return d;
}

OreOperator& OreOperator::operator+=(const OreOperator& o) {
  check_kind(*this, o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

OreOperator& OreOperator::operator-=(const OreOperator& o) { return *this += -o; }

OreOperator OreOperator::operator-() const {
  OreOperator r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

OreOperator operator*(const RatFunc& r, const OreOperator& l) {
  std::vector<RatFunc> c;
  c.reserve(l.c_.size());
  for (const auto& v : l.c_) c.push_back(r * v);
  return OreOperator(l.kind_, std::move(c));
}

OreOperator OreOperator::monic() const {
  if (is_zero()) return *this;
  return (RatFunc(1) / lc()) * *this;
}

OreOperator OreOperator::normalized() const {
  if (is_zero()) return *this;
  Poly l = 1;
  for (const auto& c : c_) l = lcm(l, c.den());
  std::vector<Poly> polys;
  Poly g;
  for (const auto& c : c_) {
    Poly p = c.num() * (l / c.den());
    g = gcd(g, p);
    polys.push_back(std::move(p));
  }
  if (kind_ == OreKind::Shift) g = 1;
  std::vector<RatFunc> out;
  for (auto& p : polys) out.emplace_back(p / g);
  Rat scale = 1 / out.back().num().lc();
  for (auto& r : out) r = r * RatFunc(scale);
  return OreOperator(kind_, std::move(out));
}

std::string OreOperator::str() const {
  if (is_zero()) return "0";
  const char* var = coeff_var(kind_);
  const char* gen = kind_ == OreKind::Diff ? "D" : "S";
  std::string out;
  for (int i = order(); i >= 0; --i) {
    const RatFunc& c = c_[i];
    if (c.is_zero()) continue;
    std::string cs = c.str(var);
    bool neg = !cs.empty() && cs[0] == '-';
    RatFunc abs_c = neg ? -c : c;
    std::string as = abs_c.str(var);
    bool atomic = as.find_first_of(" /") == std::string::npos;
    std::string term;
    if (i == 0) {
      term = neg && as.find(' ') != std::string::npos ? "(" + as + ")" : as;
    } else {
      std::string g = gen;
      if (i > 1) g += "^" + std::to_string(i);
      if (abs_c == RatFunc(1)) {
        term = g;
      } else {
        term = (atomic ? as : "(" + as + ")") + "*" + g;
      }
    }
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += neg ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

OreOperator multiply(const OreOperator& a, const OreOperator& b) {
  check_kind(a, b);
  OreOperator result(a.kind());
  if (a.is_zero() || b.is_zero()) return result;
  OreOperator gen_pow_b = b;  // G^i * b
  for (int i = 0; i <= a.order(); ++i) {
    if (i > 0) gen_pow_b = left_by_generator(gen_pow_b);
    if (!a.coeff(i).is_zero()) result += a.coeff(i) * gen_pow_b;
  }
  return result;
}

RatFunc apply(const OreOperator& l, const RatFunc& f) {
  if (l.kind() != OreKind::Diff)
    throw Error(ErrorCode::KindMismatch, "only differential operators act on rational functions");
  RatFunc acc;
  RatFunc di = f;
  for (int i = 0; i <= l.order(); ++i) {
    if (i > 0) di = derivative(di);
    if (!l.coeff(i).is_zero()) acc += l.coeff(i) * di;
  }
  return acc;
}

TruncSeries apply(const OreOperator& l, const TruncSeries& s) {
  if (l.kind() != OreKind::Diff)
    throw Error(ErrorCode::KindMismatch, "only differential operators act on power series");
  if (!l.has_polynomial_coeffs())
    throw Error(ErrorCode::InvalidArgument, "series action needs polynomial coefficients");
  const int T = s.truncation();
  const int ord = std::max(l.order(), 0);
  if (T - ord < 0) throw Error(ErrorCode::WindowTooShort, "series shorter than operator order");
  TruncSeries out;
  out.coeffs.assign(static_cast<std::size_t>(T - ord + 1), Rat(0));
  for (int i = 0; i <= l.order(); ++i) {
    const Poly& p = l.coeff(i).num();
    for (int j = 0; j <= p.degree(); ++j) {
      if (sgn(p[j]) == 0) continue;
      for (int n = 0; n <= T - ord; ++n) {
        const int k = n - j + i;
        if (n - j < 0 || k > T) continue;
        Rat term = p[j] * s.coeffs[k];
        for (int t = 1; t <= i; ++t) term *= (n - j + t);
        out.coeffs[n] += term;
      }
    }
  }
  return out;
}

SequenceWindow apply(const OreOperator& p, const SequenceWindow& w) {
  if (p.kind() != OreKind::Shift)
    throw Error(ErrorCode::KindMismatch, "only shift operators act on sequences");
  const long ord = std::max(p.order(), 0);
  const long len = static_cast<long>(w.values.size());
  if (len <= ord) throw Error(ErrorCode::WindowTooShort, "sequence window shorter than recurrence order + 1");
  SequenceWindow out{w.start, {}};
  for (long k = 0; k + ord < len; ++k) {
    Rat n(w.start + k);
    Rat acc = 0;
    for (int i = 0; i <= p.order(); ++i) {
      if (p.coeff(i).is_zero()) continue;
      acc += p.coeff(i).eval(n) * w.values[k + i];
    }
    out.values.push_back(acc);
  }
  return out;
}

OreDivMod right_divmod(const OreOperator& a, const OreOperator& b) {
  check_kind(a, b);
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroOperator, "right division by the zero operator");
  OreOperator q(a.kind()), r = a;
  const int db = b.order();
  while (!r.is_zero() && r.order() >= db) {
    const int k = r.order() - db;
    // G^k * b has leading coefficient twist^k(lc(b)) for Shift and lc(b) for Diff.
    RatFunc lead = b.lc();
    if (a.kind() == OreKind::Shift) lead = lead.shift(k);
    std::vector<RatFunc> tc(static_cast<std::size_t>(k) + 1);
    tc[k] = r.lc() / lead;
    OreOperator t(a.kind(), std::move(tc));
    q += t;
    r -= multiply(t, b);
  }
  return {q, r};
}

OreOperator gcrd(const OreOperator& a, const OreOperator& b) {
  check_kind(a, b);
  OreOperator x = a, y = b;
  while (!y.is_zero()) {
    OreOperator r = right_divmod(x, y).rem;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

OreOperator lclm(const OreOperator& a, const OreOperator& b) {
  check_kind(a, b);
  if (a.is_zero() || b.is_zero()) return OreOperator(a.kind());
  OreOperator r0 = a, r1 = b;
  OreOperator s0 = OreOperator::scalar(a.kind(), 1), s1(a.kind());
  while (!r1.is_zero()) {
    auto [q, r] = right_divmod(r0, r1);
    OreOperator s2 = s0 - multiply(q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // s1 * a + t1 * b = 0, so s1 * a is a common left multiple of minimal order.
  return multiply(s1, a).monic();
}

}  // namespace stab
