#include "stab/ratfunc.hpp"

#include "stab/error.hpp"

namespace stab {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = 1;
    return;
  }
  Poly g = gcd(num, den);
  Poly n = num / g;
  Poly d = den / g;
  Rat l = d.lc();
  num_ = n * Rat(1 / l);
  den_ = d * Rat(1 / l);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    *this = RatFunc(num_ + o.num_, den_);
  } else {
    *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  *this = RatFunc(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero rational function");
  *this = RatFunc(num_ * o.den_, den_ * o.num_);
  return *this;
}

RatFunc RatFunc::pow(int e) const {
  if (e >= 0) return RatFunc(stab::pow(num_, e), stab::pow(den_, e));
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
  return RatFunc(stab::pow(den_, -e), stab::pow(num_, -e));
}

Rat RatFunc::eval(const Rat& v) const {
  Rat d = den_.eval(v);
  if (sgn(d) == 0) throw Error(ErrorCode::DivisionByZero, "evaluation at a pole");
  return num_.eval(v) / d;
}

RatFunc RatFunc::shift(const Rat& a) const { return RatFunc(num_.shift(a), den_.shift(a)); }

RatFunc RatFunc::compose(const RatFunc& q) const {
  // Horner in Q(x) for numerator and denominator separately.
  auto horner = [&](const Poly& p) {
    RatFunc acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * q + RatFunc(p[i]);
    return acc;
  };
  return horner(num_) / horner(den_);
}

std::string RatFunc::str(std::string_view var) const {
  if (den_.degree() == 0) return num_.str(var);
  if (sgn(num_.lc()) < 0) return "-" + (-*this).str(var);
  auto wrap = [&](const Poly& p) {
    std::string s = p.str(var);
    bool atom = p.degree() == 0 ? sgn(p.lc()) > 0 && p.lc().get_den() == 1
                                : (p.coeffs().size() - static_cast<std::size_t>(p.low_degree()) == 1 &&
                                   p.lc() == 1);
    return atom ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

std::string_view to_string(Derivation d) {
  return d == Derivation::DDx ? "ddx" : "euler";
}

RatFunc derivation_of_x(Derivation d) {
  return d == Derivation::DDx ? RatFunc(1) : RatFunc::x();
}

Poly derivative(const Poly& p, Derivation d) {
  Poly dp = p.derivative();
  return d == Derivation::DDx ? dp : dp.mul_xpow(1);
}

RatFunc derivative(const RatFunc& f, Derivation d) {
  if (f.is_zero()) return {};
  const Poly& a = f.num();
  const Poly& b = f.den();
  RatFunc r(a.derivative() * b - a * b.derivative(), b * b);
  return d == Derivation::DDx ? r : r * RatFunc::x();
}

namespace {

int multiplicity(Poly a, const Poly& p) {
  int m = 0;
  for (;;) {
    auto [q, r] = divmod(a, p);
    if (!r.is_zero()) return m;
    a = std::move(q);
    ++m;
  }
}

}  // namespace

std::optional<int> nu(const RatFunc& f, const Poly& p) {
  if (p.degree() < 1 || !is_irreducible(p))
    throw Error(ErrorCode::NonIrreducibleModulus, "order requires an irreducible polynomial, got " + p.str());
  if (f.is_zero()) return std::nullopt;
  return multiplicity(f.num(), p) - multiplicity(f.den(), p);
}

std::string_view to_string(PolyClass c) {
  switch (c) {
    case PolyClass::Normal: return "normal";
    case PolyClass::Special: return "special";
    case PolyClass::Neither: return "neither";
  }
  return "?";
}

PolyClass classify_polynomial(const Poly& p, Derivation d) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "classify_polynomial of zero");
  Poly g = gcd(p, derivative(p, d));
  if (g.degree() == p.degree()) return PolyClass::Special;
  if (g.degree() == 0) return PolyClass::Normal;
  return PolyClass::Neither;
}

std::vector<SqfFactor> squarefree_factorization(const Poly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree_factorization of zero");
  std::vector<SqfFactor> out;
  if (p.degree() == 0) return out;
  Poly f = p.monic();
  Poly fp = f.derivative();
  Poly a = gcd(f, fp);
  Poly b = f / a;
  Poly c = fp / a;
  Poly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Poly g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = b / g;
    c = d / g;
    d = c - b.derivative();
  }
  return out;
}

Poly radical(const Poly& p) {
  if (p.is_zero()) return {};
  if (p.degree() == 0) return 1;
  return p.monic() / gcd(p, p.derivative());
}

HermiteResult hermite_reduce(const RatFunc& f) {
  auto [poly_part, a_rem] = divmod(f.num(), f.den());
  RatFunc g(poly_part.integral());
  Poly A = a_rem;
  const Poly& D = f.den();
  if (A.is_zero()) return {g, RatFunc()};
  Poly d_minus = gcd(D, D.derivative());
  Poly d_star = D / d_minus;
  while (d_minus.degree() > 0) {
    Poly d_minus2 = gcd(d_minus, d_minus.derivative());
    Poly d_minus_star = d_minus / d_minus2;
    Poly lhs = -(d_star * d_minus.derivative()) / d_minus;
    auto [B, C] = solve_bezout(lhs, d_minus_star, A);
    A = C - B.derivative() * (d_star / d_minus_star);
    g += RatFunc(B, d_minus);
    d_minus = d_minus2;
  }
  return {g, RatFunc(A, d_star)};
}

std::optional<LaurentInfo> is_laurent(const RatFunc& f) {
  const Poly& d = f.den();
  const int k = d.degree();
  if (!(d == Poly::monomial(1, k))) return std::nullopt;
  LaurentInfo info{0, {}};
  for (int i = 0; i <= f.num().degree(); ++i) {
    if (sgn(f.num()[i]) != 0) info.terms[i - k] = f.num()[i];
  }
  if (!info.terms.empty()) info.lowest = info.terms.begin()->first;
  return info;
}

RatFunc from_laurent(const std::map<int, Rat>& terms) {
  if (terms.empty()) return {};
  const int low = std::min(0, terms.begin()->first);
  std::vector<Rat> c(static_cast<std::size_t>(terms.rbegin()->first - low + 1));
  for (const auto& [e, v] : terms) c[e - low] = v;
  return RatFunc(Poly(std::move(c)), Poly::monomial(1, -low));
}

}  // namespace stab
