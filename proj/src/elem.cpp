#include "stab/elem.hpp"

#include "stab/error.hpp"
#include "stab/integrate.hpp"

namespace stab {

// ---------------------------------------------------------------- ElemExpr

ElemExpr ElemExpr::rational(const RatFunc& f) {
  ElemExpr e{{f}, std::nullopt};
  e.canonicalize();
  return e;
}

ElemExpr ElemExpr::log_term(const RatFunc& f, int m) {
  ElemExpr e;
  e.log_coeffs.resize(static_cast<std::size_t>(m) + 1);
  e.log_coeffs[m] = f;
  e.canonicalize();
  return e;
}

ElemExpr ElemExpr::exp_term(const RatFunc& f, const RatFunc& g) {
  ElemExpr e{{f}, g};
  e.canonicalize();
  return e;
}

const RatFunc& ElemExpr::coeff(int j) const {
  static const RatFunc zero;
  if (j < 0 || j > log_degree()) return zero;
  return log_coeffs[j];
}

void ElemExpr::canonicalize() {
  while (!log_coeffs.empty() && log_coeffs.back().is_zero()) log_coeffs.pop_back();
  if (log_coeffs.empty() || (expo && expo->is_zero())) expo.reset();
}

namespace {

// True when s has a + or - outside parentheses (so it needs them as a factor).
bool top_level_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && s[i] == ' ') return true;
  }
  return false;
}

std::string paren(const std::string& s) { return top_level_sum(s) ? "(" + s + ")" : s; }

void append_term(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (term[0] == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

// factor * tail, keeping a leading minus outside when factor is atomic
std::string times(const std::string& factor, const std::string& tail) {
  if (factor == "1") return tail;
  if (factor == "-1") return "-" + tail;
  return paren(factor) + "*" + tail;
}

std::string log_power(const std::string& arg, int j) {
  std::string s = "log(" + arg + ")";
  if (j > 1) s += "^" + std::to_string(j);
  return s;
}

std::string with_exp(const std::string& inner, const std::optional<RatFunc>& expo) {
  if (!expo) return inner;
  return times(inner, "exp(" + expo->str() + ")");
}

}  // namespace

std::string ElemExpr::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int j = 0; j <= log_degree(); ++j) {
    if (log_coeffs[j].is_zero()) continue;
    std::string c = log_coeffs[j].str();
    append_term(out, j == 0 ? c : times(c, log_power("x", j)));
  }
  return with_exp(out, expo);
}

ElemExpr derivative(const ElemExpr& e) {
  ElemExpr r;
  r.expo = e.expo;
  r.log_coeffs.resize(e.log_coeffs.size());
  RatFunc gp = e.expo ? derivative(*e.expo) : RatFunc();
  const RatFunc inv_x = RatFunc(1) / RatFunc::x();
  for (int j = 0; j <= e.log_degree(); ++j) {
    const RatFunc& f = e.log_coeffs[j];
    r.log_coeffs[j] += derivative(f) + f * gp;
    if (j > 0) r.log_coeffs[j - 1] += RatFunc(j) * f * inv_x;
  }
  r.canonicalize();
  return r;
}

ElemExpr times_x(const ElemExpr& e) {
  ElemExpr r = e;
  for (auto& f : r.log_coeffs) f *= RatFunc::x();
  r.canonicalize();
  return r;
}

// ------------------------------------------------------ arithmetic mod B

namespace {

Poly reduce(const Poly& p, const Poly& B) {
  if (B.degree() <= 0) return Poly();
  return p % B;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& B) { return reduce(a * b, B); }

Poly invmod(const Poly& a, const Poly& B) {
  ExtGcd eg = ext_gcd(reduce(a, B), B);
  if (eg.g.degree() != 0) throw Error(ErrorCode::InvalidArgument, "element not invertible modulo " + B.str());
  return reduce(eg.s * (1 / eg.g[0]), B);
}

// Newton power sums p_0 .. p_{d-1} of the roots of a monic B.
std::vector<Rat> power_sums(const Poly& B) {
  const int d = B.degree();
  std::vector<Rat> p(static_cast<std::size_t>(std::max(d, 0)));
  if (d <= 0) return p;
  p[0] = d;
  for (int k = 1; k < d; ++k) {
    Rat s = B[d - k] * k;
    for (int i = 1; i < k; ++i) s += B[d - i] * p[k - i];
    p[k] = -s;
  }
  return p;
}

}  // namespace

Rat trace_mod(const Poly& B, const Poly& c) {
  Poly cr = reduce(c, B);
  auto p = power_sums(B);
  Rat t = 0;
  for (int i = 0; i <= cr.degree(); ++i) t += cr[i] * p[i];
  return t;
}

RatFunc sum_over_roots(const Poly& B, const Poly& c, int e) {
  if (B.degree() <= 0) return RatFunc();
  const Poly alpha = Poly::x();
  if (e >= 0) {
    // sum_t binom(e, t) x^t Tr(c * (-a)^(e-t))
    std::vector<Rat> out(static_cast<std::size_t>(e) + 1);
    Poly neg_pow = 1;  // (-a)^(e-t), built from t = e downwards
    for (int t = e; t >= 0; --t) {
      out[t] = binomial(e, t) * trace_mod(B, mulmod(c, neg_pow, B));
      neg_pow = mulmod(neg_pow, -alpha, B);
    }
    return RatFunc(Poly(std::move(out)));
  }
  // sum c(a)/(x - a) = A(x)/B(x) with A_t = Tr(c * q_t), B(x)/(x - a) = sum q_t(a) x^t
  const int d = B.degree();
  std::vector<Rat> A(static_cast<std::size_t>(d));
  Poly q = 1;
  for (int t = d - 1; t >= 0; --t) {
    A[t] = trace_mod(B, mulmod(c, q, B));
    q = reduce(Poly(B[t]) + alpha * q, B);
  }
  RatFunc s(Poly(std::move(A)), B);
  const int k = -e;
  for (int i = 1; i < k; ++i) s = derivative(s);
  Rat scale = (k % 2 == 1 ? Rat(1) : Rat(-1)) / factorial(k - 1);
  return s * RatFunc(scale);
}

// ------------------------------------------------------------- ClosedForm

ClosedForm::ClosedForm(Poly modulus, RatFunc rational, std::vector<RootLaurent> logs,
                       std::optional<RatFunc> expo)
    : modulus_(modulus.is_zero() ? Poly(1) : modulus.monic()),
      rational_(std::move(rational)),
      logs_(std::move(logs)),
      expo_(std::move(expo)) {
  canonicalize();
}

void ClosedForm::canonicalize() {
  for (auto& level : logs_) {
    for (auto it = level.begin(); it != level.end();) {
      it->second = reduce(it->second, modulus_);
      it = it->second.is_zero() ? level.erase(it) : std::next(it);
    }
  }
  while (!logs_.empty() && logs_.back().empty()) logs_.pop_back();
  if (expo_ && expo_->is_zero()) expo_.reset();
  if (rational_.is_zero() && logs_.empty()) expo_.reset();
}

Poly ClosedForm::modulus_for(const ElemExpr& e) {
  Poly den = 1;
  for (const auto& f : e.log_coeffs) den = lcm(den, f.den());
  if (e.log_degree() >= 1 && !divides(Poly::x(), den)) den *= Poly::x();
  return radical(den);
}

ClosedForm ClosedForm::from_elem(const ElemExpr& e, const Poly& modulus) {
  std::vector<RootLaurent> logs;
  if (e.log_degree() >= 1) {
    if (!divides(Poly::x(), modulus))
      throw Error(ErrorCode::InvalidArgument, "log(x) terms need x to divide the modulus");
    Poly rest = modulus.monic() / Poly::x();
    Poly e0 = rest * (1 / rest.eval(0));
    for (int j = 1; j <= e.log_degree(); ++j) {
      auto lr = is_laurent(e.log_coeffs[j]);
      if (!lr) throw Error(ErrorCode::Unsupported, "coefficient of log(x) is not a Laurent polynomial");
      RootLaurent level;
      for (const auto& [k, c] : lr->terms) level[k] = e0 * c;
      logs.push_back(std::move(level));
    }
  }
  return ClosedForm(modulus, e.coeff(0), std::move(logs), e.expo);
}

ClosedForm ClosedForm::lift(const Poly& target) const {
  Poly T = target.monic();
  if (!divides(modulus_, T)) throw Error(ErrorCode::InvalidArgument, "lift target is not a multiple of the modulus");
  if (T == modulus_) return *this;
  std::vector<RootLaurent> logs = logs_;
  if (!logs.empty()) {
    Poly cof = T / modulus_;
    Poly e = mulmod(cof, invmod(cof, modulus_), T);  // 1 on roots of the modulus, 0 elsewhere
    for (auto& level : logs)
      for (auto& [k, c] : level) c = mulmod(c, e, T);
  }
  return ClosedForm(T, rational_, std::move(logs), expo_);
}

bool operator==(const ClosedForm& a, const ClosedForm& b) {
  if (a.modulus_ != b.modulus_) {
    Poly l = lcm(a.modulus_, b.modulus_);
    return a.lift(l) == b.lift(l);
  }
  return a.rational_ == b.rational_ && a.logs_ == b.logs_ && a.expo_ == b.expo_;
}

namespace {

ClosedForm scale_form(const ClosedForm& f, const RatFunc& lambda) {
  if (!lambda.is_constant()) throw Error(ErrorCode::Unsupported, "non-constant exponent derivative with logarithms");
  const Rat l = lambda.constant_value();
  std::vector<RootLaurent> logs = f.logs();
  for (auto& level : logs)
    for (auto& [k, c] : level) c *= l;
  return ClosedForm(f.modulus(), f.rational() * lambda, std::move(logs), f.expo());
}

ClosedForm times_x(const ClosedForm& f) {
  const Poly& B = f.modulus();
  std::vector<RootLaurent> logs;
  for (const auto& level : f.logs()) {
    RootLaurent out;
    // x = u + a
    for (const auto& [k, c] : level) {
      out[k + 1] += c;
      out[k] += mulmod(Poly::x(), c, B);
    }
    logs.push_back(std::move(out));
  }
  return ClosedForm(B, f.rational() * RatFunc::x(), std::move(logs), f.expo());
}

}  // namespace

ClosedForm derivative(const ClosedForm& f, Derivation d) {
  if (d == Derivation::EulerXDDx) return times_x(derivative(f, Derivation::DDx));
  const Poly& B = f.modulus_;
  RatFunc rational = derivative(f.rational_);
  std::vector<RootLaurent> logs(f.logs_.size());
  for (std::size_t lv = 0; lv < f.logs_.size(); ++lv) {
    const int j = static_cast<int>(lv) + 1;
    for (const auto& [k, c] : f.logs_[lv]) {
      if (k != 0) logs[lv][k - 1] += c * Rat(k);
      if (j > 1) {
        logs[lv - 1][k - 1] += c * Rat(j);
      } else {
        rational += sum_over_roots(B, c * Rat(j), k - 1);
      }
    }
  }
  if (f.expo_) {
    RatFunc gp = derivative(*f.expo_);
    if (!f.logs_.empty() && !gp.is_zero()) {
      ClosedForm extra = scale_form(f, gp);
      for (std::size_t lv = 0; lv < extra.logs_.size(); ++lv)
        for (const auto& [k, c] : extra.logs_[lv]) logs[lv][k] += c;
    }
    rational += f.rational_ * gp;
  }
  return ClosedForm(B, rational, std::move(logs), f.expo_);
}

ClosedForm integrate(const ClosedForm& f, Derivation d) {
  const Poly& B = f.modulus_;
  if (d == Derivation::EulerXDDx) {
    if (f.expo_ || !f.logs_.empty()) throw Error(ErrorCode::Unsupported, "Euler integration only covers rational input");
    auto lr = is_laurent(f.rational_);
    if (!lr) throw Error(ErrorCode::Unsupported, "Euler integration needs a Laurent polynomial");
    std::map<int, Rat> out;
    for (const auto& [i, c] : lr->terms) {
      if (i == 0) throw Error(ErrorCode::Unsupported, "nonzero constant term has no Euler antiderivative");
      out[i] = c / i;
    }
    return ClosedForm(B, from_laurent(out), {}, std::nullopt);
  }

  if (f.expo_) {
    RatFunc gp = derivative(*f.expo_);
    if (!gp.is_zero()) {
      if (!f.logs_.empty()) throw Error(ErrorCode::Unsupported, "exp combined with logarithms");
      auto r = fexpg_solve(f.rational_, gp);
      if (r.status == FexpgStatus::Unsupported) throw Error(ErrorCode::Unsupported, r.detail);
      if (r.status == FexpgStatus::NoSolution)
        throw Error(ErrorCode::Unsupported, "no antiderivative of the form h*exp(g) with h rational");
      return ClosedForm(B, r.h, {}, f.expo_);
    }
  }

  HermiteResult h = hermite_reduce(f.rational_);
  RatFunc rational = h.rational_part;
  std::vector<RootLaurent> logs(f.logs_.size() + 1);
  if (!h.simple_part.is_zero()) {
    const Poly& a = h.simple_part.num();
    const Poly& b = h.simple_part.den();
    if (!divides(b, B)) throw Error(ErrorCode::Unsupported, "pole outside the modulus " + B.str());
    Poly c = mulmod(mulmod(a, B / b, B), invmod(B.derivative(), B), B);
    logs[0][0] += c;
  }
  for (std::size_t lv = 0; lv < f.logs_.size(); ++lv) {
    const int j = static_cast<int>(lv) + 1;
    for (const auto& [k, c] : f.logs_[lv]) {
      if (k == -1) {
        logs[lv + 1][0] += c * Rat(1, j + 1);
        continue;
      }
      // u^(k+1) * sum_i (-1)^i j!/(j-i)! / (k+1)^(i+1) * log^(j-i)
      Rat coef = Rat(1) / (k + 1);
      for (int i = 0; i <= j; ++i) {
        const int level = j - i;
        if (level >= 1) {
          logs[level - 1][k + 1] += c * coef;
        } else {
          rational += sum_over_roots(B, c * coef, k + 1);
        }
        coef *= Rat(-(j - i)) / (k + 1);
      }
    }
  }
  return ClosedForm(B, rational, std::move(logs), f.expo_);
}

std::string ClosedForm::str() const {
  std::string out;
  if (!rational_.is_zero()) out = rational_.str();
  if (!logs_.empty()) {
    auto roots = rational_roots(modulus_);
    const bool split = static_cast<int>(roots.size()) == modulus_.degree();
    for (std::size_t lv = 0; lv < logs_.size(); ++lv) {
      const int j = static_cast<int>(lv) + 1;
      if (split) {
        for (const Rat& r : roots) {
          RatFunc coeff;
          const RatFunc u(Poly{-r, Rat(1)});
          for (const auto& [k, c] : logs_[lv]) {
            Rat v = c.eval(r);
            if (sgn(v) != 0) coeff += u.pow(k) * RatFunc(v);
          }
          if (coeff.is_zero()) continue;
          append_term(out, times(coeff.str(), log_power(Poly{-r, Rat(1)}.str(), j)));
        }
      } else {
        std::string inner;
        for (const auto& [k, c] : logs_[lv]) {
          std::string ck = c.str("a");
          std::string uk = k == 0 ? "" : (k == 1 ? "(x - a)" : "(x - a)^" + (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k)));
          append_term(inner, uk.empty() ? ck : times(ck, uk));
        }
        append_term(out, "rootsum(" + modulus_.str("a") + " = 0, " + times(inner, log_power("x - a", j)) + ")");
      }
    }
  }
  if (out.empty()) out = "0";
  return with_exp(out, expo_);
}

}  // namespace stab
