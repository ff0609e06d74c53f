#include "stab/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "stab/error.hpp"
#include "stab/linalg.hpp"

namespace stab {

namespace {

const Rat kZero = 0;

Int rho_factor(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto f = [&](const Int& v) {
      Int r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Int diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Int n, std::map<Int, int>& out) {
  if (n == 1) return;
  for (unsigned long p = 2; p < 10000 && Int(p) * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Int(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    ++out[n];
    return;
  }
  Int d = rho_factor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

Rat eval_int(const std::vector<Int>& c, const Int& v) {
  Int acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + *it;
  return Rat(acc);
}

}  // namespace

Poly::Poly(const Rat& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

Poly Poly::monomial(const Rat& c, int k) {
  if (sgn(c) == 0) return {};
  std::vector<Rat> v(static_cast<std::size_t>(k) + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Rat& Poly::operator[](int i) const {
  if (i < 0 || i > degree()) return kZero;
  return c_[i];
}

const Rat& Poly::lc() const { return is_zero() ? kZero : c_.back(); }

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(r));
}

Poly Poly::integral() const {
  if (is_zero()) return {};
  std::vector<Rat> r(c_.size() + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i] / static_cast<long>(i + 1);
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return *this * Rat(1 / lc());
}

Rat Poly::eval(const Rat& v) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

Poly Poly::compose(const Poly& q) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Poly(*it);
  return acc;
}

Poly Poly::shift(const Rat& a) const { return compose(Poly{a, 1}); }

Poly Poly::mul_xpow(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rat> r(static_cast<std::size_t>(k), Rat(0));
  r.insert(r.end(), c_.begin(), c_.end());
  return Poly(std::move(r));
}

int Poly::low_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return static_cast<int>(i);
  return 0;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (sgn(c) == 0) continue;
    Rat a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << rat_str(a);
      continue;
    }
    if (a != 1) os << rat_str(a) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const int db = b.degree();
  Rat inv = 1 / b.lc();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rat c = r[k + db] * inv;
    q[k] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= db; ++j) r[k + j] -= c * b[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
  return q;
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).rem; }

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (a * (b / gcd(a, b))).monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  Rat inv = 1 / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::pair<Poly, Poly> solve_bezout(const Poly& a, const Poly& b, const Poly& c) {
  auto eg = ext_gcd(a, b);
  auto [q, r] = divmod(c, eg.g);
  if (!r.is_zero()) throw Error(ErrorCode::PreconditionViolated, "gcd does not divide right-hand side");
  Poly s = eg.s * q;
  Poly t = eg.t * q;
  if (!b.is_zero() && s.degree() >= b.degree()) {
    auto [q2, r2] = divmod(s, b);
    s = r2;
    t += q2 * a;
  }
  return {s, t};
}

Poly pow(const Poly& p, unsigned e) {
  Poly r = 1, b = p;
  while (e > 0) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return r;
}

std::vector<Int> primitive_integer(const Poly& p) {
  if (p.is_zero()) return {};
  Int den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> r;
  Int g = 0;
  for (const auto& c : p.coeffs()) {
    Int v = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    r.push_back(v);
  }
  if (sgn(r.back()) < 0) g = -g;
  for (auto& v : r) v /= g;
  return r;
}

Rat resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree(), n = b.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) {
    Rat r = 1;
    for (int i = 0; i < n; ++i) r *= a.lc();
    return r;
  }
  if (n == 0) {
    Rat r = 1;
    for (int i = 0; i < m; ++i) r *= b.lc();
    return r;
  }
  Matrix s(m + n, m + n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s(i, i + j) = a[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s(n + i, i + j) = b[n - j];
  return determinant(std::move(s));
}

std::vector<Int> divisors(const Int& n) {
  std::map<Int, int> fac;
  factor_into(abs(n), fac);
  std::vector<Int> out{1};
  for (const auto& [p, e] : fac) {
    const std::size_t sz = out.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rat> rational_roots(const Poly& p) {
  std::vector<Rat> roots;
  if (p.degree() < 1) return roots;
  const int low = p.low_degree();
  if (low > 0) roots.push_back(0);
  std::vector<Rat> shifted(p.coeffs().begin() + low, p.coeffs().end());
  Poly q(std::move(shifted));
  if (q.degree() < 1) return roots;
  auto ic = primitive_integer(q);
  auto num_divs = divisors(ic.front());
  auto den_divs = divisors(ic.back());
  for (const auto& d : den_divs) {
    for (const auto& nd : num_divs) {
      for (int s : {1, -1}) {
        Rat cand(nd * s, d);
        cand.canonicalize();
        if (cand.get_den() != d) continue;  // seen with a smaller denominator
        if (sgn(q.eval(cand)) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<Int> integer_roots(const Poly& p) {
  std::vector<Int> roots;
  if (p.degree() < 1) return roots;
  const int low = p.low_degree();
  if (low > 0) roots.push_back(0);
  std::vector<Rat> shifted(p.coeffs().begin() + low, p.coeffs().end());
  Poly q(std::move(shifted));
  if (q.degree() < 1) return roots;
  auto ic = primitive_integer(q);
  for (const auto& d : divisors(ic.front())) {
    for (int s : {1, -1}) {
      Int cand = d * s;
      if (sgn(eval_int(ic, cand)) == 0) roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool is_squarefree(const Poly& p) { return gcd(p, p.derivative()).degree() == 0; }

bool is_irreducible(const Poly& p) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  if (!is_squarefree(p)) return false;
  if (!rational_roots(p).empty()) return false;
  if (p.degree() <= 3) return true;

  auto ic = primitive_integer(p);
  Poly pz;
  {
    std::vector<Rat> v(ic.begin(), ic.end());
    pz = Poly(std::move(v));
  }
  const int n = p.degree();
  std::vector<std::pair<Int, std::vector<Int>>> points;  // (x, divisors of |p(x)|)
  for (long v = -24; v <= 24; ++v) {
    Int val = eval_int(ic, Int(v)).get_num();
    points.emplace_back(Int(v), divisors(val));
  }
  std::sort(points.begin(), points.end(), [](const auto& l, const auto& r) {
    return l.second.size() < r.second.size();
  });

  constexpr double kMaxCandidates = 2e6;
  for (int d = 2; d <= n / 2; ++d) {
    std::vector<Rat> xs;
    std::vector<const std::vector<Int>*> divs;
    double total = 1;
    for (int k = 0; k <= d; ++k) {
      xs.emplace_back(points[k].first);
      divs.push_back(&points[k].second);
      total *= static_cast<double>(points[k].second.size()) * (k == 0 ? 1 : 2);
    }
    if (total > kMaxCandidates)
      throw Error(ErrorCode::Unsupported, "irreducibility test exceeds trial-factorization budget");
    std::vector<std::size_t> choice(d + 1, 0);
    std::vector<Rat> ys(d + 1);
    auto count = [&](int k) { return divs[k]->size() * (k == 0 ? 1 : 2); };
    for (;;) {
      for (int k = 0; k <= d; ++k) {
        const std::size_t c = choice[k];
        const std::size_t i = k == 0 ? c : c / 2;
        const int s = (k == 0 || c % 2 == 0) ? 1 : -1;
        ys[k] = Rat((*divs[k])[i] * s);
      }
      Poly q = interpolate(xs, ys);
      if (q.degree() == d) {
        bool integral = std::all_of(q.coeffs().begin(), q.coeffs().end(),
                                    [](const Rat& c) { return c.get_den() == 1; });
        if (integral && divides(q, pz)) return false;
      }
      int k = 0;
      while (k <= d && ++choice[k] == count(k)) choice[k++] = 0;
      if (k > d) break;
    }
  }
  return true;
}

Poly interpolate(std::span<const Rat> xs, std::span<const Rat> ys) {
  Poly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis = 1;
    Rat denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis *= Poly{-xs[j], 1};
      denom *= xs[i] - xs[j];
    }
    acc += basis * Rat(ys[i] / denom);
  }
  return acc;
}

Rat binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(r);
}

Rat factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(r);
}

}  // namespace stab
