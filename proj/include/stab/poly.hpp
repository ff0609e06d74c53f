#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stab {

using Rat = mpq_class;
using Int = mpz_class;

/// Dense univariate polynomial over Q. Coefficient i multiplies var^i.
/// The zero polynomial has no stored coefficients and degree -1 (standing in
/// for -infinity).
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rat(c)) {}   // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly x() { return monomial(1, 1); }
  static Poly monomial(const Rat& c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rat& operator[](int i) const;
  const Rat& lc() const;
  std::span<const Rat> coeffs() const { return c_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly derivative() const;
  /// Antiderivative with zero constant term.
  Poly integral() const;
  Poly monic() const;
  Rat eval(const Rat& v) const;
  /// this(q(x)).
  Poly compose(const Poly& q) const;
  /// this(x + a).
  Poly shift(const Rat& a) const;
  /// Multiply by var^k (k >= 0).
  Poly mul_xpow(int k) const;
  /// Lowest index with a nonzero coefficient (0 for the zero polynomial).
  int low_degree() const;

  std::string str(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

struct DivMod {
  Poly quot;
  Poly rem;
};

DivMod divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // exact quotient, throws if rem != 0
Poly operator%(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

struct ExtGcd {
  Poly g;  // monic gcd
  Poly s;
  Poly t;  // s*a + t*b = g
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

/// Solves s*a + t*b = c with deg s < deg b. Requires gcd(a, b) | c.
std::pair<Poly, Poly> solve_bezout(const Poly& a, const Poly& b, const Poly& c);

Poly pow(const Poly& p, unsigned e);

/// Integer polynomial with coprime coefficients and positive leading coefficient,
/// a nonzero rational multiple of p.
std::vector<Int> primitive_integer(const Poly& p);

/// Sylvester resultant.
Rat resultant(const Poly& a, const Poly& b);

std::vector<Rat> rational_roots(const Poly& p);
std::vector<Int> integer_roots(const Poly& p);

/// Positive divisors of |n| (n != 0), sorted.
std::vector<Int> divisors(const Int& n);

bool is_squarefree(const Poly& p);
/// Irreducibility over Q. Degree <= 3 uses the rational-root criterion; higher
/// degrees use Kronecker's trial factorization. Throws Unsupported when the
/// candidate space is too large.
bool is_irreducible(const Poly& p);

/// Lagrange interpolation through (xs[i], ys[i]); xs distinct.
Poly interpolate(std::span<const Rat> xs, std::span<const Rat> ys);

Rat binomial(long n, long k);
Rat factorial(long n);

std::string rat_str(const Rat& r);

}  // namespace stab
