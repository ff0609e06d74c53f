#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stab/poly.hpp"

namespace stab {

/// Element of Q(x): num/den with gcd 1 and monic den. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rat(c)) {}         // NOLINT(google-explicit-constructor)
  RatFunc(int c) : RatFunc(Rat(c)) {}          // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc x() { return RatFunc(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
  /// Constant value; requires is_constant().
  Rat constant_value() const { return num_[0]; }
  /// deg(num) - deg(den); meaningless for zero.
  int degree() const { return num_.degree() - den_.degree(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const { return RatFunc(-num_, den_, Canonical{}); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc pow(int e) const;
  Rat eval(const Rat& v) const;
  /// this(x + a).
  RatFunc shift(const Rat& a) const;
  /// this(q) for a rational function q.
  RatFunc compose(const RatFunc& q) const;

  std::string str(std::string_view var = "x") const;

 private:
  struct Canonical {};
  RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

enum class Derivation { DDx, EulerXDDx };

std::string_view to_string(Derivation d);

/// Image of x under the derivation: 1 for d/dx, x for x*d/dx.
RatFunc derivation_of_x(Derivation d);

RatFunc derivative(const RatFunc& f, Derivation d = Derivation::DDx);
Poly derivative(const Poly& p, Derivation d);

/// Order of f at the irreducible polynomial p; nullopt stands for +infinity (f = 0).
std::optional<int> nu(const RatFunc& f, const Poly& p);

/// Nonzero constants are both normal and special; they classify as Special.
enum class PolyClass { Normal, Special, Neither };
std::string_view to_string(PolyClass c);

PolyClass classify_polynomial(const Poly& p, Derivation d);

struct SqfFactor {
  Poly factor;
  int multiplicity;
};

/// Yun's algorithm. Factors are monic, squarefree, pairwise coprime and listed
/// with strictly increasing multiplicity.
std::vector<SqfFactor> squarefree_factorization(const Poly& p);

/// Squarefree part (product of the distinct monic irreducible factors).
Poly radical(const Poly& p);

struct HermiteResult {
  RatFunc rational_part;
  RatFunc simple_part;
};

/// f = d/dx(rational_part) + simple_part, with simple_part proper and its
/// denominator squarefree. The polynomial part of f goes into rational_part.
HermiteResult hermite_reduce(const RatFunc& f);

struct LaurentInfo {
  int lowest;                   // lowest exponent present (0 for f = 0)
  std::map<int, Rat> terms;     // exponent -> coefficient
};

/// Laurent polynomial view when den is a power of x.
std::optional<LaurentInfo> is_laurent(const RatFunc& f);

RatFunc from_laurent(const std::map<int, Rat>& terms);

}  // namespace stab
