#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stab/ratfunc.hpp"
#include "stab/series.hpp"

namespace stab {

enum class OreKind { Diff, Shift };

/// Element of Q(x)<D> (Diff, D*f = f*D + f') or Q(n)<S> (Shift, S*r = r(n+1)*S).
/// Coefficient i multiplies D^i or S^i on the right: L = sum_i c_i * D^i.
class OreOperator {
 public:
  explicit OreOperator(OreKind kind) : kind_(kind) {}
  OreOperator(OreKind kind, std::vector<RatFunc> coeffs);

  static OreOperator scalar(OreKind kind, const RatFunc& r);
  /// D or S.
  static OreOperator generator(OreKind kind);

  OreKind kind() const { return kind_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero operator.
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const RatFunc& coeff(int i) const;
  const std::vector<RatFunc>& coeffs() const { return c_; }
  const RatFunc& lc() const { return coeff(order()); }
  /// Max numerator degree after clearing denominators (the degree of the
  /// polynomial-coefficient representative).
  int degree() const;
  bool has_polynomial_coeffs() const;

  OreOperator& operator+=(const OreOperator& o);
  OreOperator& operator-=(const OreOperator& o);
  friend OreOperator operator+(OreOperator a, const OreOperator& b) { return a += b; }
  friend OreOperator operator-(OreOperator a, const OreOperator& b) { return a -= b; }
  OreOperator operator-() const;
  /// Left multiplication by a scalar: r * L.
  friend OreOperator operator*(const RatFunc& r, const OreOperator& l);
  friend bool operator==(const OreOperator& a, const OreOperator& b) {
    return a.kind_ == b.kind_ && a.c_ == b.c_;
  }

  /// Left-multiplied by 1/lc.
  OreOperator monic() const;
  /// Left-multiplied by a rational function so that all coefficients are
  /// polynomials and the leading coefficient has leading term 1. Diff
  /// operators also lose their polynomial content; Shift operators keep it,
  /// since dividing a recurrence by p(n) drops its constraints at the
  /// integer roots of p.
  OreOperator normalized() const;

  std::string str() const;

 private:
  void trim();
  OreKind kind_;
  std::vector<RatFunc> c_;
};

/// Variable name used by coefficients: "x" for Diff, "n" for Shift.
const char* coeff_var(OreKind kind);

OreOperator multiply(const OreOperator& a, const OreOperator& b);
inline OreOperator operator*(const OreOperator& a, const OreOperator& b) { return multiply(a, b); }

/// L(f) = sum c_i f^(i) for a Diff operator.
RatFunc apply(const OreOperator& l, const RatFunc& f);
/// Coefficientwise action of a Diff operator with polynomial coefficients.
/// The result keeps only the reliable prefix: indices 0 .. T - ord(L).
TruncSeries apply(const OreOperator& l, const TruncSeries& s);
/// P(a)_n = sum p_i(n) a_{n+i} for a Shift operator; the result starts at
/// w.start and has len - ord(P) terms.
SequenceWindow apply(const OreOperator& p, const SequenceWindow& w);

struct OreDivMod {
  OreOperator quot;
  OreOperator rem;
};

/// a = quot * b + rem with ord(rem) < ord(b).
OreDivMod right_divmod(const OreOperator& a, const OreOperator& b);
OreOperator gcrd(const OreOperator& a, const OreOperator& b);
OreOperator lclm(const OreOperator& a, const OreOperator& b);

}  // namespace stab
