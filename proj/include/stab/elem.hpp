#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stab/ratfunc.hpp"

namespace stab {

/// sum_j f_j(x) * log(x)^j, optionally times exp(g). A single term
/// f*log(x)^m*exp(g) is the common case; sums arise from differentiation.
struct ElemExpr {
  std::vector<RatFunc> log_coeffs;  // index j multiplies log(x)^j; no trailing zeros
  std::optional<RatFunc> expo;      // exponent g of exp(g); absent means exp(0)

  static ElemExpr rational(const RatFunc& f);
  static ElemExpr log_term(const RatFunc& f, int m);
  static ElemExpr exp_term(const RatFunc& f, const RatFunc& g);

  /// Highest log power present; -1 for zero.
  int log_degree() const { return static_cast<int>(log_coeffs.size()) - 1; }
  bool is_zero() const { return log_coeffs.empty(); }
  const RatFunc& coeff(int j) const;
  void canonicalize();

  friend bool operator==(const ElemExpr&, const ElemExpr&) = default;
  std::string str() const;
};

/// d/dx; requires g' constant when log terms and exp are mixed.
ElemExpr derivative(const ElemExpr& e);
ElemExpr times_x(const ElemExpr& e);

/// Laurent polynomial in u = x - a whose coefficients live in Q[a]/(B).
using RootLaurent = std::map<int, Poly>;

/// Closed form used for antiderivative chains:
///   exp(g) * ( R(x) + sum_{j>=1} sum_{B(a)=0} P_j(x - a, a) * log(x - a)^j )
/// with B squarefree and monic. For B = x this is the log(x) fragment; for a
/// general B it carries the logarithms produced by integrating rational
/// functions whose poles are the roots of B, without splitting B.
class ClosedForm {
 public:
  ClosedForm() : modulus_(1) {}
  ClosedForm(Poly modulus, RatFunc rational, std::vector<RootLaurent> logs,
             std::optional<RatFunc> expo = std::nullopt);

  /// The same function in this representation; log(x) terms need x | modulus.
  static ClosedForm from_elem(const ElemExpr& e, const Poly& modulus);
  /// Smallest modulus able to hold every antiderivative of e.
  static Poly modulus_for(const ElemExpr& e);

  const Poly& modulus() const { return modulus_; }
  const RatFunc& rational() const { return rational_; }
  const std::vector<RootLaurent>& logs() const { return logs_; }
  const std::optional<RatFunc>& expo() const { return expo_; }
  bool has_logs() const { return !logs_.empty(); }

  /// Same function over a multiple of the modulus.
  ClosedForm lift(const Poly& target) const;

  /// Equality as functions; forms over different moduli are compared over their lcm.
  friend bool operator==(const ClosedForm& a, const ClosedForm& b);

  std::string str() const;

 private:
  void canonicalize();
  Poly modulus_;
  RatFunc rational_;
  std::vector<RootLaurent> logs_;  // logs_[j-1] multiplies log(x - a)^j
  std::optional<RatFunc> expo_;

  friend ClosedForm derivative(const ClosedForm& f, Derivation d);
  friend ClosedForm integrate(const ClosedForm& f, Derivation d);
};

ClosedForm derivative(const ClosedForm& f, Derivation d = Derivation::DDx);
/// One antiderivative with zero integration constant. Throws Unsupported
/// outside the closed classes (exp with a non-linear exponent, exp mixed with
/// logs, Euler integration of non-Laurent input).
ClosedForm integrate(const ClosedForm& f, Derivation d = Derivation::DDx);

/// sum over roots a of B of c(a) * (x - a)^e, as an element of Q(x).
RatFunc sum_over_roots(const Poly& modulus, const Poly& c, int e);
/// sum over roots a of B of c(a).
Rat trace_mod(const Poly& modulus, const Poly& c);

}  // namespace stab
