#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stab/ratfunc.hpp"

namespace stab {

/// g with delta(g) = f inside Q(x), if it exists.
std::optional<RatFunc> integrable_in_field(const RatFunc& f, Derivation d = Derivation::DDx);

struct LiouvilleHardy {
  Rat c;
  RatFunc g;  // f = c/x + g'
};

/// Succeeds exactly when f*log(x) has an elementary antiderivative.
std::optional<LiouvilleHardy> liouville_hardy(const RatFunc& f);

/// Res_x(b, a - z*b') as a polynomial in z, for f = a/b.
Poly residue_resultant(const RatFunc& f);

/// gcd(b, a - i*b') = 1 for every integer i, i.e. no residue at a simple pole
/// is an integer.
bool is_differential_reduced(const RatFunc& f);

struct RischSolution {
  Poly Q;
  int m;
  Poly P, a, b;  // P = b*Q' + (a + (m+1)*b')*Q
};

/// Polynomial Q with P = b*Q' + (a + (m+1)*b')*Q, where a/b must be the
/// derivative of a rational function and gcd(a, b) = 1. Then
/// P*b^m*exp(g) = (Q*b^(m+1)*exp(g))'. Returns nullopt when no polynomial
/// solution exists.
std::optional<RischSolution> risch_de_poly(const Poly& P, const Poly& a, const Poly& b, int m);

/// Degree of Q forced by the leading terms; negative means no solution for P != 0.
int risch_degree_bound(const Poly& P, const Poly& a, const Poly& b);

enum class FexpgStatus { Solved, NoSolution, Unsupported };

struct FexpgResult {
  FexpgStatus status;
  RatFunc h;           // valid when Solved: f = h' + h*gprime
  std::string detail;  // regime used, or why it is unsupported
};

/// Rational h with f = h' + h*gprime, decided when gprime is a nonzero constant
/// or when gprime is the derivative of a rational function and f is a
/// polynomial. Anything else is Unsupported.
FexpgResult fexpg_solve(const RatFunc& f, const RatFunc& gprime);

/// Indices i in [0, N] with x^i*f*exp(g) elementary integrable. Parallel over i.
std::vector<int> skolem_scan(const RatFunc& f, const RatFunc& g, int N);
/// Serial reference for skolem_scan.
std::vector<int> skolem_scan_serial(const RatFunc& f, const RatFunc& g, int N);

}  // namespace stab
