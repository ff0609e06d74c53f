#pragma once

#include "stab/linalg.hpp"
#include "stab/ratfunc.hpp"

namespace oracle {

using stab::Poly;
using stab::Rat;
using stab::RatFunc;

/// f has an antiderivative in Q(x), decided by Ostrogradsky's ansatz:
/// the proper part r/q equals (A/D)' with D = gcd(q, q') and deg A < deg D.
inline bool integrable(const RatFunc& f) {
  const Poly& q = f.den();
  const Poly r = f.num() % q;
  if (r.is_zero()) return true;
  const Poly D = gcd(q, q.derivative());
  const int d = D.degree();
  if (d == 0) return false;
  const Poly qs = q / D;
  const Poly H = qs * D.derivative() / D;
  // r = A'*qs - A*H, linear in the coefficients of A
  const int rows = q.degree();
  stab::Matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    const Poly basis = Poly::monomial(1, j);
    const Poly img = basis.derivative() * qs - basis * H;
    for (int i = 0; i <= img.degree() && i < rows; ++i) m(i, j) = img[i];
  }
  std::vector<Rat> rhs(static_cast<std::size_t>(rows));
  for (int i = 0; i <= r.degree(); ++i) rhs[i] = r[i];
  return stab::solve(m, rhs).has_value();
}

}  // namespace oracle
