#include "stab/integrate.hpp"

#include "stab/error.hpp"
#include "stab/linalg.hpp"

namespace stab {

std::optional<RatFunc> integrable_in_field(const RatFunc& f, Derivation d) {
  if (d == Derivation::EulerXDDx) return integrable_in_field(f / RatFunc::x(), Derivation::DDx);
  auto h = hermite_reduce(f);
  if (!h.simple_part.is_zero()) return std::nullopt;
  return h.rational_part;
}

std::optional<LiouvilleHardy> liouville_hardy(const RatFunc& f) {
  auto h = hermite_reduce(f);
  const RatFunc& s = h.simple_part;
  if (s.is_zero()) return LiouvilleHardy{0, h.rational_part};
  if (s.den() == Poly::x() && s.num().degree() == 0) return LiouvilleHardy{s.num()[0], h.rational_part};
  return std::nullopt;
}

Poly residue_resultant(const RatFunc& f) {
  const Poly& a = f.num();
  const Poly& b = f.den();
  const Poly db = b.derivative();
  const int n = b.degree();
  std::vector<Rat> zs, vals;
  for (int k = 0; k <= n; ++k) {
    zs.emplace_back(k);
    vals.push_back(resultant(b, a - db * Rat(k)));
  }
  return interpolate(zs, vals);
}

bool is_differential_reduced(const RatFunc& f) {
  if (f.den().degree() == 0) return true;
  Poly r = residue_resultant(f);
  if (r.is_zero()) return false;
  return integer_roots(r).empty();
}

int risch_degree_bound(const Poly& P, const Poly& a, const Poly& b) {
  if (a.degree() >= b.degree()) return P.degree() - a.degree();
  return P.degree() - b.degree() + 1;
}

std::optional<RischSolution> risch_de_poly(const Poly& P, const Poly& a, const Poly& b, int m) {
  if (b.is_zero() || a.is_zero()) throw Error(ErrorCode::PreconditionViolated, "risch_de_poly needs nonzero a and b");
  if (m < 0) throw Error(ErrorCode::PreconditionViolated, "risch_de_poly needs m >= 0");
  if (gcd(a, b).degree() != 0) throw Error(ErrorCode::PreconditionViolated, "gcd(a, b) must be 1");
  if (!integrable_in_field(RatFunc(a, b)))
    throw Error(ErrorCode::PreconditionViolated, "a/b is not a derivative in Q(x)");

  const Poly c = a + b.derivative() * Rat(m + 1);
  auto image = [&](const Poly& q) { return b * q.derivative() + c * q; };
  if (P.is_zero()) return RischSolution{Poly(), m, P, a, b};

  const int dq = risch_degree_bound(P, a, b);
  if (dq < 0) return std::nullopt;
  const int shift = P.degree() - dq;
  std::vector<Rat> q(static_cast<std::size_t>(dq) + 1);
  Poly rem = P;
  for (int k = dq; k >= 0; --k) {
    Poly tk = image(Poly::monomial(1, k));
    const Rat& rho = tk[k + shift];
    if (sgn(rho) == 0) return std::nullopt;
    Rat qk = rem[k + shift] / rho;
    if (sgn(qk) == 0) continue;
    q[k] = qk;
    rem -= tk * qk;
  }
  if (!rem.is_zero()) return std::nullopt;
  Poly Q(std::move(q));
  return RischSolution{Q, m, P, a, b};
}

namespace {

FexpgResult solve_constant_regime(const RatFunc& f, const Rat& lambda) {
  if (f.is_zero()) return {FexpgStatus::Solved, RatFunc(), "constant"};
  // Poles of h have order one less than those of f; simple poles of f are fatal.
  Poly E = 1;
  for (const auto& [fac, mult] : squarefree_factorization(f.den())) {
    if (mult == 1) return {FexpgStatus::NoSolution, RatFunc(), "simple pole " + fac.str()};
    E *= pow(fac, static_cast<unsigned>(mult - 1));
  }
  const int degN = f.degree() + E.degree();
  if (degN < 0) return {FexpgStatus::NoSolution, RatFunc(), "degree"};
  // (N'E - NE' + lambda*N*E) * den(f) = num(f) * E^2, linear in N.
  const Poly dE = E.derivative();
  const Poly rhs = f.num() * E * E;
  std::vector<Poly> cols;
  int rows = rhs.degree() + 1;
  for (int k = 0; k <= degN; ++k) {
    Poly xk = Poly::monomial(1, k);
    Poly col = (xk.derivative() * E - xk * dE + xk * E * lambda) * f.den();
    rows = std::max(rows, col.degree() + 1);
    cols.push_back(std::move(col));
  }
  Matrix m(static_cast<std::size_t>(rows), cols.size());
  std::vector<Rat> b(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < cols.size(); ++k) m(r, k) = cols[k][r];
    b[r] = rhs[r];
  }
  auto sol = solve(m, b);
  if (!sol) return {FexpgStatus::NoSolution, RatFunc(), "inconsistent"};
  RatFunc h(Poly(*sol), E);
  if (!(derivative(h) + h * RatFunc(lambda) == f)) return {FexpgStatus::NoSolution, RatFunc(), "inconsistent"};
  return {FexpgStatus::Solved, h, "constant"};
}

}  // namespace

FexpgResult fexpg_solve(const RatFunc& f, const RatFunc& gprime) {
  if (gprime.is_zero()) throw Error(ErrorCode::ZeroGPrime, "exponent derivative is zero");
  if (gprime.is_constant()) return solve_constant_regime(f, gprime.constant_value());
  if (!integrable_in_field(gprime))
    return {FexpgStatus::Unsupported, RatFunc(), "exponent derivative is not a rational derivative"};
  if (!f.is_polynomial())
    return {FexpgStatus::Unsupported, RatFunc(), "non-polynomial coefficient with non-linear exponent"};
  if (f.is_zero()) return {FexpgStatus::Solved, RatFunc(), "risch"};
  const Poly& a = gprime.num();
  const Poly& b = gprime.den();
  auto sol = risch_de_poly(f.num(), a, b, 0);
  if (!sol) return {FexpgStatus::NoSolution, RatFunc(), "risch"};
  return {FexpgStatus::Solved, RatFunc(sol->Q * b), "risch"};
}

namespace {

// 1 = integrable, 0 = not, -1 = unsupported
int skolem_index(const RatFunc& f, const RatFunc& gprime, int i) {
  auto r = fexpg_solve(RatFunc(Poly::monomial(1, i)) * f, gprime);
  switch (r.status) {
    case FexpgStatus::Solved: return 1;
    case FexpgStatus::NoSolution: return 0;
    case FexpgStatus::Unsupported: return -1;
  }
  return -1;
}

std::vector<int> collect(const std::vector<int>& flags) {
  std::vector<int> out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i] < 0) throw Error(ErrorCode::Unsupported, "index " + std::to_string(i) + " outside the supported regimes");
    if (flags[i] == 1) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

std::vector<int> skolem_scan_serial(const RatFunc& f, const RatFunc& g, int N) {
  RatFunc gp = derivative(g);
  if (gp.is_zero()) throw Error(ErrorCode::ZeroGPrime, "exponent is constant");
  std::vector<int> flags(static_cast<std::size_t>(N) + 1);
  for (int i = 0; i <= N; ++i) flags[i] = skolem_index(f, gp, i);
  return collect(flags);
}

std::vector<int> skolem_scan(const RatFunc& f, const RatFunc& g, int N) {
  RatFunc gp = derivative(g);
  if (gp.is_zero()) throw Error(ErrorCode::ZeroGPrime, "exponent is constant");
  std::vector<int> flags(static_cast<std::size_t>(N) + 1);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i <= N; ++i) {
    try {
      flags[i] = skolem_index(f, gp, i);
    } catch (...) {
      flags[i] = -1;
    }
  }
  return collect(flags);
}

}  // namespace stab
