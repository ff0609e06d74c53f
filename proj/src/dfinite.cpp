#include "stab/dfinite.hpp"

#include <algorithm>

#include "stab/error.hpp"
#include "stab/integrate.hpp"
#include "stab/linalg.hpp"

namespace stab {

namespace {

constexpr int kHoldout = 5;

// (v+1)(v+2)...(v+i) as a polynomial in n, with v = n + offset
Poly rising(const Rat& offset, int i) {
  Poly r = 1;
  for (int t = 1; t <= i; ++t) r *= Poly{offset + t, Rat(1)};
  return r;
}

// (n+1)...(n+i) evaluated
Rat rising_at(long n, int i) {
  Rat r = 1;
  for (int t = 1; t <= i; ++t) r *= Rat(n + t);
  return r;
}

}  // namespace

OreOperator diff_to_rec(const OreOperator& L) {
  if (L.is_zero()) throw Error(ErrorCode::ZeroOperator, "diff_to_rec of the zero operator");
  if (L.kind() != OreKind::Diff) throw Error(ErrorCode::KindMismatch, "diff_to_rec needs a differential operator");
  const OreOperator N = L.normalized();
  // x^j D^i contributes (n-j+1)...(n-j+i) a_{n-j+i}; shift s = i - j
  int s_min = 0;
  int s_max = 0;
  bool first = true;
  for (int i = 0; i <= N.order(); ++i) {
    const Poly& p = N.coeff(i).num();
    for (int j = 0; j <= p.degree(); ++j) {
      if (sgn(p[j]) == 0) continue;
      s_min = first ? i - j : std::min(s_min, i - j);
      s_max = first ? i - j : std::max(s_max, i - j);
      first = false;
    }
  }
  const int base = std::min(s_min, 0);  // coefficient index m - base keeps sequence indices nonnegative
  std::vector<RatFunc> rec(static_cast<std::size_t>(s_max - base) + 1);
  for (int i = 0; i <= N.order(); ++i) {
    const Poly& p = N.coeff(i).num();
    for (int j = 0; j <= p.degree(); ++j) {
      if (sgn(p[j]) == 0) continue;
      rec[i - j - base] += RatFunc(rising(Rat(-base - j), i) * p[j]);
    }
  }
  OreOperator P(OreKind::Shift, std::move(rec));
  if (P.is_zero()) throw Error(ErrorCode::ZeroOperator, "recurrence vanished");
  return P.normalized();
}

SequenceWindow as_window(const TruncSeries& s) { return SequenceWindow{0, s.coeffs}; }

bool annihilates(const OreOperator& P, const TruncSeries& s) {
  auto out = apply(P.normalized(), as_window(s));
  return std::all_of(out.values.begin(), out.values.end(), [](const Rat& v) { return sgn(v) == 0; });
}

TruncSeries formal_integral(const TruncSeries& s) {
  TruncSeries out;
  out.coeffs.assign(s.coeffs.size() + 1, Rat(0));
  for (std::size_t n = 1; n < out.coeffs.size(); ++n) out.coeffs[n] = s.coeffs[n - 1] / Rat(static_cast<long>(n));
  return out;
}

OreOperator integral_rec(const OreOperator& P) {
  if (P.is_zero()) throw Error(ErrorCode::ZeroOperator, "integral_rec of the zero operator");
  const OreOperator N = P.normalized();
  // a_n = (n+1) b_{n+1}: P(a)_{n-1} = sum_i p_i(n-1) (n+i) b_{n+i}, valid for n >= 1
  std::vector<Poly> q;
  Poly content;
  for (int i = 0; i <= N.order(); ++i) {
    Poly c = N.coeff(i).num().shift(-1) * Poly{Rat(i), Rat(1)};
    content = gcd(content, c);
    q.push_back(std::move(c));
  }
  // drop the part of the content that cannot vanish at n >= 1, then force b_0 = 0 with a factor n
  Poly keep = 1;
  for (const Int& r : integer_roots(content)) {
    if (r < 1) continue;
    Poly lin{Rat(-r), Rat(1)};
    Poly c = content;
    while (divides(lin, c)) {
      keep *= lin;
      c = c / lin;
    }
  }
  Poly drop = content / keep;
  std::vector<RatFunc> out;
  for (const auto& c : q) out.emplace_back((c / drop) * Poly::x());
  return OreOperator(OreKind::Shift, std::move(out)).normalized();
}

IntegralDiff integral_diff(const OreOperator& L) {
  if (L.is_zero()) throw Error(ErrorCode::ZeroOperator, "integral_diff of the zero operator");
  if (L.kind() != OreKind::Diff) throw Error(ErrorCode::KindMismatch, "integral_diff needs a differential operator");
  const OreOperator fallback = multiply(L, OreOperator::generator(OreKind::Diff)).normalized();
  if (L.order() != 1) return {fallback, Minimality::Unknown};
  // solutions f with f'/f = r; look for an antiderivative p*f with p rational: p' + r*p = 1
  const RatFunc r = -L.coeff(0) / L.coeff(1);
  RatFunc p;
  if (r.is_zero()) {
    p = RatFunc::x();
  } else {
    FexpgResult res;
    try {
      res = fexpg_solve(1, r);
    } catch (const Error&) {
      return {fallback, Minimality::Unknown};
    }
    if (res.status != FexpgStatus::Solved || res.h.is_zero()) return {fallback, Minimality::Unknown};
    p = res.h;
  }
  const RatFunc logder = derivative(p) / p + r;
  OreOperator lint(OreKind::Diff, {-logder, RatFunc(1)});
  return {lint.normalized(), Minimality::Minimal};
}

int required_truncation(int max_ord, int max_deg) {
  return (max_ord + 1) * (max_deg + 2) + max_ord + kHoldout - 1;
}

namespace {

// Coefficient of x^n in x^j D^i f.
Rat term(const TruncSeries& s, long n, int i, int j) {
  const long k = n - j + i;
  if (n - j < 0 || k > s.truncation()) return 0;
  return rising_at(n - j, i) * s.coeffs[k];
}

std::optional<OreOperator> fit(const TruncSeries& s, int ord, int deg) {
  const int T = s.truncation();
  const int last = T - ord;  // reliable prefix of apply(L, s)
  const int train = last - kHoldout;
  if (train < 0) return std::nullopt;
  const std::size_t cols = static_cast<std::size_t>(ord + 1) * (deg + 1);
  Matrix m(static_cast<std::size_t>(train) + 1, cols);
  for (int n = 0; n <= train; ++n)
    for (int i = 0; i <= ord; ++i)
      for (int j = 0; j <= deg; ++j) m(n, i * (deg + 1) + j) = term(s, n, i, j);
  for (const auto& v : nullspace(std::move(m))) {
    std::vector<RatFunc> c;
    for (int i = 0; i <= ord; ++i) {
      std::vector<Rat> pc(v.begin() + i * (deg + 1), v.begin() + (i + 1) * (deg + 1));
      c.emplace_back(Poly(std::move(pc)));
    }
    OreOperator L(OreKind::Diff, std::move(c));
    if (L.order() != ord) continue;
    auto out = apply(L, s);
    if (std::all_of(out.coeffs.begin(), out.coeffs.end(), [](const Rat& x) { return sgn(x) == 0; }))
      return L.normalized();
  }
  return std::nullopt;
}

}  // namespace

std::optional<OreOperator> guess_min_annihilator(const TruncSeries& s, int max_ord, int max_deg) {
  if (max_ord < 0 || max_deg < 0) throw Error(ErrorCode::InvalidArgument, "negative guessing bounds");
  if (s.truncation() < required_truncation(max_ord, max_deg))
    throw Error(ErrorCode::InsufficientTruncation,
                "need truncation " + std::to_string(required_truncation(max_ord, max_deg)) + ", have " +
                    std::to_string(s.truncation()));
  for (int ord = 0; ord <= max_ord; ++ord) {
    auto top = fit(s, ord, max_deg);
    if (!top) continue;
    for (int deg = 0; deg < max_deg; ++deg)
      if (auto l = fit(s, ord, deg)) return l;
    return top;
  }
  return std::nullopt;
}

OreOperator rec_to_diff(const OreOperator& P, const TruncSeries& s) {
  if (P.kind() != OreKind::Shift) throw Error(ErrorCode::KindMismatch, "rec_to_diff needs a recurrence");
  if (!annihilates(P, s)) throw Error(ErrorCode::PreconditionViolated, "recurrence does not annihilate the series");
  const OreOperator N = P.normalized();
  const int r = N.order();
  const int d = N.degree();
  const int max_ord = d + 1;
  const int max_deg = 2 * r + d;
  auto L = guess_min_annihilator(s, max_ord, max_deg);
  if (!L) throw Error(ErrorCode::InsufficientTruncation, "no differential operator within the bounds fits the series");
  if (!annihilates(diff_to_rec(*L), s))
    throw Error(ErrorCode::InsufficientTruncation, "guessed operator fails on the full window");
  return *L;
}

StabilityBound eventual_stability_bound(const OreOperator& P) {
  if (P.is_zero()) throw Error(ErrorCode::ZeroOperator, "bound for the zero operator");
  const OreOperator N = P.normalized();
  const int r = N.order();
  const int b = 2 * std::max(1, N.degree()) * r * r;
  return {b, b};
}

int default_truncation(const StabilityBound& b) { return 4 * (b.order_bound + 1) * (b.order_bound + 3) + 16; }

namespace {

struct CertSetup {
  StabilityBound bound;
  int max_ord;
  int max_deg;
  std::vector<TruncSeries> integrals;
};

CertSetup prepare(const TruncSeries& s, const OreOperator& P, int max_m, int window) {
  if (max_m < 0 || window < 0) throw Error(ErrorCode::InvalidArgument, "max_m and window must be nonnegative");
  if (P.kind() != OreKind::Shift) throw Error(ErrorCode::KindMismatch, "certificate needs a recurrence");
  if (P.is_zero() || P.order() < 1) throw Error(ErrorCode::PreconditionViolated, "recurrence must have order >= 1");
  if (!annihilates(P, s)) throw Error(ErrorCode::PreconditionViolated, "recurrence does not annihilate the series");
  CertSetup c;
  c.bound = eventual_stability_bound(P);
  c.max_ord = c.bound.order_bound;
  c.max_deg = P.normalized().order() + 2 * c.bound.deg_bound;
  if (s.truncation() < required_truncation(c.max_ord, c.max_deg))
    throw Error(ErrorCode::InsufficientTruncation,
                "need truncation " + std::to_string(required_truncation(c.max_ord, c.max_deg)));
  c.integrals.push_back(s);
  for (int i = 1; i <= max_m + window; ++i) c.integrals.push_back(formal_integral(c.integrals.back()));
  return c;
}

Certificate finish(const CertSetup& c, std::vector<std::optional<OreOperator>>& ops, int max_m, int window) {
  Certificate cert{-1, -1, {}, c.bound, c.max_ord, c.max_deg, {}};
  for (const auto& op : ops) cert.order_profile.push_back(op ? op->order() : -1);
  for (int m = 0; m <= max_m; ++m) {
    const int o = cert.order_profile[m];
    if (o < 0) continue;
    bool same = true;
    for (int i = m; i <= m + window; ++i) same = same && cert.order_profile[i] == o;
    if (!same) continue;
    cert.m = m;
    cert.stable_order = o;
    for (int i = m; i <= m + window; ++i) cert.annihilators.push_back(*ops[i]);
    return cert;
  }
  std::string profile;
  for (int o : cert.order_profile) profile += (profile.empty() ? "" : ",") + std::to_string(o);
  throw Error(ErrorCode::NoCertificateWithinLimits, "order profile [" + profile + "]");
}

}  // namespace

Certificate eventual_stability_certificate(const TruncSeries& s, const OreOperator& P, int max_m, int window) {
  CertSetup c = prepare(s, P, max_m, window);
  const int count = static_cast<int>(c.integrals.size());
  std::vector<std::optional<OreOperator>> ops(c.integrals.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) ops[i] = guess_min_annihilator(c.integrals[i], c.max_ord, c.max_deg);
  return finish(c, ops, max_m, window);
}

Certificate eventual_stability_certificate_serial(const TruncSeries& s, const OreOperator& P, int max_m, int window) {
  CertSetup c = prepare(s, P, max_m, window);
  std::vector<std::optional<OreOperator>> ops;
  for (const auto& si : c.integrals) ops.push_back(guess_min_annihilator(si, c.max_ord, c.max_deg));
  return finish(c, ops, max_m, window);
}

NamedSeries named_series(const std::string& name, int T) {
  if (T < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation");
  NamedSeries out{{}, OreOperator(OreKind::Shift)};
  const RatFunc n = RatFunc::x();
  if (name == "exp") {
    Rat a = 1;
    for (int k = 0; k <= T; ++k) {
      out.series.coeffs.push_back(a);
      a /= k + 1;
    }
    out.rec = OreOperator(OreKind::Shift, {RatFunc(-1), n + RatFunc(1)});
  } else if (name == "geom") {
    out.series.coeffs.assign(static_cast<std::size_t>(T) + 1, Rat(1));
    out.rec = OreOperator(OreKind::Shift, {RatFunc(-1), RatFunc(1)});
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown series generator '" + name + "'");
  }
  return out;
}

NamedSeries poly_series(const Poly& p, int T) {
  if (T < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation");
  NamedSeries out{{}, OreOperator(OreKind::Shift)};
  for (int k = 0; k <= T; ++k) out.series.coeffs.push_back(p[k]);
  Poly lead = 1;
  for (int i = 0; i < p.degree(); ++i) lead *= Poly{Rat(-i), Rat(1)};
  out.rec = OreOperator(OreKind::Shift, {RatFunc(), RatFunc(lead)});
  return out;
}

}  // namespace stab
