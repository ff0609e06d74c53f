#include <doctest.h>

#include <algorithm>
#include <functional>

#include "gen.hpp"
#include "stab/dfinite.hpp"
#include "util.hpp"

using namespace stab;

namespace {
const RatFunc X = RatFunc::x();
OreOperator diff(std::vector<RatFunc> c) { return OreOperator(OreKind::Diff, std::move(c)); }
OreOperator rec(std::vector<RatFunc> c) { return OreOperator(OreKind::Shift, std::move(c)); }

bool zero_series(const TruncSeries& s) {
  return std::all_of(s.coeffs.begin(), s.coeffs.end(), [](const Rat& v) { return sgn(v) == 0; });
}

// closed-form families with their recurrences
struct Family {
  std::function<Rat(long)> coeff;
  OreOperator rec;
};

TruncSeries take(const Family& f, int T) {
  TruncSeries s;
  for (long n = 0; n <= T; ++n) s.coeffs.push_back(f.coeff(n));
  return s;
}

Family exp_family(Rat lambda) {
  // lambda^n / n!
  return {[lambda](long n) {
            Rat r = 1;
            for (long k = 1; k <= n; ++k) r *= lambda / k;
            return r;
          },
          rec({RatFunc(-lambda), X + RatFunc(1)})};
}

Family geometric_family(Rat c) {
  return {[c](long n) {
            Rat r = 1;
            for (long k = 0; k < n; ++k) r *= c;
            return r;
          },
          rec({RatFunc(-c), RatFunc(1)})};
}

Family binomial_family(Rat alpha) {
  // (1+x)^alpha: (n+1) a_{n+1} = (alpha - n) a_n
  return {[alpha](long n) {
            Rat r = 1;
            for (long k = 0; k < n; ++k) r *= (alpha - k) / (k + 1);
            return r;
          },
          rec({X - RatFunc(alpha), X + RatFunc(1)})};
}

Family random_family() {
  switch (gen::integer(0, 2)) {
    case 0: return exp_family(gen::nonzero_rational(3));
    case 1: return geometric_family(gen::nonzero_rational(3));
    default: return binomial_family(gen::rational(4));
  }
}

}  // namespace

TEST_CASE("diff_to_rec examples") {
  CHECK(diff_to_rec(diff({-1, 1})) == rec({-1, X + RatFunc(1)}));
  CHECK(diff_to_rec(diff({0, 1})) == rec({0, X + RatFunc(1)}));
  CHECK(diff_to_rec(diff({-1, X})) == rec({X - RatFunc(1)}));
  CHECK(error_of([] { diff_to_rec(diff({})); }) == ErrorCode::ZeroOperator);
}

TEST_CASE("rec_to_diff examples") {
  auto e = named_series("exp", 24);
  CHECK(rec_to_diff(e.rec, e.series) == diff({-1, 1}));
  auto c = poly_series(1, 24);
  CHECK(rec_to_diff(rec({0, X + RatFunc(1)}), c.series) == diff({0, 1}));
  auto g = named_series("geom", 24);
  CHECK(rec_to_diff(g.rec, g.series) == diff({-1, RatFunc(1) - X}).normalized());
}

TEST_CASE("formal_integral examples") {
  TruncSeries a{{1, 1, Rat(1, 2), Rat(1, 6)}};
  CHECK(formal_integral(a) == TruncSeries{{0, 1, Rat(1, 2), Rat(1, 6), Rat(1, 24)}});
  CHECK(formal_integral(TruncSeries{{0, 0}}) == TruncSeries{{0, 0, 0}});
  CHECK(formal_integral(TruncSeries{{1, 1, 1, 1}}) == TruncSeries{{0, 1, Rat(1, 2), Rat(1, 3), Rat(1, 4)}});
}

TEST_CASE("derivative of the formal integral is the input") {
  for (int t = 0; t < 30; ++t) {
    TruncSeries s;
    for (int n = 0; n <= 15; ++n) s.coeffs.push_back(gen::rational());
    TruncSeries back = apply(diff({0, 1}), formal_integral(s));
    REQUIRE(back.coeffs.size() == s.coeffs.size());
    CHECK(back == s);
  }
}

TEST_CASE("integral_rec examples") {
  auto e = named_series("exp", 30);
  auto Q = integral_rec(e.rec);
  CHECK(Q.order() == 1);
  CHECK(annihilates(Q, formal_integral(e.series)));
  CHECK(Q == (rec({X}) * e.rec).normalized());
  auto Qc = integral_rec(rec({0, X + RatFunc(1)}));
  TruncSeries ones{{5, 0, 0, 0, 0, 0, 0, 0}};
  CHECK(annihilates(Qc, formal_integral(ones)));
  TruncSeries bad{{0, 5, 1, 0, 0, 0, 0, 0, 0}};
  CHECK_FALSE(annihilates(Qc, bad));
}

TEST_CASE("integral_rec soundness and order") {
  for (int t = 0; t < 20; ++t) {
    Family f = random_family();
    TruncSeries s = take(f, 30);
    REQUIRE(annihilates(f.rec, s));
    OreOperator Q = integral_rec(f.rec);
    CAPTURE(f.rec.str());
    CHECK(Q.order() == f.rec.order());
    CHECK(annihilates(Q, formal_integral(s)));
  }
  for (int t = 0; t < 20; ++t) {
    std::vector<RatFunc> c;
    const int ord = static_cast<int>(gen::integer(1, 3));
    for (int i = 0; i < ord; ++i) c.emplace_back(gen::poly_upto(2));
    c.emplace_back(gen::poly(static_cast<int>(gen::integer(0, 2))));
    OreOperator P = rec(c);
    CHECK(integral_rec(P).order() == P.order());
  }
}

TEST_CASE("integral_diff") {
  auto a = integral_diff(diff({0, 1}));
  CHECK(a.op.order() <= 2);
  CHECK(apply(a.op, X).is_zero());
  CHECK(apply(diff({0, 1}), derivative(X)).is_zero());
  for (int lambda : {1, 2}) {
    auto b = integral_diff(diff({-lambda, 1}));
    // e^(lambda x)/lambda is an antiderivative of the solution e^(lambda x)
    TruncSeries anti = take(exp_family(lambda), 30);
    for (auto& v : anti.coeffs) v /= lambda;
    CHECK(zero_series(apply(b.op, anti)));
    CHECK(b.op.order() == 1);
    CHECK(b.minimality == Minimality::Minimal);
  }
  auto c = integral_diff(diff({X, X * X + RatFunc(1), X}));
  CHECK(c.minimality == Minimality::Unknown);
  CHECK(c.op == diff({X, X * X + RatFunc(1), X}) * diff({0, 1}));
}

TEST_CASE("guess examples") {
  auto e = named_series("exp", 40);
  CHECK(guess_min_annihilator(e.series, 3, 3) == diff({-1, 1}));
  TruncSeries em1 = e.series;
  em1.coeffs[0] = 0;
  CHECK(guess_min_annihilator(em1, 3, 3) == diff({0, -1, 1}));
  auto x2 = poly_series(Poly{0, 0, 1}, 40);
  CHECK(guess_min_annihilator(x2.series, 3, 3) == diff({-2, X}));
  CHECK(error_of([] { guess_min_annihilator(named_series("exp", 10).series, 3, 3); }) ==
        ErrorCode::InsufficientTruncation);
}

TEST_CASE("guessed annihilators hold beyond the training window") {
  for (int t = 0; t < 20; ++t) {
    Family f = random_family();
    const int T = required_truncation(2, 2);
    auto op = guess_min_annihilator(take(f, T), 2, 2);
    REQUIRE(op);
    CHECK(zero_series(apply(*op, take(f, T + 25))));
  }
}

TEST_CASE("diff_to_rec agrees with the series action") {
  for (int t = 0; t < 40; ++t) {
    Family f = random_family();
    TruncSeries s = take(f, 30);
    // a planted annihilator A*L of s when t is even; a random operator otherwise
    std::vector<RatFunc> c;
    for (int i = 0; i <= gen::integer(0, 2); ++i) c.emplace_back(gen::poly_upto(2));
    OreOperator L = rec_to_diff(f.rec, take(f, 40));
    OreOperator op = t % 2 == 0 ? diff(c) * L : diff(c);
    if (op.is_zero()) continue;
    const bool series_zero = zero_series(apply(op, s));
    CAPTURE(op.str());
    CAPTURE(diff_to_rec(op).str());
    CAPTURE(f.rec.str());
    CHECK(series_zero == annihilates(diff_to_rec(op), s));
    if (t % 2 == 0) CHECK(series_zero);
  }
}

TEST_CASE("eventual_stability_bound examples") {
  CHECK(eventual_stability_bound(rec({-1, X + RatFunc(1)})).deg_bound == 2);
  CHECK(eventual_stability_bound(rec({-1, X + RatFunc(1)})).order_bound == 2);
  auto b = eventual_stability_bound(rec({1, 1, X * X * X}));
  CHECK(b.deg_bound == 24);
  CHECK(b.order_bound == 24);
  CHECK(eventual_stability_bound(rec({-1, 1})).order_bound == 2);
  CHECK(default_truncation({2, 2}) == 76);
}

TEST_CASE("certificates") {
  for (std::string name : {"exp", "geom"}) {
    auto ns = named_series(name, 0);
    auto b = eventual_stability_bound(ns.rec);
    auto s = named_series(name, default_truncation(b));
    auto c = eventual_stability_certificate(s.series, s.rec, 4, 3);
    CHECK(c.m == 1);
    CHECK(c.stable_order == 2);
    CHECK(c.stable_order <= b.order_bound);
    CHECK(c.annihilators.size() == 4);
    TruncSeries cur = s.series;
    for (int i = 0; i < c.m; ++i) cur = formal_integral(cur);
    for (const auto& a : c.annihilators) {
      CHECK(a.order() == c.stable_order);
      CHECK(zero_series(apply(a, cur)));
      cur = formal_integral(cur);
    }
    auto cs = eventual_stability_certificate_serial(s.series, s.rec, 4, 3);
    CHECK(cs.order_profile == c.order_profile);
    CHECK(cs.annihilators == c.annihilators);
  }
  for (const Poly& p : {Poly{0, 1}, Poly{1, 2, 3}}) {
    auto ps = poly_series(p, 0);
    auto b = eventual_stability_bound(ps.rec);
    auto s = poly_series(p, default_truncation(b));
    auto c = eventual_stability_certificate(s.series, s.rec, 4, 3);
    CHECK(c.m == 0);
    CHECK(c.stable_order == 1);
    CHECK(c.stable_order <= b.order_bound);
  }
}

TEST_CASE("certificate failure reports the profile") {
  auto s = named_series("exp", 76);
  auto e = error_of([&] { eventual_stability_certificate(s.series, s.rec, 0, 3); });
  CHECK(e == ErrorCode::NoCertificateWithinLimits);
}
