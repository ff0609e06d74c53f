#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stab/ore.hpp"
#include "stab/series.hpp"

namespace stab {

/// Recurrence P with P(a)_n = 0 for all n >= 0, where a_n are the Taylor
/// coefficients of any power-series solution of L. Normalized.
OreOperator diff_to_rec(const OreOperator& L);

/// Differential operator of order <= deg(P) + 1 and degree <= 2*ord(P) + deg(P)
/// annihilating s, guessed and verified on the full window.
OreOperator rec_to_diff(const OreOperator& P, const TruncSeries& s);

/// sum_{n>=1} a_{n-1}/n x^n, truncated one order higher.
TruncSeries formal_integral(const TruncSeries& s);

/// Annihilator of the coefficient sequence of the formal integral of any
/// series whose coefficients satisfy P.
OreOperator integral_rec(const OreOperator& P);

enum class Minimality { Minimal, Unknown };

struct IntegralDiff {
  OreOperator op;  // derivatives of its solutions are the solutions of L
  Minimality minimality;
};

IntegralDiff integral_diff(const OreOperator& L);

/// Smallest order, then smallest degree, within the bounds. Fits on all but
/// the last 5 reliable coefficients and checks those 5 afterwards.
std::optional<OreOperator> guess_min_annihilator(const TruncSeries& s, int max_ord, int max_deg);

/// Coefficients needed by guess_min_annihilator at these bounds.
int required_truncation(int max_ord, int max_deg);

struct StabilityBound {
  int deg_bound;
  int order_bound;
};

StabilityBound eventual_stability_bound(const OreOperator& P);

/// 4*(order_bound + 1)*(order_bound + 3) + 16.
int default_truncation(const StabilityBound& b);

struct Certificate {
  int m;
  int stable_order;
  std::vector<OreOperator> annihilators;  // for int^m(s) .. int^(m+window)(s)
  StabilityBound bound;
  int max_ord;  // guessing bounds actually used
  int max_deg;
  std::vector<int> order_profile;  // guessed order of int^i(s), -1 when none found
};

/// Smallest m <= max_m such that int^m(s) .. int^(m+window)(s) have guessed
/// annihilators of one common order. Iterations run in parallel.
Certificate eventual_stability_certificate(const TruncSeries& s, const OreOperator& P, int max_m, int window);
/// Serial reference.
Certificate eventual_stability_certificate_serial(const TruncSeries& s, const OreOperator& P, int max_m, int window);

struct NamedSeries {
  TruncSeries series;
  OreOperator rec;
};

/// "exp" or "geom" truncated at T, with its recurrence.
NamedSeries named_series(const std::string& name, int T);
/// Coefficients of p, with recurrence n(n-1)...(n-k+1)*S for k = deg p.
NamedSeries poly_series(const Poly& p, int T);

/// The window a_0 .. a_T as a sequence.
SequenceWindow as_window(const TruncSeries& s);

/// True when P(a)_n = 0 on every n the window covers.
bool annihilates(const OreOperator& P, const TruncSeries& s);

}  // namespace stab
