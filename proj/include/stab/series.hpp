#pragma once

#include <vector>

#include "stab/poly.hpp"

namespace stab {

/// Power series truncated after a_T: coeffs holds a_0 .. a_T.
struct TruncSeries {
  std::vector<Rat> coeffs;

  int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;
};

/// Consecutive sequence terms a_start, a_{start+1}, ...
struct SequenceWindow {
  long start = 0;
  std::vector<Rat> values;

  friend bool operator==(const SequenceWindow&, const SequenceWindow&) = default;
};

}  // namespace stab
