#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace stab {

/// Self-map of a finite set: states are 0 .. n-1, map[i] is the image of i.
struct FiniteDynSys {
  std::vector<std::string> labels;
  std::vector<int> map;

  int size() const { return static_cast<int>(map.size()); }
};

/// Sorted state indices.
struct SubsetReport {
  std::vector<int> fix;
  std::vector<int> per;
  std::vector<int> stab;
  std::vector<int> attrac;
};

/// Throws InvalidArgument when labels and map disagree or an image is out of range.
void validate(const FiniteDynSys& sys);

SubsetReport analyze(const FiniteDynSys& sys);

/// Intersection of phi^i(A) for i <= steps.
std::vector<int> attractor_after(const FiniteDynSys& sys, int steps);

/// Largest subset B with phi(B) = B, by enumerating all subsets (n <= 20).
std::vector<int> stab_brute_force(const FiniteDynSys& sys);

struct GodelleReport {
  bool chain;              // fix <= per <= stab <= attrac
  bool stab_invariant;     // phi(stab) = stab
  bool surjective;
  bool stab_equals_attrac;
  bool holds;              // chain, invariance, and surjective => stab = attrac
};

GodelleReport check_godelle(const FiniteDynSys& sys);

/// States (i, j) with -N <= i <= M and 0 <= j <= max(i - 1, 0);
/// (i, j) -> (i, j - 1) for j > 0, (i, 0) -> (min(i - 1, 0), 0), and the one
/// image leaving the range, that of (-N, 0), is clamped back to (-N, 0).
FiniteDynSys godelle_truncation(int N, int M);

/// {"elements": [...], "map": {"a": "b", ...}}
FiniteDynSys dynsys_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FiniteDynSys& sys, const SubsetReport& r);
nlohmann::json to_json(const GodelleReport& r);

}  // namespace stab
