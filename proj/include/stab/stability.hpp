#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stab/elem.hpp"

namespace stab {

enum class Verdict { Stable, NotStable, OutOfFragment };
std::string_view to_string(Verdict v);

enum class ObstructionKind { MomentIndex, Residue, DegreeDrop, ConstantTerm };
std::string_view to_string(ObstructionKind k);

struct Obstruction {
  ObstructionKind kind;
  int index = -1;      // MomentIndex only
  std::string detail;  // offending pole, exponent, ...
};

struct StabilityVerdict {
  Verdict verdict;
  std::optional<Obstruction> obstruction;  // NotStable only
  std::string reason;                      // OutOfFragment only
};

/// Stability of f inside Q(x): polynomials for d/dx, Laurent polynomials with
/// zero constant term for x*d/dx.
StabilityVerdict stable_in_ratfield(const RatFunc& f, Derivation d);

/// Stability over elementary extensions for d/dx.
StabilityVerdict stable_elementary(const ElemExpr& e);

/// g_1 .. g_k with delta(g_1) = e and delta(g_{i+1}) = g_i.
using WitnessChain = std::vector<ClosedForm>;

/// Throws NotStableInput unless e is stable (for Euler: stable in Q(x)).
WitnessChain witness_chain(const ElemExpr& e, int k, Derivation d = Derivation::DDx);
bool check_chain(const ElemExpr& e, const WitnessChain& chain, Derivation d = Derivation::DDx);

/// Smallest i <= N with x^i*f not a derivative in Q(x).
std::optional<int> moment_obstruction(const RatFunc& f, int N);

}  // namespace stab
