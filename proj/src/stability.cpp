#include "stab/stability.hpp"

#include "stab/error.hpp"
#include "stab/integrate.hpp"

namespace stab {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Stable: return "stable";
    case Verdict::NotStable: return "not_stable";
    case Verdict::OutOfFragment: return "out_of_fragment";
  }
  return "?";
}

std::string_view to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::MomentIndex: return "moment_index";
    case ObstructionKind::Residue: return "residue";
    case ObstructionKind::DegreeDrop: return "degree_drop";
    case ObstructionKind::ConstantTerm: return "constant_term";
  }
  return "?";
}

namespace {

StabilityVerdict stable() { return {Verdict::Stable, std::nullopt, {}}; }

StabilityVerdict not_stable(ObstructionKind k, std::string detail, int index = -1) {
  return {Verdict::NotStable, Obstruction{k, index, std::move(detail)}, {}};
}

StabilityVerdict out_of_fragment(std::string reason) { return {Verdict::OutOfFragment, std::nullopt, std::move(reason)}; }

// A squarefree factor of den other than x, for reporting.
std::string pole_away_from_zero(const Poly& den) {
  Poly r = radical(den);
  if (divides(Poly::x(), r)) r = r / Poly::x();
  return "pole at roots of " + r.str();
}

}  // namespace

std::optional<int> moment_obstruction(const RatFunc& f, int N) {
  RatFunc xi = f;
  for (int i = 0; i <= N; ++i) {
    if (!integrable_in_field(xi)) return i;
    xi *= RatFunc::x();
  }
  return std::nullopt;
}

StabilityVerdict stable_in_ratfield(const RatFunc& f, Derivation d) {
  if (d == Derivation::DDx) {
    if (f.is_polynomial()) return stable();
    auto i = moment_obstruction(f, 2 * f.den().degree() + 2);
    if (i) return not_stable(ObstructionKind::MomentIndex, "x^" + std::to_string(*i) + "*f has no antiderivative in Q(x)", *i);
    return not_stable(ObstructionKind::Residue, "pole at roots of " + radical(f.den()).str());
  }
  auto lr = is_laurent(f);
  if (!lr) return not_stable(ObstructionKind::Residue, pole_away_from_zero(f.den()));
  auto c0 = lr->terms.find(0);
  if (c0 != lr->terms.end()) return not_stable(ObstructionKind::ConstantTerm, "constant term " + rat_str(c0->second));
  return stable();
}

StabilityVerdict stable_elementary(const ElemExpr& e) {
  if (e.is_zero()) return stable();
  RatFunc gp = e.expo ? derivative(*e.expo) : RatFunc();
  if (!gp.is_zero()) {
    if (e.log_degree() >= 1) return out_of_fragment("exp and log(x) in the same expression");
    const RatFunc& f = e.coeff(0);
    if (!gp.is_constant())
      return not_stable(ObstructionKind::DegreeDrop, "exponent " + e.expo->str() + " is not linear");
    if (!f.is_polynomial()) return not_stable(ObstructionKind::Residue, "pole at roots of " + radical(f.den()).str());
    return stable();
  }
  for (int j = 1; j <= e.log_degree(); ++j) {
    if (is_laurent(e.coeff(j))) continue;
    if (e.log_degree() == 1)
      return not_stable(ObstructionKind::Residue, pole_away_from_zero(e.coeff(1).den()));
    return out_of_fragment("coefficient of log(x)^" + std::to_string(j) + " is not a Laurent polynomial");
  }
  return stable();
}

WitnessChain witness_chain(const ElemExpr& e, int k, Derivation d) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "chain depth must be at least 1");
  if (d == Derivation::EulerXDDx) {
    if (e.log_degree() > 0 || e.expo)
      throw Error(ErrorCode::NotStableInput, "Euler chains are only available for rational input");
    if (stable_in_ratfield(e.coeff(0), d).verdict != Verdict::Stable)
      throw Error(ErrorCode::NotStableInput, "input is not stable for the Euler derivation");
  } else if (stable_elementary(e).verdict != Verdict::Stable) {
    throw Error(ErrorCode::NotStableInput, "input is not stable");
  }
  WitnessChain chain;
  ClosedForm cur = ClosedForm::from_elem(e, ClosedForm::modulus_for(e));
  for (int i = 0; i < k; ++i) {
    cur = integrate(cur, d);
    chain.push_back(cur);
  }
  return chain;
}

bool check_chain(const ElemExpr& e, const WitnessChain& chain, Derivation d) try {
  Poly B = 1;
  for (const auto& g : chain) B = lcm(B, g.modulus());
  if (e.log_degree() >= 1 && !divides(Poly::x(), B)) B *= Poly::x();
  ClosedForm prev = ClosedForm::from_elem(e, B);
  for (const auto& g : chain) {
    if (!(derivative(g, d) == prev)) return false;
    prev = g;
  }
  return true;
} catch (const Error&) {
  return false;
}

}  // namespace stab
