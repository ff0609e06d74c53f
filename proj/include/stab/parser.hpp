#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "stab/elem.hpp"
#include "stab/ore.hpp"

namespace stab {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

enum class NodeKind { Num, Var, Neg, Add, Sub, Mul, Div, Pow, Log, Exp };

/// Syntax tree. Num holds a nonnegative integer literal; Var a name; Pow an
/// integer exponent on its single child.
struct Node {
  NodeKind kind;
  Int value;
  std::string name;
  long exponent = 0;
  std::vector<NodePtr> args;
};

bool operator==(const Node& a, const Node& b);

/// Grammar:
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := base ['^' ['-'] integer | '^' '(' ['-'] integer ')']
///   base   := integer | name | '(' expr ')' | 'log' '(' expr ')' | 'exp' '(' expr ')'
/// Names must come from `vars`. Throws SyntaxError with the byte offset.
NodePtr parse(std::string_view text, const std::vector<std::string>& vars = {"x"});

/// Text that parses back to an equal tree.
std::string print(const Node& n);

/// f(x)*log(x)^m*exp(g(x)) sums. Throws NormalizationReject outside the fragment.
ElemExpr normalize(const Node& n);

/// Element of Q(var); rejects log and exp.
RatFunc to_ratfunc(const Node& n);
RatFunc parse_ratfunc(std::string_view text, std::string_view var = "x");

/// Operator in x and D (Diff) or n and S (Shift); '*' is the noncommutative product.
OreOperator to_operator(const Node& n, OreKind kind);
OreOperator parse_operator(std::string_view text, OreKind kind);

}  // namespace stab
