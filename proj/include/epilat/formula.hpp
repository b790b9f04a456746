#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "epilat/lattice.hpp"

namespace epilat {

/// Lattice term over variables with join `\/` and meet `/\`.
struct LatticeTerm {
  enum class Op { Var, Join, Meet } op = Op::Var;
  std::string var;
  std::vector<LatticeTerm> args;
};

/// First-order formula over the signature {\/, /\, =, <=}.
struct Formula {
  enum class Kind { Eq, Neq, Leq, Not, And, Or, Implies, Iff, Forall, Exists } kind = Kind::Eq;
  std::vector<LatticeTerm> terms;      // atoms
  std::vector<Formula> children;       // connectives and quantifier bodies
  std::vector<std::string> vars;       // quantified variables

  std::set<std::string> free_variables() const;
};

/// Syntax: `forall y z. phi`, `exists y. phi`, `not`, `and`, `or`, `->`,
/// `<->`, atoms `s = t`, `s != t`, `s <= t`; lattice terms use `\/` and `/\`
/// (meet binds tighter) and parentheses.
Formula parse_formula(std::string_view text);

using Binding = std::map<std::string, Node>;

/// Tarskian evaluation. Throws Error on a free variable missing from `binding`.
bool fo_eval(const FiniteLattice& l, const Formula& f, const Binding& binding = {});

/// { a : f(var := a) } with every other free variable taken from `binding`.
std::set<Node> defined_set(const FiniteLattice& l, const Formula& f, const std::string& var = "x",
                           const Binding& binding = {});

/// The defining formula of a special element type, free in x.
std::string definitional_formula(Special s);

} // namespace epilat
