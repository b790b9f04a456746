#pragma once

#include <string>
#include <vector>

#include "epilat/lattice.hpp"
#include "epilat/variety.hpp"

namespace epilat {

/// The lattice of the I/J/K/L families truncated at n_max: L(1..n), K(3..n),
/// J(4..n), I(4..n) and the limits L, K, J, I, ordered by containment.
FiniteLattice build_LI(int n_max);

/// The same poset described combinatorially: nodes (column, k) with column
/// minima L:1, K:3, J:4, I:4, a limit row, and componentwise order.
FiniteLattice expected_LI(int n_max);

/// An order fact between a variety and a formal join, with its source.
struct OrderFact {
  VarietyId lower;
  std::vector<VarietyId> join;
  bool holds = true;
  std::string citation;
};

/// Lines `A <= B + C | citation` or `A !<= B + C | citation`; `#` comments.
std::vector<OrderFact> parse_facts(const std::string& text);

struct SublatticeResult {
  FiniteLattice lattice;
  /// Members of each node's formal join.
  std::vector<std::vector<VarietyId>> members;
  /// One line per resolved singleton-versus-join comparison with the rule used.
  std::vector<std::string> provenance;
};

/// The join-closure of the seeds as formal joins. Order between a variety and
/// a join is decided by containment in a member, the atom tests for SL and ZM,
/// a separating identity, or a cited fact; anything else is an Error.
SublatticeResult build_sublattice(const std::vector<VarietyId>& seeds, const std::vector<OrderFact>& facts = {});

/// Splits "A + B + zr[x y; z]" (or a whitespace/comma list) into variety names,
/// respecting brackets and parentheses.
std::vector<std::string> split_variety_list(const std::string& text, char separator);

} // namespace epilat
