#pragma once

#include <string>
#include <vector>

#include "epilat/lattice.hpp"

namespace epilat {

/// All lattices with n elements up to isomorphism (1 <= n <= 7), in a fixed
/// order. Node 0 is the bottom and node n-1 the top.
std::vector<FiniteLattice> enumerate_lattices(int n);

/// Lexicographically least order matrix over all relabellings of the
/// non-extremal elements, as a bit string.
std::string canonical_form(const FiniteLattice& l);

/// Label-preserving isomorphism test.
bool isomorphic_labelled(const FiniteLattice& a, const FiniteLattice& b);

} // namespace epilat
