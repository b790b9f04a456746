#pragma once

#include <string>

#include "epilat/lattice.hpp"

namespace epilat {

/// Lattice file: `elements: a b c`, `cover: a < b` lines, optional
/// `label: a = SL` lines, `#` comments. Labels default to element names.
FiniteLattice parse_lattice(const std::string& text);
std::string format_lattice(const FiniteLattice& l);

/// Hasse diagram in Graphviz DOT (bottom to top).
std::string to_dot(const FiniteLattice& l, const std::string& name = "L");

std::string read_file(const std::string& path);

} // namespace epilat
