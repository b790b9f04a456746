#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "epilat/term.hpp"

namespace epilat {

using Node = int;

/// A finite bounded lattice on nodes 0..n-1 with precomputed meet and join.
class FiniteLattice {
 public:
  /// Order given by a reflexive (or not) relation; closure is taken and the
  /// result must be antisymmetric and a lattice, otherwise Error with a witness.
  static FiniteLattice from_leq(std::vector<std::vector<bool>> leq, std::vector<std::string> labels = {});
  static FiniteLattice from_covers(int n, const std::vector<std::pair<Node, Node>>& covers,
                                   std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(leq_.size()); }
  bool leq(Node a, Node b) const { return leq_[a][b]; }
  Node meet(Node a, Node b) const { return meet_[a][b]; }
  Node join(Node a, Node b) const { return join_[a][b]; }
  Node bottom() const { return bottom_; }
  Node top() const { return top_; }
  const std::string& label(Node a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Node> find(const std::string& label) const;
  const std::vector<std::vector<bool>>& leq_matrix() const { return leq_; }

  /// Covering pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<Node, Node>> covers() const;
  /// The order dual, with meet and join exchanged.
  FiniteLattice dual() const;

 private:
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<Node>> meet_, join_;
  Node bottom_ = 0, top_ = 0;
  std::vector<std::string> labels_;
};

enum class Special {
  Neutral, Standard, Costandard, Distributive, Codistributive, Modular, LowerModular, UpperModular
};
constexpr std::array<Special, 8> kAllSpecial = {Special::Neutral,      Special::Standard,     Special::Costandard,
                                                Special::Distributive, Special::Codistributive, Special::Modular,
                                                Special::LowerModular, Special::UpperModular};
std::string to_string(Special s);

struct SpecialProfile {
  std::array<bool, 8> flags{};
  /// For each false flag, a violating pair (y, z).
  std::array<std::optional<std::pair<Node, Node>>, 8> witnesses{};

  bool has(Special s) const { return flags[static_cast<int>(s)]; }
  std::optional<std::pair<Node, Node>> witness(Special s) const { return witnesses[static_cast<int>(s)]; }
};

SpecialProfile special_profile(const FiniteLattice& l, Node x);

struct LatticeProps {
  bool distributive = false;
  bool modular = false;
  /// Nodes of an N5 (0, a, b, c, 1 with a < b) or M3 (0, a, b, c, 1) sublattice.
  std::optional<std::array<Node, 5>> witness;
  std::string witness_kind; // "N5" or "M3"
};

LatticeProps lattice_props(const FiniteLattice& l);

struct SubdirectReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// For neutral x, checks that y -> (y meet x, y join x) embeds L subdirectly
/// into (x] x [x). Throws Error (with the neutrality witness) when x is not neutral.
SubdirectReport neutral_subdirect_check(const FiniteLattice& l, Node x);

/// Small named lattices used in docs and tests.
FiniteLattice chain(int n);
FiniteLattice boolean_square();
FiniteLattice lattice_n5(); // 0 < a < b < 1, c incomparable; nodes 0,a,b,c,1
FiniteLattice lattice_m3(); // 0, a, b, c, 1

} // namespace epilat
