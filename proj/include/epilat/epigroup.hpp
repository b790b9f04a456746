#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epilat/term.hpp"

namespace epilat {

using Element = int;

class NonAssociativeError : public Error {
 public:
  NonAssociativeError(Element a, Element b, Element c, const std::string& what)
      : Error(what), witness{a, b, c} {}
  std::array<Element, 3> witness;
};

struct EpigroupProfile {
  bool is_nil = false;
  bool is_completely_regular = false;
  bool is_combinatorial = false;
  bool is_group = false;
  bool is_commutative = false;
  bool is_semilattice = false;
  std::vector<Element> group_elements;
};

/// A finite semigroup given by its Cayley table, with the unary operations
/// x -> x^w and x -> pseudo-inverse computed from monogenic subsemigroups.
class FiniteEpigroup {
 public:
  /// `table[i][j]` is the index of carrier[i] * carrier[j].
  static FiniteEpigroup from_cayley(std::vector<std::string> carrier,
                                    std::vector<std::vector<Element>> table);

  int order() const { return static_cast<int>(carrier_.size()); }
  const std::vector<std::string>& carrier() const { return carrier_; }
  const std::string& name(Element e) const { return carrier_.at(e); }
  Element index_of(const std::string& name) const;

  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element omega(Element a) const { return omega_[a]; }
  Element pinv(Element a) const { return pinv_[a]; }
  std::optional<Element> zero() const { return zero_; }
  const std::vector<std::vector<Element>>& table() const { return table_; }

 private:
  std::vector<std::string> carrier_;
  std::vector<std::vector<Element>> table_;
  std::vector<Element> omega_;
  std::vector<Element> pinv_;
  std::optional<Element> zero_;
};

using Assignment = std::map<Symbol, Element>;

Element eval_term(const FiniteEpigroup& s, const Term& t, const Assignment& a);

/// Every assignment of carrier elements to the letters of `id` satisfies it.
/// `w = 0` is checked as the pair `w z = z w = w` with z fresh.
bool satisfies(const FiniteEpigroup& s, const Identity& id);

/// A falsifying assignment, or nothing when the identity holds.
std::optional<Assignment> counterexample(const FiniteEpigroup& s, const Identity& id);

EpigroupProfile classify_epigroup(const FiniteEpigroup& s);

/// Standard small models: SL2, NULL2, LZ2, RZ2, Cm (m >= 0), Zn (n >= 1), Dm (m >= 1).
FiniteEpigroup builtin(const std::string& name, int param = 0);

/// All builtin models used by the test suites, with display names.
std::vector<std::pair<std::string, FiniteEpigroup>> builtin_catalog();

FiniteEpigroup direct_product(const FiniteEpigroup& s, const FiniteEpigroup& t);

/// Cayley file: first line the carrier names, then one row per element.
FiniteEpigroup parse_cayley(const std::string& text);

} // namespace epilat
