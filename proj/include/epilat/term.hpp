#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace epilat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed concrete syntax; `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

using Symbol = std::string;

class Term;

/// One factor of a flattened product: either a letter or the pseudo-inverse
/// of a nested term (stored as that term's factor list).
struct Factor {
  Symbol letter;                // empty for a pseudo-inverse
  std::vector<Factor> argument; // non-empty for a pseudo-inverse

  bool is_letter() const { return argument.empty(); }
  bool is_inverse() const { return !argument.empty(); }

  friend bool operator==(const Factor& a, const Factor& b);
  friend std::strong_ordering operator<=>(const Factor& a, const Factor& b);
};

/// A word of the free unary semigroup (multiplication and pseudo-inversion).
///
/// Products are kept flattened, so associativity holds at the data level and
/// two terms are equal exactly when they denote the same element of the
/// absolutely free unary semigroup.
class Term {
 public:
  explicit Term(std::vector<Factor> factors);

  static Term letter(Symbol name);
  static Term inverse(const Term& argument);
  /// `u^w` sugar: the product u * inverse(u).
  static Term omega(const Term& argument);
  static Term product(const Term& left, const Term& right);
  /// `t t ... t` (k >= 1 copies).
  static Term power(const Term& base, int k);

  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }

  bool is_letter() const { return factors_.size() == 1 && factors_[0].is_letter(); }
  bool is_semigroup_word() const;
  /// Letters and pseudo-inversion nodes, counted over the whole tree.
  std::size_t symbol_count() const;
  /// Maximal nesting of pseudo-inversion.
  int inverse_depth() const;

  /// Canonical concrete syntax, e.g. `x ~(y x) y`.
  std::string str() const;

  friend bool operator==(const Term& a, const Term& b) { return a.factors_ == b.factors_; }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  std::vector<Factor> factors_;
};

/// `lhs = rhs`, or the 0-reduced shorthand `lhs = 0` when `rhs` is empty.
struct Identity {
  Term lhs;
  std::optional<Term> rhs;

  bool is_zero() const { return !rhs.has_value(); }
  std::string str() const;

  friend bool operator==(const Identity&, const Identity&) = default;
};

struct TermStats {
  std::set<Symbol> content;
  std::optional<std::size_t> length; // empty means infinite (not a semigroup word)
  Symbol last_letter;
  Symbol first_letter;
  std::set<Symbol> simple_letters;
  std::set<Symbol> multiple_letters;
  std::map<Symbol, int> occurrences;
  bool is_linear = false;
  bool is_semigroup_word = false;
};

enum class IdentityKind { Semigroup, Mixed, Unary };

struct IdentityClass {
  IdentityKind kind = IdentityKind::Semigroup;
  bool balanced = false;
  bool substitutive = false;
  bool permutative = false;
  bool strongly_permutative = false;
  bool zero_reduced = false;
};

using Substitution = std::map<Symbol, Term>;

Term parse_term(std::string_view text);
Identity parse_identity(std::string_view text);

TermStats term_stats(const Term& t);
IdentityClass classify_identity(const Identity& id);

/// Expands `w = 0` into the pair `w z = w`, `z w = w` for a letter z not in w.
std::vector<Identity> expand_zero(const Identity& id);

/// True iff the system contains a non-balanced semigroup identity or a mixed
/// identity; `w = 0` enters through its expansion `w z = w`.
bool k_sigma_is_variety(const std::vector<Identity>& sigma);

/// Homomorphic replacement of letters. Throws Error on an unmapped letter.
Term substitute(const Term& t, const Substitution& s);

std::set<Symbol> content(const Term& t);
/// A letter name not occurring in any of the given terms.
Symbol fresh_letter(const std::vector<Term>& avoid, std::string_view stem = "z");

/// `x1 x2 ... xn`.
Term linear_word(int n);

/// Matching modulo associativity: a letter of the pattern matches any
/// non-empty run of target factors, a pseudo-inverse matches a pseudo-inverse
/// with a matching argument. `visit` sees each solution and returns false to
/// stop the enumeration.
/// `seed` fixes some letters in advance.
void for_each_match(const std::vector<Factor>& pattern, std::span<const Factor> target,
                    const std::function<bool(const Substitution&)>& visit, const Substitution& seed = {});

/// All substitutions s with substitute(pattern, s) == target.
std::vector<Substitution> match_instance(const Term& pattern, const Term& target);

/// Some contiguous factor of `target` (at the top level) is an instance of `pattern`.
bool has_instance_factor(const Term& pattern, const Term& target);

} // namespace epilat
