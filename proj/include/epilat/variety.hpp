#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epilat/epigroup.hpp"
#include "epilat/term.hpp"

namespace epilat {

enum class Family {
  T, SL, ZM, LZ, RZ, LZM, RZM, P, Pbar,
  C,   // C(m) = var{x^m = x^(m+1), xy = yx}
  A,   // A(n): abelian groups of exponent dividing n; A(0) is all abelian groups
  Q, Qn, R, Rn,
  I, In, J, Jn, K, Kn, L, Ln,
  W,   // W(n) = var{x^2 = x1...x(n+1) = 0, xy = yx}
  ZR,  // zr[w1;...]: 0-reduced, given by w1 = 0, ...
  CZR, // czr[w1;...]: commutative 0-reduced, given by xy = yx, w1 = 0, ...
};

/// A named variety. `param` is used by the parametrised families and
/// `words` by ZR/CZR. Construct through parse_variety or the helpers so that
/// parameters are validated.
struct VarietyId {
  Family family = Family::T;
  int param = 0;
  std::vector<Term> words;

  std::string name() const;
  friend bool operator==(const VarietyId&, const VarietyId&) = default;
};

VarietyId make_variety(Family f, int param = 0);
VarietyId make_zero_reduced(std::vector<Term> words, bool commutative = false);
/// Accepts the CLI spellings: T, SL, ZM, LZ, RZ, LZM, RZM, P, Pbar, C(m),
/// A(n), Q, Q(n), R, R(n), I, I(n), J, J(n), K, K(n), L, L(n), W(n),
/// zr[w1;w2;...], czr[w1;w2;...].
VarietyId parse_variety(std::string_view text);

struct VarietyFlags {
  bool is_nil = false;
  bool is_completely_regular = false;
  bool is_commutative = false;
  bool is_periodic = false;
};

std::vector<Identity> basis(const VarietyId& v);
VarietyFlags flags(const VarietyId& v);
/// A finite epigroup generating the variety, when one is known.
std::optional<FiniteEpigroup> generator(const VarietyId& v);

/// Canonical key of a term in the relatively free object of V: two terms are
/// equal in V exactly when their keys coincide. "0" is the zero of a nil
/// variety.
std::string normal_key(const VarietyId& v, const Term& t);

/// Human-readable name of the criterion decide() applies for V.
std::string criterion(const VarietyId& v);

bool decide(const VarietyId& v, const Identity& id);

/// Normal form in a nil variety: nullopt for Zero, otherwise a representative.
std::optional<Term> normal_form(const VarietyId& v, const Term& t);

/// W is a subvariety of V.
bool contains(const VarietyId& v, const VarietyId& w);

enum class Atom { SL, ZM };
bool contains_atom(const VarietyId& v, Atom a);

constexpr int kDegreeCap = 64;
/// Least n with V not containing W(n); nullopt for infinity (beyond the cap).
std::optional<int> degree(const VarietyId& v);
/// Least n such that V satisfies x1..xn = x1..x(i-1) ~(~(xi..xj)) x(j+1)..xn.
std::optional<int> degree_by_witness(const VarietyId& v, int cap = kDegreeCap);
/// The witness identities for a given n.
std::vector<Identity> degree_witnesses(int n);

/// Registered meet of two varieties of the L/K/J/I grid or of the Q/R grid.
std::optional<VarietyId> registered_meet(const VarietyId& a, const VarietyId& b);

/// Varieties used by the sweeps: a finite sample of each family.
std::vector<VarietyId> registry_sample(int n_max = 6);

struct OracleReport {
  bool two_sided = false;   // compared against a generator
  std::size_t terms = 0;
  std::size_t models = 0;   // models searched (one-directional mode)
  std::vector<std::string> mismatches;
};

struct OracleBounds {
  int max_occurrences = 5;
  int letters = 3;
  int max_depth = 1;
  int model_order = 0; // 0 picks 4 for nil varieties and 3 otherwise
};

/// All terms over the first `letters` of x, y, z with at most the given
/// number of letter occurrences and pseudo-inversion depth.
std::vector<Term> enumerate_terms(int max_occurrences, int letters, int max_depth);

/// Compares decide() against a generator, or (without one) checks that every
/// identity decide() accepts holds in all small models of the basis.
OracleReport oracle_check(const VarietyId& v, const OracleBounds& bounds = {});

/// All semigroups of the given order up to isomorphism (1 <= order <= 4).
/// When `with_zero` is set, element 0 is forced to be a two-sided zero.
std::vector<FiniteEpigroup> small_semigroups(int order, bool with_zero);

} // namespace epilat
