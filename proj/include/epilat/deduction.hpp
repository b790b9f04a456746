#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epilat/term.hpp"
#include "epilat/variety.hpp"

namespace epilat {

struct TaggedIdentity {
  std::string tag;
  Identity identity;
};

struct Theory {
  std::string name;
  std::vector<TaggedIdentity> identities;
  bool includes_epi_axioms = false;

  /// Identities actually used by rewriting: zero identities expanded, epigroup
  /// axioms appended when requested. Tags are unique.
  std::vector<TaggedIdentity> rules() const;
};

/// Identities valid in every epigroup, each with the tag it is cited by.
std::vector<TaggedIdentity> epigroup_axioms();

Theory theory_of(const VarietyId& v, bool with_epi_axioms = false);

/// Where a rewrite happened: indices of pseudo-inverse factors descended
/// through, then the factor range [begin, end) replaced at that level.
struct Context {
  std::vector<std::size_t> path;
  std::size_t begin = 0, end = 0;
  std::string str() const;
};

struct DeductionStep {
  Term from, to;
  std::string theory;
  std::string tag;
  Identity used;        // oriented: used.lhs instance replaced by used.rhs instance
  Substitution substitution;
  Context context;
};

/// Applies `s` to `step.used` and embeds the result into `from` at the context.
Term apply_step(const Term& from, const Identity& oriented, const Substitution& s, const Context& c);

std::optional<DeductionStep> one_step(const Term& w, const Term& w2, const Theory& th);

struct DeductionReport {
  bool ok = false;
  std::vector<DeductionStep> steps;
  std::optional<std::size_t> failed_at; // index i of the failing pair (i, i+1)
  std::string message;
};

DeductionReport verify_deduction(const std::vector<Term>& seq, const std::vector<Theory>& theories);

enum class SearchStatus { Found, NotFound, BoundExceeded };
std::string to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::vector<Term> sequence;
  std::size_t explored = 0;
};

constexpr int kDefaultSearchDepth = 6;
constexpr int kDefaultSizeCap = 12;

/// Breadth-first search over one-step rewrites. Letters of a rule's right
/// side that its left side does not bind range over c(u) and c(v).
/// NotFound means the bounded neighbourhood was exhausted; BoundExceeded means
/// the depth or size cap cut the search.
SearchResult search_deduction(const Term& u, const Term& v, const Theory& th, int depth = kDefaultSearchDepth,
                              int size_cap = kDefaultSizeCap);

/// Searches for u = 0, i.e. a deduction of u = u z for a letter z not in u.
SearchResult search_zero(const Term& u, const Theory& th, int depth = kDefaultSearchDepth,
                         int size_cap = kDefaultSizeCap);

/// Deduction file: `theory: <variety name | epi>` and `axiom <tag>: <identity>`
/// header lines, then one term per line. `#` comments.
struct DeductionFile {
  std::vector<Theory> theories;
  std::vector<Term> terms;
};
DeductionFile parse_deduction_file(const std::string& text);

} // namespace epilat
