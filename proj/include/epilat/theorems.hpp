#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epilat/variety.hpp"

namespace epilat {

enum class Verdict { Yes, No, NotCovered };

std::string to_string(Verdict v);

struct PropertyVerdict {
  Verdict verdict = Verdict::NotCovered;
  std::string reason; // which classification result produced the verdict
};

/// Decomposition V = M v N with M in {T, SL} and N a nilvariety.
struct Decomposition {
  bool with_sl = false;
  VarietyId nil_part;
};

/// The decomposition when V has this form; nothing when it provably does not.
std::optional<Decomposition> decompose(const VarietyId& v);

/// Identities holding in every variety of the form M v N that fail in each
/// registered variety not of that form.
std::vector<Identity> decomposition_separators();

/// V satisfies some identity x1..xk = x(1p)..x(kp) with 1p != 1 and kp != k.
bool is_strongly_permutative(const VarietyId& v);

/// N is 0-reduced (as a variety, i.e. has some basis of identities w = 0).
bool is_zero_reduced_variety(const VarietyId& nil_part);

struct TheoremStatus {
  std::string variety;
  PropertyVerdict neutral, costandard, standard, distributive, codistributive, modular, lower_modular,
      upper_modular;
  /// The fields in a fixed order with their names.
  std::vector<std::pair<std::string, const PropertyVerdict*>> fields() const;
};

/// Classification verdicts for V, optionally joined with SL and/or ZM. Joins
/// with these neutral atoms do not change any verdict.
TheoremStatus theorem_status(const VarietyId& v, bool join_sl = false, bool join_zm = false);

} // namespace epilat
