#include "epilat/theorems.hpp"

#include <algorithm>
#include <numeric>

namespace epilat {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::NotCovered: return "not-covered";
  }
  return "?";
}

namespace {

bool holds(const VarietyId& v, std::string_view identity) { return decide(v, parse_identity(identity)); }

bool same_variety(const VarietyId& a, const VarietyId& b) { return contains(a, b) && contains(b, a); }

} // namespace

std::optional<Decomposition> decompose(const VarietyId& v) {
  switch (v.family) {
    case Family::SL: return Decomposition{true, make_variety(Family::T)};
    case Family::C:
      if (v.param == 0) return Decomposition{false, make_variety(Family::T)};
      if (v.param == 1) return Decomposition{true, make_variety(Family::T)};
      return std::nullopt;
    case Family::A:
      if (v.param == 1) return Decomposition{false, make_variety(Family::T)};
      return std::nullopt;
    case Family::LZ: case Family::RZ: case Family::LZM: case Family::RZM: case Family::P: case Family::Pbar:
      return std::nullopt;
    default:
      // T and every nil family.
      return Decomposition{false, v};
  }
}

std::vector<Identity> decomposition_separators() {
  return {parse_identity("x ~(y) = ~(x) y"), parse_identity("x^w = x^w x"), parse_identity("x^w y = y x^w")};
}

bool is_strongly_permutative(const VarietyId& v) {
  auto try_perm = [&](int k, const std::vector<int>& p) {
    Term lhs = linear_word(k);
    std::vector<Factor> rhs;
    for (int i : p) rhs.push_back(lhs.factors()[i]);
    return decide(v, Identity{lhs, Term(std::move(rhs))});
  };
  for (int k = 2; k <= 6; ++k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    while (std::next_permutation(p.begin(), p.end()))
      if (p.front() != 0 && p.back() != k - 1 && try_perm(k, p)) return true;
  }
  if (auto d = degree(v); d && *d > 6) {
    std::vector<int> p(*d);
    std::iota(p.rbegin(), p.rend(), 0);
    return try_perm(*d, p);
  }
  return false;
}

bool is_zero_reduced_variety(const VarietyId& n) {
  if (!flags(n).is_nil) throw Error(n.name() + " is not a nilvariety");
  // A commutative 0-reduced variety satisfies xy = yx only because xy = 0.
  if (holds(n, "x y = y x")) return holds(n, "x y = 0");
  switch (n.family) {
    case Family::T: case Family::ZM: case Family::Q: case Family::Qn: case Family::R: case Family::Rn:
    case Family::ZR:
      return true;
    default:
      throw Error("0-reducedness of " + n.name() + " is not registered");
  }
}

std::vector<std::pair<std::string, const PropertyVerdict*>> TheoremStatus::fields() const {
  return {{"neutral", &neutral},           {"costandard", &costandard},       {"standard", &standard},
          {"distributive", &distributive}, {"codistributive", &codistributive}, {"modular", &modular},
          {"lower-modular", &lower_modular}, {"upper-modular", &upper_modular}};
}

TheoremStatus theorem_status(const VarietyId& v, bool join_sl, bool join_zm) {
  TheoremStatus s;
  s.variety = v.name() + (join_sl ? " v SL" : "") + (join_zm ? " v ZM" : "");
  auto set = [](PropertyVerdict& p, bool yes, std::string reason) {
    p.verdict = yes ? Verdict::Yes : Verdict::No;
    p.reason = std::move(reason);
  };
  const auto dec = decompose(v);
  const std::string not_mn = "not of the form M v N with M in {T, SL} and N nil";

  if (!dec) {
    for (auto* p : {&s.neutral, &s.costandard, &s.standard, &s.distributive, &s.modular, &s.lower_modular})
      set(*p, false, not_mn);
  } else {
    const VarietyId& n = dec->nil_part;
    bool small = holds(n, "x y = 0");
    set(s.neutral, small, "neutral iff one of T, SL, ZM, SL v ZM");
    set(s.costandard, small, "costandard iff neutral");
    bool qr = same_variety(n, make_variety(Family::Q)) || same_variety(n, make_variety(Family::R));
    if (auto d = degree(n); d && !qr)
      qr = same_variety(n, make_variety(Family::Qn, *d)) || same_variety(n, make_variety(Family::Rn, *d));
    set(s.distributive, qr, "distributive iff M v N with N one of Q, Q(n), R, R(n)");
    set(s.standard, qr, "standard iff distributive");
    bool zr = is_zero_reduced_variety(n);
    set(s.lower_modular, zr, "lower-modular iff M v N with N 0-reduced");
    if (zr) {
      set(s.modular, true, "0-reduced varieties are modular");
    } else if (holds(n, "x y = y x")) {
      set(s.modular, holds(n, "x x y = 0"), "commutative: modular iff M v N with N satisfying x^2 y = 0");
    }
  }

  if (is_strongly_permutative(v)) {
    bool group = v.family == Family::A;
    bool codis = group || (dec && holds(dec->nil_part, "x y = 0"));
    set(s.codistributive, codis, "strongly permutative: codistributive iff G v X with X in {T, SL, ZM, SL v ZM}");
    bool upper = group || (v.family == Family::C && v.param <= 2) ||
                 (dec && holds(dec->nil_part, "x y = y x") && holds(dec->nil_part, "x x y = x y y"));
    set(s.upper_modular, upper,
        "strongly permutative: upper-modular iff M v N with N commutative and x^2 y = x y^2, or G v C(m) v N with "
        "m <= 2 and N commutative with x^2 y = 0");
  }

  // Consequences of the general lattice facts.
  auto yes = [](const PropertyVerdict& p) { return p.verdict == Verdict::Yes; };
  auto no = [](const PropertyVerdict& p) { return p.verdict == Verdict::No; };
  auto fill = [](PropertyVerdict& p, Verdict v, const std::string& reason) {
    if (p.verdict == Verdict::NotCovered) {
      p.verdict = v;
      p.reason = reason;
    } else if (p.verdict != v) {
      throw Error("inconsistent classification: " + reason);
    }
  };
  if (yes(s.neutral)) {
    for (auto* p : {&s.costandard, &s.standard, &s.distributive, &s.codistributive, &s.modular, &s.lower_modular,
                    &s.upper_modular})
      fill(*p, Verdict::Yes, "neutral elements have every special property");
  } else if (no(s.neutral)) {
    if (yes(s.distributive) && yes(s.modular))
      fill(s.codistributive, Verdict::No, "neutral iff distributive, codistributive and modular");
    if (yes(s.modular) && yes(s.lower_modular))
      fill(s.upper_modular, Verdict::No, "neutral iff modular, lower-modular and upper-modular");
  }
  if (no(s.upper_modular)) fill(s.codistributive, Verdict::No, "codistributive elements are upper-modular");
  return s;
}

} // namespace epilat
