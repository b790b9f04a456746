#include "epilat/variety.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace epilat {

namespace {

using Exps = std::map<Symbol, long>;

bool has_inverse(const std::vector<Factor>& fs) {
  return std::any_of(fs.begin(), fs.end(), [](const Factor& f) { return f.is_inverse(); });
}

// Replaces every pseudo-inverse ~(t) by t^m, innermost first.
void expand_inverse(const std::vector<Factor>& fs, int m, std::vector<Factor>& out) {
  for (const auto& f : fs) {
    if (f.is_letter()) {
      out.push_back(f);
    } else {
      std::vector<Factor> inner;
      expand_inverse(f.argument, m, inner);
      for (int i = 0; i < m; ++i) out.insert(out.end(), inner.begin(), inner.end());
    }
  }
}

std::vector<Factor> as_semigroup_word(const Term& t, int m) {
  std::vector<Factor> out;
  expand_inverse(t.factors(), m, out);
  return out;
}

// Exponent vector with ~(t) contributing `inverse_weight` times the vector of t.
void exponents(const std::vector<Factor>& fs, long weight, long inverse_weight, Exps& e) {
  for (const auto& f : fs) {
    if (f.is_letter())
      e[f.letter] += weight;
    else
      exponents(f.argument, weight * inverse_weight, inverse_weight, e);
  }
}

std::string format_exps(const Exps& e) {
  std::string out;
  for (const auto& [l, k] : e) {
    if (k == 0) continue;
    if (!out.empty()) out += ' ';
    out += l;
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "1" : out;
}

std::string word_key(const std::vector<Factor>& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty()) out += ' ';
    out += f.letter;
  }
  return out;
}

bool is_linear(const std::vector<Factor>& fs) {
  std::set<Symbol> seen;
  for (const auto& f : fs)
    if (!seen.insert(f.letter).second) return false;
  return true;
}

Term word_of_exps(const Exps& e) {
  std::vector<Factor> fs;
  for (const auto& [l, k] : e)
    for (long i = 0; i < k; ++i) fs.push_back(Factor{l, {}});
  return Term(std::move(fs));
}

std::string first_letter(const std::vector<Factor>& fs) {
  const Factor& f = fs.front();
  return f.is_letter() ? f.letter : first_letter(f.argument);
}

std::string last_letter(const std::vector<Factor>& fs) {
  const Factor& f = fs.back();
  return f.is_letter() ? f.letter : last_letter(f.argument);
}

bool is_nil_family(Family f) {
  switch (f) {
    case Family::ZM: case Family::Q: case Family::Qn: case Family::R: case Family::Rn:
    case Family::I: case Family::In: case Family::J: case Family::Jn: case Family::K:
    case Family::Kn: case Family::L: case Family::Ln: case Family::W: case Family::ZR:
    case Family::CZR:
      return true;
    default:
      return false;
  }
}

bool is_commutative_nil(Family f) {
  switch (f) {
    case Family::I: case Family::In: case Family::J: case Family::Jn: case Family::K:
    case Family::Kn: case Family::L: case Family::Ln: case Family::W: case Family::CZR:
      return true;
    default:
      return false;
  }
}

// Some letter-to-letter image of `pattern` divides `target` (both exponent vectors).
bool divides_instance(const Exps& pattern, const Exps& target) {
  std::vector<std::pair<Symbol, long>> p(pattern.begin(), pattern.end());
  std::vector<Symbol> letters;
  for (const auto& [l, k] : target) letters.push_back(l);
  if (letters.empty()) return false;
  std::vector<std::size_t> choice(p.size(), 0);
  while (true) {
    Exps img;
    for (std::size_t i = 0; i < p.size(); ++i) img[letters[choice[i]]] += p[i].second;
    bool ok = true;
    for (const auto& [l, k] : img) {
      auto it = target.find(l);
      if (it == target.end() || it->second < k) ok = false;
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == letters.size()) choice[i++] = 0;
    if (i == choice.size()) return false;
  }
}

// Key in the commutative nil families.
std::string commutative_nil_key(const VarietyId& v, const Term& t) {
  if (has_inverse(t.factors())) return "0";
  Exps e;
  exponents(t.factors(), 1, 1, e);
  long degree = 0;
  bool linear = true;
  for (const auto& [l, k] : e) {
    degree += k;
    linear = linear && k == 1;
  }
  const int n = v.param;
  auto bounded = [&](long d_limit) { return d_limit > 0 && degree >= d_limit; };
  switch (v.family) {
    case Family::L: case Family::Ln: case Family::W: {
      long lim = v.family == Family::L ? 0 : v.family == Family::W ? n + 1 : n;
      if (!linear || bounded(lim)) return "0";
      break;
    }
    case Family::K: case Family::Kn:
      if ((!linear && degree >= 3) || bounded(v.family == Family::Kn ? n : 0)) return "0";
      break;
    case Family::J: case Family::Jn: case Family::I: case Family::In: {
      bool jfam = v.family == Family::J || v.family == Family::Jn;
      bool bounded_fam = v.family == Family::Jn || v.family == Family::In;
      if ((!linear && degree >= 4) || bounded(bounded_fam ? n : 0)) return "0";
      if (jfam && e.size() == 1 && degree == 3) return "0";
      if (degree == 3 && e.size() == 2) {
        // x^2 y = x y^2: put the square on the smaller letter.
        auto it = e.begin();
        it->second = 2;
        std::next(it)->second = 1;
      }
      break;
    }
    case Family::CZR:
      for (const auto& w : v.words) {
        Exps pe;
        exponents(w.factors(), 1, 1, pe);
        if (divides_instance(pe, e)) return "0";
      }
      break;
    default:
      throw Error("not a commutative nil family");
  }
  return format_exps(e);
}

std::string word_nil_key(const VarietyId& v, const Term& t) {
  const auto& fs = t.factors();
  if (has_inverse(fs)) return "0";
  const long len = static_cast<long>(fs.size());
  const bool lin = is_linear(fs);
  switch (v.family) {
    case Family::ZM:
      if (len >= 2) return "0";
      break;
    case Family::Q: case Family::Qn: {
      bool square = len == 2 && fs[0] == fs[1];
      if (!lin && !square) return "0";
      if (v.family == Family::Qn && len >= v.param) return "0";
      break;
    }
    case Family::R: case Family::Rn:
      if (!lin) return "0";
      if (v.family == Family::Rn && len >= v.param) return "0";
      break;
    case Family::ZR:
      for (const auto& w : v.words)
        if (has_instance_factor(w, t)) return "0";
      break;
    default:
      throw Error("not a word nil family");
  }
  return word_key(fs);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

Identity id(std::string_view s) { return parse_identity(s); }

Identity linear_zero(int n) { return Identity{linear_word(n), std::nullopt}; }

} // namespace

VarietyId make_variety(Family f, int param) {
  switch (f) {
    case Family::C: require(param >= 0, "C(m) needs m >= 0"); break;
    case Family::A: require(param >= 0, "A(n) needs n >= 0"); break;
    case Family::Qn: case Family::Rn: case Family::Ln: case Family::W:
      require(param >= 1, "family parameter must be >= 1");
      break;
    case Family::Kn: require(param >= 3, "K(n) needs n >= 3"); break;
    case Family::Jn: case Family::In: require(param >= 4, "I(n) and J(n) need n >= 4"); break;
    case Family::ZR: case Family::CZR: throw Error("use make_zero_reduced for zr/czr");
    default: param = 0;
  }
  return VarietyId{f, param, {}};
}

VarietyId make_zero_reduced(std::vector<Term> words, bool commutative) {
  require(!words.empty(), "zero-reduced variety needs at least one word");
  for (const auto& w : words) require(w.is_semigroup_word(), "zero-reduced basis words must be semigroup words");
  return VarietyId{commutative ? Family::CZR : Family::ZR, 0, std::move(words)};
}

std::string VarietyId::name() const {
  auto p = [this](const char* base) { return std::string(base) + "(" + std::to_string(param) + ")"; };
  switch (family) {
    case Family::T: return "T";
    case Family::SL: return "SL";
    case Family::ZM: return "ZM";
    case Family::LZ: return "LZ";
    case Family::RZ: return "RZ";
    case Family::LZM: return "LZM";
    case Family::RZM: return "RZM";
    case Family::P: return "P";
    case Family::Pbar: return "Pbar";
    case Family::C: return p("C");
    case Family::A: return p("A");
    case Family::Q: return "Q";
    case Family::Qn: return p("Q");
    case Family::R: return "R";
    case Family::Rn: return p("R");
    case Family::I: return "I";
    case Family::In: return p("I");
    case Family::J: return "J";
    case Family::Jn: return p("J");
    case Family::K: return "K";
    case Family::Kn: return p("K");
    case Family::L: return "L";
    case Family::Ln: return p("L");
    case Family::W: return p("W");
    case Family::ZR: case Family::CZR: {
      std::string out = family == Family::ZR ? "zr[" : "czr[";
      for (std::size_t i = 0; i < words.size(); ++i) out += (i ? ";" : "") + words[i].str();
      return out + "]";
    }
  }
  return "?";
}

VarietyId parse_variety(std::string_view text) {
  std::string s;
  for (char c : text) s += c;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  auto bracket = s.find('[');
  if (bracket != std::string::npos) {
    std::string head = s.substr(0, bracket);
    if ((head != "zr" && head != "czr") || s.back() != ']') throw Error("unknown variety '" + s + "'");
    std::string body = s.substr(bracket + 1, s.size() - bracket - 2);
    std::vector<Term> words;
    std::size_t start = 0;
    while (start <= body.size()) {
      auto semi = body.find(';', start);
      if (semi == std::string::npos) semi = body.size();
      words.push_back(parse_term(body.substr(start, semi - start)));
      start = semi + 1;
    }
    return make_zero_reduced(std::move(words), head == "czr");
  }
  std::string head = s;
  std::optional<int> param;
  auto paren = s.find('(');
  if (paren != std::string::npos) {
    if (s.back() != ')') throw Error("unknown variety '" + s + "'");
    head = s.substr(0, paren);
    std::string num = s.substr(paren + 1, s.size() - paren - 2);
    if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        num.size() > 6)
      throw Error("bad parameter in '" + s + "'");
    param = std::stoi(num);
  }
  static const std::map<std::string, std::pair<Family, Family>> table = {
      {"T", {Family::T, Family::T}},      {"SL", {Family::SL, Family::SL}}, {"ZM", {Family::ZM, Family::ZM}},
      {"LZ", {Family::LZ, Family::LZ}},   {"RZ", {Family::RZ, Family::RZ}}, {"LZM", {Family::LZM, Family::LZM}},
      {"RZM", {Family::RZM, Family::RZM}}, {"P", {Family::P, Family::P}},  {"Pbar", {Family::Pbar, Family::Pbar}},
      {"C", {Family::C, Family::C}},      {"A", {Family::A, Family::A}},    {"Q", {Family::Q, Family::Qn}},
      {"R", {Family::R, Family::Rn}},     {"I", {Family::I, Family::In}},   {"J", {Family::J, Family::Jn}},
      {"K", {Family::K, Family::Kn}},     {"L", {Family::L, Family::Ln}},   {"W", {Family::W, Family::W}},
  };
  auto it = table.find(head);
  if (it == table.end()) throw Error("unknown variety '" + s + "'");
  auto [plain, indexed] = it->second;
  bool needs_param = plain == Family::C || plain == Family::A || plain == Family::W;
  bool allows_param = needs_param || plain != indexed;
  if (param && !allows_param) throw Error("variety '" + head + "' takes no parameter");
  if (!param && needs_param) throw Error("variety '" + head + "' needs a parameter");
  return make_variety(param ? indexed : plain, param.value_or(0));
}

std::vector<Identity> basis(const VarietyId& v) {
  const int n = v.param;
  switch (v.family) {
    case Family::T: return {id("x = y")};
    case Family::SL: return {id("x x = x"), id("x y = y x")};
    case Family::ZM: return {id("x y = 0")};
    case Family::LZ: return {id("x y = x")};
    case Family::RZ: return {id("x y = y")};
    case Family::LZM: return {id("x y z = x y")};
    case Family::RZM: return {id("x y z = y z")};
    case Family::P: return {id("x y = x x y"), id("x x y y = y y x x")};
    case Family::Pbar: return {id("x y = x y y"), id("x x y y = y y x x")};
    case Family::C:
      if (n == 0) return {id("x = y")};
      return {Identity{Term::power(Term::letter("x"), n), Term::power(Term::letter("x"), n + 1)}, id("x y = y x")};
    case Family::A:
      if (n == 0) return {id("x y = y x"), id("x ~(x) y = y")};
      return {id("x y = y x"),
              Identity{Term::product(Term::power(Term::letter("x"), n), Term::letter("y")), Term::letter("y")}};
    case Family::Q: return {id("x x y = 0"), id("x y x = 0"), id("y x x = 0")};
    case Family::Qn: return {id("x x y = 0"), id("x y x = 0"), id("y x x = 0"), linear_zero(n)};
    case Family::R: return {id("x x = 0"), id("x y x = 0")};
    case Family::Rn: return {id("x x = 0"), id("x y x = 0"), linear_zero(n)};
    case Family::I: return {id("x x y = x y y"), id("x y = y x"), id("x x y z = 0")};
    case Family::In: return {id("x x y = x y y"), id("x y = y x"), id("x x y z = 0"), linear_zero(n)};
    case Family::J: return {id("x x y = x y y"), id("x y = y x"), id("x x y z = 0"), id("x x x = 0")};
    case Family::Jn:
      return {id("x x y = x y y"), id("x y = y x"), id("x x y z = 0"), id("x x x = 0"), linear_zero(n)};
    case Family::K: return {id("x x y = 0"), id("x y = y x")};
    case Family::Kn: return {id("x x y = 0"), id("x y = y x"), linear_zero(n)};
    case Family::L: return {id("x x = 0"), id("x y = y x")};
    case Family::Ln: return {id("x x = 0"), id("x y = y x"), linear_zero(n)};
    case Family::W: return {id("x x = 0"), linear_zero(n + 1), id("x y = y x")};
    case Family::ZR: case Family::CZR: {
      std::vector<Identity> out;
      for (const auto& w : v.words) out.push_back(Identity{w, std::nullopt});
      if (v.family == Family::CZR) out.push_back(id("x y = y x"));
      return out;
    }
  }
  throw Error("unknown variety");
}

std::string normal_key(const VarietyId& v, const Term& t) {
  const auto& fs = t.factors();
  switch (v.family) {
    case Family::T: return "1";
    case Family::SL: {
      auto c = content(t);
      std::string out;
      for (const auto& l : c) out += (out.empty() ? "" : " ") + l;
      return out;
    }
    case Family::LZ: return first_letter(fs);
    case Family::RZ: return last_letter(fs);
    case Family::LZM: case Family::RZM: {
      auto w = as_semigroup_word(t, 2);
      if (w.size() > 2) {
        if (v.family == Family::LZM)
          w.resize(2);
        else
          w.erase(w.begin(), w.end() - 2);
      }
      return word_key(w);
    }
    case Family::P: case Family::Pbar: {
      auto w = as_semigroup_word(t, 2);
      std::map<Symbol, int> occ;
      for (const auto& f : w) ++occ[f.letter];
      std::string c;
      for (const auto& [l, k] : occ) c += l + " ";
      const Symbol& end = v.family == Family::P ? w.back().letter : w.front().letter;
      return c + "| " + (occ[end] > 1 ? std::string("*") : end);
    }
    case Family::C: {
      if (v.param == 0) return "1";
      Exps e;
      exponents(fs, 1, v.param, e);
      for (auto& [l, k] : e) k = std::min<long>(k, v.param);
      return format_exps(e);
    }
    case Family::A: {
      Exps e;
      exponents(fs, 1, -1, e);
      if (v.param > 0)
        for (auto& [l, k] : e) k = ((k % v.param) + v.param) % v.param;
      return format_exps(e);
    }
    default:
      break;
  }
  if (is_commutative_nil(v.family)) return commutative_nil_key(v, t);
  return word_nil_key(v, t);
}

std::string criterion(const VarietyId& v) {
  switch (v.family) {
    case Family::T: return "trivial variety";
    case Family::SL: return "equal content";
    case Family::LZ: return "equal first letter";
    case Family::RZ: return "equal last letter";
    case Family::LZM: return "equal prefix of length 2 after ~(x) -> x^2";
    case Family::RZM: return "equal suffix of length 2 after ~(x) -> x^2";
    case Family::P: return "equal content and last letters both multiple or equal and simple (after ~(x) -> x^2)";
    case Family::Pbar: return "equal content and first letters both multiple or equal and simple (after ~(x) -> x^2)";
    case Family::C: return "exponents capped at m after ~(x) -> x^m";
    case Family::A: return v.param == 0 ? "equal exponent vectors over the integers" : "exponent vectors congruent mod n";
    case Family::ZM: return "equal letters or both of length >= 2";
    default: return "equal nil normal forms";
  }
}

bool decide(const VarietyId& v, const Identity& ident) {
  for (const auto& p : expand_zero(ident))
    if (normal_key(v, p.lhs) != normal_key(v, *p.rhs)) return false;
  return true;
}

std::optional<Term> normal_form(const VarietyId& v, const Term& t) {
  if (!is_nil_family(v.family)) throw Error("normal_form: " + v.name() + " is not a nil family");
  if (normal_key(v, t) == "0") return std::nullopt;
  if (is_commutative_nil(v.family)) {
    Exps e;
    exponents(t.factors(), 1, 1, e);
    if ((v.family == Family::I || v.family == Family::In || v.family == Family::J || v.family == Family::Jn) &&
        e.size() == 2 && t.factor_count() == 3) {
      e.begin()->second = 2;
      std::next(e.begin())->second = 1;
    }
    return word_of_exps(e);
  }
  return t;
}

VarietyFlags flags(const VarietyId& v) {
  VarietyFlags f;
  f.is_nil = decide(v, id("~(x) = 0"));
  f.is_completely_regular = decide(v, id("x = ~(~(x))"));
  f.is_commutative = decide(v, id("x y = y x"));
  f.is_periodic = !(v.family == Family::A && v.param == 0);
  return f;
}

std::optional<FiniteEpigroup> generator(const VarietyId& v) {
  switch (v.family) {
    case Family::T: return builtin("Zn", 1);
    case Family::SL: return builtin("SL2");
    case Family::ZM: return builtin("NULL2");
    case Family::LZ: return builtin("LZ2");
    case Family::RZ: return builtin("RZ2");
    case Family::C: return builtin("Cm", v.param);
    case Family::A:
      if (v.param >= 1) return builtin("Zn", v.param);
      return std::nullopt;
    default: return std::nullopt;
  }
}

bool contains(const VarietyId& v, const VarietyId& w) {
  for (const auto& b : basis(v))
    if (!decide(w, b)) return false;
  return true;
}

bool contains_atom(const VarietyId& v, Atom a) {
  if (a == Atom::SL) return !decide(v, id("(x^w y^w x^w)^w = x^w"));
  return !decide(v, id("x = ~(~(x))"));
}

std::optional<int> degree(const VarietyId& v) {
  for (int n = 1; n <= kDegreeCap; ++n)
    if (!contains(v, make_variety(Family::W, n))) return n;
  return std::nullopt;
}

std::vector<Identity> degree_witnesses(int n) {
  std::vector<Identity> out;
  Term lhs = linear_word(n);
  const auto& xs = lhs.factors();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::vector<Factor> mid(xs.begin() + i, xs.begin() + j + 1);
      std::vector<Factor> rhs(xs.begin(), xs.begin() + i);
      Term dd = Term::inverse(Term::inverse(Term(mid)));
      rhs.push_back(dd.factors()[0]);
      rhs.insert(rhs.end(), xs.begin() + j + 1, xs.end());
      out.push_back(Identity{lhs, Term(std::move(rhs))});
    }
  return out;
}

std::optional<int> degree_by_witness(const VarietyId& v, int cap) {
  for (int n = 1; n <= cap; ++n)
    for (const auto& w : degree_witnesses(n))
      if (decide(v, w)) return n;
  return std::nullopt;
}

namespace {

constexpr int kInf = 1 << 20;

// Position of a variety in the L/K/J/I grid: column and degree bound.
std::optional<std::pair<int, int>> grid_position(const VarietyId& v) {
  switch (v.family) {
    case Family::L: return std::pair{0, kInf};
    case Family::Ln: return std::pair{0, v.param};
    case Family::W: return std::pair{0, v.param + 1};
    case Family::K: return std::pair{1, kInf};
    case Family::Kn: return std::pair{1, v.param};
    case Family::J: return std::pair{2, kInf};
    case Family::Jn: return std::pair{2, v.param};
    case Family::I: return std::pair{3, kInf};
    case Family::In: return std::pair{3, v.param};
    default: return std::nullopt;
  }
}

VarietyId grid_variety(int col, int k) {
  static const int col_min[] = {1, 3, 4, 4};
  while (col > 0 && k < col_min[col]) --col;
  static const Family unbounded[] = {Family::L, Family::K, Family::J, Family::I};
  static const Family bounded[] = {Family::Ln, Family::Kn, Family::Jn, Family::In};
  return k >= kInf ? make_variety(unbounded[col]) : make_variety(bounded[col], k);
}

std::optional<std::pair<int, int>> qr_position(const VarietyId& v) {
  switch (v.family) {
    case Family::R: return std::pair{0, kInf};
    case Family::Rn: return std::pair{0, v.param};
    case Family::Q: return std::pair{1, kInf};
    case Family::Qn: return std::pair{1, v.param};
    default: return std::nullopt;
  }
}

} // namespace

std::optional<VarietyId> registered_meet(const VarietyId& a, const VarietyId& b) {
  if (auto pa = grid_position(a), pb = grid_position(b); pa && pb)
    return grid_variety(std::min(pa->first, pb->first), std::min(pa->second, pb->second));
  if (auto pa = qr_position(a), pb = qr_position(b); pa && pb) {
    int type = std::min(pa->first, pb->first), k = std::min(pa->second, pb->second);
    if (k >= kInf) return make_variety(type ? Family::Q : Family::R);
    return make_variety(type ? Family::Qn : Family::Rn, k);
  }
  return std::nullopt;
}

std::vector<VarietyId> registry_sample(int n_max) {
  std::vector<VarietyId> out;
  for (Family f : {Family::T, Family::SL, Family::ZM, Family::LZ, Family::RZ, Family::LZM, Family::RZM,
                   Family::P, Family::Pbar, Family::Q, Family::R, Family::I, Family::J, Family::K, Family::L})
    out.push_back(make_variety(f));
  for (int m = 0; m <= 3; ++m) out.push_back(make_variety(Family::C, m));
  for (int n = 0; n <= 4; ++n) out.push_back(make_variety(Family::A, n));
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(make_variety(Family::Qn, n));
    out.push_back(make_variety(Family::Rn, n));
    out.push_back(make_variety(Family::Ln, n));
    out.push_back(make_variety(Family::W, n));
    if (n >= 3) out.push_back(make_variety(Family::Kn, n));
    if (n >= 4) {
      out.push_back(make_variety(Family::Jn, n));
      out.push_back(make_variety(Family::In, n));
    }
  }
  out.push_back(make_zero_reduced({parse_term("x y z")}));
  out.push_back(make_zero_reduced({parse_term("x x")}));
  out.push_back(make_zero_reduced({parse_term("x y x")}));
  out.push_back(make_zero_reduced({parse_term("x x x")}, true));
  out.push_back(make_zero_reduced({parse_term("x x y y")}, true));
  return out;
}

std::vector<Term> enumerate_terms(int max_occurrences, int letters, int max_depth) {
  static const char* names[] = {"x", "y", "z", "t", "u", "v"};
  require(letters >= 1 && letters <= 6, "enumerate_terms: 1..6 letters");
  // seqs[d][k]: factor sequences with exactly k letter occurrences, inverse depth <= d.
  std::vector<std::vector<std::vector<std::vector<Factor>>>> seqs(max_depth + 1);
  for (int d = 0; d <= max_depth; ++d) {
    seqs[d].resize(max_occurrences + 1);
    // Single factors of cost k.
    std::vector<std::vector<Factor>> single(max_occurrences + 1);
    for (int l = 0; l < letters; ++l) single[1].push_back(Factor{names[l], {}});
    if (d > 0)
      for (int k = 1; k <= max_occurrences; ++k)
        for (const auto& inner : seqs[d - 1][k]) single[k].push_back(Factor{"", inner});
    for (int k = 1; k <= max_occurrences; ++k) {
      for (const auto& f : single[k]) seqs[d][k].push_back({f});
      for (int c = 1; c < k; ++c)
        for (const auto& f : single[c])
          for (const auto& rest : seqs[d][k - c]) {
            std::vector<Factor> s{f};
            s.insert(s.end(), rest.begin(), rest.end());
            seqs[d][k].push_back(std::move(s));
          }
    }
  }
  std::vector<Term> out;
  for (int k = 1; k <= max_occurrences; ++k)
    for (auto& s : seqs[max_depth][k]) out.emplace_back(std::move(s));
  return out;
}

std::vector<FiniteEpigroup> small_semigroups(int order, bool with_zero) {
  require(order >= 1 && order <= 4, "small_semigroups: order 1..4");
  const int n = order;
  // -1 marks a cell not filled yet; the zero row and column are fixed up front.
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n, -1));
  std::vector<std::pair<int, int>> free_cells;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (with_zero && (i == 0 || j == 0))
        t[i][j] = 0;
      else
        free_cells.emplace_back(i, j);
    }
  // Associativity on the triples whose products are all known.
  auto consistent = [&] {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (t[a][b] < 0) continue;
        for (int c = 0; c < n; ++c) {
          if (t[b][c] < 0) continue;
          Element l = t[t[a][b]][c], r = t[a][t[b][c]];
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    return true;
  };
  std::set<std::vector<std::vector<Element>>> seen;
  std::vector<FiniteEpigroup> out;
  std::vector<int> perm(n);
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == free_cells.size()) {
      // Canonical form over relabellings (keeping 0 fixed when it is the zero).
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<std::vector<Element>> best;
      do {
        if (with_zero && perm[0] != 0) continue;
        std::vector<std::vector<Element>> r(n, std::vector<Element>(n));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) r[perm[i]][perm[j]] = perm[t[i][j]];
        if (best.empty() || r < best) best = r;
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (seen.insert(best).second) {
        std::vector<std::string> carrier;
        for (int i = 0; i < n; ++i) carrier.push_back(std::to_string(i));
        out.push_back(FiniteEpigroup::from_cayley(carrier, best));
      }
      return;
    }
    auto [i, j] = free_cells[k];
    for (Element v = 0; v < n; ++v) {
      t[i][j] = v;
      if (consistent()) fill(k + 1);
    }
    t[i][j] = -1;
  };
  fill(0);
  return out;
}

namespace {

// Values of t under every assignment of x, y, z (first `letters` names) in S.
std::vector<Element> signature(const FiniteEpigroup& s, const Term& t, int letters) {
  static const char* names[] = {"x", "y", "z", "t", "u", "v"};
  const int n = s.order();
  int total = 1;
  for (int i = 0; i < letters; ++i) total *= n;
  std::vector<Element> out(total);
  Assignment a;
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (int i = 0; i < letters; ++i) {
      a[names[i]] = c % n;
      c /= n;
    }
    out[code] = eval_term(s, t, a);
  }
  return out;
}

} // namespace

OracleReport oracle_check(const VarietyId& v, const OracleBounds& bounds) {
  OracleReport r;
  auto terms = enumerate_terms(bounds.max_occurrences, bounds.letters, bounds.max_depth);
  r.terms = terms.size();
  std::vector<std::string> keys;
  keys.reserve(terms.size());
  for (const auto& t : terms) keys.push_back(normal_key(v, t));
  const std::size_t cap = 20;
  auto report = [&](std::string m) {
    if (r.mismatches.size() < cap) r.mismatches.push_back(std::move(m));
  };

  if (auto g = generator(v)) {
    r.two_sided = true;
    std::map<std::string, std::pair<std::vector<Element>, std::size_t>> by_key;
    std::map<std::vector<Element>, std::size_t> by_sig;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      auto sig = signature(*g, terms[i], bounds.letters);
      auto [ki, kfresh] = by_key.emplace(keys[i], std::pair{sig, i});
      auto [si, sfresh] = by_sig.emplace(sig, i);
      if (!kfresh && ki->second.first != sig)
        report(v.name() + ": decide says " + terms[i].str() + " = " + terms[ki->second.second].str() +
               " but the generator disagrees");
      if (!sfresh && keys[si->second] != keys[i])
        report(v.name() + ": generator satisfies " + terms[i].str() + " = " + terms[si->second].str() +
               " but decide rejects it");
      Identity z{terms[i], std::nullopt};
      if (decide(v, z) != satisfies(*g, z))
        report(v.name() + ": zero verdict differs on " + terms[i].str() + " = 0");
    }
    return r;
  }

  bool nil = flags(v).is_nil;
  int max_order = bounds.model_order > 0 ? bounds.model_order : (nil ? 4 : 3);
  auto b = basis(v);
  std::vector<FiniteEpigroup> models;
  for (int order = 1; order <= max_order; ++order)
    for (auto& s : small_semigroups(order, nil))
      if (std::all_of(b.begin(), b.end(), [&](const Identity& i) { return satisfies(s, i); }))
        models.push_back(std::move(s));
  r.models = models.size();
  for (const auto& s : models) {
    std::map<std::string, std::pair<std::vector<Element>, std::size_t>> by_key;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      auto sig = signature(s, terms[i], bounds.letters);
      auto [it, fresh] = by_key.emplace(keys[i], std::pair{sig, i});
      if (!fresh && it->second.first != sig)
        report(v.name() + ": decide says " + terms[i].str() + " = " + terms[it->second.second].str() +
               " but a model of the basis of order " + std::to_string(s.order()) + " refutes it");
      if (keys[i] == "0" && !satisfies(s, Identity{terms[i], std::nullopt}))
        report(v.name() + ": decide says " + terms[i].str() + " = 0 but a model refutes it");
    }
  }
  return r;
}

} // namespace epilat
