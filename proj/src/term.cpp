#include "epilat/term.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace epilat {

bool operator==(const Factor& a, const Factor& b) {
  return a.letter == b.letter && a.argument == b.argument;
}

std::strong_ordering operator<=>(const Factor& a, const Factor& b) {
  // Letters sort before pseudo-inverses.
  if (a.is_letter() != b.is_letter()) return a.is_letter() ? std::strong_ordering::less
                                                             : std::strong_ordering::greater;
  if (a.is_letter()) return a.letter <=> b.letter;
  return std::lexicographical_compare_three_way(a.argument.begin(), a.argument.end(),
                                                b.argument.begin(), b.argument.end());
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                b.factors_.begin(), b.factors_.end());
}

Term::Term(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw Error("empty term");
}

Term Term::letter(Symbol name) {
  if (name.empty()) throw Error("empty letter name");
  return Term({Factor{std::move(name), {}}});
}

Term Term::inverse(const Term& argument) { return Term({Factor{"", argument.factors_}}); }

Term Term::omega(const Term& argument) { return product(argument, inverse(argument)); }

Term Term::product(const Term& left, const Term& right) {
  std::vector<Factor> f = left.factors_;
  f.insert(f.end(), right.factors_.begin(), right.factors_.end());
  return Term(std::move(f));
}

Term Term::power(const Term& base, int k) {
  if (k < 1) throw Error("power exponent must be positive");
  std::vector<Factor> f;
  for (int i = 0; i < k; ++i) f.insert(f.end(), base.factors_.begin(), base.factors_.end());
  return Term(std::move(f));
}

bool Term::is_semigroup_word() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.is_letter(); });
}

namespace {

std::size_t count_symbols(const std::vector<Factor>& fs) {
  std::size_t n = 0;
  for (const auto& f : fs) n += f.is_letter() ? 1 : 1 + count_symbols(f.argument);
  return n;
}

int depth_of(const std::vector<Factor>& fs) {
  int d = 0;
  for (const auto& f : fs)
    if (f.is_inverse()) d = std::max(d, 1 + depth_of(f.argument));
  return d;
}

void print_factors(const std::vector<Factor>& fs, std::string& out) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ' ';
    if (fs[i].is_letter()) {
      out += fs[i].letter;
    } else {
      out += "~(";
      print_factors(fs[i].argument, out);
      out += ')';
    }
  }
}

void collect_letters(const std::vector<Factor>& fs, std::vector<const Symbol*>& out) {
  for (const auto& f : fs) {
    if (f.is_letter())
      out.push_back(&f.letter);
    else
      collect_letters(f.argument, out);
  }
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Term term() {
    std::vector<Factor> fs;
    skip();
    while (pos_ < s_.size() && starts_factor()) {
      auto f = factor();
      fs.insert(fs.end(), f.begin(), f.end());
      skip();
    }
    if (fs.empty()) throw ParseError("expected a term", pos_);
    return Term(std::move(fs));
  }

  Identity identity() {
    Term lhs = term();
    skip();
    if (!eat('=')) throw ParseError("expected '='", pos_);
    skip();
    if (pos_ < s_.size() && s_[pos_] == '0') {
      std::size_t save = pos_++;
      skip();
      if (pos_ == s_.size()) return Identity{lhs, std::nullopt};
      pos_ = save;
    }
    Term rhs = term();
    return Identity{lhs, rhs};
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
  }

 private:
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  bool starts_factor() const {
    char c = s_[pos_];
    return ident_start(c) || c == '(' || c == '~';
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::vector<Factor> factor() {
    std::vector<Factor> base;
    char c = s_[pos_];
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      base.push_back(Factor{std::string(s_.substr(start, pos_ - start)), {}});
    } else if (c == '~') {
      ++pos_;
      skip();
      if (!eat('(')) throw ParseError("expected '(' after '~'", pos_);
      Term inner = term();
      skip();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      base.push_back(Factor{"", inner.factors()});
    } else {
      ++pos_;
      Term inner = term();
      skip();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      base = inner.factors();
    }
    return postfix(std::move(base));
  }

  // `^w` (omega) and `^k` (k-th power) bind to the factor just read.
  std::vector<Factor> postfix(std::vector<Factor> base) {
    while (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] == 'w' && (pos_ + 1 == s_.size() || !ident_char(s_[pos_ + 1]))) {
        ++pos_;
        base = Term::omega(Term(base)).factors();
      } else if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        std::size_t start = pos_;
        int k = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          k = k * 10 + (s_[pos_] - '0');
          if (k > 1000) throw ParseError("exponent too large", start);
          ++pos_;
        }
        if (k < 1) throw ParseError("exponent must be positive", start);
        base = Term::power(Term(base), k).factors();
      } else {
        throw ParseError("expected 'w' or a positive integer after '^'", pos_);
      }
    }
    return base;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::vector<Symbol> letters_of(const Term& t) {
  std::vector<const Symbol*> ptrs;
  collect_letters(t.factors(), ptrs);
  std::vector<Symbol> out;
  out.reserve(ptrs.size());
  for (auto* p : ptrs) out.push_back(*p);
  return out;
}

std::vector<Factor> substitute_factors(const std::vector<Factor>& fs, const Substitution& s) {
  std::vector<Factor> out;
  for (const auto& f : fs) {
    if (f.is_letter()) {
      auto it = s.find(f.letter);
      if (it == s.end()) throw Error("substitution does not map letter '" + f.letter + "'");
      out.insert(out.end(), it->second.factors().begin(), it->second.factors().end());
    } else {
      out.push_back(Factor{"", substitute_factors(f.argument, s)});
    }
  }
  return out;
}

} // namespace

std::size_t Term::symbol_count() const { return count_symbols(factors_); }

int Term::inverse_depth() const { return depth_of(factors_); }

std::string Term::str() const {
  std::string out;
  print_factors(factors_, out);
  return out;
}

std::string Identity::str() const { return lhs.str() + " = " + (rhs ? rhs->str() : std::string("0")); }

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.term();
  p.finish();
  return t;
}

Identity parse_identity(std::string_view text) {
  Parser p(text);
  Identity id = p.identity();
  p.finish();
  return id;
}

TermStats term_stats(const Term& t) {
  TermStats st;
  auto ls = letters_of(t);
  for (const auto& l : ls) {
    st.content.insert(l);
    ++st.occurrences[l];
  }
  for (const auto& [l, n] : st.occurrences) (n == 1 ? st.simple_letters : st.multiple_letters).insert(l);
  st.first_letter = ls.front();
  st.last_letter = ls.back();
  st.is_semigroup_word = t.is_semigroup_word();
  if (st.is_semigroup_word) st.length = t.factor_count();
  st.is_linear = st.is_semigroup_word && st.multiple_letters.empty();
  return st;
}

std::set<Symbol> content(const Term& t) {
  auto ls = letters_of(t);
  return {ls.begin(), ls.end()};
}

Term substitute(const Term& t, const Substitution& s) { return Term(substitute_factors(t.factors(), s)); }

Symbol fresh_letter(const std::vector<Term>& avoid, std::string_view stem) {
  std::set<Symbol> used;
  for (const auto& t : avoid) {
    auto c = content(t);
    used.insert(c.begin(), c.end());
  }
  Symbol cand(stem);
  for (int i = 1; used.count(cand); ++i) cand = std::string(stem) + std::to_string(i);
  return cand;
}

Term linear_word(int n) {
  if (n < 1) throw Error("linear word needs at least one letter");
  std::vector<Factor> fs;
  for (int i = 1; i <= n; ++i) fs.push_back(Factor{"x" + std::to_string(i), {}});
  return Term(std::move(fs));
}

namespace {

bool is_renaming(const Term& u, const Term& v) {
  auto cu = content(u), cv = content(v);
  if (cu.size() != cv.size()) return false;
  if (u.symbol_count() != v.symbol_count()) return false;
  std::vector<Symbol> from(cu.begin(), cu.end()), to(cv.begin(), cv.end());
  do {
    Substitution s;
    for (std::size_t i = 0; i < from.size(); ++i) s.emplace(from[i], Term::letter(to[i]));
    if (substitute(u, s) == v) return true;
  } while (std::next_permutation(to.begin(), to.end()));
  return false;
}

} // namespace

IdentityClass classify_identity(const Identity& id) {
  IdentityClass c;
  bool ls = id.lhs.is_semigroup_word();
  if (id.is_zero()) {
    c.kind = ls ? IdentityKind::Semigroup : IdentityKind::Unary;
    c.zero_reduced = true;
    return c;
  }
  const Term& u = id.lhs;
  const Term& v = *id.rhs;
  bool rs = v.is_semigroup_word();
  c.kind = (ls && rs) ? IdentityKind::Semigroup : (ls || rs) ? IdentityKind::Mixed : IdentityKind::Unary;
  auto su = term_stats(u), sv = term_stats(v);
  c.balanced = ls && rs && su.occurrences == sv.occurrences;
  c.substitutive = is_renaming(u, v);
  if (su.is_linear && sv.is_linear && su.content == sv.content && u != v) {
    c.permutative = true;
    c.strongly_permutative = su.first_letter != sv.first_letter && su.last_letter != sv.last_letter;
  }
  return c;
}

std::vector<Identity> expand_zero(const Identity& id) {
  if (!id.is_zero()) return {id};
  Term z = Term::letter(fresh_letter({id.lhs}));
  return {Identity{Term::product(id.lhs, z), id.lhs}, Identity{Term::product(z, id.lhs), id.lhs}};
}

bool k_sigma_is_variety(const std::vector<Identity>& sigma) {
  for (const auto& id : sigma) {
    for (const auto& e : expand_zero(id)) {
      auto c = classify_identity(e);
      if (c.kind == IdentityKind::Mixed) return true;
      if (c.kind == IdentityKind::Semigroup && !c.balanced) return true;
    }
  }
  return false;
}

} // namespace epilat

namespace epilat {

namespace {

using Cont = std::function<bool()>;

// Continuation-passing matcher; returns false once the visitor asked to stop.
bool match_seq(const std::vector<Factor>& p, std::size_t pi, std::span<const Factor> t, std::size_t ti,
               Substitution& b, const Cont& k) {
  if (pi == p.size()) return ti == t.size() ? k() : true;
  const std::size_t rest = p.size() - pi;
  if (t.size() - ti < rest) return true;
  const Factor& f = p[pi];
  if (f.is_inverse()) {
    if (!t[ti].is_inverse()) return true;
    std::span<const Factor> inner(t[ti].argument);
    return match_seq(f.argument, 0, inner, 0, b, [&] { return match_seq(p, pi + 1, t, ti + 1, b, k); });
  }
  if (auto it = b.find(f.letter); it != b.end()) {
    const auto& img = it->second.factors();
    if (t.size() - ti < img.size()) return true;
    if (!std::equal(img.begin(), img.end(), t.begin() + ti)) return true;
    return match_seq(p, pi + 1, t, ti + img.size(), b, k);
  }
  const std::size_t max_len = t.size() - ti - (rest - 1);
  for (std::size_t len = 1; len <= max_len; ++len) {
    b.emplace(f.letter, Term(std::vector<Factor>(t.begin() + ti, t.begin() + ti + len)));
    bool go = match_seq(p, pi + 1, t, ti + len, b, k);
    b.erase(f.letter);
    if (!go) return false;
  }
  return true;
}

} // namespace

void for_each_match(const std::vector<Factor>& pattern, std::span<const Factor> target,
                    const std::function<bool(const Substitution&)>& visit, const Substitution& seed) {
  Substitution b = seed;
  match_seq(pattern, 0, target, 0, b, [&] { return visit(b); });
}

std::vector<Substitution> match_instance(const Term& pattern, const Term& target) {
  std::vector<Substitution> out;
  for_each_match(pattern.factors(), target.factors(), [&](const Substitution& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

bool has_instance_factor(const Term& pattern, const Term& target) {
  const auto& t = target.factors();
  const std::size_t m = pattern.factor_count();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + m; j <= t.size(); ++j) {
      bool found = false;
      for_each_match(pattern.factors(), std::span<const Factor>(t.data() + i, j - i),
                     [&](const Substitution&) { return !(found = true); });
      if (found) return true;
    }
  return false;
}

} // namespace epilat
