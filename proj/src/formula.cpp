#include "epilat/formula.hpp"

#include <cctype>
#include <optional>

namespace epilat {

namespace {

struct Token {
  enum class T { Ident, Sym, End } type;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  static const char* syms[] = {"<->", "->", "<=", "!=", "\\/", "/\\", "=", "(", ")", "."};
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
      std::size_t st = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::T::Ident, std::string(s.substr(st, i - st)), st});
      continue;
    }
    bool matched = false;
    for (const char* sym : syms) {
      std::string_view v(sym);
      if (s.substr(i, v.size()) == v) {
        out.push_back({Token::T::Sym, std::string(v), i});
        i += v.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError("unexpected character '" + std::string(1, s[i]) + "'", i);
  }
  out.push_back({Token::T::End, "", s.size()});
  return out;
}

bool is_keyword(const std::string& w) {
  return w == "forall" || w == "exists" || w == "and" || w == "or" || w == "not";
}

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view s) : toks_(tokenize(s)) {}

  Formula parse() {
    Formula f = formula();
    if (peek().type != Token::T::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  bool at(const char* text) const { return peek().text == text && peek().type != Token::T::End; }
  void expect(const char* text) {
    if (!at(text)) throw ParseError(std::string("expected '") + text + "'", peek().pos);
    ++i_;
  }

  Formula formula() {
    if (at("forall") || at("exists")) {
      Formula f;
      f.kind = at("forall") ? Formula::Kind::Forall : Formula::Kind::Exists;
      ++i_;
      while (peek().type == Token::T::Ident && !is_keyword(peek().text)) f.vars.push_back(toks_[i_++].text);
      if (f.vars.empty()) throw ParseError("quantifier needs variables", peek().pos);
      expect(".");
      f.children.push_back(formula());
      return f;
    }
    return iff();
  }

  Formula binary(Formula::Kind k, Formula a, Formula b) {
    Formula f;
    f.kind = k;
    f.children = {std::move(a), std::move(b)};
    return f;
  }

  Formula iff() {
    Formula f = implies();
    while (at("<->")) {
      ++i_;
      f = binary(Formula::Kind::Iff, std::move(f), implies());
    }
    return f;
  }

  Formula implies() {
    Formula f = disj();
    if (at("->")) {
      ++i_;
      Formula rhs = at("forall") || at("exists") ? formula() : implies();
      return binary(Formula::Kind::Implies, std::move(f), std::move(rhs));
    }
    return f;
  }

  Formula disj() {
    Formula f = conj();
    while (at("or")) {
      ++i_;
      f = binary(Formula::Kind::Or, std::move(f), conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (at("and")) {
      ++i_;
      f = binary(Formula::Kind::And, std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    if (at("not")) {
      ++i_;
      Formula f;
      f.kind = Formula::Kind::Not;
      f.children.push_back(unary());
      return f;
    }
    if (at("forall") || at("exists")) return formula();
    if (at("(")) {
      // Either a parenthesised formula or a lattice term opening an atom.
      std::size_t save = i_;
      try {
        ++i_;
        Formula f = formula();
        expect(")");
        if (!at("=") && !at("!=") && !at("<=") && !at("\\/") && !at("/\\")) return f;
      } catch (const ParseError&) {
      }
      i_ = save;
    }
    return atom();
  }

  Formula atom() {
    LatticeTerm a = join();
    Formula f;
    if (at("="))
      f.kind = Formula::Kind::Eq;
    else if (at("!="))
      f.kind = Formula::Kind::Neq;
    else if (at("<="))
      f.kind = Formula::Kind::Leq;
    else
      throw ParseError("expected '=', '!=' or '<='", peek().pos);
    ++i_;
    f.terms = {std::move(a), join()};
    return f;
  }

  LatticeTerm join() {
    LatticeTerm t = meet();
    while (at("\\/")) {
      ++i_;
      LatticeTerm j;
      j.op = LatticeTerm::Op::Join;
      j.args = {std::move(t), meet()};
      t = std::move(j);
    }
    return t;
  }

  LatticeTerm meet() {
    LatticeTerm t = primary();
    while (at("/\\")) {
      ++i_;
      LatticeTerm m;
      m.op = LatticeTerm::Op::Meet;
      m.args = {std::move(t), primary()};
      t = std::move(m);
    }
    return t;
  }

  LatticeTerm primary() {
    if (at("(")) {
      ++i_;
      LatticeTerm t = join();
      expect(")");
      return t;
    }
    if (peek().type == Token::T::Ident && !is_keyword(peek().text)) {
      LatticeTerm t;
      t.var = toks_[i_++].text;
      return t;
    }
    throw ParseError("expected a variable or '('", peek().pos);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

void term_vars(const LatticeTerm& t, std::set<std::string>& out) {
  if (t.op == LatticeTerm::Op::Var)
    out.insert(t.var);
  else
    for (const auto& a : t.args) term_vars(a, out);
}

Node eval_lterm(const FiniteLattice& l, const LatticeTerm& t, const Binding& b) {
  if (t.op == LatticeTerm::Op::Var) {
    auto it = b.find(t.var);
    if (it == b.end()) throw Error("unbound variable '" + t.var + "'");
    return it->second;
  }
  Node x = eval_lterm(l, t.args[0], b), y = eval_lterm(l, t.args[1], b);
  return t.op == LatticeTerm::Op::Join ? l.join(x, y) : l.meet(x, y);
}

bool eval(const FiniteLattice& l, const Formula& f, Binding& b) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Eq: return eval_lterm(l, f.terms[0], b) == eval_lterm(l, f.terms[1], b);
    case K::Neq: return eval_lterm(l, f.terms[0], b) != eval_lterm(l, f.terms[1], b);
    case K::Leq: return l.leq(eval_lterm(l, f.terms[0], b), eval_lterm(l, f.terms[1], b));
    case K::Not: return !eval(l, f.children[0], b);
    case K::And: return eval(l, f.children[0], b) && eval(l, f.children[1], b);
    case K::Or: return eval(l, f.children[0], b) || eval(l, f.children[1], b);
    case K::Implies: return !eval(l, f.children[0], b) || eval(l, f.children[1], b);
    case K::Iff: return eval(l, f.children[0], b) == eval(l, f.children[1], b);
    case K::Forall: case K::Exists: {
      const bool universal = f.kind == K::Forall;
      // Save shadowed bindings, iterate all tuples, restore.
      std::vector<std::optional<Node>> saved;
      for (const auto& v : f.vars) {
        auto it = b.find(v);
        saved.push_back(it == b.end() ? std::nullopt : std::optional<Node>(it->second));
      }
      std::vector<Node> tuple(f.vars.size(), 0);
      bool result = universal;
      while (true) {
        for (std::size_t i = 0; i < tuple.size(); ++i) b[f.vars[i]] = tuple[i];
        if (eval(l, f.children[0], b) != universal) {
          result = !universal;
          break;
        }
        std::size_t i = 0;
        while (i < tuple.size() && ++tuple[i] == l.size()) tuple[i++] = 0;
        if (i == tuple.size()) break;
      }
      for (std::size_t i = 0; i < f.vars.size(); ++i) {
        if (saved[i])
          b[f.vars[i]] = *saved[i];
        else
          b.erase(f.vars[i]);
      }
      return result;
    }
  }
  return false;
}

} // namespace

std::set<std::string> Formula::free_variables() const {
  std::set<std::string> out;
  for (const auto& t : terms) term_vars(t, out);
  for (const auto& c : children) {
    auto fv = c.free_variables();
    out.insert(fv.begin(), fv.end());
  }
  for (const auto& v : vars) out.erase(v);
  return out;
}

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

bool fo_eval(const FiniteLattice& l, const Formula& f, const Binding& binding) {
  for (const auto& v : f.free_variables())
    if (!binding.count(v)) throw Error("unbound variable '" + v + "'");
  Binding b = binding;
  return eval(l, f, b);
}

std::set<Node> defined_set(const FiniteLattice& l, const Formula& f, const std::string& var, const Binding& binding) {
  std::set<Node> out;
  Binding b = binding;
  for (Node a = 0; a < l.size(); ++a) {
    b[var] = a;
    if (fo_eval(l, f, b)) out.insert(a);
  }
  return out;
}

std::string definitional_formula(Special s) {
  switch (s) {
    case Special::Neutral:
      return "forall y z. (x \\/ y) /\\ (y \\/ z) /\\ (z \\/ x) = (x /\\ y) \\/ (y /\\ z) \\/ (z /\\ x)";
    case Special::Standard: return "forall y z. (x \\/ y) /\\ z = (x /\\ z) \\/ (y /\\ z)";
    case Special::Costandard: return "forall y z. (x /\\ y) \\/ z = (x \\/ z) /\\ (y \\/ z)";
    case Special::Distributive: return "forall y z. x \\/ (y /\\ z) = (x \\/ y) /\\ (x \\/ z)";
    case Special::Codistributive: return "forall y z. x /\\ (y \\/ z) = (x /\\ y) \\/ (x /\\ z)";
    case Special::Modular: return "forall y z. y <= z -> (x \\/ y) /\\ z = (x /\\ z) \\/ y";
    case Special::UpperModular: return "forall y z. y <= x -> (z \\/ y) /\\ x = (z /\\ x) \\/ y";
    case Special::LowerModular: return "forall y z. x <= y -> (z /\\ y) \\/ x = (z \\/ x) /\\ y";
  }
  return "";
}

} // namespace epilat
