#pragma once

// First-order logic with majority over strings: index terms, formulas,
// a concrete syntax, direct-enumeration evaluation, and the rewriting of
// conditional majority into counting/threshold form.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fomc/error.hpp"

namespace fomc {

// --- index terms ---------------------------------------------------------

struct IndexTerm;
using TermPtr = std::shared_ptr<const IndexTerm>;

struct IndexTerm {
  enum class Kind { One, LastN, Var, Add, Sub };
  Kind kind;
  std::string name;      // Var
  TermPtr lhs, rhs;      // Add/Sub

  static TermPtr one() { return std::make_shared<IndexTerm>(IndexTerm{Kind::One, "", nullptr, nullptr}); }
  static TermPtr last_n() { return std::make_shared<IndexTerm>(IndexTerm{Kind::LastN, "", nullptr, nullptr}); }
  static TermPtr var(std::string n) {
    if (n.empty()) throw Error(ErrorKind::Precondition, "variable names must be nonempty");
    return std::make_shared<IndexTerm>(IndexTerm{Kind::Var, std::move(n), nullptr, nullptr});
  }
  static TermPtr add(TermPtr a, TermPtr b) {
    return std::make_shared<IndexTerm>(IndexTerm{Kind::Add, "", std::move(a), std::move(b)});
  }
  static TermPtr sub(TermPtr a, TermPtr b) {
    return std::make_shared<IndexTerm>(IndexTerm{Kind::Sub, "", std::move(a), std::move(b)});
  }
};

inline bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case IndexTerm::Kind::One:
    case IndexTerm::Kind::LastN:
      return true;
    case IndexTerm::Kind::Var:
      return a->name == b->name;
    default:
      return term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
  }
}

// --- formulas ------------------------------------------------------------

enum class CmpRel { Eq, Le, Ge };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind {
    TokenPred,     // sym(term)
    Bit,           // bit(term, term)
    Cmp,           // term rel term
    And,
    Or,
    Not,
    Exists,
    Forall,
    Majority,
    CountExact,    // E^t v : phi
    CountAtLeast,  // E>=t v : phi
    CountAtMost,   // E<=t v : phi
    CondMajority,  // M v : guard . body
  };

  Kind kind;
  char symbol = 0;                 // TokenPred
  CmpRel rel = CmpRel::Eq;         // Cmp
  TermPtr t1, t2;                  // TokenPred (t1), Bit, Cmp, count term (t1)
  std::string var;                 // quantifiers
  FormulaPtr f1, f2;               // children

  static FormulaPtr token(char sym, TermPtr t) {
    Formula f{Kind::TokenPred};
    f.symbol = sym;
    f.t1 = std::move(t);
    return std::make_shared<Formula>(std::move(f));
  }
  static FormulaPtr bit(TermPtr i, TermPtr j) {
    Formula f{Kind::Bit};
    f.t1 = std::move(i);
    f.t2 = std::move(j);
    return std::make_shared<Formula>(std::move(f));
  }
  static FormulaPtr cmp(CmpRel rel, TermPtr a, TermPtr b) {
    Formula f{Kind::Cmp};
    f.rel = rel;
    f.t1 = std::move(a);
    f.t2 = std::move(b);
    return std::make_shared<Formula>(std::move(f));
  }
  static FormulaPtr land(FormulaPtr a, FormulaPtr b) {
    Formula f{Kind::And};
    f.f1 = std::move(a);
    f.f2 = std::move(b);
    return std::make_shared<Formula>(std::move(f));
  }
  static FormulaPtr lor(FormulaPtr a, FormulaPtr b) {
    Formula f{Kind::Or};
    f.f1 = std::move(a);
    f.f2 = std::move(b);
    return std::make_shared<Formula>(std::move(f));
  }
  static FormulaPtr lnot(FormulaPtr a) {
    Formula f{Kind::Not};
    f.f1 = std::move(a);
    return std::make_shared<Formula>(std::move(f));
  }
  static FormulaPtr quant(Kind k, std::string v, FormulaPtr body) {
    Formula f{k};
    f.var = std::move(v);
    f.f1 = std::move(body);
    return std::make_shared<Formula>(std::move(f));
  }
  static FormulaPtr count(Kind k, TermPtr t, std::string v, FormulaPtr body) {
    Formula f{k};
    f.t1 = std::move(t);
    f.var = std::move(v);
    f.f1 = std::move(body);
    return std::make_shared<Formula>(std::move(f));
  }
  static FormulaPtr cond_majority(std::string v, FormulaPtr guard, FormulaPtr body) {
    Formula f{Kind::CondMajority};
    f.var = std::move(v);
    f.f1 = std::move(guard);
    f.f2 = std::move(body);
    return std::make_shared<Formula>(std::move(f));
  }
};

inline bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->kind != b->kind || a->symbol != b->symbol || a->rel != b->rel || a->var != b->var) return false;
  auto teq = [](const TermPtr& x, const TermPtr& y) { return (!x && !y) || (x && y && term_equal(x, y)); };
  auto feq = [](const FormulaPtr& x, const FormulaPtr& y) { return (!x && !y) || (x && y && formula_equal(x, y)); };
  return teq(a->t1, b->t1) && teq(a->t2, b->t2) && feq(a->f1, b->f1) && feq(a->f2, b->f2);
}

// --- free variables ------------------------------------------------------

inline void term_vars(const TermPtr& t, std::set<std::string>& out) {
  switch (t->kind) {
    case IndexTerm::Kind::Var:
      out.insert(t->name);
      break;
    case IndexTerm::Kind::Add:
    case IndexTerm::Kind::Sub:
      term_vars(t->lhs, out);
      term_vars(t->rhs, out);
      break;
    default:
      break;
  }
}

inline void free_vars(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case Formula::Kind::TokenPred:
      term_vars(f->t1, out);
      break;
    case Formula::Kind::Bit:
    case Formula::Kind::Cmp:
      term_vars(f->t1, out);
      term_vars(f->t2, out);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      free_vars(f->f1, out);
      free_vars(f->f2, out);
      break;
    case Formula::Kind::Not:
      free_vars(f->f1, out);
      break;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
    case Formula::Kind::Majority: {
      std::set<std::string> inner;
      free_vars(f->f1, inner);
      inner.erase(f->var);
      out.insert(inner.begin(), inner.end());
      break;
    }
    case Formula::Kind::CountExact:
    case Formula::Kind::CountAtLeast:
    case Formula::Kind::CountAtMost: {
      term_vars(f->t1, out);
      std::set<std::string> inner;
      free_vars(f->f1, inner);
      inner.erase(f->var);
      out.insert(inner.begin(), inner.end());
      break;
    }
    case Formula::Kind::CondMajority: {
      std::set<std::string> inner;
      free_vars(f->f1, inner);
      free_vars(f->f2, inner);
      inner.erase(f->var);
      out.insert(inner.begin(), inner.end());
      break;
    }
  }
}

inline std::set<std::string> all_var_names(const FormulaPtr& f) {
  std::set<std::string> out;
  if (f->t1) term_vars(f->t1, out);
  if (f->t2) term_vars(f->t2, out);
  if (!f->var.empty()) out.insert(f->var);
  if (f->f1) {
    auto s = all_var_names(f->f1);
    out.insert(s.begin(), s.end());
  }
  if (f->f2) {
    auto s = all_var_names(f->f2);
    out.insert(s.begin(), s.end());
  }
  return out;
}

// --- input strings and environments --------------------------------------

struct InputString {
  std::string text;
  std::string alphabet;

  InputString(std::string w, std::string sigma) : text(std::move(w)), alphabet(std::move(sigma)) {
    if (text.empty()) throw Error(ErrorKind::Precondition, "input string must be nonempty");
    for (char c : text)
      if (alphabet.find(c) == std::string::npos)
        throw UnknownToken(std::string("token '") + c + "' not in the declared alphabet");
  }
  int64_t length() const { return static_cast<int64_t>(text.size()); }
};

using Environment = std::map<std::string, int64_t>;

// --- evaluation ----------------------------------------------------------

inline int64_t eval_term(const TermPtr& t, const Environment& env, int64_t n) {
  switch (t->kind) {
    case IndexTerm::Kind::One:
      return 1;
    case IndexTerm::Kind::LastN:
      return n;
    case IndexTerm::Kind::Var: {
      auto it = env.find(t->name);
      if (it == env.end()) throw UnboundVariable(t->name);
      return it->second;
    }
    case IndexTerm::Kind::Add:
      return eval_term(t->lhs, env, n) + eval_term(t->rhs, env, n);
    case IndexTerm::Kind::Sub:
      return eval_term(t->lhs, env, n) - eval_term(t->rhs, env, n);
  }
  throw Error(ErrorKind::Precondition, "bad term");
}

inline bool eval(const FormulaPtr& f, const InputString& w, Environment& env);

inline int64_t count_satisfying(const FormulaPtr& body, const std::string& var, const InputString& w, Environment& env) {
  int64_t n = w.length();
  int64_t count = 0;
  auto saved = env.find(var) != env.end() ? std::optional<int64_t>(env[var]) : std::nullopt;
  for (int64_t v = 1; v <= n; ++v) {
    env[var] = v;
    if (eval(body, w, env)) ++count;
  }
  if (saved)
    env[var] = *saved;
  else
    env.erase(var);
  return count;
}

inline bool eval(const FormulaPtr& f, const InputString& w, Environment& env) {
  int64_t n = w.length();
  switch (f->kind) {
    case Formula::Kind::TokenPred: {
      int64_t i = eval_term(f->t1, env, n);
      if (i < 1 || i > n) return false;  // out-of-range index predicate is false
      return w.text[static_cast<std::size_t>(i - 1)] == f->symbol;
    }
    case Formula::Kind::Bit: {
      int64_t i = eval_term(f->t1, env, n);
      int64_t j = eval_term(f->t2, env, n);
      if (i < 0) return false;
      if (j < 1 || j > 64) return false;
      return ((static_cast<uint64_t>(i) >> (j - 1)) & 1) != 0;  // j = 1 is the least significant bit
    }
    case Formula::Kind::Cmp: {
      int64_t a = eval_term(f->t1, env, n), b = eval_term(f->t2, env, n);
      switch (f->rel) {
        case CmpRel::Eq:
          return a == b;
        case CmpRel::Le:
          return a <= b;
        case CmpRel::Ge:
          return a >= b;
      }
      return false;
    }
    case Formula::Kind::And:
      return eval(f->f1, w, env) && eval(f->f2, w, env);
    case Formula::Kind::Or:
      return eval(f->f1, w, env) || eval(f->f2, w, env);
    case Formula::Kind::Not:
      return !eval(f->f1, w, env);
    case Formula::Kind::Exists:
      return count_satisfying(f->f1, f->var, w, env) > 0;
    case Formula::Kind::Forall:
      return count_satisfying(f->f1, f->var, w, env) == n;
    case Formula::Kind::Majority:
      return 2 * count_satisfying(f->f1, f->var, w, env) >= n;
    case Formula::Kind::CountExact:
      return count_satisfying(f->f1, f->var, w, env) == eval_term(f->t1, env, n);
    case Formula::Kind::CountAtLeast:
      return count_satisfying(f->f1, f->var, w, env) >= eval_term(f->t1, env, n);
    case Formula::Kind::CountAtMost:
      return count_satisfying(f->f1, f->var, w, env) <= eval_term(f->t1, env, n);
    case Formula::Kind::CondMajority: {
      // at least half the positions satisfying the guard also satisfy the
      // body; vacuously true on an empty guard
      int64_t guard = count_satisfying(f->f1, f->var, w, env);
      int64_t both = count_satisfying(Formula::land(f->f1, f->f2), f->var, w, env);
      return 2 * both >= guard;
    }
  }
  throw Error(ErrorKind::Precondition, "bad formula");
}

inline bool eval(const FormulaPtr& f, const InputString& w) {
  std::set<std::string> fv;
  free_vars(f, fv);
  if (!fv.empty()) throw UnboundVariable(*fv.begin());
  Environment env;
  return eval(f, w, env);
}

// --- desugaring conditional majority --------------------------------------
//
// M v : phi . psi  becomes
//   !(E v. phi)  |  E k. ( E^k v : phi  &  E kp. ( (k = kp+kp | k = kp+kp-1)
//                                                  & E>=kp j : (phi & psi) ) )
// The ceil(k/2) threshold generalizes the even-count rewrite so the result
// matches the direct semantics for odd guard counts; the vacuous disjunct
// covers guard count zero, which no count variable in [1, n] can name.

inline FormulaPtr substitute_var(const TermPtr& t, const std::string& from, const TermPtr& to);

inline TermPtr term_substitute(const TermPtr& t, const std::string& from, const TermPtr& to) {
  switch (t->kind) {
    case IndexTerm::Kind::Var:
      return t->name == from ? to : t;
    case IndexTerm::Kind::Add:
      return IndexTerm::add(term_substitute(t->lhs, from, to), term_substitute(t->rhs, from, to));
    case IndexTerm::Kind::Sub:
      return IndexTerm::sub(term_substitute(t->lhs, from, to), term_substitute(t->rhs, from, to));
    default:
      return t;
  }
}

inline FormulaPtr formula_substitute(const FormulaPtr& f, const std::string& from, const TermPtr& to) {
  Formula g = *f;
  if (!g.var.empty() && g.var == from) return f;  // shadowed
  if (g.t1) g.t1 = term_substitute(g.t1, from, to);
  if (g.t2) g.t2 = term_substitute(g.t2, from, to);
  if (g.f1) g.f1 = formula_substitute(g.f1, from, to);
  if (g.f2) g.f2 = formula_substitute(g.f2, from, to);
  return std::make_shared<Formula>(std::move(g));
}

namespace detail {
inline std::string fresh_name(const std::set<std::string>& used, int& counter) {
  for (;;) {
    std::string cand = "_c" + std::to_string(counter++);
    if (!used.count(cand)) return cand;
  }
}
}  // namespace detail

inline FormulaPtr desugar_impl(const FormulaPtr& f, std::set<std::string>& used, int& counter) {
  Formula g = *f;
  if (g.f1) g.f1 = desugar_impl(g.f1, used, counter);
  if (g.f2) g.f2 = desugar_impl(g.f2, used, counter);
  if (g.kind != Formula::Kind::CondMajority) return std::make_shared<Formula>(std::move(g));

  const std::string& v = g.var;
  FormulaPtr guard = g.f1, body = g.f2;
  std::string k = detail::fresh_name(used, counter);
  used.insert(k);
  std::string kp = detail::fresh_name(used, counter);
  used.insert(kp);
  std::string j = detail::fresh_name(used, counter);
  used.insert(j);

  TermPtr kt = IndexTerm::var(k), kpt = IndexTerm::var(kp);
  FormulaPtr guard_j = formula_substitute(guard, v, IndexTerm::var(j));
  FormulaPtr body_j = formula_substitute(body, v, IndexTerm::var(j));

  // k = 2 kp  or  k = 2 kp - 1, i.e. kp = ceil(k / 2)
  FormulaPtr half = Formula::lor(Formula::cmp(CmpRel::Eq, kt, IndexTerm::add(kpt, kpt)),
                                 Formula::cmp(CmpRel::Eq, kt, IndexTerm::sub(IndexTerm::add(kpt, kpt), IndexTerm::one())));
  FormulaPtr at_least = Formula::count(Formula::Kind::CountAtLeast, kpt, j, Formula::land(guard_j, body_j));
  FormulaPtr inner = Formula::quant(Formula::Kind::Exists, kp, Formula::land(half, at_least));
  FormulaPtr exact = Formula::count(Formula::Kind::CountExact, kt, v, guard);
  FormulaPtr core = Formula::quant(Formula::Kind::Exists, k, Formula::land(exact, inner));
  FormulaPtr vacuous = Formula::lnot(Formula::quant(Formula::Kind::Exists, v, guard));
  return Formula::lor(vacuous, core);
}

inline FormulaPtr desugar(const FormulaPtr& f) {
  std::set<std::string> used = all_var_names(f);
  int counter = 0;
  return desugar_impl(f, used, counter);
}

// --- concrete syntax -------------------------------------------------------
//
// sentence := formula
// formula  := quant | or
// quant    := ("E"|"A") var "." formula
//           | "M" var "." formula | "M" var ":" formula "." formula
//           | "E^" term var ":" formula | "E>=" term var ":" formula
//           | "E<=" term var ":" formula
// or       := and ("|" and)*
// and      := unary ("&" unary)*
// unary    := "!" unary | atom
// atom     := sym "(" term ")" | "bit(" term "," term ")"
//           | term ("="|"<="|">=") term | "(" formula ")"
// term     := primary (("+"|"-") primary)* ; primary := "1" | "n" | var

class FormulaParser {
public:
  FormulaParser(std::string text, std::string alphabet) : text_(std::move(text)), alphabet_(std::move(alphabet)) {}

  FormulaPtr parse() {
    FormulaPtr f = parse_formula();
    skip_ws();
    if (pos_ != text_.size()) fail("end of input");
    return f;
  }

private:
  std::string text_, alphabet_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& expected) { throw SyntaxError(pos_ + 1, expected); }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }
  bool accept_str(const std::string& s) {
    skip_ws();
    if (text_.compare(pos_, s.size(), s) == 0) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  static bool ident_char(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_'; }
  static bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }

  std::string peek_ident() {
    skip_ws();
    std::size_t p = pos_;
    std::string s;
    if (p < text_.size() && ident_start(text_[p])) {
      s.push_back(text_[p++]);
      while (p < text_.size() && ident_char(text_[p])) s.push_back(text_[p++]);
    }
    return s;
  }
  std::string take_ident() {
    std::string s = peek_ident();
    if (s.empty()) fail("identifier");
    pos_ += s.size();
    return s;
  }

  bool ident_is_reserved(const std::string& s) const {
    return s == "E" || s == "A" || s == "M" || s == "n" || s == "bit";
  }

  FormulaPtr parse_formula() { return parse_quant(); }

  FormulaPtr parse_quant() {
    skip_ws();
    std::size_t save = pos_;
    std::string id = peek_ident();
    if (id == "E" || id == "A" || id == "M") {
      pos_ += id.size();
      if (id == "E") {
        Formula::Kind kind;
        bool counted = true;
        if (accept('^')) {
          kind = Formula::Kind::CountExact;
        } else if (accept_str(">=")) {
          kind = Formula::Kind::CountAtLeast;
        } else if (accept_str("<=")) {
          kind = Formula::Kind::CountAtMost;
        } else {
          counted = false;
          kind = Formula::Kind::Exists;
        }
        if (counted) {
          TermPtr t = parse_term();
          std::string v = take_var();
          expect(':');
          return Formula::count(kind, t, v, parse_formula());
        }
      }
      std::string v = peek_ident();
      if (v.empty() || ident_is_reserved(v)) {
        pos_ = save;  // not a quantifier after all
      } else {
        pos_ += v.size();
        skip_ws();
        if (id == "M" && accept(':')) {
          FormulaPtr guard = parse_formula_until_dot();
          expect('.');
          return Formula::cond_majority(v, guard, parse_formula());
        }
        expect('.');
        Formula::Kind k = id == "E" ? Formula::Kind::Exists : id == "A" ? Formula::Kind::Forall : Formula::Kind::Majority;
        return Formula::quant(k, v, parse_formula());
      }
    }
    return parse_or();
  }

  // guard of a conditional majority: stop at the top-level '.'
  FormulaPtr parse_formula_until_dot() { return parse_or(); }

  std::string take_var() {
    std::string v = take_ident();
    if (ident_is_reserved(v)) fail("variable name");
    return v;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (accept('|')) f = Formula::lor(f, parse_and());
    return f;
  }
  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (accept('&')) f = Formula::land(f, parse_unary());
    return f;
  }
  FormulaPtr parse_unary() {
    if (accept('!')) return Formula::lnot(parse_unary());
    return parse_atom();
  }

  FormulaPtr parse_atom() {
    skip_ws();
    if (accept('(')) {  // terms contain no parentheses, so this is a formula
      FormulaPtr f = parse_formula();
      expect(')');
      return f;
    }
    std::string id = peek_ident();
    if (id == "bit") {
      pos_ += id.size();
      expect('(');
      TermPtr a = parse_term();
      expect(',');
      TermPtr b = parse_term();
      expect(')');
      return Formula::bit(a, b);
    }
    if (id.size() == 1 && alphabet_.find(id[0]) != std::string::npos) {
      std::size_t save = pos_;
      pos_ += id.size();
      if (accept('(')) {
        TermPtr t = parse_term();
        expect(')');
        return Formula::token(id[0], t);
      }
      pos_ = save;  // fall through: it was a variable in a comparison
    } else if (!id.empty() && id.size() == 1 && !ident_is_reserved(id)) {
      // symbol-looking predicate over an undeclared letter
      std::size_t save = pos_;
      pos_ += id.size();
      if (peek('(')) throw UnknownSymbol("token predicate '" + id + "' not in the declared alphabet");
      pos_ = save;
    }
    TermPtr a = parse_term();
    skip_ws();
    CmpRel rel;
    if (accept('=')) {
      rel = CmpRel::Eq;
    } else if (accept_str("<=")) {
      rel = CmpRel::Le;
    } else if (accept_str(">=")) {
      rel = CmpRel::Ge;
    } else {
      fail("'=', '<=' or '>='");
    }
    return Formula::cmp(rel, a, parse_term());
  }

  TermPtr parse_term() {
    TermPtr t = parse_primary();
    for (;;) {
      if (accept('+')) {
        t = IndexTerm::add(t, parse_primary());
      } else if (accept('-')) {
        t = IndexTerm::sub(t, parse_primary());
      } else {
        return t;
      }
    }
  }

  TermPtr parse_primary() {
    skip_ws();
    if (accept('1')) return IndexTerm::one();
    std::string id = peek_ident();
    if (id.empty()) fail("term");
    pos_ += id.size();
    if (id == "n") return IndexTerm::last_n();
    if (id == "bit" || id == "E" || id == "A" || id == "M") fail("term");
    return IndexTerm::var(id);
  }
};

inline FormulaPtr parse_formula(const std::string& text, const std::string& alphabet) {
  return FormulaParser(text, alphabet).parse();
}

// --- pretty printer --------------------------------------------------------

inline std::string print_term(const TermPtr& t) {
  switch (t->kind) {
    case IndexTerm::Kind::One:
      return "1";
    case IndexTerm::Kind::LastN:
      return "n";
    case IndexTerm::Kind::Var:
      return t->name;
    case IndexTerm::Kind::Add:
      return print_term(t->lhs) + "+" + print_term(t->rhs);
    case IndexTerm::Kind::Sub:
      return print_term(t->lhs) + "-" + print_term(t->rhs);
  }
  return "?";
}

inline std::string print_formula(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::TokenPred:
      return std::string(1, f->symbol) + "(" + print_term(f->t1) + ")";
    case Formula::Kind::Bit:
      return "bit(" + print_term(f->t1) + "," + print_term(f->t2) + ")";
    case Formula::Kind::Cmp: {
      const char* r = f->rel == CmpRel::Eq ? "=" : f->rel == CmpRel::Le ? "<=" : ">=";
      return print_term(f->t1) + r + print_term(f->t2);
    }
    case Formula::Kind::And:
      return "(" + print_formula(f->f1) + " & " + print_formula(f->f2) + ")";
    case Formula::Kind::Or:
      return "(" + print_formula(f->f1) + " | " + print_formula(f->f2) + ")";
    case Formula::Kind::Not:
      return "!(" + print_formula(f->f1) + ")";
    case Formula::Kind::Exists:
      return "(E " + f->var + ". " + print_formula(f->f1) + ")";
    case Formula::Kind::Forall:
      return "(A " + f->var + ". " + print_formula(f->f1) + ")";
    case Formula::Kind::Majority:
      return "(M " + f->var + ". " + print_formula(f->f1) + ")";
    case Formula::Kind::CountExact:
      return "(E^ " + print_term(f->t1) + " " + f->var + " : " + print_formula(f->f1) + ")";
    case Formula::Kind::CountAtLeast:
      return "(E>= " + print_term(f->t1) + " " + f->var + " : " + print_formula(f->f1) + ")";
    case Formula::Kind::CountAtMost:
      return "(E<= " + print_term(f->t1) + " " + f->var + " : " + print_formula(f->f1) + ")";
    case Formula::Kind::CondMajority:
      return "(M " + f->var + " : " + print_formula(f->f1) + " . " + print_formula(f->f2) + ")";
  }
  return "?";
}

// --- the example-sentence library ------------------------------------------

// a^m b^m: at least half a's, at least half b's, and no b before an a.
inline FormulaPtr library_sentence(const std::string& name) {
  using F = Formula;
  using T = IndexTerm;
  if (name == "ambm") {
    FormulaPtr no_inversion = F::lnot(F::quant(
        F::Kind::Exists, "k",
        F::quant(F::Kind::Exists, "l",
                 F::land(F::land(F::token('a', T::var("k")), F::token('b', T::var("l"))),
                         // l < k
                         F::land(F::cmp(CmpRel::Le, T::var("l"), T::var("k")),
                                 F::lnot(F::cmp(CmpRel::Eq, T::var("l"), T::var("k"))))))));
    return F::land(F::land(F::quant(F::Kind::Majority, "i", F::token('a', T::var("i"))),
                           F::quant(F::Kind::Majority, "j", F::token('b', T::var("j")))),
                   no_inversion);
  }
  if (name == "bigram") {
    return F::quant(F::Kind::Exists, "i",
                    F::land(F::token('a', T::var("i")), F::token('b', T::add(T::var("i"), T::one()))));
  }
  if (name == "skip_bigram") {
    return F::quant(F::Kind::Exists, "i",
                    F::land(F::token('b', T::var("i")),
                            F::quant(F::Kind::Exists, "j",
                                     F::land(F::cmp(CmpRel::Le, T::var("j"), T::var("i")), F::token('a', T::var("j"))))));
  }
  if (name == "majority") {
    return F::quant(F::Kind::Majority, "i", F::token('b', T::var("i")));
  }
  if (name == "dyck1") {
    // every prefix has #b <= #a (expressed with threshold counts; an exact
    // count cannot name zero), and the whole string balances
    FormulaPtr prefix_ok = F::quant(
        F::Kind::Forall, "i",
        F::quant(F::Kind::Exists, "x",
                 F::land(F::count(F::Kind::CountAtLeast, T::var("x"), "j",
                                  F::land(F::token('a', T::var("j")), F::cmp(CmpRel::Le, T::var("j"), T::var("i")))),
                         F::count(F::Kind::CountAtMost, T::var("x"), "j",
                                  F::land(F::token('b', T::var("j")), F::cmp(CmpRel::Le, T::var("j"), T::var("i")))))));
    return F::land(prefix_ok, F::land(F::quant(F::Kind::Majority, "i", F::token('a', T::var("i"))),
                                      F::quant(F::Kind::Majority, "j", F::token('b', T::var("j")))));
  }
  throw UnknownSentence(name);
}

}  // namespace fomc
