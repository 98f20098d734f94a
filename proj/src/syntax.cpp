// Copyright (c) 2026 The lpforget Authors.
// Distributed under the MIT license that can be found in the LICENSE file.

#include "lpforget/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace lpforget {

// ---------------------------------------------------------------------------
// Atoms
// ---------------------------------------------------------------------------

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  if (name == "not") {  // keyword, could never be parsed back
    return false;
  }
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!is_valid_atom_name(name_)) {
    throw std::invalid_argument("invalid atom name: '" + name_ + "'");
  }
}

// ---------------------------------------------------------------------------
// Rules and programs
// ---------------------------------------------------------------------------

std::set<Atom> Rule::atoms() const {
  std::set<Atom> out(head);
  out.insert(body_pos.begin(), body_pos.end());
  out.insert(body_neg.begin(), body_neg.end());
  out.insert(body_negneg.begin(), body_negneg.end());
  return out;
}

std::set<Atom> Program::occurring_atoms() const {
  std::set<Atom> out;
  for (const Rule& r : rules) {
    auto a = r.atoms();
    out.insert(a.begin(), a.end());
  }
  return out;
}

std::set<Atom> Program::signature() const {
  std::set<Atom> out = occurring_atoms();
  out.insert(extra_atoms.begin(), extra_atoms.end());
  return out;
}

bool operator==(const Program& a, const Program& b) {
  return a.rules == b.rules && a.signature() == b.signature();
}

std::set<Atom> signature_of(const Program& p) { return p.signature(); }
std::set<Atom> signature_of(const Theory& t) { return t.signature(); }

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

struct Formula::Node {
  Kind kind;
  std::optional<Atom> atom;        // Kind::Atom
  std::vector<Formula> children;   // And/Or: n-ary; Implies: exactly two
};

Formula Formula::make(Kind kind, std::optional<Atom> atom,
                      std::vector<Formula> children) {
  return Formula(std::make_shared<const Node>(
      Node{kind, std::move(atom), std::move(children)}));
}

Formula Formula::falsum() {
  static const Formula f = make(Kind::Falsum, std::nullopt, {});
  return f;
}

Formula Formula::verum() {
  static const Formula t = make(Kind::And, std::nullopt, {});
  return t;
}

Formula Formula::atom(Atom a) { return make(Kind::Atom, std::move(a), {}); }

Formula Formula::conj(std::vector<Formula> children) {
  // Flatten nested conjunctions; this also erases #true children.
  std::vector<Formula> flat;
  for (Formula& c : children) {
    if (c.kind() == Kind::And) {
      auto& kids = c.children();
      flat.insert(flat.end(), kids.begin(), kids.end());
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.size() == 1) {
    return flat.front();
  }
  return make(Kind::And, std::nullopt, std::move(flat));
}

Formula Formula::disj(std::vector<Formula> children) {
  std::vector<Formula> flat;
  for (Formula& c : children) {
    if (c.kind() == Kind::Or) {
      auto& kids = c.children();
      flat.insert(flat.end(), kids.begin(), kids.end());
    } else if (c.kind() == Kind::Falsum) {
      continue;
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) {
    return falsum();
  }
  if (flat.size() == 1) {
    return flat.front();
  }
  return make(Kind::Or, std::nullopt, std::move(flat));
}

Formula Formula::implies(Formula antecedent, Formula consequent) {
  return make(Kind::Implies, std::nullopt,
              {std::move(antecedent), std::move(consequent)});
}

Formula Formula::negate(Formula f) { return implies(std::move(f), falsum()); }

Formula Formula::negneg(Formula f) { return negate(negate(std::move(f))); }

Formula::Kind Formula::kind() const { return node_->kind; }

const Atom& Formula::as_atom() const { return *node_->atom; }

const std::vector<Formula>& Formula::children() const {
  return node_->children;
}

const Formula& Formula::antecedent() const { return node_->children[0]; }

const Formula& Formula::consequent() const { return node_->children[1]; }

bool Formula::is_verum() const {
  return kind() == Kind::And && node_->children.empty();
}

bool Formula::is_negation() const {
  return kind() == Kind::Implies && consequent().is_falsum();
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) {
    return true;
  }
  if (a.kind() != b.kind()) {
    return false;
  }
  switch (a.kind()) {
    case Formula::Kind::Falsum:
      return true;
    case Formula::Kind::Atom:
      return a.as_atom() == b.as_atom();
    default:
      return a.children() == b.children();
  }
}

std::set<Atom> atoms_of(const Formula& f) {
  std::set<Atom> out;
  auto walk = [&out](auto&& self, const Formula& g) -> void {
    switch (g.kind()) {
      case Formula::Kind::Falsum:
        return;
      case Formula::Kind::Atom:
        out.insert(g.as_atom());
        return;
      default:
        for (const Formula& c : g.children()) {
          self(self, c);
        }
    }
  };
  walk(walk, f);
  return out;
}

// ---------------------------------------------------------------------------
// Theories
// ---------------------------------------------------------------------------

std::set<Atom> Theory::occurring_atoms() const {
  std::set<Atom> out;
  for (const Formula& f : formulas) {
    auto a = atoms_of(f);
    out.insert(a.begin(), a.end());
  }
  return out;
}

std::set<Atom> Theory::signature() const {
  std::set<Atom> out = occurring_atoms();
  out.insert(extra_atoms.begin(), extra_atoms.end());
  return out;
}

bool operator==(const Theory& a, const Theory& b) {
  return a.formulas == b.formulas && a.signature() == b.signature();
}

Formula rule_to_formula(const Rule& r) {
  std::vector<Formula> body;
  for (const Atom& a : r.body_pos) {
    body.push_back(Formula::atom(a));
  }
  for (const Atom& a : r.body_neg) {
    body.push_back(Formula::negate(Formula::atom(a)));
  }
  for (const Atom& a : r.body_negneg) {
    body.push_back(Formula::negneg(Formula::atom(a)));
  }
  std::vector<Formula> head;
  for (const Atom& a : r.head) {
    head.push_back(Formula::atom(a));
  }
  return Formula::implies(Formula::conj(std::move(body)),
                          Formula::disj(std::move(head)));
}

Theory to_theory(const Program& p) {
  Theory t;
  t.formulas.reserve(p.rules.size());
  for (const Rule& r : p.rules) {
    t.formulas.push_back(rule_to_formula(r));
  }
  std::set<Atom> sig = p.signature();
  std::set<Atom> occ = t.occurring_atoms();
  std::set_difference(sig.begin(), sig.end(), occ.begin(), occ.end(),
                      std::inserter(t.extra_atoms, t.extra_atoms.end()));
  return t;
}

// ---------------------------------------------------------------------------
// Rule-shape recognition
// ---------------------------------------------------------------------------

namespace {

// Collects `a`, `not a`, `not not a` into the body sets. Returns false for
// anything else.
bool collect_literal(const Formula& f, Rule& r) {
  if (f.kind() == Formula::Kind::Atom) {
    r.body_pos.insert(f.as_atom());
    return true;
  }
  if (f.is_negation()) {
    const Formula& inner = f.antecedent();
    if (inner.kind() == Formula::Kind::Atom) {
      r.body_neg.insert(inner.as_atom());
      return true;
    }
    if (inner.is_negation() &&
        inner.antecedent().kind() == Formula::Kind::Atom) {
      r.body_negneg.insert(inner.antecedent().as_atom());
      return true;
    }
  }
  return false;
}

// Decomposes an implication into a rule if head and body have rule form,
// then verifies the decomposition is exact by rebuilding the formula. The
// round trip through text relies on printing rule syntax only for formulas
// that reconstruct bit-identically.
std::optional<Rule> as_rule_shape(const Formula& f) {
  if (f.kind() != Formula::Kind::Implies) {
    return std::nullopt;
  }
  Rule r;
  const Formula& head = f.consequent();
  if (head.kind() == Formula::Kind::Atom) {
    r.head.insert(head.as_atom());
  } else if (head.kind() == Formula::Kind::Or) {
    for (const Formula& c : head.children()) {
      if (c.kind() != Formula::Kind::Atom) {
        return std::nullopt;
      }
      r.head.insert(c.as_atom());
    }
  } else if (!head.is_falsum()) {
    return std::nullopt;
  }
  const Formula& body = f.antecedent();
  if (body.kind() == Formula::Kind::And) {
    for (const Formula& c : body.children()) {
      if (!collect_literal(c, r)) {
        return std::nullopt;
      }
    }
  } else if (!collect_literal(body, r)) {
    return std::nullopt;
  }
  if (r.empty()) {
    return std::nullopt;
  }
  if (rule_to_formula(r) != f) {
    return std::nullopt;
  }
  return r;
}

}  // namespace

std::optional<Program> as_program(const Theory& t) {
  Program p;
  for (const Formula& f : t.formulas) {
    auto r = as_rule_shape(f);
    if (!r) {
      return std::nullopt;
    }
    p.rules.push_back(std::move(*r));
  }
  std::set<Atom> sig = t.signature();
  std::set<Atom> occ = p.occurring_atoms();
  std::set_difference(sig.begin(), sig.end(), occ.begin(), occ.end(),
                      std::inserter(p.extra_atoms, p.extra_atoms.end()));
  return p;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

std::string join_atoms(const std::set<Atom>& atoms, const char* sep) {
  std::string out;
  for (const Atom& a : atoms) {
    if (!out.empty()) {
      out += sep;
    }
    out += a.name();
  }
  return out;
}

std::string render_expr(const Formula& f);

// `not` binds a single operand; parenthesize anything that is not already
// atomic or another negation.
std::string render_not_operand(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return f.as_atom().name();
    case Formula::Kind::Falsum:
      return "#false";
    case Formula::Kind::And:
      if (f.is_verum()) {
        return "#true";
      }
      return "(" + render_expr(f) + ")";
    case Formula::Kind::Implies:
      if (f.is_negation()) {
        return "not " + render_not_operand(f.antecedent());
      }
      return "(" + render_expr(f) + ")";
    default:
      return "(" + render_expr(f) + ")";
  }
}

std::string render_child(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return f.as_atom().name();
    case Formula::Kind::Falsum:
      return "#false";
    case Formula::Kind::And:
      if (f.is_verum()) {
        return "#true";
      }
      return "(" + render_expr(f) + ")";
    case Formula::Kind::Or:
      return "(" + render_expr(f) + ")";
    case Formula::Kind::Implies:
      if (f.is_negation()) {
        return "not " + render_not_operand(f.antecedent());
      }
      return "(" + render_expr(f) + ")";
  }
  return {};
}

std::string render_expr(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Falsum:
      return "#false";
    case Formula::Kind::Atom:
      return f.as_atom().name();
    case Formula::Kind::And: {
      if (f.is_verum()) {
        return "#true";
      }
      std::string out;
      for (const Formula& c : f.children()) {
        if (!out.empty()) {
          out += " & ";
        }
        out += render_child(c);
      }
      return out;
    }
    case Formula::Kind::Or: {
      std::string out;
      for (const Formula& c : f.children()) {
        if (!out.empty()) {
          out += " | ";
        }
        out += render_child(c);
      }
      return out;
    }
    case Formula::Kind::Implies: {
      if (f.is_negation()) {
        return "not " + render_not_operand(f.antecedent());
      }
      return render_child(f.antecedent()) + " -> " +
             render_child(f.consequent());
    }
  }
  return {};
}

}  // namespace

std::string render(const Rule& r) {
  std::string body;
  auto add = [&body](const std::string& lit) {
    if (!body.empty()) {
      body += ", ";
    }
    body += lit;
  };
  for (const Atom& a : r.body_pos) {
    add(a.name());
  }
  for (const Atom& a : r.body_neg) {
    add("not " + a.name());
  }
  for (const Atom& a : r.body_negneg) {
    add("not not " + a.name());
  }
  std::string head = join_atoms(r.head, " | ");
  if (body.empty()) {
    return head + ".";
  }
  if (head.empty()) {
    return ":- " + body + ".";
  }
  return head + " :- " + body + ".";
}

std::string render(const Formula& f) {
  if (auto r = as_rule_shape(f)) {
    return render(*r);
  }
  if (f.kind() == Formula::Kind::Implies && !f.is_negation()) {
    const Formula& body = f.antecedent();
    const Formula& head = f.consequent();
    if (body.is_verum()) {
      return render_expr(head) + ".";
    }
    if (head.is_falsum()) {
      return ":- " + render_expr(body) + ".";
    }
    return render_expr(head) + " :- " + render_expr(body) + ".";
  }
  return render_expr(f) + ".";
}

namespace {

std::string render_atoms_directive(const std::set<Atom>& signature,
                                   const std::set<Atom>& occurring) {
  std::set<Atom> extra;
  std::set_difference(signature.begin(), signature.end(), occurring.begin(),
                      occurring.end(), std::inserter(extra, extra.end()));
  if (extra.empty()) {
    return {};
  }
  return "#atoms " + join_atoms(extra, ", ") + ".\n";
}

}  // namespace

std::string render(const Program& p) {
  std::string out = render_atoms_directive(p.signature(), p.occurring_atoms());
  for (const Rule& r : p.rules) {
    out += render(r);
    out += '\n';
  }
  return out;
}

std::string render(const Theory& t) {
  std::string out = render_atoms_directive(t.signature(), t.occurring_atoms());
  for (const Formula& f : t.formulas) {
    out += render(f);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

SyntaxError::SyntaxError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok {
  Ident,
  Not,
  AtomsDirective,
  True,
  False,
  Dot,
  Comma,
  Pipe,
  Amp,
  Arrow,   // ->
  ColonDash,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const char* token_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "atom";
    case Tok::Not: return "'not'";
    case Tok::AtomsDirective: return "'#atoms'";
    case Tok::True: return "'#true'";
    case Tok::False: return "'#false'";
    case Tok::Dot: return "'.'";
    case Tok::Comma: return "','";
    case Tok::Pipe: return "'|'";
    case Tok::Amp: return "'&'";
    case Tok::Arrow: return "'->'";
    case Tok::ColonDash: return "':-'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      int line = line_;
      int col = column_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      char c = text_[pos_];
      if (std::islower(static_cast<unsigned char>(c))) {
        std::string word = lex_word();
        out.push_back({word == "not" ? Tok::Not : Tok::Ident, std::move(word),
                       line, col});
        continue;
      }
      if (c == '#') {
        ++pos_;
        ++column_;
        std::string word = lex_word();
        if (word == "atoms") {
          out.push_back({Tok::AtomsDirective, "#atoms", line, col});
        } else if (word == "true") {
          out.push_back({Tok::True, "#true", line, col});
        } else if (word == "false") {
          out.push_back({Tok::False, "#false", line, col});
        } else {
          throw SyntaxError("unknown directive '#" + word + "'", line, col);
        }
        continue;
      }
      switch (c) {
        case '.': out.push_back({Tok::Dot, ".", line, col}); break;
        case ',': out.push_back({Tok::Comma, ",", line, col}); break;
        case '|': out.push_back({Tok::Pipe, "|", line, col}); break;
        case '&': out.push_back({Tok::Amp, "&", line, col}); break;
        case '(': out.push_back({Tok::LParen, "(", line, col}); break;
        case ')': out.push_back({Tok::RParen, ")", line, col}); break;
        case ':':
          if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
            out.push_back({Tok::ColonDash, ":-", line, col});
            ++pos_;
            ++column_;
          } else {
            throw SyntaxError("expected ':-'", line, col);
          }
          break;
        case '-':
          if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            out.push_back({Tok::Arrow, "->", line, col});
            ++pos_;
            ++column_;
          } else {
            throw SyntaxError("expected '->'", line, col);
          }
          break;
        default:
          throw SyntaxError(std::string("unexpected character '") + c + "'",
                            line, col);
      }
      ++pos_;
      ++column_;
    }
  }

 private:
  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          ++pos_;
        }
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        column_ = 1;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        ++column_;
      } else {
        return;
      }
    }
  }

  std::string lex_word() {
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos_;
        ++column_;
      } else {
        break;
      }
    }
    if (pos_ == start) {
      throw SyntaxError("expected identifier", line_, column_);
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

// One parsed statement, before deciding whether it is a rule.
struct RawStatement {
  std::optional<Formula> head;  // absent for `:- body.`
  std::optional<Formula> body;  // absent for `head.`
  bool is_directive = false;
  std::set<Atom> declared;
  int line = 0;
  int column = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  std::vector<RawStatement> run() {
    std::vector<RawStatement> out;
    while (peek().kind != Tok::End) {
      out.push_back(statement());
    }
    return out;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }

  Token advance() { return tokens_[index_++]; }

  Token expect(Tok kind) {
    if (peek().kind != kind) {
      throw SyntaxError(std::string("expected ") + token_name(kind) +
                            ", found " + token_name(peek().kind),
                        peek().line, peek().column);
    }
    return advance();
  }

  RawStatement statement() {
    RawStatement st;
    st.line = peek().line;
    st.column = peek().column;
    if (peek().kind == Tok::AtomsDirective) {
      advance();
      st.is_directive = true;
      st.declared.insert(Atom(expect(Tok::Ident).text));
      while (peek().kind == Tok::Comma) {
        advance();
        st.declared.insert(Atom(expect(Tok::Ident).text));
      }
      expect(Tok::Dot);
      return st;
    }
    if (peek().kind == Tok::ColonDash) {
      advance();
      st.body = body();
      expect(Tok::Dot);
      return st;
    }
    st.head = formula();
    if (peek().kind == Tok::ColonDash) {
      advance();
      st.body = body();
    }
    expect(Tok::Dot);
    return st;
  }

  // A rule body: `,`-separated formulas folded into one conjunction.
  Formula body() {
    std::vector<Formula> terms;
    terms.push_back(formula());
    while (peek().kind == Tok::Comma) {
      advance();
      terms.push_back(formula());
    }
    return Formula::conj(std::move(terms));
  }

  // Precedence: not > & > | > ->, with -> right associative.
  Formula formula() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Arrow) {
      advance();
      return Formula::implies(std::move(lhs), formula());
    }
    return lhs;
  }

  Formula disjunction() {
    std::vector<Formula> terms;
    terms.push_back(conjunction());
    while (peek().kind == Tok::Pipe) {
      advance();
      terms.push_back(conjunction());
    }
    if (terms.size() == 1) {
      return std::move(terms.front());
    }
    return Formula::disj(std::move(terms));
  }

  Formula conjunction() {
    std::vector<Formula> terms;
    terms.push_back(unary());
    while (peek().kind == Tok::Amp) {
      advance();
      terms.push_back(unary());
    }
    if (terms.size() == 1) {
      return std::move(terms.front());
    }
    return Formula::conj(std::move(terms));
  }

  Formula unary() {
    if (peek().kind == Tok::Not) {
      advance();
      return Formula::negate(unary());
    }
    return primary();
  }

  Formula primary() {
    switch (peek().kind) {
      case Tok::Ident:
        return Formula::atom(Atom(advance().text));
      case Tok::True:
        advance();
        return Formula::verum();
      case Tok::False:
        advance();
        return Formula::falsum();
      case Tok::LParen: {
        advance();
        Formula f = formula();
        expect(Tok::RParen);
        return f;
      }
      default:
        throw SyntaxError(std::string("expected atom, '#true', '#false', "
                                      "'not' or '(', found ") +
                              token_name(peek().kind),
                          peek().line, peek().column);
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

// Reassembles a Rule from the statement parts, if both fit the rule grammar.
std::optional<Rule> statement_to_rule(const RawStatement& st) {
  Rule r;
  if (st.head) {
    if (st.head->kind() == Formula::Kind::Atom) {
      r.head.insert(st.head->as_atom());
    } else if (st.head->kind() == Formula::Kind::Or) {
      for (const Formula& c : st.head->children()) {
        if (c.kind() != Formula::Kind::Atom) {
          return std::nullopt;
        }
        r.head.insert(c.as_atom());
      }
    } else {
      return std::nullopt;
    }
  }
  if (st.body) {
    Rule probe = r;
    if (st.body->kind() == Formula::Kind::And && !st.body->is_verum()) {
      for (const Formula& c : st.body->children()) {
        if (!collect_literal(c, probe)) {
          return std::nullopt;
        }
      }
    } else if (!st.body->is_verum() && !collect_literal(*st.body, probe)) {
      return std::nullopt;
    }
    r = probe;
  }
  if (r.empty()) {
    return std::nullopt;
  }
  return r;
}

}  // namespace

Program parse_program(std::string_view text) {
  Program p;
  bool saw_directive = false;
  for (const RawStatement& st : Parser(text).run()) {
    if (st.is_directive) {
      if (saw_directive) {
        throw SyntaxError("duplicate '#atoms' declaration", st.line,
                          st.column);
      }
      saw_directive = true;
      p.extra_atoms.insert(st.declared.begin(), st.declared.end());
      continue;
    }
    auto r = statement_to_rule(st);
    if (!r) {
      throw SyntaxError("statement is not a rule", st.line, st.column);
    }
    p.rules.push_back(std::move(*r));
  }
  // Keep only atoms declared beyond the occurring ones.
  std::set<Atom> occ = p.occurring_atoms();
  for (auto it = p.extra_atoms.begin(); it != p.extra_atoms.end();) {
    it = occ.count(*it) ? p.extra_atoms.erase(it) : std::next(it);
  }
  return p;
}

Theory parse_theory(std::string_view text) {
  Theory t;
  bool saw_directive = false;
  for (const RawStatement& st : Parser(text).run()) {
    if (st.is_directive) {
      if (saw_directive) {
        throw SyntaxError("duplicate '#atoms' declaration", st.line,
                          st.column);
      }
      saw_directive = true;
      t.extra_atoms.insert(st.declared.begin(), st.declared.end());
      continue;
    }
    if (auto r = statement_to_rule(st)) {
      t.formulas.push_back(rule_to_formula(*r));
      continue;
    }
    // Every stored statement is an implication, so that text produced by
    // render() reparses to the same value.
    if (st.head && st.body) {
      t.formulas.push_back(Formula::implies(*st.body, *st.head));
    } else if (st.body) {
      t.formulas.push_back(Formula::implies(*st.body, Formula::falsum()));
    } else if (st.head->kind() == Formula::Kind::Implies) {
      // render() prints `#true -> psi` as the statement `psi.`, so peel
      // trivial antecedents off nested implications to keep one canonical
      // stored value per statement text.
      Formula f = *st.head;
      while (f.antecedent().is_verum() &&
             f.consequent().kind() == Formula::Kind::Implies) {
        f = f.consequent();
      }
      t.formulas.push_back(f);
    } else {
      t.formulas.push_back(Formula::implies(Formula::verum(), *st.head));
    }
  }
  std::set<Atom> occ = t.occurring_atoms();
  for (auto it = t.extra_atoms.begin(); it != t.extra_atoms.end();) {
    it = occ.count(*it) ? t.extra_atoms.erase(it) : std::next(it);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Simplification
// ---------------------------------------------------------------------------

namespace {

Formula simplified_not(const Formula& f) {
  if (f.is_verum()) {
    return Formula::falsum();
  }
  if (f.is_falsum()) {
    return Formula::verum();
  }
  // not not not f == not f, valid in Here-and-There.
  if (f.is_negation() && f.antecedent().is_negation()) {
    return simplified_not(f.antecedent().antecedent());
  }
  return Formula::negate(f);
}

bool contains(const std::vector<Formula>& xs, const Formula& f) {
  return std::find(xs.begin(), xs.end(), f) != xs.end();
}

}  // namespace

Formula simplify(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Falsum:
    case Formula::Kind::Atom:
      return f;
    case Formula::Kind::And: {
      std::vector<Formula> kids;
      for (const Formula& c : f.children()) {
        Formula s = simplify(c);
        if (s.is_falsum()) {
          return Formula::falsum();
        }
        if (!s.is_verum() && !contains(kids, s)) {
          kids.push_back(std::move(s));
        }
      }
      return Formula::conj(std::move(kids));
    }
    case Formula::Kind::Or: {
      std::vector<Formula> kids;
      for (const Formula& c : f.children()) {
        Formula s = simplify(c);
        if (s.is_verum()) {
          return Formula::verum();
        }
        if (!s.is_falsum() && !contains(kids, s)) {
          kids.push_back(std::move(s));
        }
      }
      return Formula::disj(std::move(kids));
    }
    case Formula::Kind::Implies: {
      Formula lhs = simplify(f.antecedent());
      Formula rhs = simplify(f.consequent());
      if (rhs.is_falsum()) {
        return simplified_not(lhs);
      }
      if (lhs.is_verum()) {
        return rhs;
      }
      if (lhs.is_falsum() || rhs.is_verum() || lhs == rhs) {
        return Formula::verum();
      }
      return Formula::implies(std::move(lhs), std::move(rhs));
    }
  }
  return f;
}

Theory simplify(const Theory& t) {
  Theory out;
  out.extra_atoms = t.extra_atoms;
  for (const Formula& f : t.formulas) {
    Formula s = simplify(f);
    if (s.is_verum()) {
      continue;
    }
    if (s.kind() != Formula::Kind::Implies) {
      s = Formula::implies(Formula::verum(), std::move(s));
    }
    out.formulas.push_back(std::move(s));
  }
  return out;
}

}  // namespace lpforget
