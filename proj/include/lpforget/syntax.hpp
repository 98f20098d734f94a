// Copyright (c) 2026 The lpforget Authors.
// Distributed under the MIT license that can be found in the LICENSE file.

#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lpforget {

/// A propositional atom. Names follow the identifier grammar: a lowercase
/// letter followed by letters, digits or underscores. Atoms compare by name,
/// which fixes a total order used everywhere deterministic output is needed.
class Atom {
 public:
  explicit Atom(std::string name);

  const std::string& name() const { return name_; }

  friend bool operator==(const Atom& a, const Atom& b) = default;
  friend auto operator<=>(const Atom& a, const Atom& b) = default;

 private:
  std::string name_;
};

bool is_valid_atom_name(std::string_view name);

/// One rule of an extended logic program:
///
///   h1 | ... | hk :- p1, ..., not n1, ..., not not d1, ...
///
/// An empty head is a constraint, an empty body a fact. Rule parts are sets;
/// duplicates collapse silently. A rule with empty head and empty body is
/// rejected by the parser.
struct Rule {
  std::set<Atom> head;
  std::set<Atom> body_pos;
  std::set<Atom> body_neg;
  std::set<Atom> body_negneg;

  bool empty() const {
    return head.empty() && body_pos.empty() && body_neg.empty() &&
           body_negneg.empty();
  }
  bool body_empty() const {
    return body_pos.empty() && body_neg.empty() && body_negneg.empty();
  }
  std::set<Atom> atoms() const;

  friend bool operator==(const Rule&, const Rule&) = default;
  friend auto operator<=>(const Rule&, const Rule&) = default;
};

/// An extended logic program: rules in source order plus any atoms declared
/// with `#atoms` beyond the ones that occur in rules. The signature is the
/// union of both.
struct Program {
  std::vector<Rule> rules;
  std::set<Atom> extra_atoms;

  std::set<Atom> occurring_atoms() const;
  std::set<Atom> signature() const;

  friend bool operator==(const Program& a, const Program& b);
};

/// Propositional formulas over {#false, atoms, &, |, ->}. Negation is
/// defined, not primitive: not f == f -> #false, and #true == the empty
/// conjunction. Values are immutable and share subterms.
///
/// Constructors perform light canonicalization only: conjunctions and
/// disjunctions are flattened, neutral elements dropped, and single-child
/// nodes collapsed. Anything deeper lives in simplify().
class Formula {
 public:
  enum class Kind { Falsum, Atom, And, Or, Implies };

  static Formula falsum();
  static Formula verum();  // And with no children
  static Formula atom(Atom a);
  static Formula conj(std::vector<Formula> children);
  static Formula disj(std::vector<Formula> children);
  static Formula implies(Formula antecedent, Formula consequent);
  static Formula negate(Formula f);  // f -> #false
  static Formula negneg(Formula f);

  Kind kind() const;
  const Atom& as_atom() const;                  // Kind::Atom only
  const std::vector<Formula>& children() const;  // And / Or
  const Formula& antecedent() const;             // Implies
  const Formula& consequent() const;             // Implies

  bool is_falsum() const { return kind() == Kind::Falsum; }
  bool is_verum() const;
  /// True for f -> #false.
  bool is_negation() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) {
    return !(a == b);
  }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::optional<Atom> atom,
                      std::vector<Formula> children);
  std::shared_ptr<const Node> node_;
};

std::set<Atom> atoms_of(const Formula& f);

/// An ordered list of formulas plus declared extra atoms. This is the output
/// language of the forgetting operator, whose results may carry non-atomic
/// subformulas that no longer fit the rule grammar.
struct Theory {
  std::vector<Formula> formulas;
  std::set<Atom> extra_atoms;

  std::set<Atom> occurring_atoms() const;
  std::set<Atom> signature() const;

  friend bool operator==(const Theory& a, const Theory& b);
};

/// Reads a rule as an implication: body as a conjunction (with not b and
/// not not b for the negated parts), head as a disjunction. An empty head
/// gives #false, an empty body #true.
Formula rule_to_formula(const Rule& r);

Theory to_theory(const Program& p);

/// Inverse of to_theory where it exists: succeeds iff every formula is in
/// canonical rule shape.
std::optional<Program> as_program(const Theory& t);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses program text. Every statement must be a rule or an `#atoms`
/// declaration; general formulas are rejected here.
Program parse_program(std::string_view text);

/// Parses theory text: rules, `#atoms` declarations, and general formula
/// statements built from atoms, `not`, `&`, `|`, `->`, `#true`, `#false`
/// and parentheses. Every statement is stored as an implication.
Theory parse_theory(std::string_view text);

/// Canonical text. Rules keep their stored order; head atoms and each body
/// group print sorted, so parse(render(p)) == p for any value built from
/// sets like the parser does.
std::string render(const Program& p);
std::string render(const Theory& t);
std::string render(const Rule& r);     // one statement, no newline
std::string render(const Formula& f);  // one statement, no newline

std::set<Atom> signature_of(const Program& p);
std::set<Atom> signature_of(const Theory& t);

/// HT-equivalence-preserving simplification: flattening, neutral and
/// absorbing elements, duplicate removal, collapse of triple negation.
Formula simplify(const Formula& f);
Theory simplify(const Theory& t);

}  // namespace lpforget
