// Copyright (c) 2026 The lpforget Authors.
// Distributed under the MIT license that can be found in the LICENSE file.

#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpforget/ht.hpp"
#include "lpforget/syntax.hpp"

namespace lpforget {

enum class ContextKind { Facts, Unary, Constraints, Mixed };

// A candidate extension over the public vocabulary.
struct Context {
  std::vector<Rule> rules;
  ContextKind kind = ContextKind::Facts;

  friend bool operator==(const Context&, const Context&) = default;
};

// facts_only restricts enumeration to the 2^|v| fact sets. max_contexts
// caps the materialized sequence; zero is invalid.
struct ContextBudget {
  bool facts_only = false;
  std::size_t max_contexts = 50000;
};

class BudgetInvalid : public std::invalid_argument {
 public:
  BudgetInvalid();
};

// Fixed order: (1) fact sets in counting order over the sorted atoms of v
// (bit i of the counter is the i-th atom, so the empty context comes
// first); (2) for each ordered pair p != q in lexicographic order, the two
// rules `p :- q.` and `p :- not q.`; (3) constraints `:- p.` for each p,
// then `:- p, q.` for each p < q; (4) all unordered pairs of items from
// (2) and (3), in enumeration order of the concatenated list.
std::vector<Context> enumerate_contexts(const std::set<Atom>& v,
                                        const ContextBudget& budget);

enum class VerdictStatus { Pass, Counterexample, ResidualAtom,
                           BudgetExhaustedPass };

const char* to_string(VerdictStatus s);

// Pass is reserved for the complete fact-set check; a finished bounded sweep
// reports BudgetExhaustedPass, which is evidence, not proof.
struct Verdict {
  VerdictStatus status = VerdictStatus::Pass;
  std::size_t contexts_checked = 0;
  std::optional<Context> witness;
  std::optional<ModelSet> models_before;
  std::optional<ModelSet> models_after;
};

// Complete over all 2^|V| fact contexts, V = joint signature minus the
// forgotten atoms: compares equilibrium models of before and after plus the
// context, projected to V.
Verdict check_uniform_persistence(const Program& before, const Theory& after,
                                  const std::set<Atom>& forgotten,
                                  const EnumOptions& opts = {});

// Bounded sweep over enumerate_contexts; stops at the first context where
// the projected equilibrium models differ. The witness is self-certifying:
// recomputing both model sets for it reproduces the difference.
Verdict check_strong_persistence(const Program& before, const Theory& after,
                                 const std::set<Atom>& forgotten,
                                 const ContextBudget& budget = {},
                                 const EnumOptions& opts = {});

// Rules in stored order on a single line, space-separated; the empty
// context renders "".
std::string render(const Context& c);

std::string to_text(const Verdict& v);
std::string to_json(const Verdict& v);

}  // namespace lpforget
