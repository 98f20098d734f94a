// Copyright (c) 2026 The lpforget Authors.
// Distributed under the MIT license that can be found in the LICENSE file.

#pragma once

#include <string>
#include <vector>

#include "lpforget/syntax.hpp"

namespace lpforget {

// The structural guarantee tiers the applicability report distinguishes.
// Corollary1 covers stratified inputs, Theorem1 inputs where the atom only
// heads singleton rules and its external support is atom-free, Theorem2
// inputs without a positive edge chain through the atom.
enum class Guarantee { Theorem1, Corollary1, Theorem2, None };

const char* to_string(Guarantee g);

struct ApplicabilityReport {
  Atom atom;
  bool es_contains_atom = false;
  bool singleton_headed = false;
  bool stratified = false;
  bool thm2_edge_ok = false;
  Guarantee guarantee = Guarantee::None;
  std::vector<std::string> notes;
};

// Deletes rules with a in both head and positive body, and drops a from
// heads where a is also in the negated body. Strongly equivalent to the
// input.
Program behead(const Program& p, const Atom& a);

// Disjunction, over the rules that can support a, of the rule body conjoined
// with the negated disjunction of the other head atoms. No supporting rules
// yields #false.
Formula external_support(const Program& p, const Atom& a);

// residual is set iff the forgotten atom still occurs in the output. That
// needs a support formula mentioning the atom, but is not implied by it:
// the substituted occurrences may all sit in rules the operator deletes.
struct ForgetResult {
  Theory theory;
  bool residual = false;
};

// Forgets a in three steps: behead, drop rules whose head is exactly {a},
// then replace body occurrences of a by its external support and head
// occurrences by the double negation of it. The external support is taken
// from the input program, not the beheaded one.
ForgetResult f_es(const Program& p, const Atom& a);

ApplicabilityReport applicability(const Program& p, const Atom& a);

std::string to_text(const ApplicabilityReport& r);
std::string to_json(const ApplicabilityReport& r);

// Left fold of single-atom forgetting in the given order. Folding needs each
// intermediate theory to stay rule-shaped; blocked is set when one does not
// and the fold stops there.
struct MultiForgetResult {
  Theory theory;
  bool residual = false;
  bool blocked = false;
  std::vector<std::string> notes;
};

MultiForgetResult f_es_fold(const Program& p, const std::vector<Atom>& atoms);

}  // namespace lpforget
