// Copyright (c) 2026 The lpforget Authors.
// Distributed under the MIT license that can be found in the LICENSE file.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "lpforget/forget.hpp"
#include "lpforget/ht.hpp"
#include "lpforget/syntax.hpp"
#include "lpforget/verify.hpp"
#include "testutil.hpp"

using namespace lpforget;
using lpforget::testing::Gen;

namespace {

Atom at(const char* name) { return Atom(name); }

// Recomputes both projected model sets for a witness, using only public
// entry points, and says whether they differ.
bool witness_separates(const Program& before, const Theory& after,
                       const std::set<Atom>& forgotten, const Context& w) {
  std::set<Atom> joint = before.signature();
  for (const Atom& a : after.signature()) {
    joint.insert(a);
  }
  std::set<Atom> v;
  for (const Atom& a : joint) {
    if (!forgotten.count(a)) {
      v.insert(a);
    }
  }
  Program pb = before;
  Theory ta = after;
  for (const Rule& r : w.rules) {
    pb.rules.push_back(r);
    ta.formulas.push_back(rule_to_formula(r));
  }
  pb.extra_atoms = joint;
  ta.extra_atoms = joint;
  auto project = [&v](const ModelSet& ms) {
    std::set<Interpretation> out;
    for (const Interpretation& m : ms.models) {
      Interpretation proj;
      for (const Atom& a : m) {
        if (v.count(a)) {
          proj.insert(a);
        }
      }
      out.insert(proj);
    }
    return out;
  };
  return project(equilibrium_models(pb)) != project(equilibrium_models(ta));
}

}  // namespace

TEST_CASE("context enumeration order and kinds") {
  ContextBudget all;

  std::vector<Context> none = enumerate_contexts({}, all);
  REQUIRE(none.size() == 1);
  CHECK(none[0].rules.empty());
  CHECK(none[0].kind == ContextKind::Facts);

  ContextBudget facts;
  facts.facts_only = true;
  std::vector<Context> one = enumerate_contexts({at("b")}, facts);
  REQUIRE(one.size() == 2);
  CHECK(render(one[0]) == "");
  CHECK(render(one[1]) == "b.");

  std::vector<Context> two = enumerate_contexts({at("b"), at("c")}, facts);
  REQUIRE(two.size() == 4);
  CHECK(render(two[0]) == "");
  CHECK(render(two[1]) == "b.");
  CHECK(render(two[2]) == "c.");
  CHECK(render(two[3]) == "b. c.");

  std::vector<Context> full = enumerate_contexts({at("b"), at("c")}, all);
  // 4 fact sets, 4 unary rules, 3 constraints, C(7,2) pairs.
  REQUIRE(full.size() == 32);
  CHECK(render(full[4]) == "b :- c.");
  CHECK(full[4].kind == ContextKind::Unary);
  CHECK(render(full[5]) == "b :- not c.");
  CHECK(render(full[6]) == "c :- b.");
  CHECK(render(full[7]) == "c :- not b.");
  CHECK(render(full[8]) == ":- b.");
  CHECK(full[8].kind == ContextKind::Constraints);
  CHECK(render(full[9]) == ":- c.");
  CHECK(render(full[10]) == ":- b, c.");
  CHECK(render(full[11]) == "b :- c. b :- not c.");
  CHECK(full[11].kind == ContextKind::Mixed);
  CHECK(render(full[31]) == ":- c. :- b, c.");

  // Every atom mentioned stays inside the given vocabulary.
  for (const Context& c : full) {
    for (const Rule& r : c.rules) {
      for (const Atom& a : r.atoms()) {
        CHECK(std::set<Atom>{at("b"), at("c")}.count(a));
      }
    }
  }
}

TEST_CASE("context budget") {
  ContextBudget capped;
  capped.max_contexts = 10;
  std::vector<Context> some = enumerate_contexts({at("b"), at("c")}, capped);
  REQUIRE(some.size() == 10);
  ContextBudget all;
  std::vector<Context> full = enumerate_contexts({at("b"), at("c")}, all);
  for (std::size_t i = 0; i < some.size(); ++i) {
    CHECK(some[i] == full[i]);
  }

  ContextBudget zero;
  zero.max_contexts = 0;
  CHECK_THROWS_AS(enumerate_contexts({at("b")}, zero), BudgetInvalid);
}

TEST_CASE("uniform persistence on fixed pairs") {
  // Identical modulo the forgotten fact atom.
  Program before = parse_program("b.");
  Verdict same = check_uniform_persistence(before, to_theory(before),
                                           {at("a")});
  CHECK(same.status == VerdictStatus::Pass);
  CHECK(same.contexts_checked == 2);
  CHECK_FALSE(same.witness.has_value());

  Program chain = parse_program("a :- b. c :- a. b.");
  ForgetResult fr = f_es(chain, at("a"));
  Verdict v = check_uniform_persistence(chain, fr.theory, {at("a")});
  CHECK(v.status == VerdictStatus::Pass);
  CHECK(v.contexts_checked == 4);

  // A residual occurrence short-circuits the check.
  Program choice = parse_program("a :- not not a. b :- a.");
  ForgetResult rr = f_es(choice, at("a"));
  Verdict r = check_uniform_persistence(choice, rr.theory, {at("a")});
  CHECK(r.status == VerdictStatus::ResidualAtom);
  CHECK(r.contexts_checked == 0);

  // A deliberately wrong "after" is caught and witnessed.
  Verdict bad = check_uniform_persistence(parse_program("a. c :- a."),
                                          parse_theory(""), {at("a")});
  REQUIRE(bad.status == VerdictStatus::Counterexample);
  REQUIRE(bad.witness.has_value());
  CHECK(render(*bad.witness) == "");
  REQUIRE(bad.models_before.has_value());
  REQUIRE(bad.models_after.has_value());
  CHECK(bad.models_before->models == std::set<Interpretation>{{at("c")}});
  CHECK(bad.models_after->models == std::set<Interpretation>{{}});
  CHECK(witness_separates(parse_program("a. c :- a."), parse_theory(""),
                          {at("a")}, *bad.witness));
}

TEST_CASE("strong persistence sweep on fixed pairs") {
  Program before = parse_program("b. c :- b.");
  Verdict same = check_strong_persistence(before, to_theory(before), {});
  CHECK(same.status == VerdictStatus::BudgetExhaustedPass);
  CHECK(same.contexts_checked == 32);

  Program chain = parse_program("a :- b. c :- a. b.");
  ForgetResult fr = f_es(chain, at("a"));
  Verdict v = check_strong_persistence(chain, fr.theory, {at("a")});
  CHECK(v.status == VerdictStatus::BudgetExhaustedPass);
  CHECK(v.contexts_checked == 32);

  // The empty context already separates this wrong pair.
  Verdict bad = check_strong_persistence(parse_program("a. c :- a."),
                                         parse_theory(""), {at("a")});
  REQUIRE(bad.status == VerdictStatus::Counterexample);
  CHECK(bad.contexts_checked == 1);
  CHECK(render(*bad.witness) == "");
  CHECK(bad.models_before->models == std::set<Interpretation>{{at("c")}});
  CHECK(bad.models_after->models == std::set<Interpretation>{{}});

  // This pair differs only once a fact arrives, so the witness is later.
  Program late_before = parse_program("c :- b.");
  Theory late_after = parse_theory("");
  late_after.extra_atoms = {at("b"), at("c")};
  Verdict late = check_strong_persistence(late_before, late_after, {});
  REQUIRE(late.status == VerdictStatus::Counterexample);
  CHECK(late.contexts_checked == 2);
  CHECK(render(*late.witness) == "b.");
  CHECK(witness_separates(late_before, late_after, {}, *late.witness));

  // Below the witness position the sweep reports exhaustion instead.
  ContextBudget one;
  one.max_contexts = 1;
  Verdict capped = check_strong_persistence(late_before, late_after, {}, one);
  CHECK(capped.status == VerdictStatus::BudgetExhaustedPass);
  CHECK(capped.contexts_checked == 1);

  ContextBudget facts;
  facts.facts_only = true;
  Verdict facts_caught =
      check_strong_persistence(late_before, late_after, {}, facts);
  REQUIRE(facts_caught.status == VerdictStatus::Counterexample);
  CHECK(render(*facts_caught.witness) == "b.");
}

TEST_CASE("property: strongly equivalent pairs always pass") {
  Gen gen(6001);
  for (int i = 0; i < 60; ++i) {
    Program p1 = gen.program(3, 3);
    // Derive an equivalent sibling by valid-rule padding and duplication.
    Program p2 = p1;
    std::vector<Atom> pool = lpforget::testing::atom_pool(3);
    Atom x = pool[gen.uniform(0, 2)];
    Atom y = pool[gen.uniform(0, 2)];
    p2.rules.push_back(Rule{{x}, {x}, {}, {}});
    p2.rules.push_back(Rule{{x, y}, {x}, {}, {}});
    p2.rules.push_back(Rule{{x}, {x}, {y}, {}});
    if (!p1.rules.empty()) {
      p2.rules.push_back(p1.rules[gen.uniform(
          0, static_cast<int>(p1.rules.size()) - 1)]);
    }
    p2.extra_atoms = p1.signature();
    REQUIRE(strongly_equivalent(p1, p2));

    Verdict u = check_uniform_persistence(p1, to_theory(p2), {});
    CHECK(u.status == VerdictStatus::Pass);
    ContextBudget small;
    small.max_contexts = 200;
    Verdict s = check_strong_persistence(p1, to_theory(p2), {}, small);
    CHECK(s.status == VerdictStatus::BudgetExhaustedPass);
  }
}

TEST_CASE("property: counterexample witnesses self-certify") {
  Gen gen(6002);
  int found = 0;
  for (int i = 0; i < 300 && found < 60; ++i) {
    Program p1 = gen.program(3, 3);
    Program p2 = gen.program(3, 3);
    ContextBudget small;
    small.max_contexts = 500;
    Verdict s = check_strong_persistence(p1, to_theory(p2), {}, small);
    if (s.status != VerdictStatus::Counterexample) {
      continue;
    }
    ++found;
    REQUIRE(s.witness.has_value());
    REQUIRE(s.models_before.has_value());
    REQUIRE(s.models_after.has_value());
    CHECK(s.models_before->models != s.models_after->models);
    CAPTURE(render(p1));
    CAPTURE(render(p2));
    CAPTURE(render(*s.witness));
    CHECK(witness_separates(p1, to_theory(p2), {}, *s.witness));
  }
  CHECK(found >= 60);
}

TEST_CASE("property: uniform check is the facts-only sweep") {
  Gen gen(6003);
  for (int i = 0; i < 100; ++i) {
    Program p1 = gen.program(3, 3);
    Program p2 = gen.program(3, 3);
    Verdict u = check_uniform_persistence(p1, to_theory(p2), {});
    ContextBudget facts;
    facts.facts_only = true;
    Verdict s = check_strong_persistence(p1, to_theory(p2), {}, facts);
    bool u_pass = u.status == VerdictStatus::Pass;
    bool s_pass = s.status == VerdictStatus::BudgetExhaustedPass;
    CHECK(u_pass == s_pass);
    if (!u_pass && !s_pass) {
      CHECK(render(*u.witness) == render(*s.witness));
    }
  }
}

TEST_CASE("verdict serialization") {
  Verdict pass;
  pass.status = VerdictStatus::Pass;
  pass.contexts_checked = 4;
  CHECK(to_text(pass) == "pass contexts_checked=4\n");
  CHECK(to_json(pass) ==
        R"({"status":"pass","contexts_checked":4,"witness":null,)"
        R"("models_before":null,"models_after":null})");

  Verdict bad = check_uniform_persistence(parse_program("a. c :- a."),
                                          parse_theory(""), {at("a")});
  CHECK(to_text(bad) ==
        "counterexample contexts_checked=1\n"
        "witness: (empty)\n"
        "models_before: {c}\n"
        "models_after: {}\n");
  CHECK(to_json(bad) ==
        R"({"status":"counterexample","contexts_checked":1,"witness":"",)"
        R"("models_before":[["c"]],"models_after":[[]]})");

  CHECK(std::string(to_string(VerdictStatus::ResidualAtom)) ==
        "residual_atom");
  CHECK(std::string(to_string(VerdictStatus::BudgetExhaustedPass)) ==
        "budget_exhausted_pass");
}
