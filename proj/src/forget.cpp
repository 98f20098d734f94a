// Copyright (c) 2026 The lpforget Authors.
// Distributed under the MIT license that can be found in the LICENSE file.

#include "lpforget/forget.hpp"

#include <algorithm>
#include <iterator>

#include <json.hpp>

#include "lpforget/depgraph.hpp"

namespace lpforget {

const char* to_string(Guarantee g) {
  switch (g) {
    case Guarantee::Theorem1:
      return "Theorem1";
    case Guarantee::Corollary1:
      return "Corollary1";
    case Guarantee::Theorem2:
      return "Theorem2";
    case Guarantee::None:
      return "None";
  }
  return "None";
}

Program behead(const Program& p, const Atom& a) {
  Program out;
  out.extra_atoms = p.extra_atoms;
  for (const Rule& r : p.rules) {
    if (r.head.count(a) && r.body_pos.count(a)) {
      continue;
    }
    Rule kept = r;
    if (kept.head.count(a) && kept.body_neg.count(a)) {
      kept.head.erase(a);
    }
    out.rules.push_back(std::move(kept));
  }
  // The beheaded program keeps the input signature.
  std::set<Atom> sig = p.signature();
  std::set<Atom> occ = out.occurring_atoms();
  out.extra_atoms.clear();
  std::set_difference(sig.begin(), sig.end(), occ.begin(), occ.end(),
                      std::inserter(out.extra_atoms, out.extra_atoms.end()));
  return out;
}

namespace {

Formula body_formula(const Rule& r) {
  std::vector<Formula> parts;
  for (const Atom& b : r.body_pos) {
    parts.push_back(Formula::atom(b));
  }
  for (const Atom& b : r.body_neg) {
    parts.push_back(Formula::negate(Formula::atom(b)));
  }
  for (const Atom& b : r.body_negneg) {
    parts.push_back(Formula::negneg(Formula::atom(b)));
  }
  return Formula::conj(std::move(parts));
}

}  // namespace

Formula external_support(const Program& p, const Atom& a) {
  std::vector<Formula> cases;
  for (const Rule& r : subprogram_for(p, a).rules) {
    std::vector<Formula> parts{body_formula(r)};
    std::set<Atom> rest = r.head;
    rest.erase(a);
    if (!rest.empty()) {
      std::vector<Formula> head;
      for (const Atom& h : rest) {
        head.push_back(Formula::atom(h));
      }
      parts.push_back(Formula::negate(Formula::disj(std::move(head))));
    }
    cases.push_back(Formula::conj(std::move(parts)));
  }
  return Formula::disj(std::move(cases));
}

ForgetResult f_es(const Program& p, const Atom& a) {
  Formula es = external_support(p, a);

  Program pruned = behead(p, a);
  std::erase_if(pruned.rules, [&a](const Rule& r) {
    return r.head == std::set<Atom>{a};
  });

  auto subst = [&a, &es](const Atom& b) {
    return b == a ? es : Formula::atom(b);
  };

  ForgetResult out;
  for (const Rule& r : pruned.rules) {
    std::vector<Formula> body;
    for (const Atom& b : r.body_pos) {
      body.push_back(subst(b));
    }
    for (const Atom& b : r.body_neg) {
      body.push_back(Formula::negate(subst(b)));
    }
    for (const Atom& b : r.body_negneg) {
      body.push_back(Formula::negneg(subst(b)));
    }
    std::vector<Formula> head;
    for (const Atom& h : r.head) {
      if (h != a) {
        head.push_back(Formula::atom(h));
      }
    }
    if (r.head.count(a)) {
      head.push_back(Formula::negneg(es));
    }
    out.theory.formulas.push_back(Formula::implies(
        Formula::conj(std::move(body)), Formula::disj(std::move(head))));
  }

  // The parser owns the canonical statement values, so rebuild the
  // synthesized statements through it. A substitution that degenerates to
  // plain literals collapses back to rule notation here.
  out.theory = parse_theory(render(out.theory));

  std::set<Atom> occ = out.theory.occurring_atoms();
  out.residual = occ.count(a) != 0;

  std::set<Atom> sig = p.signature();
  sig.erase(a);
  std::set_difference(sig.begin(), sig.end(), occ.begin(), occ.end(),
                      std::inserter(out.theory.extra_atoms,
                                    out.theory.extra_atoms.end()));
  return out;
}

ApplicabilityReport applicability(const Program& p, const Atom& a) {
  bool es_contains_atom = atoms_of(external_support(p, a)).count(a) != 0;
  bool singleton_headed = is_singleton_headed(p, a);
  // Stratified in the guarantee sense means a normal program admitting a
  // level map; disjunctive heads fall through to the edge condition.
  bool normal = std::all_of(p.rules.begin(), p.rules.end(),
                            [](const Rule& r) { return r.head.size() <= 1; });
  bool stratified = normal && is_stratified(p).witness;
  bool thm2_edge_ok = theorem2_edge_condition(p, a);

  Guarantee guarantee = Guarantee::None;
  if (stratified) {
    guarantee = Guarantee::Corollary1;
  } else if (singleton_headed && !es_contains_atom) {
    guarantee = Guarantee::Theorem1;
  } else if (thm2_edge_ok && !es_contains_atom) {
    guarantee = Guarantee::Theorem2;
  }

  ApplicabilityReport rep{a,          es_contains_atom, singleton_headed,
                          stratified, thm2_edge_ok,     guarantee,
                          {}};

  if (!p.signature().count(a)) {
    rep.notes.push_back("atom does not occur in the program");
  }
  if (rep.es_contains_atom) {
    rep.notes.push_back("external support contains the forgotten atom");
  }
  if (rep.guarantee == Guarantee::None) {
    rep.notes.push_back("no structural guarantee applies");
  }
  return rep;
}

std::string to_text(const ApplicabilityReport& r) {
  std::string out;
  out += "atom: " + r.atom.name() + "\n";
  out += std::string("es_contains_atom: ") +
         (r.es_contains_atom ? "true" : "false") + "\n";
  out += std::string("singleton_headed: ") +
         (r.singleton_headed ? "true" : "false") + "\n";
  out += std::string("stratified: ") + (r.stratified ? "true" : "false") +
         "\n";
  out += std::string("thm2_edge_ok: ") + (r.thm2_edge_ok ? "true" : "false") +
         "\n";
  out += std::string("guarantee: ") + to_string(r.guarantee) + "\n";
  out += "notes:\n";
  for (const std::string& n : r.notes) {
    out += "- " + n + "\n";
  }
  return out;
}

std::string to_json(const ApplicabilityReport& r) {
  nlohmann::ordered_json j;
  j["atom"] = r.atom.name();
  j["es_contains_atom"] = r.es_contains_atom;
  j["singleton_headed"] = r.singleton_headed;
  j["stratified"] = r.stratified;
  j["thm2_edge_ok"] = r.thm2_edge_ok;
  j["guarantee"] = to_string(r.guarantee);
  j["notes"] = r.notes;
  return j.dump();
}

MultiForgetResult f_es_fold(const Program& p, const std::vector<Atom>& atoms) {
  MultiForgetResult out;
  out.theory = to_theory(p);
  Program current = p;
  std::size_t done = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    ForgetResult step = f_es(current, atoms[i]);
    out.theory = step.theory;
    done = i + 1;
    if (i + 1 == atoms.size()) {
      break;
    }
    std::optional<Program> next = as_program(step.theory);
    if (!next) {
      out.blocked = true;
      out.notes.push_back("intermediate result is not rule-shaped; stopped "
                          "before forgetting '" +
                          atoms[i + 1].name() + "'");
      break;
    }
    current = std::move(*next);
  }
  for (const Atom& a : atoms) {
    // A forgotten atom stays in the signature only as a live occurrence.
    out.theory.extra_atoms.erase(a);
    if (out.theory.occurring_atoms().count(a)) {
      out.residual = true;
      out.notes.push_back("output still mentions '" + a.name() + "'");
    }
  }
  if (done > 0) {
    std::string order = "atoms processed in the given order:";
    for (std::size_t i = 0; i < done; ++i) {
      order += " " + atoms[i].name();
    }
    out.notes.push_back(order);
  }
  return out;
}

}  // namespace lpforget
