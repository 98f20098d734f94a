// Copyright (c) 2026 The lpforget Authors.
// Distributed under the MIT license that can be found in the LICENSE file.

#include "lpforget/verify.hpp"

#include <algorithm>
#include <vector>

#include <json.hpp>

#include "ht_internal.hpp"

namespace lpforget {

BudgetInvalid::BudgetInvalid()
    : std::invalid_argument("context budget must allow at least one context") {
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Pass:
      return "pass";
    case VerdictStatus::Counterexample:
      return "counterexample";
    case VerdictStatus::ResidualAtom:
      return "residual_atom";
    case VerdictStatus::BudgetExhaustedPass:
      return "budget_exhausted_pass";
  }
  return "pass";
}

std::vector<Context> enumerate_contexts(const std::set<Atom>& v,
                                        const ContextBudget& budget) {
  if (budget.max_contexts == 0) {
    throw BudgetInvalid();
  }
  std::vector<Atom> atoms(v.begin(), v.end());
  std::vector<Context> out;
  auto push = [&out, &budget](Context c) {
    if (out.size() < budget.max_contexts) {
      out.push_back(std::move(c));
    }
  };

  const std::size_t nfacts = std::size_t{1} << atoms.size();
  for (std::size_t m = 0; m < nfacts && out.size() < budget.max_contexts;
       ++m) {
    Context c;
    c.kind = ContextKind::Facts;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (m & (std::size_t{1} << i)) {
        c.rules.push_back(Rule{{atoms[i]}, {}, {}, {}});
      }
    }
    push(std::move(c));
  }
  if (budget.facts_only) {
    return out;
  }

  std::vector<Rule> items;
  for (const Atom& p : atoms) {
    for (const Atom& q : atoms) {
      if (p == q) {
        continue;
      }
      items.push_back(Rule{{p}, {q}, {}, {}});
      items.push_back(Rule{{p}, {}, {q}, {}});
    }
  }
  std::size_t unary_end = items.size();
  for (const Atom& p : atoms) {
    items.push_back(Rule{{}, {p}, {}, {}});
  }
  for (auto p = atoms.begin(); p != atoms.end(); ++p) {
    for (auto q = std::next(p); q != atoms.end(); ++q) {
      items.push_back(Rule{{}, {*p, *q}, {}, {}});
    }
  }

  for (std::size_t i = 0; i < items.size(); ++i) {
    push(Context{{items[i]},
                 i < unary_end ? ContextKind::Unary
                               : ContextKind::Constraints});
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (out.size() >= budget.max_contexts) {
        return out;
      }
      push(Context{{items[i], items[j]}, ContextKind::Mixed});
    }
  }
  return out;
}

namespace {

using internal::CompiledTheory;
using internal::Mask;
using internal::MaskRule;
using internal::SigIndex;

struct Projector {
  const SigIndex& sig;
  Mask keep;

  std::set<Mask> operator()(const std::vector<Mask>& worlds) const {
    std::set<Mask> out;
    for (Mask w : worlds) {
      out.insert(w & keep);
    }
    return out;
  }
};

ModelSet to_model_set(const std::set<Mask>& projected, const SigIndex& sig,
                      std::set<Atom> v) {
  ModelSet out;
  out.signature = std::move(v);
  for (Mask m : projected) {
    out.models.insert(sig.atoms_of(m));
  }
  return out;
}

struct CheckSetup {
  std::set<Atom> v;
  SigIndex sig;
  CompiledTheory before;
  CompiledTheory after;
  Mask keep;
};

std::optional<Verdict> residual_verdict(const Theory& after,
                                        const std::set<Atom>& forgotten) {
  std::set<Atom> occ = after.occurring_atoms();
  for (const Atom& a : forgotten) {
    if (occ.count(a)) {
      return Verdict{VerdictStatus::ResidualAtom, 0, std::nullopt,
                     std::nullopt, std::nullopt};
    }
  }
  return std::nullopt;
}

CheckSetup make_setup(const Program& before, const Theory& after,
                      const std::set<Atom>& forgotten,
                      const EnumOptions& opts) {
  std::set<Atom> joint = signature_of(before);
  {
    std::set<Atom> sa = signature_of(after);
    joint.insert(sa.begin(), sa.end());
  }
  internal::check_cap(joint.size(), opts.max_atoms);
  std::set<Atom> v;
  std::set_difference(joint.begin(), joint.end(), forgotten.begin(),
                      forgotten.end(), std::inserter(v, v.end()));
  SigIndex sig(joint);
  Mask keep = sig.mask_of(v);
  return CheckSetup{std::move(v), sig, CompiledTheory(to_theory(before), sig),
                    CompiledTheory(after, sig), keep};
}

std::vector<MaskRule> compile_context(const Context& c, const SigIndex& sig) {
  std::vector<MaskRule> out;
  out.reserve(c.rules.size());
  for (const Rule& r : c.rules) {
    out.push_back(internal::compile_rule(r, sig));
  }
  return out;
}

}  // namespace

Verdict check_uniform_persistence(const Program& before, const Theory& after,
                                  const std::set<Atom>& forgotten,
                                  const EnumOptions& opts) {
  if (auto residual = residual_verdict(after, forgotten)) {
    return *residual;
  }
  CheckSetup s = make_setup(before, after, forgotten, opts);
  Projector project{s.sig, s.keep};

  std::vector<Atom> v_atoms(s.v.begin(), s.v.end());
  const std::size_t nfacts = std::size_t{1} << v_atoms.size();
  for (std::size_t m = 0; m < nfacts; ++m) {
    Context c;
    c.kind = ContextKind::Facts;
    for (std::size_t i = 0; i < v_atoms.size(); ++i) {
      if (m & (std::size_t{1} << i)) {
        c.rules.push_back(Rule{{v_atoms[i]}, {}, {}, {}});
      }
    }
    std::vector<MaskRule> delta = compile_context(c, s.sig);
    std::set<Mask> mb =
        project(internal::equilibrium_masks(s.before, delta, s.sig.size()));
    std::set<Mask> ma =
        project(internal::equilibrium_masks(s.after, delta, s.sig.size()));
    if (mb != ma) {
      return Verdict{VerdictStatus::Counterexample, m + 1, std::move(c),
                     to_model_set(mb, s.sig, s.v),
                     to_model_set(ma, s.sig, s.v)};
    }
  }
  return Verdict{VerdictStatus::Pass, nfacts, std::nullopt, std::nullopt,
                 std::nullopt};
}

Verdict check_strong_persistence(const Program& before, const Theory& after,
                                 const std::set<Atom>& forgotten,
                                 const ContextBudget& budget,
                                 const EnumOptions& opts) {
  if (auto residual = residual_verdict(after, forgotten)) {
    return *residual;
  }
  CheckSetup s = make_setup(before, after, forgotten, opts);
  Projector project{s.sig, s.keep};

  std::vector<Context> contexts = enumerate_contexts(s.v, budget);
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    std::vector<MaskRule> delta = compile_context(contexts[i], s.sig);
    std::set<Mask> mb =
        project(internal::equilibrium_masks(s.before, delta, s.sig.size()));
    std::set<Mask> ma =
        project(internal::equilibrium_masks(s.after, delta, s.sig.size()));
    if (mb != ma) {
      return Verdict{VerdictStatus::Counterexample, i + 1,
                     std::move(contexts[i]), to_model_set(mb, s.sig, s.v),
                     to_model_set(ma, s.sig, s.v)};
    }
  }
  return Verdict{VerdictStatus::BudgetExhaustedPass, contexts.size(),
                 std::nullopt, std::nullopt, std::nullopt};
}

std::string render(const Context& c) {
  std::string out;
  for (const Rule& r : c.rules) {
    if (!out.empty()) {
      out += ' ';
    }
    out += render(r);
  }
  return out;
}

namespace {

std::string models_line(const ModelSet& ms) {
  std::string out;
  for (const Interpretation& m : ms.models) {
    if (!out.empty()) {
      out += ' ';
    }
    out += '{';
    bool first = true;
    for (const Atom& a : m) {
      if (!first) {
        out += ' ';
      }
      out += a.name();
      first = false;
    }
    out += '}';
  }
  return out.empty() ? "(none)" : out;
}

nlohmann::ordered_json models_json(const ModelSet& ms) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Interpretation& m : ms.models) {
    nlohmann::ordered_json one = nlohmann::ordered_json::array();
    for (const Atom& a : m) {
      one.push_back(a.name());
    }
    arr.push_back(one);
  }
  return arr;
}

}  // namespace

std::string to_text(const Verdict& v) {
  std::string out = std::string(to_string(v.status)) +
                    " contexts_checked=" + std::to_string(v.contexts_checked) +
                    "\n";
  if (v.witness) {
    std::string w = render(*v.witness);
    out += "witness: " + (w.empty() ? std::string("(empty)") : w) + "\n";
  }
  if (v.models_before) {
    out += "models_before: " + models_line(*v.models_before) + "\n";
  }
  if (v.models_after) {
    out += "models_after: " + models_line(*v.models_after) + "\n";
  }
  return out;
}

std::string to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["status"] = to_string(v.status);
  j["contexts_checked"] = v.contexts_checked;
  j["witness"] = v.witness ? nlohmann::ordered_json(render(*v.witness))
                           : nlohmann::ordered_json(nullptr);
  j["models_before"] = v.models_before ? models_json(*v.models_before)
                                       : nlohmann::ordered_json(nullptr);
  j["models_after"] = v.models_after ? models_json(*v.models_after)
                                     : nlohmann::ordered_json(nullptr);
  return j.dump();
}

}  // namespace lpforget
