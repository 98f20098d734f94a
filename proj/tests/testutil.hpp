// Copyright (c) 2026 The lpforget Authors.
// Distributed under the MIT license that can be found in the LICENSE file.
//
// Seeded generators and slow set-based oracles shared by the test binaries.
// The oracles deliberately share no evaluation code with the library.

#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lpforget/syntax.hpp"

namespace lpforget::testing {

inline std::vector<Atom> atom_pool(int n) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f"};
  std::vector<Atom> out;
  for (int i = 0; i < n; ++i) {
    out.emplace_back(names[i]);
  }
  return out;
}

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  bool chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < p;
  }

  std::set<Atom> subset(const std::vector<Atom>& pool, double p_each) {
    std::set<Atom> out;
    for (const Atom& a : pool) {
      if (chance(p_each)) {
        out.insert(a);
      }
    }
    return out;
  }

  Rule rule(const std::vector<Atom>& pool) {
    while (true) {
      Rule r;
      int head_size = chance(0.15) ? 0 : (chance(0.3) ? 2 : 1);
      head_size = std::min(head_size, static_cast<int>(pool.size()));
      while (static_cast<int>(r.head.size()) < head_size) {
        r.head.insert(pool[uniform(0, static_cast<int>(pool.size()) - 1)]);
      }
      r.body_pos = subset(pool, 0.25);
      r.body_neg = subset(pool, 0.2);
      r.body_negneg = subset(pool, 0.1);
      if (!r.empty()) {
        return r;
      }
    }
  }

  Program program(int max_atoms = 4, int max_rules = 5) {
    std::vector<Atom> pool = atom_pool(uniform(1, max_atoms));
    Program p;
    int n = uniform(0, max_rules);
    for (int i = 0; i < n; ++i) {
      p.rules.push_back(rule(pool));
    }
    if (chance(0.05)) {
      p.extra_atoms.insert(Atom("x"));
    }
    return p;
  }

  // Normal rules drawn against a random level assignment: positive body
  // atoms from levels <= the head's, negated ones strictly below. Constraint
  // rules are level-free.
  Program stratified_program(int max_atoms = 4, int max_rules = 5) {
    std::vector<Atom> pool = atom_pool(uniform(1, max_atoms));
    std::vector<int> level(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
      level[i] = uniform(0, 2);
    }
    Program p;
    int n = uniform(1, max_rules);
    for (int i = 0; i < n; ++i) {
      Rule r;
      if (chance(0.15)) {
        r.body_pos = subset(pool, 0.3);
        r.body_neg = subset(pool, 0.2);
        if (r.empty()) {
          r.body_pos.insert(pool[uniform(0, static_cast<int>(pool.size()) -
                                                1)]);
        }
        p.rules.push_back(std::move(r));
        continue;
      }
      int h = uniform(0, static_cast<int>(pool.size()) - 1);
      r.head.insert(pool[h]);
      for (std::size_t j = 0; j < pool.size(); ++j) {
        if (level[j] <= level[h] && chance(0.3)) {
          r.body_pos.insert(pool[j]);
        }
        if (level[j] < level[h]) {
          if (chance(0.25)) {
            r.body_neg.insert(pool[j]);
          } else if (chance(0.15)) {
            r.body_negneg.insert(pool[j]);
          }
        }
      }
      p.rules.push_back(std::move(r));
    }
    return p;
  }

  Formula formula(const std::vector<Atom>& pool, int depth) {
    int pick = depth == 0 ? uniform(0, 2) : uniform(0, 6);
    switch (pick) {
      case 0:
      case 1:
        return Formula::atom(pool[uniform(0, static_cast<int>(pool.size()) -
                                                 1)]);
      case 2:
        return chance(0.5) ? Formula::falsum() : Formula::verum();
      case 3:
        return Formula::negate(formula(pool, depth - 1));
      case 4: {
        std::vector<Formula> kids;
        int n = uniform(2, 3);
        for (int i = 0; i < n; ++i) {
          kids.push_back(formula(pool, depth - 1));
        }
        return Formula::conj(std::move(kids));
      }
      case 5: {
        std::vector<Formula> kids;
        int n = uniform(2, 3);
        for (int i = 0; i < n; ++i) {
          kids.push_back(formula(pool, depth - 1));
        }
        return Formula::disj(std::move(kids));
      }
      default:
        return Formula::implies(formula(pool, depth - 1),
                                formula(pool, depth - 1));
    }
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

// Classical two-valued truth, written independently of the library.
inline bool classical_eval(const Formula& f, const std::set<Atom>& m) {
  switch (f.kind()) {
    case Formula::Kind::Falsum:
      return false;
    case Formula::Kind::Atom:
      return m.count(f.as_atom()) != 0;
    case Formula::Kind::And:
      for (const Formula& c : f.children()) {
        if (!classical_eval(c, m)) {
          return false;
        }
      }
      return true;
    case Formula::Kind::Or:
      for (const Formula& c : f.children()) {
        if (classical_eval(c, m)) {
          return true;
        }
      }
      return false;
    case Formula::Kind::Implies:
      return !classical_eval(f.antecedent(), m) ||
             classical_eval(f.consequent(), m);
  }
  return false;
}

inline std::vector<std::set<Atom>> all_subsets(const std::set<Atom>& sig) {
  std::vector<Atom> atoms(sig.begin(), sig.end());
  std::vector<std::set<Atom>> out;
  for (std::size_t m = 0; m < (std::size_t{1} << atoms.size()); ++m) {
    std::set<Atom> s;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (m & (std::size_t{1} << i)) {
        s.insert(atoms[i]);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Set-based stable models: fix the negated literals against the candidate,
// then ask for minimal classical models of the positive remainder.
inline std::set<std::set<Atom>> stable_models_setbased(const Program& p) {
  auto is_model = [](const std::vector<Rule>& reduct,
                     const std::set<Atom>& m) {
    for (const Rule& r : reduct) {
      bool body = std::includes(m.begin(), m.end(), r.body_pos.begin(),
                                r.body_pos.end());
      bool head = std::any_of(r.head.begin(), r.head.end(),
                              [&m](const Atom& h) { return m.count(h); });
      if (body && !head) {
        return false;
      }
    }
    return true;
  };

  std::set<std::set<Atom>> out;
  for (const std::set<Atom>& t : all_subsets(p.signature())) {
    std::vector<Rule> reduct;
    for (const Rule& r : p.rules) {
      bool dropped = std::any_of(r.body_neg.begin(), r.body_neg.end(),
                                 [&t](const Atom& a) { return t.count(a); }) ||
                     std::any_of(r.body_negneg.begin(), r.body_negneg.end(),
                                 [&t](const Atom& a) { return !t.count(a); });
      if (!dropped) {
        reduct.push_back(Rule{r.head, r.body_pos, {}, {}});
      }
    }
    if (!is_model(reduct, t)) {
      continue;
    }
    bool minimal = true;
    for (const std::set<Atom>& s : all_subsets(t)) {
      if (s != t && is_model(reduct, s)) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      out.insert(t);
    }
  }
  return out;
}

}  // namespace lpforget::testing
