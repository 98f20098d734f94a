// Copyright (c) 2026 The lpforget Authors.
// Distributed under the MIT license that can be found in the LICENSE file.
//
// Bit-mask evaluation internals shared by the model enumerators and the
// persistence checker. Not installed; include only from src/.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "lpforget/ht.hpp"
#include "lpforget/syntax.hpp"

namespace lpforget::internal {

using Mask = std::uint32_t;

int resolve_jobs(int jobs);

void check_cap(std::size_t size, std::size_t cap);

// Fixed atom ordering for one enumeration; bit i stands for atoms()[i].
class SigIndex {
 public:
  explicit SigIndex(const std::set<Atom>& signature);

  std::size_t size() const { return atoms_.size(); }
  const std::vector<Atom>& atoms() const { return atoms_; }

  Mask mask_of(const std::set<Atom>& atoms) const;
  std::set<Atom> atoms_of(Mask m) const;

 private:
  std::vector<Atom> atoms_;
  std::map<Atom, int> index_;
};

// Formula flattened into a node pool for mask evaluation.
class CompiledTheory {
 public:
  CompiledTheory(const Theory& t, const SigIndex& sig);

  // Classical truth of every formula at world t.
  bool sat_classical(Mask t) const;
  // Truth of every formula at world h of the pair <h,t>; assumes h subset t.
  bool sat_ht(Mask h, Mask t) const;

 private:
  enum class Op : std::uint8_t { Falsum, Atom, And, Or, Implies };

  struct Node {
    Op op;
    Mask bit = 0;
    int first = 0;  // children: [first, first + count) in kids_
    int count = 0;
  };

  bool eval_classical(int idx, Mask t) const;
  bool eval_ht(int idx, Mask h, Mask t) const;
  int compile(const Formula& f, const SigIndex& sig);

  std::vector<Node> nodes_;
  std::vector<int> kids_;
  std::vector<int> roots_;
};

// A rule as four masks; enough for context programs in the verifier.
struct MaskRule {
  Mask head = 0;
  Mask pos = 0;
  Mask neg = 0;
  Mask negneg = 0;
};

MaskRule compile_rule(const Rule& r, const SigIndex& sig);

inline bool rule_sat_classical(const MaskRule& r, Mask t) {
  bool body = (r.pos & ~t) == 0 && (r.neg & t) == 0 && (r.negneg & ~t) == 0;
  return !body || (r.head & t) != 0;
}

// <h,t>-truth: negated literals look only at t, the rest at the given world.
inline bool rule_sat_ht(const MaskRule& r, Mask h, Mask t) {
  if (!rule_sat_classical(r, t)) {
    return false;
  }
  bool body = (r.pos & ~h) == 0 && (r.neg & t) == 0 && (r.negneg & ~t) == 0;
  return !body || (r.head & h) != 0;
}

// Equilibrium world masks of base plus an extra block of rules, in
// increasing mask order.
std::vector<Mask> equilibrium_masks(const CompiledTheory& base,
                                    const std::vector<MaskRule>& delta,
                                    std::size_t num_atoms);

}  // namespace lpforget::internal

