// Copyright (c) 2026 The lpforget Authors.
// Distributed under the MIT license that can be found in the LICENSE file.

#pragma once

#include <map>
#include <set>
#include <string>

#include "lpforget/syntax.hpp"

namespace lpforget {

enum class EdgeSign { Positive, Negative };

struct DepEdge {
  Atom from;
  Atom to;
  EdgeSign sign;

  friend bool operator==(const DepEdge&, const DepEdge&) = default;
  friend auto operator<=>(const DepEdge&, const DepEdge&) = default;
};

// Head-to-body dependencies: (p,q,positive) iff some rule has p in the head
// and q in the positive body, (p,q,negative) iff q is in the negated body.
// Doubly negated body atoms contribute no edge here; they only matter for
// stratification.
struct DepGraph {
  std::set<Atom> nodes;
  std::set<DepEdge> edges;

  friend bool operator==(const DepGraph&, const DepGraph&) = default;
};

// witness says whether a valid level map exists; level is empty otherwise.
// A valid map has level(h) >= level(b) for positive body atoms b and
// level(h) > level(b) for singly and doubly negated ones.
struct Stratification {
  bool witness = false;
  std::map<Atom, int> level;
};

DepGraph dependency_graph(const Program& p);

// The rules that can support a: a in the head, a absent from the positive
// and singly negated body. A doubly negated occurrence does not exclude a
// rule. An atom outside the signature yields an empty program.
Program subprogram_for(const Program& p, const Atom& a);

Stratification is_stratified(const Program& p);

// True iff every rule with a in the head has head exactly {a}.
bool is_singleton_headed(const Program& p, const Atom& a);

// True iff the dependency graph does not have both an outgoing positive
// edge (a,x) and an incoming positive edge (y,a).
bool theorem2_edge_condition(const Program& p, const Atom& a);

std::string to_dot(const DepGraph& g);
std::string to_json(const DepGraph& g);

}  // namespace lpforget

