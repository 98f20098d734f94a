// Copyright (c) 2026 The lpforget Authors.
// Distributed under the MIT license that can be found in the LICENSE file.

#include "lpforget/depgraph.hpp"

#include <algorithm>
#include <vector>

#include <json.hpp>

namespace lpforget {

DepGraph dependency_graph(const Program& p) {
  DepGraph g;
  g.nodes = p.signature();
  for (const Rule& r : p.rules) {
    for (const Atom& h : r.head) {
      for (const Atom& b : r.body_pos) {
        g.edges.insert({h, b, EdgeSign::Positive});
      }
      for (const Atom& b : r.body_neg) {
        g.edges.insert({h, b, EdgeSign::Negative});
      }
    }
  }
  return g;
}

Program subprogram_for(const Program& p, const Atom& a) {
  Program out;
  for (const Rule& r : p.rules) {
    if (r.head.count(a) && !r.body_pos.count(a) && !r.body_neg.count(a)) {
      out.rules.push_back(r);
    }
  }
  return out;
}

namespace {

// Edge lists of the stratification graph: positive dependencies plus
// strict-level dependencies for both kinds of negation.
struct LevelEdges {
  std::vector<Atom> nodes;
  std::map<Atom, int> index;
  std::vector<std::vector<int>> succ;                   // all edges
  std::vector<std::vector<std::pair<int, bool>>> out;   // (target, strict)
};

LevelEdges level_edges(const Program& p) {
  LevelEdges g;
  std::set<Atom> sig = p.signature();
  g.nodes.assign(sig.begin(), sig.end());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    g.index.emplace(g.nodes[i], static_cast<int>(i));
  }
  g.succ.resize(g.nodes.size());
  g.out.resize(g.nodes.size());
  std::set<std::tuple<int, int, bool>> seen;
  for (const Rule& r : p.rules) {
    for (const Atom& h : r.head) {
      int hi = g.index.at(h);
      auto add = [&](const Atom& b, bool strict) {
        int bi = g.index.at(b);
        if (seen.insert({hi, bi, strict}).second) {
          g.succ[hi].push_back(bi);
          g.out[hi].emplace_back(bi, strict);
        }
      };
      for (const Atom& b : r.body_pos) {
        add(b, false);
      }
      for (const Atom& b : r.body_neg) {
        add(b, true);
      }
      for (const Atom& b : r.body_negneg) {
        add(b, true);
      }
    }
  }
  return g;
}

// Tarjan; emits components with all successors' components already emitted.
struct SccResult {
  std::vector<int> comp;       // node -> component id
  int count = 0;               // component ids are emission-ordered
};

SccResult sccs(const std::vector<std::vector<int>>& succ) {
  int n = static_cast<int>(succ.size());
  SccResult res;
  res.comp.assign(n, -1);
  std::vector<int> low(n, 0), num(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0;

  auto visit = [&](auto&& self, int v) -> void {
    num[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w : succ[v]) {
      if (num[w] < 0) {
        self(self, w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], num[w]);
      }
    }
    if (low[v] == num[v]) {
      while (true) {
        int w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        res.comp[w] = res.count;
        if (w == v) {
          break;
        }
      }
      ++res.count;
    }
  };

  for (int v = 0; v < n; ++v) {
    if (num[v] < 0) {
      visit(visit, v);
    }
  }
  return res;
}

}  // namespace

Stratification is_stratified(const Program& p) {
  LevelEdges g = level_edges(p);
  SccResult scc = sccs(g.succ);

  for (std::size_t v = 0; v < g.out.size(); ++v) {
    for (auto [w, strict] : g.out[v]) {
      if (strict && scc.comp[v] == scc.comp[w]) {
        return {};
      }
    }
  }

  // Component ids come out dependency-first, so one increasing pass settles
  // every component level before it is consumed.
  std::vector<int> comp_level(scc.count, 0);
  std::vector<std::vector<std::pair<int, bool>>> comp_out(scc.count);
  for (std::size_t v = 0; v < g.out.size(); ++v) {
    for (auto [w, strict] : g.out[v]) {
      if (scc.comp[v] != scc.comp[w]) {
        comp_out[scc.comp[v]].emplace_back(scc.comp[w], strict);
      }
    }
  }
  for (int c = 0; c < scc.count; ++c) {
    int lvl = 0;
    for (auto [d, strict] : comp_out[c]) {
      lvl = std::max(lvl, comp_level[d] + (strict ? 1 : 0));
    }
    comp_level[c] = lvl;
  }

  Stratification out;
  out.witness = true;
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    out.level.emplace(g.nodes[v], comp_level[scc.comp[v]]);
  }
  return out;
}

bool is_singleton_headed(const Program& p, const Atom& a) {
  return std::all_of(p.rules.begin(), p.rules.end(), [&a](const Rule& r) {
    return !r.head.count(a) || r.head.size() == 1;
  });
}

bool theorem2_edge_condition(const Program& p, const Atom& a) {
  DepGraph g = dependency_graph(p);
  bool outgoing = false;
  bool incoming = false;
  for (const DepEdge& e : g.edges) {
    if (e.sign != EdgeSign::Positive) {
      continue;
    }
    outgoing = outgoing || e.from == a;
    incoming = incoming || e.to == a;
  }
  return !(outgoing && incoming);
}

std::string to_dot(const DepGraph& g) {
  if (g.nodes.empty() && g.edges.empty()) {
    return "digraph G {\n}\n";
  }
  std::string out = "digraph G {\n";
  for (const Atom& a : g.nodes) {
    out += "  " + a.name() + ";\n";
  }
  for (const DepEdge& e : g.edges) {
    out += "  " + e.from.name() + " -> " + e.to.name() +
           (e.sign == EdgeSign::Positive ? " [style=solid];\n"
                                         : " [style=dashed];\n");
  }
  out += "}\n";
  return out;
}

std::string to_json(const DepGraph& g) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (const Atom& a : g.nodes) {
    nodes.push_back(a.name());
  }
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const DepEdge& e : g.edges) {
    nlohmann::ordered_json edge;
    edge["from"] = e.from.name();
    edge["to"] = e.to.name();
    edge["sign"] = e.sign == EdgeSign::Positive ? "+" : "-";
    edges.push_back(edge);
  }
  j["nodes"] = nodes;
  j["edges"] = edges;
  return j.dump();
}

}  // namespace lpforget
