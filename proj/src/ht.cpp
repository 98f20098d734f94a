// Copyright (c) 2026 The lpforget Authors.
// Distributed under the MIT license that can be found in the LICENSE file.

#include "lpforget/ht.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "ht_internal.hpp"

namespace lpforget {

HTPair::HTPair(Interpretation here, Interpretation there)
    : here_(std::move(here)), there_(std::move(there)) {
  if (!std::includes(there_.begin(), there_.end(), here_.begin(),
                     here_.end())) {
    throw std::invalid_argument("HT pair requires here to be within there");
  }
}

SignatureTooLarge::SignatureTooLarge(std::size_t size, std::size_t cap)
    : std::runtime_error("signature has " + std::to_string(size) +
                         " atoms, enumeration cap is " + std::to_string(cap)),
      size_(size),
      cap_(cap) {}

namespace internal {

int resolve_jobs(int jobs) {
  if (jobs <= 0) {
    if (const char* env = std::getenv("LPFORGET_JOBS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 1 && v <= 256) {
        return static_cast<int>(v);
      }
    }
    return 1;
  }
  return jobs;
}

void check_cap(std::size_t size, std::size_t cap) {
  if (size > cap || size >= 31) {
    throw SignatureTooLarge(size, std::min<std::size_t>(cap, 30));
  }
}

SigIndex::SigIndex(const std::set<Atom>& signature)
    : atoms_(signature.begin(), signature.end()) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    index_.emplace(atoms_[i], static_cast<int>(i));
  }
}

Mask SigIndex::mask_of(const std::set<Atom>& atoms) const {
  Mask m = 0;
  for (const Atom& a : atoms) {
    m |= Mask{1} << index_.at(a);
  }
  return m;
}

std::set<Atom> SigIndex::atoms_of(Mask m) const {
  std::set<Atom> out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (m & (Mask{1} << i)) {
      out.insert(atoms_[i]);
    }
  }
  return out;
}

CompiledTheory::CompiledTheory(const Theory& t, const SigIndex& sig) {
  for (const Formula& f : t.formulas) {
    roots_.push_back(compile(f, sig));
  }
}

int CompiledTheory::compile(const Formula& f, const SigIndex& sig) {
  Node n;
  switch (f.kind()) {
    case Formula::Kind::Falsum:
      n.op = Op::Falsum;
      break;
    case Formula::Kind::Atom:
      n.op = Op::Atom;
      n.bit = sig.mask_of({f.as_atom()});
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: {
      n.op = f.kind() == Formula::Kind::And
                 ? Op::And
                 : (f.kind() == Formula::Kind::Or ? Op::Or : Op::Implies);
      std::vector<int> kids;
      kids.reserve(f.children().size());
      for (const Formula& c : f.children()) {
        kids.push_back(compile(c, sig));
      }
      n.first = static_cast<int>(kids_.size());
      n.count = static_cast<int>(kids.size());
      kids_.insert(kids_.end(), kids.begin(), kids.end());
      break;
    }
  }
  nodes_.push_back(n);
  return static_cast<int>(nodes_.size() - 1);
}

bool CompiledTheory::eval_classical(int idx, Mask t) const {
  const Node& n = nodes_[idx];
  switch (n.op) {
    case Op::Falsum:
      return false;
    case Op::Atom:
      return (t & n.bit) != 0;
    case Op::And:
      for (int i = 0; i < n.count; ++i) {
        if (!eval_classical(kids_[n.first + i], t)) {
          return false;
        }
      }
      return true;
    case Op::Or:
      for (int i = 0; i < n.count; ++i) {
        if (eval_classical(kids_[n.first + i], t)) {
          return true;
        }
      }
      return false;
    case Op::Implies:
      return !eval_classical(kids_[n.first], t) ||
             eval_classical(kids_[n.first + 1], t);
  }
  return false;
}

bool CompiledTheory::eval_ht(int idx, Mask h, Mask t) const {
  const Node& n = nodes_[idx];
  switch (n.op) {
    case Op::Falsum:
      return false;
    case Op::Atom:
      return (h & n.bit) != 0;
    case Op::And:
      for (int i = 0; i < n.count; ++i) {
        if (!eval_ht(kids_[n.first + i], h, t)) {
          return false;
        }
      }
      return true;
    case Op::Or:
      for (int i = 0; i < n.count; ++i) {
        if (eval_ht(kids_[n.first + i], h, t)) {
          return true;
        }
      }
      return false;
    case Op::Implies:
      // True at h iff classically true at t and h-truth flows left to right.
      if (eval_classical(kids_[n.first], t) &&
          !eval_classical(kids_[n.first + 1], t)) {
        return false;
      }
      return !eval_ht(kids_[n.first], h, t) ||
             eval_ht(kids_[n.first + 1], h, t);
  }
  return false;
}

bool CompiledTheory::sat_classical(Mask t) const {
  for (int r : roots_) {
    if (!eval_classical(r, t)) {
      return false;
    }
  }
  return true;
}

bool CompiledTheory::sat_ht(Mask h, Mask t) const {
  for (int r : roots_) {
    if (!eval_ht(r, h, t)) {
      return false;
    }
  }
  return true;
}

MaskRule compile_rule(const Rule& r, const SigIndex& sig) {
  return MaskRule{sig.mask_of(r.head), sig.mask_of(r.body_pos),
                  sig.mask_of(r.body_neg), sig.mask_of(r.body_negneg)};
}

namespace {

bool delta_sat_classical(const std::vector<MaskRule>& delta, Mask t) {
  return std::all_of(delta.begin(), delta.end(), [t](const MaskRule& r) {
    return rule_sat_classical(r, t);
  });
}

bool delta_sat_ht(const std::vector<MaskRule>& delta, Mask h, Mask t) {
  return std::all_of(delta.begin(), delta.end(), [h, t](const MaskRule& r) {
    return rule_sat_ht(r, h, t);
  });
}

}  // namespace

std::vector<Mask> equilibrium_masks(const CompiledTheory& base,
                                    const std::vector<MaskRule>& delta,
                                    std::size_t num_atoms) {
  std::vector<Mask> out;
  const Mask end = Mask{1} << num_atoms;
  for (Mask t = 0; t < end; ++t) {
    if (!base.sat_classical(t) || !delta_sat_classical(delta, t)) {
      continue;
    }
    bool minimal = true;
    if (t != 0) {
      for (Mask h = (t - 1) & t;; h = (h - 1) & t) {
        if (base.sat_ht(h, t) && delta_sat_ht(delta, h, t)) {
          minimal = false;
          break;
        }
        if (h == 0) {
          break;
        }
      }
    }
    if (minimal) {
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace internal

namespace {

using internal::CompiledTheory;
using internal::Mask;
using internal::SigIndex;

// Runs fn(t) over every world mask, splitting the range across jobs threads.
// Each chunk collects into its own vector; chunks are merged in order, so the
// result never depends on scheduling.
template <typename Item, typename Fn>
std::vector<Item> for_each_world(std::size_t num_atoms, int jobs, Fn fn) {
  const Mask end = Mask{1} << num_atoms;
  std::vector<Item> out;
  if (jobs <= 1 || end < 64) {
    for (Mask t = 0; t < end; ++t) {
      fn(t, out);
    }
    return out;
  }
  const int chunks = jobs;
  std::vector<std::future<std::vector<Item>>> futures;
  futures.reserve(chunks);
  for (int c = 0; c < chunks; ++c) {
    Mask lo = static_cast<Mask>((static_cast<std::uint64_t>(end) * c) / chunks);
    Mask hi = static_cast<Mask>(
        (static_cast<std::uint64_t>(end) * (c + 1)) / chunks);
    futures.push_back(std::async(std::launch::async, [lo, hi, &fn] {
      std::vector<Item> part;
      for (Mask t = lo; t < hi; ++t) {
        fn(t, part);
      }
      return part;
    }));
  }
  for (auto& f : futures) {
    std::vector<Item> part = f.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool ht_satisfies_impl(const Formula& f, const Interpretation& h,
                       const Interpretation& t) {
  switch (f.kind()) {
    case Formula::Kind::Falsum:
      return false;
    case Formula::Kind::Atom:
      return h.count(f.as_atom()) != 0;
    case Formula::Kind::And:
      return std::all_of(
          f.children().begin(), f.children().end(),
          [&](const Formula& c) { return ht_satisfies_impl(c, h, t); });
    case Formula::Kind::Or:
      return std::any_of(
          f.children().begin(), f.children().end(),
          [&](const Formula& c) { return ht_satisfies_impl(c, h, t); });
    case Formula::Kind::Implies:
      if (ht_satisfies_impl(f.antecedent(), t, t) &&
          !ht_satisfies_impl(f.consequent(), t, t)) {
        return false;
      }
      return !ht_satisfies_impl(f.antecedent(), h, t) ||
             ht_satisfies_impl(f.consequent(), h, t);
  }
  return false;
}

}  // namespace

bool ht_satisfies(const HTPair& m, const Formula& f) {
  return ht_satisfies_impl(f, m.here(), m.there());
}

bool classically_satisfies(const Interpretation& m, const Formula& f) {
  return ht_satisfies_impl(f, m, m);
}

HTModelSet ht_models(const Theory& t, const EnumOptions& opts) {
  std::set<Atom> signature = t.signature();
  internal::check_cap(signature.size(), opts.max_atoms);
  SigIndex sig(signature);
  CompiledTheory compiled(t, sig);
  int jobs = internal::resolve_jobs(opts.jobs);

  auto pairs = for_each_world<std::pair<Mask, Mask>>(
      sig.size(), jobs, [&](Mask tm, std::vector<std::pair<Mask, Mask>>& out) {
        if (!compiled.sat_classical(tm)) {
          return;
        }
        // Submask walk emits h = tm first and h = 0 last.
        for (Mask h = tm;; h = (h - 1) & tm) {
          if (compiled.sat_ht(h, tm)) {
            out.emplace_back(h, tm);
          }
          if (h == 0) {
            break;
          }
        }
      });

  HTModelSet out;
  out.signature = std::move(signature);
  for (auto [h, tm] : pairs) {
    out.models.emplace(sig.atoms_of(h), sig.atoms_of(tm));
  }
  return out;
}

HTModelSet ht_models(const Program& p, const EnumOptions& opts) {
  return ht_models(to_theory(p), opts);
}

ModelSet equilibrium_models(const Theory& t, const EnumOptions& opts) {
  std::set<Atom> signature = t.signature();
  internal::check_cap(signature.size(), opts.max_atoms);
  SigIndex sig(signature);
  CompiledTheory compiled(t, sig);
  int jobs = internal::resolve_jobs(opts.jobs);

  auto worlds = for_each_world<Mask>(
      sig.size(), jobs, [&](Mask tm, std::vector<Mask>& out) {
        if (!compiled.sat_classical(tm)) {
          return;
        }
        if (tm != 0) {
          for (Mask h = (tm - 1) & tm;; h = (h - 1) & tm) {
            if (compiled.sat_ht(h, tm)) {
              return;
            }
            if (h == 0) {
              break;
            }
          }
        }
        out.push_back(tm);
      });

  ModelSet out;
  out.signature = std::move(signature);
  for (Mask tm : worlds) {
    out.models.insert(sig.atoms_of(tm));
  }
  return out;
}

ModelSet equilibrium_models(const Program& p, const EnumOptions& opts) {
  return equilibrium_models(to_theory(p), opts);
}

ModelSet stable_models_via_reduct(const Program& p, const EnumOptions& opts) {
  std::set<Atom> signature = p.signature();
  internal::check_cap(signature.size(), opts.max_atoms);
  SigIndex sig(signature);

  std::vector<internal::MaskRule> rules;
  rules.reserve(p.rules.size());
  for (const Rule& r : p.rules) {
    rules.push_back(internal::compile_rule(r, sig));
  }

  // Positive disjunctive remainder of a rule after the reduct fixes the
  // negated literals against candidate.
  auto reduct = [&rules](Mask candidate) {
    std::vector<std::pair<Mask, Mask>> out;  // (pos, head)
    for (const internal::MaskRule& r : rules) {
      if ((r.neg & candidate) != 0 || (r.negneg & ~candidate) != 0) {
        continue;
      }
      out.emplace_back(r.pos, r.head);
    }
    return out;
  };

  auto classical_model = [](const std::vector<std::pair<Mask, Mask>>& prog,
                            Mask m) {
    for (auto [pos, head] : prog) {
      if ((pos & ~m) == 0 && (head & m) == 0) {
        return false;
      }
    }
    return true;
  };

  ModelSet out;
  const Mask end = Mask{1} << sig.size();
  for (Mask t = 0; t < end; ++t) {
    auto prog = reduct(t);
    if (!classical_model(prog, t)) {
      continue;
    }
    bool minimal = true;
    if (t != 0) {
      for (Mask s = (t - 1) & t;; s = (s - 1) & t) {
        if (classical_model(prog, s)) {
          minimal = false;
          break;
        }
        if (s == 0) {
          break;
        }
      }
    }
    if (minimal) {
      out.models.insert(sig.atoms_of(t));
    }
  }
  out.signature = std::move(signature);
  return out;
}

bool strongly_equivalent(const Theory& a, const Theory& b,
                         const EnumOptions& opts) {
  std::set<Atom> signature = a.signature();
  {
    std::set<Atom> sb = b.signature();
    signature.insert(sb.begin(), sb.end());
  }
  internal::check_cap(signature.size(), opts.max_atoms);
  SigIndex sig(signature);
  CompiledTheory ca(a, sig);
  CompiledTheory cb(b, sig);
  const Mask end = Mask{1} << sig.size();
  for (Mask t = 0; t < end; ++t) {
    for (Mask h = t;; h = (h - 1) & t) {
      bool in_a = ca.sat_classical(t) && ca.sat_ht(h, t);
      bool in_b = cb.sat_classical(t) && cb.sat_ht(h, t);
      if (in_a != in_b) {
        return false;
      }
      if (h == 0) {
        break;
      }
    }
  }
  return true;
}

bool strongly_equivalent(const Program& a, const Program& b,
                         const EnumOptions& opts) {
  return strongly_equivalent(to_theory(a), to_theory(b), opts);
}

bool strongly_equivalent(const Program& a, const Theory& b,
                         const EnumOptions& opts) {
  return strongly_equivalent(to_theory(a), b, opts);
}

bool strongly_equivalent(const Theory& a, const Program& b,
                         const EnumOptions& opts) {
  return strongly_equivalent(a, to_theory(b), opts);
}

namespace {

std::string braced(const Interpretation& m) {
  std::string out = "{";
  bool first = true;
  for (const Atom& a : m) {
    if (!first) {
      out += ' ';
    }
    out += a.name();
    first = false;
  }
  out += '}';
  return out;
}

nlohmann::ordered_json atoms_json(const std::set<Atom>& atoms) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Atom& a : atoms) {
    arr.push_back(a.name());
  }
  return arr;
}

}  // namespace

std::string to_text(const ModelSet& ms) {
  std::string out;
  for (const Interpretation& m : ms.models) {
    out += braced(m);
    out += '\n';
  }
  return out;
}

std::string to_text(const HTModelSet& ms) {
  std::string out;
  for (const HTPair& m : ms.models) {
    out += braced(m.here());
    out += ' ';
    out += braced(m.there());
    out += '\n';
  }
  return out;
}

std::string to_json(const ModelSet& ms) {
  nlohmann::ordered_json j;
  j["signature"] = atoms_json(ms.signature);
  nlohmann::ordered_json models = nlohmann::ordered_json::array();
  for (const Interpretation& m : ms.models) {
    models.push_back(atoms_json(m));
  }
  j["models"] = models;
  return j.dump();
}

std::string to_json(const HTModelSet& ms) {
  nlohmann::ordered_json j;
  j["signature"] = atoms_json(ms.signature);
  nlohmann::ordered_json models = nlohmann::ordered_json::array();
  for (const HTPair& m : ms.models) {
    nlohmann::ordered_json pair = nlohmann::ordered_json::array();
    pair.push_back(atoms_json(m.here()));
    pair.push_back(atoms_json(m.there()));
    models.push_back(pair);
  }
  j["models"] = models;
  return j.dump();
}

}  // namespace lpforget
