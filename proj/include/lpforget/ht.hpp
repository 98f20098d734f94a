// Copyright (c) 2026 The lpforget Authors.
// Distributed under the MIT license that can be found in the LICENSE file.

#pragma once

#include <set>
#include <stdexcept>
#include <string>

#include "lpforget/syntax.hpp"

namespace lpforget {

using Interpretation = std::set<Atom>;

// An ordered pair of worlds <H,T> with H subseteq T.
class HTPair {
 public:
  HTPair(Interpretation here, Interpretation there);

  const Interpretation& here() const { return here_; }
  const Interpretation& there() const { return there_; }

  friend bool operator==(const HTPair& a, const HTPair& b) = default;
  friend auto operator<=>(const HTPair& a, const HTPair& b) = default;

 private:
  Interpretation here_;
  Interpretation there_;
};

struct ModelSet {
  std::set<Atom> signature;
  std::set<Interpretation> models;

  friend bool operator==(const ModelSet& a, const ModelSet& b) = default;
};

struct HTModelSet {
  std::set<Atom> signature;
  std::set<HTPair> models;

  friend bool operator==(const HTModelSet& a, const HTModelSet& b) = default;
};

// Enumeration walks 3^n HT pairs; the cap keeps that near desk scale.
// jobs = 0 reads LPFORGET_JOBS from the environment, defaulting to 1.
struct EnumOptions {
  std::size_t max_atoms = 16;
  int jobs = 0;
};

class SignatureTooLarge : public std::runtime_error {
 public:
  SignatureTooLarge(std::size_t size, std::size_t cap);

  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

// Truth at world H of the pair; total pairs <T,T> coincide with classical
// satisfaction.
bool ht_satisfies(const HTPair& m, const Formula& f);

bool classically_satisfies(const Interpretation& m, const Formula& f);

HTModelSet ht_models(const Theory& t, const EnumOptions& opts = {});
HTModelSet ht_models(const Program& p, const EnumOptions& opts = {});

ModelSet equilibrium_models(const Theory& t, const EnumOptions& opts = {});
ModelSet equilibrium_models(const Program& p, const EnumOptions& opts = {});

// Independent oracle: minimal classical models of the reduct w.r.t. each
// candidate. `not a` deletes the rule iff a is in the candidate, `not not a`
// deletes it iff a is not. Shares no evaluation code with ht_models.
ModelSet stable_models_via_reduct(const Program& p,
                                  const EnumOptions& opts = {});

// HT-model equality over the union signature.
bool strongly_equivalent(const Theory& a, const Theory& b,
                         const EnumOptions& opts = {});
bool strongly_equivalent(const Program& a, const Program& b,
                         const EnumOptions& opts = {});
bool strongly_equivalent(const Program& a, const Theory& b,
                         const EnumOptions& opts = {});
bool strongly_equivalent(const Theory& a, const Program& b,
                         const EnumOptions& opts = {});

// One model per line, atoms space-separated inside braces, models in
// lexicographic order.
std::string to_text(const ModelSet& ms);
std::string to_text(const HTModelSet& ms);

std::string to_json(const ModelSet& ms);
std::string to_json(const HTModelSet& ms);

}  // namespace lpforget

