#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flab/semantics.hpp"

namespace flab {

// A classical argumentation framework: plain arguments and unweighted
// attacks.
struct Af {
  std::set<ArgumentId> args;
  std::set<std::pair<ArgumentId, ArgumentId>> atts;

  void add_argument(const ArgumentId& name) {
    if (name.empty()) throw DomainError("empty argument name");
    args.insert(name);
  }

  void add_attack(const ArgumentId& from, const ArgumentId& to) {
    if (!args.contains(from) || !args.contains(to))
      throw DomainError("attack endpoint not declared: (" + from + "," + to + ")");
    atts.insert({from, to});
  }

  friend bool operator==(const Af&, const Af&) = default;
};

enum class ClassicalLabel { In, Out, Undec };

inline const char* to_string(ClassicalLabel label) {
  switch (label) {
    case ClassicalLabel::In: return "in";
    case ClassicalLabel::Out: return "out";
    case ClassicalLabel::Undec: return "undec";
  }
  return "?";
}

struct ClassicalLabeling {
  std::map<ArgumentId, ClassicalLabel> labels;

  friend bool operator==(const ClassicalLabeling&, const ClassicalLabeling&) = default;
  friend std::strong_ordering operator<=>(const ClassicalLabeling&,
                                          const ClassicalLabeling&) = default;
};

// Brute force over {in,out,undec}^n: a labeling is complete iff every
// argument is in exactly when all its attackers are out, out exactly when
// some attacker is in, and undec otherwise. Canonical order (arguments by
// name, labels in < out < undec).
inline std::vector<ClassicalLabeling> enumerate_classical_complete(
    const Af& af, const EnumerationLimits& limits = {}) {
  detail::require_within_cap(af.args.size(), limits);
  const std::vector<ArgumentId> names(af.args.begin(), af.args.end());
  std::vector<std::vector<int>> incoming(names.size());
  std::map<ArgumentId, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
  for (const auto& [from, to] : af.atts)
    incoming[index[to]].push_back(index[from]);

  static constexpr ClassicalLabel kLabels[] = {
      ClassicalLabel::In, ClassicalLabel::Out, ClassicalLabel::Undec};
  std::vector<ClassicalLabeling> out;
  std::vector<int> choice(names.size(), 0);
  while (true) {
    bool complete = true;
    for (std::size_t i = 0; i < names.size() && complete; ++i) {
      bool all_out = true;
      bool some_in = false;
      for (int b : incoming[i]) {
        if (kLabels[choice[b]] != ClassicalLabel::Out) all_out = false;
        if (kLabels[choice[b]] == ClassicalLabel::In) some_in = true;
      }
      const ClassicalLabel required = all_out   ? ClassicalLabel::In
                                      : some_in ? ClassicalLabel::Out
                                                : ClassicalLabel::Undec;
      complete = kLabels[choice[i]] == required;
    }
    if (complete) {
      ClassicalLabeling lab;
      for (std::size_t i = 0; i < names.size(); ++i)
        lab.labels[names[i]] = kLabels[choice[i]];
      out.push_back(std::move(lab));
    }
    std::size_t k = names.size();
    while (k > 0 && ++choice[k - 1] == 3) choice[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

// Degree 1 for every argument and attack present; everything else absent.
inline Fas af_to_fas(const Af& af) {
  Fas fas;
  for (const auto& name : af.args) fas.add_argument(name, Degree::one());
  for (const auto& [from, to] : af.atts) fas.add_attack(from, to, Degree::one());
  return fas;
}

// in -> (1,0,0), out -> (0,1,0), undec -> (0,0,1).
inline FuzzyLabeling clab_to_flab(const ClassicalLabeling& lab) {
  FuzzyLabeling out;
  for (const auto& [name, label] : lab.labels) {
    switch (label) {
      case ClassicalLabel::In:
        out.set(name, {Degree::one(), Degree::zero(), Degree::zero()});
        break;
      case ClassicalLabel::Out:
        out.set(name, {Degree::zero(), Degree::one(), Degree::zero()});
        break;
      case ClassicalLabel::Undec:
        out.set(name, {Degree::zero(), Degree::zero(), Degree::one()});
        break;
    }
  }
  return out;
}

}  // namespace flab
