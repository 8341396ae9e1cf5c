#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "flab/fas.hpp"

namespace flab {

// The seven rationality postulates. Two conventions apply throughout: a max
// over an empty attacker set is 0 and a min over an empty attacker set is 1.
enum class Postulate { BP, RP, UP, WP, SWP, DP, SDP };

inline const char* to_string(Postulate p) {
  switch (p) {
    case Postulate::BP: return "BP";
    case Postulate::RP: return "RP";
    case Postulate::UP: return "UP";
    case Postulate::WP: return "WP";
    case Postulate::SWP: return "SWP";
    case Postulate::DP: return "DP";
    case Postulate::SDP: return "SDP";
  }
  return "?";
}

inline const std::vector<Postulate>& all_postulates() {
  static const std::vector<Postulate> all{
      Postulate::BP, Postulate::RP, Postulate::UP,  Postulate::WP,
      Postulate::SWP, Postulate::DP, Postulate::SDP};
  return all;
}

// Both sides of the violated (in)equality, exactly as evaluated.
struct PostulateWitness {
  ArgumentId argument;
  Rat lhs;
  Rat rhs;

  friend bool operator==(const PostulateWitness&, const PostulateWitness&) = default;
};

struct PostulateReport {
  Postulate postulate;
  bool satisfied = true;
  std::vector<PostulateWitness> witnesses;

  friend bool operator==(const PostulateReport&, const PostulateReport&) = default;
};

inline PostulateReport check_postulate(const Fas& fas, const FuzzyLabeling& lab,
                                       Postulate p) {
  lab.require_total(fas);
  const FasView view(fas);
  const std::vector<Degree> a = view.labeling_part(lab, &LabelTriple::a);
  const std::vector<Degree> r = view.labeling_part(lab, &LabelTriple::r);
  const std::vector<Degree> u = view.labeling_part(lab, &LabelTriple::u);
  const Rat one = Rat::integer(1);

  PostulateReport report;
  report.postulate = p;
  for (std::size_t i = 0; i < view.size(); ++i) {
    Rat lhs;
    Rat rhs;
    bool violated = false;
    switch (p) {
      case Postulate::BP:
        lhs = a[i].value();
        rhs = view.initial()[i].value();
        violated = lhs > rhs;
        break;
      case Postulate::RP:
        lhs = u[i].value() + a[i].value() + r[i].value();
        rhs = one;
        violated = lhs != rhs;
        break;
      case Postulate::UP:
        lhs = a[i].value() + view.intensity_at(a, i).value();
        rhs = one;
        violated = lhs > rhs;
        break;
      case Postulate::WP:
        lhs = r[i].value();
        rhs = view.intensity_at(a, i).value();
        violated = lhs > rhs;
        break;
      case Postulate::SWP:
        lhs = r[i].value();
        rhs = view.intensity_at(a, i).value();
        violated = lhs != rhs;
        break;
      case Postulate::DP:
        lhs = a[i].value();
        rhs = view.defense_bound_at(r, i).value();
        violated = lhs > rhs;
        break;
      case Postulate::SDP:
        lhs = a[i].value();
        rhs = view.sdp_at(r, i).value();
        violated = lhs != rhs;
        break;
    }
    if (violated) report.witnesses.push_back({view.names()[i], lhs, rhs});
  }
  report.satisfied = report.witnesses.empty();
  return report;
}

inline std::map<Postulate, PostulateReport> check_profile(
    const Fas& fas, const FuzzyLabeling& lab, const std::set<Postulate>& profile) {
  std::map<Postulate, PostulateReport> out;
  for (Postulate p : profile) out.emplace(p, check_postulate(fas, lab, p));
  return out;
}

// Boolean-only postulate evaluation over an existing view; the bulk loops
// use this to avoid re-deriving the adjacency per labeling.
inline bool holds_at(const FasView& view, const std::vector<Degree>& a,
                     const std::vector<Degree>& r, const std::vector<Degree>& u,
                     Postulate p, std::size_t i) {
  const Rat one = Rat::integer(1);
  switch (p) {
    case Postulate::BP:
      return a[i] <= view.initial()[i];
    case Postulate::RP:
      return u[i].value() + a[i].value() + r[i].value() == one;
    case Postulate::UP:
      return a[i].value() + view.intensity_at(a, i).value() <= one;
    case Postulate::WP:
      return r[i] <= view.intensity_at(a, i);
    case Postulate::SWP:
      return r[i] == view.intensity_at(a, i);
    case Postulate::DP:
      return a[i] <= view.defense_bound_at(r, i);
    case Postulate::SDP:
      return a[i] == view.sdp_at(r, i);
  }
  return false;
}

inline bool holds_profile(const FasView& view, const std::vector<Degree>& a,
                          const std::vector<Degree>& r, const std::vector<Degree>& u,
                          const std::set<Postulate>& profile) {
  for (Postulate p : profile)
    for (std::size_t i = 0; i < view.size(); ++i)
      if (!holds_at(view, a, r, u, p, i)) return false;
  return true;
}

inline bool satisfies_profile(const Fas& fas, const FuzzyLabeling& lab,
                              const std::set<Postulate>& profile) {
  for (Postulate p : profile)
    if (!check_postulate(fas, lab, p).satisfied) return false;
  return true;
}

// The attackers whose full-strength attack on (target, target^a) is
// sufficient; the set S of the strict-defense characterization.
struct SufficientAttackerSet {
  ArgumentId target;
  std::set<ArgumentId> members;

  friend bool operator==(const SufficientAttackerSet&,
                         const SufficientAttackerSet&) = default;
};

inline SufficientAttackerSet sufficient_attacker_set(const Fas& fas,
                                                     const FuzzyLabeling& lab,
                                                     const ArgumentId& target) {
  lab.require_total(fas);
  const Degree target_a = lab.at(target).a;
  SufficientAttackerSet out{target, {}};
  for (const auto& b : attackers(fas, target))
    if (classify_attack(fas.initial(b), fas.attack_weight(b, target), target_a) ==
        AttackClass::Sufficient)
      out.members.insert(b);
  return out;
}

}  // namespace flab
