#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "flab/semantics.hpp"

namespace flab {

// A fuzzy subset of the system's argument fuzzy set.
struct FExtension {
  FuzzySet degrees;

  friend bool operator==(const FExtension&, const FExtension&) = default;
  friend std::strong_ordering operator<=>(const FExtension&, const FExtension&) = default;
};

enum class FExtensionKind {
  ConflictFreeFSet,
  AdmissibleFExt,
  CompleteFExt,
  PreferredFExt,
  GroundedFExt,
  StableFExt,
};

inline const char* to_string(FExtensionKind kind) {
  switch (kind) {
    case FExtensionKind::ConflictFreeFSet: return "conflict-free";
    case FExtensionKind::AdmissibleFExt: return "admissible";
    case FExtensionKind::CompleteFExt: return "complete";
    case FExtensionKind::PreferredFExt: return "preferred";
    case FExtensionKind::GroundedFExt: return "grounded";
    case FExtensionKind::StableFExt: return "stable";
  }
  return "?";
}

namespace detail {

inline void validate_fextension(const Fas& fas, const FExtension& s) {
  for (const auto& [name, grade] : s.degrees.entries()) {
    if (!fas.has_argument(name))
      throw DomainError("extension mentions unknown argument '" + name + "'");
    if (grade > fas.initial(name))
      throw DomainError("extension exceeds the initial degree of '" + name + "'");
  }
}

}  // namespace detail

// A sufficient attack of strength min(attacker, weight) weakens its target
// from `target` down to 1 - min(attacker, weight).
inline Degree weaken(const Degree& attacker, const Degree& weight,
                     const Degree& target) {
  if (classify_attack(attacker, weight, target) != AttackClass::Sufficient)
    throw DomainError("weakening applies to sufficient attacks only");
  return complement(tnorm(attacker, weight));
}

// True iff every sufficient attack on (c, cdeg) comes from an attacker the
// set weakens to a tolerable strength.
inline bool weakening_defends(const Fas& fas, const FExtension& s,
                              const ArgumentId& c, const Degree& cdeg) {
  detail::validate_fextension(fas, s);
  if (!fas.has_argument(c)) throw DomainError("unknown argument '" + c + "'");
  for (const auto& b : attackers(fas, c)) {
    const Degree weight_bc = fas.attack_weight(b, c);
    if (classify_attack(fas.initial(b), weight_bc, cdeg) != AttackClass::Sufficient)
      continue;
    bool countered = false;
    for (const auto& [defender, grade] : s.degrees.entries()) {
      const Degree weight_db = fas.attack_weight(defender, b);
      if (weight_db.is_zero()) continue;
      if (classify_attack(grade, weight_db, fas.initial(b)) != AttackClass::Sufficient)
        continue;
      const Degree weakened = weaken(grade, weight_db, fas.initial(b));
      if (classify_attack(weakened, weight_bc, cdeg) == AttackClass::Tolerable) {
        countered = true;
        break;
      }
    }
    if (!countered) return false;
  }
  return true;
}

namespace detail {

// Index-based evaluation of the f-extension conditions, shared by the
// membership check and the enumerator. `strength[b]` caches the strongest
// weakening the set can apply to attacker b (absent when no member mounts a
// sufficient attack on b).
struct FExtensionEvaluator {
  const FasView& view;
  std::vector<Degree> member;                       // set degree per argument
  std::vector<std::optional<Degree>> strength;      // max min(S_A, w_AB) sufficient vs initial_B

  FExtensionEvaluator(const FasView& v, const std::vector<Degree>& degrees)
      : view(v), member(degrees), strength(v.size()) {
    for (std::size_t b = 0; b < view.size(); ++b) {
      std::optional<Degree> best;
      for (const auto& in : view.incoming(b)) {
        const Degree intensity = tnorm(member[in.attacker], in.weight);
        if (intensity.value() + view.initial()[b].value() <= Rat::integer(1))
          continue;
        best = best ? dmax(*best, intensity) : intensity;
      }
      strength[b] = best;
    }
  }

  bool conflict_free() const {
    for (std::size_t x = 0; x < view.size(); ++x)
      for (const auto& in : view.incoming(x))
        if (tnorm(member[in.attacker], in.weight).value() + member[x].value() >
            Rat::integer(1))
          return false;
    return true;
  }

  bool defends(std::size_t x, const Degree& cdeg) const {
    for (const auto& in : view.incoming(x)) {
      const Degree full = tnorm(view.initial()[in.attacker], in.weight);
      if (full.value() + cdeg.value() <= Rat::integer(1)) continue;
      const auto& power = strength[in.attacker];
      if (!power) return false;
      const Degree weakened = tnorm(complement(*power), in.weight);
      if (weakened.value() + cdeg.value() > Rat::integer(1)) return false;
    }
    return true;
  }

  bool admissible() const {
    if (!conflict_free()) return false;
    for (std::size_t x = 0; x < view.size(); ++x)
      if (!member[x].is_zero() && !defends(x, member[x])) return false;
    return true;
  }

  // The largest degree of x the set defends. Every branch point of the
  // defense condition lies on the characteristic grid, so this closed form
  // agrees with scanning the grid.
  Degree max_defended(std::size_t x) const {
    Degree bound = view.initial()[x];
    for (const auto& in : view.incoming(x)) {
      const Degree full = tnorm(view.initial()[in.attacker], in.weight);
      Degree term = complement(full);
      if (strength[in.attacker]) {
        const Degree weakened = tnorm(complement(*strength[in.attacker]), in.weight);
        term = dmax(term, complement(weakened));
      }
      bound = dmin(bound, term);
    }
    return bound;
  }

  bool complete() const {
    if (!admissible()) return false;
    for (std::size_t x = 0; x < view.size(); ++x)
      if (member[x] < max_defended(x)) return false;
    return true;
  }

  // Sufficiently attacks every fuzzy point above the set: for each argument
  // with residual degree left, the set's strongest attack must reach at
  // least 1 - member[x].
  bool stable() const {
    if (!conflict_free()) return false;
    for (std::size_t x = 0; x < view.size(); ++x) {
      if (member[x] == view.initial()[x]) continue;
      Degree intensity = Degree::zero();
      for (const auto& in : view.incoming(x))
        intensity = dmax(intensity, tnorm(member[in.attacker], in.weight));
      if (intensity.value() + member[x].value() < Rat::integer(1)) return false;
    }
    return true;
  }
};

inline std::vector<Degree> extension_vector(const FasView& view, const FExtension& s) {
  std::vector<Degree> out(view.size());
  for (std::size_t i = 0; i < view.size(); ++i)
    out[i] = s.degrees.at(view.names()[i]);
  return out;
}

}  // namespace detail

// Membership in the pointwise f-extension notions. Preferred and grounded
// are set-level selections and live in enumerate_fextensions.
inline bool check_fextension(const Fas& fas, const FExtension& s,
                             FExtensionKind kind) {
  detail::validate_fextension(fas, s);
  const FasView view(fas);
  const detail::FExtensionEvaluator eval(view, detail::extension_vector(view, s));
  switch (kind) {
    case FExtensionKind::ConflictFreeFSet:
      return eval.conflict_free();
    case FExtensionKind::AdmissibleFExt:
      return eval.admissible();
    case FExtensionKind::CompleteFExt: {
      if (!eval.admissible()) return false;
      // Decided over the characteristic grid: the set must reach the largest
      // grid degree it defends, per argument.
      const std::vector<Degree> grid = characteristic_values(fas);
      for (std::size_t x = 0; x < view.size(); ++x) {
        Degree best = Degree::zero();
        for (const Degree& c : grid)
          if (c <= view.initial()[x] && eval.defends(x, c)) best = dmax(best, c);
        if (eval.member[x] < best) return false;
      }
      return true;
    }
    case FExtensionKind::StableFExt:
      return eval.stable();
    default:
      throw DomainError(std::string("no pointwise membership test for ") +
                        to_string(kind) + " f-extensions");
  }
}

// Brute force over characteristic-grid fuzzy sets below the argument fuzzy
// set; preferred selects the maximal admissible sets, grounded the minimal
// complete ones. Canonical (lexicographic) order.
inline std::vector<FExtension> enumerate_fextensions(
    const Fas& fas, FExtensionKind kind, const EnumerationLimits& limits = {}) {
  if (kind == FExtensionKind::ConflictFreeFSet)
    throw DomainError("conflict-free f-sets are not enumerated");
  const FasView view(fas);
  detail::require_within_cap(view.size(), limits);
  const std::vector<Degree> grid = characteristic_values(fas);
  std::vector<std::vector<Degree>> domains(view.size());
  for (std::size_t i = 0; i < view.size(); ++i)
    domains[i] = detail::grid_between(grid, Degree::zero(), view.initial()[i]);
  if (detail::product_capped(domains, limits.max_candidates) > limits.max_candidates)
    detail::candidate_budget_exhausted(limits);

  const FExtensionKind base = kind == FExtensionKind::PreferredFExt
                                  ? FExtensionKind::AdmissibleFExt
                              : kind == FExtensionKind::GroundedFExt
                                  ? FExtensionKind::CompleteFExt
                                  : kind;
  std::vector<FExtension> found;
  detail::for_each_combination(domains, [&](const std::vector<Degree>& member) {
    const detail::FExtensionEvaluator eval(view, member);
    bool keep = false;
    switch (base) {
      case FExtensionKind::AdmissibleFExt: keep = eval.admissible(); break;
      case FExtensionKind::CompleteFExt: keep = eval.complete(); break;
      case FExtensionKind::StableFExt: keep = eval.stable(); break;
      default: break;
    }
    if (!keep) return;
    FExtension ext;
    for (std::size_t i = 0; i < view.size(); ++i)
      ext.degrees.set(view.names()[i], member[i]);
    found.push_back(std::move(ext));
  });

  if (kind == FExtensionKind::PreferredFExt || kind == FExtensionKind::GroundedFExt) {
    const bool maximal = kind == FExtensionKind::PreferredFExt;
    std::vector<FExtension> extremal;
    for (const auto& candidate : found) {
      bool keep = true;
      for (const auto& other : found) {
        if (other == candidate) continue;
        const bool dominated = maximal ? fs_subset(candidate.degrees, other.degrees)
                                       : fs_subset(other.degrees, candidate.degrees);
        if (dominated) {
          keep = false;
          break;
        }
      }
      if (keep) extremal.push_back(candidate);
    }
    found = std::move(extremal);
  }
  std::sort(found.begin(), found.end());
  return found;
}

// {S, S+, (S u S+)^c}: the set becomes the acceptability part, its strongest
// attacks the rejectability part, the residual the undecidability part.
inline FuzzyLabeling ext_to_flab(const Fas& fas, const FExtension& s) {
  detail::validate_fextension(fas, s);
  const FasView view(fas);
  const std::vector<Degree> member = detail::extension_vector(view, s);
  FuzzyLabeling lab;
  for (std::size_t i = 0; i < view.size(); ++i) {
    Degree reject = Degree::zero();
    for (const auto& in : view.incoming(i))
      reject = dmax(reject, tnorm(member[in.attacker], in.weight));
    const Rat residual =
        Rat::integer(1) - member[i].value() - reject.value();
    if (residual < Rat())
      throw DomainError("non-residual source set: attacks on '" +
                        view.names()[i] + "' overflow the unit interval");
    lab.set(view.names()[i], LabelTriple{member[i], reject, Degree(residual)});
  }
  return lab;
}

// Projection to the acceptability part.
inline FExtension flab_to_ext(const FuzzyLabeling& lab) {
  return FExtension{lab.acceptability_part()};
}

}  // namespace flab
