#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flab/postulates.hpp"

namespace flab {

enum class Semantics {
  ConflictFree,
  Admissible,
  JvAdmissible,
  VjAdmissible,
  Complete,
  Grounded,
  Preferred,
  SemiStable,
  Stable,
  Ideal,
};

inline const char* to_string(Semantics s) {
  switch (s) {
    case Semantics::ConflictFree: return "conflict-free";
    case Semantics::Admissible: return "admissible";
    case Semantics::JvAdmissible: return "jv-admissible";
    case Semantics::VjAdmissible: return "vj-admissible";
    case Semantics::Complete: return "complete";
    case Semantics::Grounded: return "grounded";
    case Semantics::Preferred: return "preferred";
    case Semantics::SemiStable: return "semi-stable";
    case Semantics::Stable: return "stable";
    case Semantics::Ideal: return "ideal";
  }
  return "?";
}

inline const std::vector<Semantics>& all_semantics() {
  static const std::vector<Semantics> all{
      Semantics::ConflictFree, Semantics::Admissible,  Semantics::JvAdmissible,
      Semantics::VjAdmissible, Semantics::Complete,    Semantics::Grounded,
      Semantics::Preferred,    Semantics::SemiStable,  Semantics::Stable,
      Semantics::Ideal};
  return all;
}

// The defining postulate profile of the non-extremal semantics.
inline std::set<Postulate> postulate_profile(Semantics s) {
  switch (s) {
    case Semantics::ConflictFree:
      return {Postulate::BP, Postulate::RP, Postulate::UP, Postulate::WP};
    case Semantics::Admissible:
      return {Postulate::BP, Postulate::RP, Postulate::WP, Postulate::DP};
    case Semantics::JvAdmissible:
      return {Postulate::BP, Postulate::RP, Postulate::SWP, Postulate::DP};
    case Semantics::VjAdmissible:
      return {Postulate::BP, Postulate::RP, Postulate::WP, Postulate::SDP};
    case Semantics::Complete:
      return {Postulate::BP, Postulate::RP, Postulate::SWP, Postulate::SDP};
    default:
      throw DomainError(std::string("no postulate profile for ") + to_string(s));
  }
}

struct EnumerationLimits {
  // Enumeration refuses systems with more arguments than this.
  std::size_t max_arguments = 10;
  // Guard on the number of grid candidates an enumeration may visit.
  std::uint64_t max_candidates = 50'000'000;
};

// Labelings in canonical order: lexicographic by argument name, then by the
// (a, r, u) rationals. No duplicates.
struct LabelingSet {
  std::vector<FuzzyLabeling> labelings;

  bool contains(const FuzzyLabeling& lab) const {
    return std::binary_search(labelings.begin(), labelings.end(), lab);
  }

  friend bool operator==(const LabelingSet&, const LabelingSet&) = default;
};

// The finite degree grid the enumerators search: {0,1}, every initial degree,
// every attack weight and every single-attack intensity, closed under 1-x.
// min and max pick one of their operands, so the grid is closed under every
// operator the labeling equations use.
inline std::vector<Degree> characteristic_values(const Fas& fas) {
  std::set<Degree> base{Degree::zero(), Degree::one()};
  for (const auto& [name, degree] : fas.arguments()) base.insert(degree);
  for (const auto& [edge, weight] : fas.attacks()) {
    base.insert(weight);
    base.insert(tnorm(fas.initial(edge.first), weight));
  }
  std::set<Degree> closed = base;
  for (const Degree& d : base) closed.insert(complement(d));
  return {closed.begin(), closed.end()};
}

namespace detail {

inline void canonicalize(std::vector<FuzzyLabeling>& labelings) {
  std::sort(labelings.begin(), labelings.end());
  labelings.erase(std::unique(labelings.begin(), labelings.end()),
                  labelings.end());
}

inline void require_within_cap(std::size_t arguments, const EnumerationLimits& limits) {
  if (arguments > limits.max_arguments)
    throw ResourceError("enumeration over " + std::to_string(arguments) +
                        " arguments exceeds the cap of " +
                        std::to_string(limits.max_arguments) + " arguments");
}

[[noreturn]] inline void candidate_budget_exhausted(const EnumerationLimits& limits) {
  throw ResourceError("enumeration exceeds the candidate budget of " +
                      std::to_string(limits.max_candidates) + " grid vectors");
}

// Visits every combination of the per-argument domains in lexicographic
// order (one empty combination when there are no arguments).
template <typename Fn>
void for_each_combination(const std::vector<std::vector<Degree>>& domains, Fn&& fn) {
  for (const auto& domain : domains)
    if (domain.empty()) return;
  std::vector<std::size_t> cursor(domains.size(), 0);
  std::vector<Degree> current(domains.size());
  for (std::size_t i = 0; i < domains.size(); ++i) current[i] = domains[i].front();
  while (true) {
    fn(static_cast<const std::vector<Degree>&>(current));
    std::size_t k = domains.size();
    while (k > 0 && ++cursor[k - 1] == domains[k - 1].size()) {
      cursor[k - 1] = 0;
      current[k - 1] = domains[k - 1].front();
      --k;
    }
    if (k == 0) return;
    current[k - 1] = domains[k - 1][cursor[k - 1]];
  }
}

inline std::uint64_t product_capped(const std::vector<std::vector<Degree>>& domains,
                                    std::uint64_t cap) {
  std::uint64_t product = 1;
  for (const auto& domain : domains) {
    if (domain.empty()) return 0;
    if (product > cap / domain.size()) return cap + 1;
    product *= domain.size();
  }
  return product;
}

inline std::vector<Degree> grid_between(const std::vector<Degree>& grid,
                                        const Degree& lo, const Degree& hi) {
  std::vector<Degree> out;
  for (const Degree& d : grid)
    if (d >= lo && d <= hi) out.push_back(d);
  return out;
}

inline bool residual_ok(const std::vector<Degree>& accept,
                        const std::vector<Degree>& reject) {
  const Rat one = Rat::integer(1);
  for (std::size_t i = 0; i < accept.size(); ++i)
    if (accept[i].value() + reject[i].value() > one) return false;
  return true;
}

}  // namespace detail

// Derives the rejectability part from the acceptability part via the strict
// weakening equation and the undecidability part as the residual. Yields the
// labeling iff the strict defense equation holds and every residual lands in
// [0,1]; absent otherwise.
inline std::optional<FuzzyLabeling> complete_from_acceptability(
    const Fas& fas, const FuzzySet& accept_set) {
  for (const auto& [name, grade] : accept_set.entries())
    if (!fas.has_argument(name))
      throw DomainError("acceptability set mentions unknown argument '" + name + "'");
  const FasView view(fas);
  std::vector<Degree> accept(view.size());
  for (std::size_t i = 0; i < view.size(); ++i)
    accept[i] = accept_set.at(view.names()[i]);
  const std::vector<Degree> reject = view.swp(accept);
  if (!detail::residual_ok(accept, reject)) return std::nullopt;
  for (std::size_t i = 0; i < view.size(); ++i)
    if (view.sdp_at(reject, i) != accept[i]) return std::nullopt;
  return view.make_labeling(accept, reject);
}

// Kleene iteration from the all-zero labeling, alternating the strict
// weakening and strict defense operators. Both are monotone and every
// iterate stays on the characteristic grid, so the loop reaches the least
// fixpoint in at most |grid| * |Args| rounds; the result is the complete
// labeling with pointwise-minimal acceptability and rejectability parts.
inline FuzzyLabeling grounded_fixpoint(const Fas& fas) {
  const FasView view(fas);
  const std::size_t rounds =
      characteristic_values(fas).size() * view.size() + 2;
  std::vector<Degree> accept(view.size(), Degree::zero());
  std::vector<Degree> reject(view.size(), Degree::zero());
  for (std::size_t round = 0; round < rounds; ++round) {
    const std::vector<Degree> next_reject = view.swp(accept);
    const std::vector<Degree> next_accept = view.sdp(next_reject);
    if (next_accept == accept) {
      reject = next_reject;
      return view.make_labeling(accept, reject);
    }
    accept = next_accept;
    reject = next_reject;
  }
  throw std::logic_error("grounded iteration failed to reach a fixpoint");
}

// All complete labelings whose acceptability part lives on the
// characteristic grid.
inline LabelingSet enumerate_complete(const Fas& fas,
                                      const EnumerationLimits& limits = {}) {
  const FasView view(fas);
  detail::require_within_cap(view.size(), limits);
  const std::vector<Degree> grid = characteristic_values(fas);
  const std::vector<Degree> no_reject(view.size(), Degree::zero());
  std::vector<std::vector<Degree>> domains(view.size());
  for (std::size_t i = 0; i < view.size(); ++i) {
    // The strict defense value is monotone in the rejectability vector, so
    // its value at r = 0 bounds every solution from below.
    const Degree lo = view.sdp_at(no_reject, i);
    domains[i] = detail::grid_between(grid, lo, view.initial()[i]);
  }
  if (detail::product_capped(domains, limits.max_candidates) > limits.max_candidates)
    detail::candidate_budget_exhausted(limits);

  std::vector<FuzzyLabeling> found;
  std::vector<Degree> reject(view.size());
  detail::for_each_combination(domains, [&](const std::vector<Degree>& accept) {
    for (std::size_t i = 0; i < view.size(); ++i)
      reject[i] = view.intensity_at(accept, i);
    if (!detail::residual_ok(accept, reject)) return;
    for (std::size_t i = 0; i < view.size(); ++i)
      if (view.sdp_at(reject, i) != accept[i]) return;
    found.push_back(view.make_labeling(accept, reject));
  });
  detail::canonicalize(found);
  return LabelingSet{std::move(found)};
}

namespace detail {

// Grid labelings satisfying BP, RP, SWP and DP; the strict weakening
// equation pins the rejectability part, so one acceptability vector decides
// everything.
inline LabelingSet enumerate_jv_admissible(const Fas& fas,
                                           const EnumerationLimits& limits) {
  const FasView view(fas);
  require_within_cap(view.size(), limits);
  const std::vector<Degree> grid = characteristic_values(fas);
  std::vector<std::vector<Degree>> domains(view.size());
  for (std::size_t i = 0; i < view.size(); ++i)
    domains[i] = grid_between(grid, Degree::zero(), view.initial()[i]);
  if (product_capped(domains, limits.max_candidates) > limits.max_candidates)
    candidate_budget_exhausted(limits);

  std::vector<FuzzyLabeling> found;
  std::vector<Degree> reject(view.size());
  for_each_combination(domains, [&](const std::vector<Degree>& accept) {
    for (std::size_t i = 0; i < view.size(); ++i)
      reject[i] = view.intensity_at(accept, i);
    if (!residual_ok(accept, reject)) return;
    for (std::size_t i = 0; i < view.size(); ++i)
      if (accept[i] > view.defense_bound_at(reject, i)) return;
    found.push_back(view.make_labeling(accept, reject));
  });
  canonicalize(found);
  return LabelingSet{std::move(found)};
}

// Grid labelings satisfying BP, RP, WP and SDP; here the strict defense
// equation pins the acceptability part from the rejectability vector.
inline LabelingSet enumerate_vj_admissible(const Fas& fas,
                                           const EnumerationLimits& limits) {
  const FasView view(fas);
  require_within_cap(view.size(), limits);
  const std::vector<Degree> grid = characteristic_values(fas);
  const std::vector<Degree>& initial = view.initial();
  std::vector<std::vector<Degree>> domains(view.size());
  for (std::size_t i = 0; i < view.size(); ++i) {
    // The weakening bound caps r_i by the intensity reachable at full
    // initial degrees.
    const Degree cap = view.intensity_at(initial, i);
    domains[i] = grid_between(grid, Degree::zero(), cap);
  }
  if (product_capped(domains, limits.max_candidates) > limits.max_candidates)
    candidate_budget_exhausted(limits);

  std::vector<FuzzyLabeling> found;
  std::vector<Degree> accept(view.size());
  for_each_combination(domains, [&](const std::vector<Degree>& reject) {
    for (std::size_t i = 0; i < view.size(); ++i)
      accept[i] = view.sdp_at(reject, i);
    if (!residual_ok(accept, reject)) return;
    for (std::size_t i = 0; i < view.size(); ++i)
      if (reject[i] > view.intensity_at(accept, i)) return;
    found.push_back(view.make_labeling(accept, reject));
  });
  canonicalize(found);
  return LabelingSet{std::move(found)};
}

// Grid labelings satisfying BP, RP, UP and WP (conflict-free) or BP, RP, WP
// and DP (admissible). Neither part is pinned, so this walks acceptability
// vectors and, per vector, every rejectability vector below the weakening
// bound.
inline LabelingSet enumerate_two_part(const Fas& fas, bool require_up,
                                      bool require_dp,
                                      const EnumerationLimits& limits) {
  const FasView view(fas);
  require_within_cap(view.size(), limits);
  const std::vector<Degree> grid = characteristic_values(fas);
  const Rat one = Rat::integer(1);
  std::vector<std::vector<Degree>> accept_domains(view.size());
  for (std::size_t i = 0; i < view.size(); ++i)
    accept_domains[i] = grid_between(grid, Degree::zero(), view.initial()[i]);
  if (product_capped(accept_domains, limits.max_candidates) > limits.max_candidates)
    candidate_budget_exhausted(limits);

  std::uint64_t visited = 0;
  std::vector<FuzzyLabeling> found;
  std::vector<std::vector<Degree>> reject_domains(view.size());
  for_each_combination(accept_domains, [&](const std::vector<Degree>& accept) {
    if (++visited > limits.max_candidates) candidate_budget_exhausted(limits);
    for (std::size_t i = 0; i < view.size(); ++i) {
      const Degree intensity = view.intensity_at(accept, i);
      if (require_up && accept[i].value() + intensity.value() > one) return;
      // WP caps r_i by the intensity; the residual caps it by 1 - a_i.
      const Degree cap = require_up
                             ? intensity
                             : dmin(intensity, complement(accept[i]));
      reject_domains[i] = grid_between(grid, Degree::zero(), cap);
    }
    for_each_combination(reject_domains, [&](const std::vector<Degree>& reject) {
      if (++visited > limits.max_candidates) candidate_budget_exhausted(limits);
      if (require_dp)
        for (std::size_t i = 0; i < view.size(); ++i)
          if (accept[i] > view.defense_bound_at(reject, i)) return;
      found.push_back(view.make_labeling(accept, reject));
    });
  });
  canonicalize(found);
  return LabelingSet{std::move(found)};
}

template <typename Part>
std::vector<FuzzyLabeling> extremal_elements(const std::vector<FuzzyLabeling>& all,
                                             Part part, bool maximal) {
  std::vector<FuzzySet> parts;
  parts.reserve(all.size());
  for (const auto& lab : all) parts.push_back(part(lab));
  std::vector<FuzzyLabeling> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool extremal = true;
    for (std::size_t j = 0; j < all.size() && extremal; ++j) {
      if (i == j || parts[i] == parts[j]) continue;
      const bool dominated = maximal ? fs_subset(parts[i], parts[j])
                                     : fs_subset(parts[j], parts[i]);
      if (dominated) extremal = false;
    }
    if (extremal) out.push_back(all[i]);
  }
  return out;
}

inline LabelingSet extremal_from_complete(const LabelingSet& complete, Semantics s) {
  std::vector<FuzzyLabeling> out;
  switch (s) {
    case Semantics::Grounded:
      out = extremal_elements(
          complete.labelings,
          [](const FuzzyLabeling& l) { return l.acceptability_part(); }, false);
      break;
    case Semantics::Preferred:
      out = extremal_elements(
          complete.labelings,
          [](const FuzzyLabeling& l) { return l.acceptability_part(); }, true);
      break;
    case Semantics::SemiStable:
      out = extremal_elements(
          complete.labelings,
          [](const FuzzyLabeling& l) { return l.undecidability_part(); }, false);
      break;
    case Semantics::Stable:
      for (const auto& lab : complete.labelings)
        if (lab.undecidability_part().empty()) out.push_back(lab);
      break;
    default:
      throw DomainError(std::string("select_extremal does not apply to ") +
                        to_string(s));
  }
  canonicalize(out);
  return LabelingSet{std::move(out)};
}

inline LabelingSet ideal_from_complete(const LabelingSet& complete) {
  const std::vector<FuzzyLabeling> preferred = extremal_elements(
      complete.labelings,
      [](const FuzzyLabeling& l) { return l.acceptability_part(); }, true);
  std::vector<FuzzyLabeling> qualifiers;
  for (const auto& lab : complete.labelings) {
    bool below_all = true;
    for (const auto& pref : preferred)
      if (!leq_labeling(lab, pref)) {
        below_all = false;
        break;
      }
    if (below_all) qualifiers.push_back(lab);
  }
  std::vector<FuzzyLabeling> out;
  for (const auto& lab : qualifiers) {
    bool maximal = true;
    for (const auto& other : qualifiers)
      if (!(other == lab) && leq_labeling(lab, other)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(lab);
  }
  if (out.empty())
    throw std::logic_error("ideal selection returned no labeling");
  canonicalize(out);
  return LabelingSet{std::move(out)};
}

}  // namespace detail

// Extremal selections over the enumerated complete labelings: grounded and
// preferred minimize/maximize the acceptability part, semi-stable minimizes
// the undecidability part, stable keeps the labelings with empty
// undecidability part. Ties are kept: every extremal element is returned.
inline LabelingSet select_extremal(const Fas& fas, Semantics s,
                                   const EnumerationLimits& limits = {}) {
  return detail::extremal_from_complete(enumerate_complete(fas, limits), s);
}

// The complete labelings lying below every preferred labeling, restricted to
// their maximal elements. A singleton is expected; any tie is returned
// verbatim. The grounded labeling always qualifies, so an empty result is an
// internal failure, not a value.
inline LabelingSet ideal_labelings(const Fas& fas,
                                   const EnumerationLimits& limits = {}) {
  return detail::ideal_from_complete(enumerate_complete(fas, limits));
}

// The solved set of a semantics over the characteristic grid. Grounded is
// served by the fixpoint solver and carries no enumeration cap.
inline LabelingSet solve(const Fas& fas, Semantics s,
                         const EnumerationLimits& limits = {}) {
  switch (s) {
    case Semantics::ConflictFree:
      return detail::enumerate_two_part(fas, true, false, limits);
    case Semantics::Admissible:
      return detail::enumerate_two_part(fas, false, true, limits);
    case Semantics::JvAdmissible:
      return detail::enumerate_jv_admissible(fas, limits);
    case Semantics::VjAdmissible:
      return detail::enumerate_vj_admissible(fas, limits);
    case Semantics::Complete:
      return enumerate_complete(fas, limits);
    case Semantics::Grounded:
      return LabelingSet{{grounded_fixpoint(fas)}};
    case Semantics::Preferred:
    case Semantics::SemiStable:
    case Semantics::Stable:
      return select_extremal(fas, s, limits);
    case Semantics::Ideal:
      return ideal_labelings(fas, limits);
  }
  throw DomainError("unknown semantics");
}

// Membership test. Profile semantics check their postulates directly; stable
// adds the empty-undecidability condition; the extremal semantics compare
// against the enumerated sets.
inline bool is_labeling(const Fas& fas, const FuzzyLabeling& lab, Semantics s,
                        const EnumerationLimits& limits = {}) {
  lab.require_total(fas);
  switch (s) {
    case Semantics::ConflictFree:
    case Semantics::Admissible:
    case Semantics::JvAdmissible:
    case Semantics::VjAdmissible:
    case Semantics::Complete:
      return satisfies_profile(fas, lab, postulate_profile(s));
    case Semantics::Stable:
      return satisfies_profile(fas, lab, postulate_profile(Semantics::Complete)) &&
             lab.undecidability_part().empty();
    case Semantics::Grounded:
    case Semantics::Preferred:
    case Semantics::SemiStable:
      return select_extremal(fas, s, limits).contains(lab);
    case Semantics::Ideal:
      return ideal_labelings(fas, limits).contains(lab);
  }
  throw DomainError("unknown semantics");
}

}  // namespace flab
