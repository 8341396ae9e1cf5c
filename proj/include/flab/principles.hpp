#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "flab/io.hpp"

namespace flab {

enum class Principle { LIP, CFP, ADP, COP, STP, EXP, UNP, IMP, CLP };

inline const char* to_string(Principle p) {
  switch (p) {
    case Principle::LIP: return "LIP";
    case Principle::CFP: return "CFP";
    case Principle::ADP: return "ADP";
    case Principle::COP: return "COP";
    case Principle::STP: return "STP";
    case Principle::EXP: return "EXP";
    case Principle::UNP: return "UNP";
    case Principle::IMP: return "IMP";
    case Principle::CLP: return "CLP";
  }
  return "?";
}

inline const std::vector<Principle>& all_principles() {
  static const std::vector<Principle> all{
      Principle::LIP, Principle::CFP, Principle::ADP,
      Principle::COP, Principle::STP, Principle::EXP,
      Principle::UNP, Principle::IMP, Principle::CLP};
  return all;
}

// Sampling a principle can only falsify it, never prove it; verdicts say
// "no violation found", not "satisfied".
enum class PrincipleOutcome { NoViolationFound, Violated };

inline const char* to_string(PrincipleOutcome o) {
  return o == PrincipleOutcome::Violated ? "violated" : "no-violation-found";
}

inline std::vector<Degree> default_grid() {
  std::vector<Degree> grid;
  for (int i = 0; i <= 10; ++i) grid.emplace_back(Rat(i, 10));
  return grid;
}

// A reproducible family of random instances: generation is a pure function
// of the fields.
struct InstanceFamily {
  std::uint64_t seed = 1;
  std::size_t count = 500;
  std::size_t max_args = 5;
  std::vector<Degree> degree_grid = default_grid();
};

namespace detail {

inline std::uint64_t instance_salt(std::uint64_t seed, std::size_t index) {
  return seed * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL * (index + 1);
}

inline ArgumentId generated_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i);
}

}  // namespace detail

inline Fas random_fas(const InstanceFamily& family, std::size_t index) {
  if (index >= family.count)
    throw DomainError("instance index " + std::to_string(index) +
                      " out of range (count " + std::to_string(family.count) + ")");
  if (family.max_args == 0) throw DomainError("max_args must be positive");
  if (family.degree_grid.empty()) throw DomainError("degree grid is empty");
  std::mt19937_64 rng(detail::instance_salt(family.seed, index));
  const std::size_t n = 1 + rng() % family.max_args;
  Fas fas;
  std::vector<ArgumentId> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(detail::generated_name(i));
    fas.add_argument(names.back(), family.degree_grid[rng() % family.degree_grid.size()]);
  }
  std::vector<Degree> weights;
  for (const Degree& d : family.degree_grid)
    if (!d.is_zero()) weights.push_back(d);
  const std::uint64_t density = rng() % 101;
  if (!weights.empty())
    for (const auto& from : names)
      for (const auto& to : names)
        if (rng() % 100 < density)
          fas.add_attack(from, to, weights[rng() % weights.size()]);
  return fas;
}

struct PrincipleWitness {
  std::string fas_text;
  std::string detail;

  friend bool operator==(const PrincipleWitness&, const PrincipleWitness&) = default;
};

struct PrincipleVerdict {
  Semantics semantics;
  Principle principle;
  PrincipleOutcome outcome = PrincipleOutcome::NoViolationFound;
  std::optional<PrincipleWitness> witness;
  std::size_t trials = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const PrincipleVerdict&, const PrincipleVerdict&) = default;
};

// Known violating instances, tried before any random sampling.
struct RegistryEntry {
  Semantics semantics;
  Principle principle;
  Fas fas;
  PrincipleOutcome expected;
  std::string note;
};

namespace detail {

inline Fas registry_single_weak() {
  Fas fas;
  fas.add_argument("a", Degree(Rat(4, 5)));
  return fas;
}

inline Fas registry_mutual_pair() {
  Fas fas;
  fas.add_argument("a", Degree(Rat(4, 5)));
  fas.add_argument("b", Degree(Rat(3, 5)));
  fas.add_attack("a", "b", Degree::one());
  fas.add_attack("b", "a", Degree::one());
  return fas;
}

inline Fas registry_chain() {
  Fas fas;
  fas.add_argument("a", Degree(Rat(4, 5)));
  fas.add_argument("b", Degree(Rat(7, 10)));
  fas.add_argument("c", Degree(Rat(3, 5)));
  fas.add_attack("a", "b", Degree::one());
  fas.add_attack("b", "c", Degree(Rat(9, 10)));
  return fas;
}

}  // namespace detail

inline const std::vector<RegistryEntry>& counterexample_registry() {
  static const std::vector<RegistryEntry> registry = [] {
    const Fas single = detail::registry_single_weak();
    const Fas pair = detail::registry_mutual_pair();
    const Fas chain = detail::registry_chain();
    std::vector<RegistryEntry> out;
    const auto add = [&](Semantics s, Principle p, const Fas& fas,
                         const std::string& note) {
      out.push_back({s, p, fas, PrincipleOutcome::Violated, note});
    };
    add(Semantics::ConflictFree, Principle::ADP, chain,
        "a conflict-free labeling may leave a sufficient attacker unrejected");
    add(Semantics::ConflictFree, Principle::COP, single,
        "the all-undecided labeling is conflict-free but not complete");
    add(Semantics::ConflictFree, Principle::STP, single,
        "an unattacked argument may stay below its initial degree");
    add(Semantics::ConflictFree, Principle::UNP, single,
        "many conflict-free labelings exist");
    add(Semantics::ConflictFree, Principle::IMP, single,
        "the all-undecided labeling sits below every other one");
    add(Semantics::ConflictFree, Principle::CLP, single,
        "the all-undecided labeling is conflict-free");
    add(Semantics::Admissible, Principle::COP, single,
        "the all-undecided labeling is admissible but not complete");
    add(Semantics::Admissible, Principle::STP, single,
        "an unattacked argument may stay below its initial degree");
    add(Semantics::Admissible, Principle::UNP, single,
        "many admissible labelings exist");
    add(Semantics::Admissible, Principle::IMP, single,
        "comparable admissible labelings exist");
    add(Semantics::Admissible, Principle::CLP, single,
        "the all-undecided labeling is admissible");
    add(Semantics::JvAdmissible, Principle::COP, single,
        "acceptability may stay below the strict-defense value");
    add(Semantics::JvAdmissible, Principle::STP, single,
        "an unattacked argument may stay below its initial degree");
    add(Semantics::JvAdmissible, Principle::UNP, single,
        "several acceptability levels qualify");
    add(Semantics::JvAdmissible, Principle::IMP, single,
        "comparable labelings qualify");
    add(Semantics::JvAdmissible, Principle::CLP, single,
        "undecidability may remain positive");
    add(Semantics::VjAdmissible, Principle::COP, pair,
        "rejectability may stay below the strict-weakening value");
    add(Semantics::VjAdmissible, Principle::UNP, pair,
        "several rejectability levels qualify");
    add(Semantics::VjAdmissible, Principle::IMP, pair,
        "comparable labelings qualify");
    add(Semantics::VjAdmissible, Principle::CLP, pair,
        "undecidability may remain positive");
    add(Semantics::Complete, Principle::UNP, pair,
        "a mutual attack admits several complete labelings");
    add(Semantics::Complete, Principle::IMP, pair,
        "the grounded labeling sits strictly below a stable one");
    add(Semantics::Complete, Principle::CLP, single,
        "an initial degree below one leaves undecidability");
    add(Semantics::Grounded, Principle::CLP, single,
        "an initial degree below one leaves undecidability");
    add(Semantics::Preferred, Principle::UNP, pair,
        "a mutual attack admits several preferred labelings");
    add(Semantics::Preferred, Principle::CLP, single,
        "an initial degree below one leaves undecidability");
    add(Semantics::SemiStable, Principle::UNP, pair,
        "a mutual attack admits several semi-stable labelings");
    add(Semantics::SemiStable, Principle::CLP, single,
        "an initial degree below one leaves undecidability");
    add(Semantics::Stable, Principle::EXP, single,
        "an unattacked argument with initial degree below one admits no stable labeling");
    add(Semantics::Stable, Principle::UNP, pair,
        "a mutual attack admits several stable labelings");
    add(Semantics::Ideal, Principle::CLP, single,
        "an initial degree below one leaves undecidability");
    return out;
  }();
  return registry;
}

namespace detail {

// Per-semantics enumeration limits for principle sweeps. The two-part
// semantics walk an (a, r) product grid, so they get a tighter budget;
// instances that blow a budget are skipped for that cell, never counted as
// violations.
struct SweepLimits {
  std::size_t max_arguments = 10;
  std::uint64_t one_part_budget = 400'000;
  std::uint64_t two_part_budget = 60'000;

  EnumerationLimits for_semantics(Semantics s) const {
    const bool two_part =
        s == Semantics::ConflictFree || s == Semantics::Admissible;
    return EnumerationLimits{max_arguments,
                             two_part ? two_part_budget : one_part_budget};
  }
};

// Lazily solved per-instance semantics sets; nullopt marks an enumeration
// that exceeded its budget.
class GridSolutions {
 public:
  GridSolutions(const Fas& fas, const SweepLimits& limits)
      : fas_(fas), limits_(limits) {}

  const std::optional<LabelingSet>& get(Semantics s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    std::optional<LabelingSet> result;
    try {
      switch (s) {
        case Semantics::Grounded:
          result = LabelingSet{{grounded_fixpoint(fas_)}};
          break;
        case Semantics::Preferred:
        case Semantics::SemiStable:
        case Semantics::Stable: {
          const auto& complete = get(Semantics::Complete);
          if (complete) result = extremal_from_complete(*complete, s);
          break;
        }
        case Semantics::Ideal: {
          const auto& complete = get(Semantics::Complete);
          if (complete) result = ideal_from_complete(*complete);
          break;
        }
        default:
          result = solve(fas_, s, limits_.for_semantics(s));
          break;
      }
    } catch (const ResourceError&) {
      result = std::nullopt;
    }
    return cache_.emplace(s, std::move(result)).first->second;
  }

 private:
  const Fas& fas_;
  SweepLimits limits_;
  std::map<Semantics, std::optional<LabelingSet>> cache_;
};

inline FuzzyLabeling rename_labeling(const FuzzyLabeling& lab,
                                     const std::map<ArgumentId, ArgumentId>& f) {
  FuzzyLabeling out;
  for (const auto& [name, triple] : lab.triples()) out.set(f.at(name), triple);
  return out;
}

inline std::map<ArgumentId, ArgumentId> derive_renaming(const Fas& fas,
                                                        std::uint64_t salt) {
  std::mt19937_64 rng(salt ^ 0xA24BAED4963EE407ULL);
  std::vector<ArgumentId> fresh;
  for (std::size_t i = 0; i < fas.size(); ++i)
    fresh.push_back("y" + std::to_string(i));
  for (std::size_t i = fresh.size(); i > 1; --i)
    std::swap(fresh[i - 1], fresh[rng() % i]);
  std::map<ArgumentId, ArgumentId> out;
  std::size_t k = 0;
  for (const auto& [name, degree] : fas.arguments()) out[name] = fresh[k++];
  return out;
}

// One instance prepared for every cell: the system, its isomorphic copy and
// lazily solved sets for both.
struct InstanceContext {
  Fas fas;
  std::map<ArgumentId, ArgumentId> renaming;
  Fas renamed;
  GridSolutions solutions;
  GridSolutions renamed_solutions;

  InstanceContext(Fas f, std::uint64_t salt, const SweepLimits& limits)
      : fas(std::move(f)),
        renaming(derive_renaming(fas, salt)),
        renamed(apply_isomorphism(fas, renaming)),
        solutions(fas, limits),
        renamed_solutions(renamed, limits) {}
};

enum class CellStatus { Clean, Violated, Skipped };

struct CellResult {
  CellStatus status = CellStatus::Clean;
  std::optional<PrincipleWitness> witness;
};

inline PrincipleWitness make_witness(const Fas& fas, const std::string& detail_text) {
  return PrincipleWitness{render_fas(fas), detail_text};
}

inline CellResult check_cell(InstanceContext& ctx, Semantics s, Principle p) {
  const auto& solved = ctx.solutions.get(s);
  if (!solved) return {CellStatus::Skipped, std::nullopt};
  const std::vector<FuzzyLabeling>& labelings = solved->labelings;

  switch (p) {
    case Principle::LIP: {
      const auto& renamed_solved = ctx.renamed_solutions.get(s);
      if (!renamed_solved) return {CellStatus::Skipped, std::nullopt};
      std::vector<FuzzyLabeling> mapped;
      mapped.reserve(labelings.size());
      for (const auto& lab : labelings)
        mapped.push_back(rename_labeling(lab, ctx.renaming));
      canonicalize(mapped);
      if (mapped != renamed_solved->labelings)
        return {CellStatus::Violated,
                make_witness(ctx.fas,
                             "renaming the solved set does not match solving "
                             "the renamed system")};
      return {CellStatus::Clean, std::nullopt};
    }
    case Principle::CFP:
    case Principle::ADP:
    case Principle::COP: {
      const Semantics target = p == Principle::CFP   ? Semantics::ConflictFree
                               : p == Principle::ADP ? Semantics::Admissible
                                                     : Semantics::Complete;
      const std::set<Postulate> profile = postulate_profile(target);
      const FasView view(ctx.fas);
      for (const auto& lab : labelings) {
        const auto a = view.labeling_part(lab, &LabelTriple::a);
        const auto r = view.labeling_part(lab, &LabelTriple::r);
        const auto u = view.labeling_part(lab, &LabelTriple::u);
        if (!holds_profile(view, a, r, u, profile))
          return {CellStatus::Violated,
                  make_witness(ctx.fas, "labeling not " +
                                            std::string(to_string(target)) +
                                            ":\n" + render_labeling(lab))};
      }
      return {CellStatus::Clean, std::nullopt};
    }
    case Principle::STP: {
      std::vector<std::pair<ArgumentId, Degree>> unattacked;
      for (const auto& [name, degree] : ctx.fas.arguments())
        if (attackers(ctx.fas, name).empty()) unattacked.emplace_back(name, degree);
      for (const auto& lab : labelings)
        for (const auto& [name, degree] : unattacked) {
          const LabelTriple& t = lab.at(name);
          if (t.a != degree || !t.r.is_zero())
            return {CellStatus::Violated,
                    make_witness(ctx.fas, "unattacked argument '" + name +
                                              "' mislabeled:\n" +
                                              render_labeling(lab))};
        }
      return {CellStatus::Clean, std::nullopt};
    }
    case Principle::EXP:
      if (labelings.empty())
        return {CellStatus::Violated,
                make_witness(ctx.fas, "the semantics returned no labeling")};
      return {CellStatus::Clean, std::nullopt};
    case Principle::UNP:
      if (labelings.size() != 1)
        return {CellStatus::Violated,
                make_witness(ctx.fas,
                             "the semantics returned " +
                                 std::to_string(labelings.size()) +
                                 " labelings instead of exactly one")};
      return {CellStatus::Clean, std::nullopt};
    case Principle::IMP: {
      for (std::size_t i = 0; i < labelings.size(); ++i)
        for (std::size_t j = 0; j < labelings.size(); ++j)
          if (i != j && leq_labeling(labelings[i], labelings[j]))
            return {CellStatus::Violated,
                    make_witness(ctx.fas, "comparable pair:\n" +
                                              render_labeling(labelings[i]) +
                                              render_labeling(labelings[j]))};
      return {CellStatus::Clean, std::nullopt};
    }
    case Principle::CLP: {
      for (const auto& lab : labelings)
        if (!lab.undecidability_part().empty())
          return {CellStatus::Violated,
                  make_witness(ctx.fas, "positive undecidability:\n" +
                                            render_labeling(lab))};
      return {CellStatus::Clean, std::nullopt};
    }
  }
  throw DomainError("unknown principle");
}

inline SweepLimits sweep_limits_for(const InstanceFamily& family) {
  SweepLimits limits;
  limits.max_arguments = family.max_args < limits.max_arguments
                             ? limits.max_arguments
                             : family.max_args;
  return limits;
}

}  // namespace detail

// Checks one (semantics, principle) cell: registry witnesses first, then the
// family's instances in order. A violation reports the witness; otherwise
// the verdict counts how many instances were actually evaluated (instances
// whose enumeration exceeds the budget are skipped, never counted).
inline PrincipleVerdict evaluate_principle(Semantics s, Principle p,
                                           const InstanceFamily& family) {
  const detail::SweepLimits limits = detail::sweep_limits_for(family);
  PrincipleVerdict verdict;
  verdict.semantics = s;
  verdict.principle = p;
  verdict.seed = family.seed;

  for (const auto& entry : counterexample_registry()) {
    if (entry.semantics != s || entry.principle != p) continue;
    detail::InstanceContext ctx(entry.fas, detail::instance_salt(family.seed, 0),
                                limits);
    const detail::CellResult result = detail::check_cell(ctx, s, p);
    if (result.status == detail::CellStatus::Violated) {
      verdict.outcome = PrincipleOutcome::Violated;
      verdict.witness = result.witness;
      return verdict;
    }
  }

  for (std::size_t index = 0; index < family.count; ++index) {
    detail::InstanceContext ctx(random_fas(family, index),
                                detail::instance_salt(family.seed, index), limits);
    const detail::CellResult result = detail::check_cell(ctx, s, p);
    if (result.status == detail::CellStatus::Skipped) continue;
    ++verdict.trials;
    if (result.status == detail::CellStatus::Violated) {
      verdict.outcome = PrincipleOutcome::Violated;
      verdict.witness = result.witness;
      return verdict;
    }
  }
  return verdict;
}

// The full satisfaction sweep, sharing per-instance solver work across all
// cells. Cell verdicts coincide with evaluate_principle on the same family.
struct SweepResult {
  InstanceFamily family;
  std::vector<PrincipleVerdict> cells;  // semantics-major order

  const PrincipleVerdict& cell(Semantics s, Principle p) const {
    for (const auto& verdict : cells)
      if (verdict.semantics == s && verdict.principle == p) return verdict;
    throw DomainError("unknown sweep cell");
  }
};

inline SweepResult run_sweep(const InstanceFamily& family) {
  const detail::SweepLimits limits = detail::sweep_limits_for(family);
  SweepResult result;
  result.family = family;
  std::map<std::pair<Semantics, Principle>, PrincipleVerdict> verdicts;
  for (Semantics s : all_semantics())
    for (Principle p : all_principles()) {
      PrincipleVerdict verdict;
      verdict.semantics = s;
      verdict.principle = p;
      verdict.seed = family.seed;
      verdicts[{s, p}] = verdict;
    }

  for (const auto& entry : counterexample_registry()) {
    PrincipleVerdict& verdict = verdicts.at({entry.semantics, entry.principle});
    if (verdict.outcome == PrincipleOutcome::Violated) continue;
    detail::InstanceContext ctx(entry.fas, detail::instance_salt(family.seed, 0),
                                limits);
    const detail::CellResult cell =
        detail::check_cell(ctx, entry.semantics, entry.principle);
    if (cell.status == detail::CellStatus::Violated) {
      verdict.outcome = PrincipleOutcome::Violated;
      verdict.witness = cell.witness;
    }
  }

  for (std::size_t index = 0; index < family.count; ++index) {
    detail::InstanceContext ctx(random_fas(family, index),
                                detail::instance_salt(family.seed, index), limits);
    for (Semantics s : all_semantics())
      for (Principle p : all_principles()) {
        PrincipleVerdict& verdict = verdicts.at({s, p});
        if (verdict.outcome == PrincipleOutcome::Violated) continue;
        const detail::CellResult cell = detail::check_cell(ctx, s, p);
        if (cell.status == detail::CellStatus::Skipped) continue;
        ++verdict.trials;
        if (cell.status == detail::CellStatus::Violated) {
          verdict.outcome = PrincipleOutcome::Violated;
          verdict.witness = cell.witness;
        }
      }
  }

  for (Semantics s : all_semantics())
    for (Principle p : all_principles())
      result.cells.push_back(verdicts.at({s, p}));
  return result;
}

}  // namespace flab
