#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flab/fuzzy_set.hpp"

namespace flab {

enum class AttackClass { Tolerable, Sufficient };

// A fuzzy argumentation system: an initial degree for every argument of a
// finite set plus weighted attacks between them. Arguments may carry degree
// zero (they are then never attackers); attacks with weight zero are not
// stored, matching the convention that zero-grade pairs are absent.
class Fas {
 public:
  void add_argument(const ArgumentId& name, const Degree& initial) {
    if (name.empty()) throw DomainError("empty argument name");
    if (!arguments_.emplace(name, initial).second)
      throw DomainError("duplicate argument '" + name + "'");
  }

  void add_attack(const ArgumentId& from, const ArgumentId& to, const Degree& weight) {
    if (!has_argument(from) || !has_argument(to))
      throw DomainError("attack endpoint not declared: (" + from + "," + to + ")");
    if (attacks_.contains({from, to}))
      throw DomainError("duplicate attack (" + from + "," + to + ")");
    if (!weight.is_zero()) attacks_.emplace(std::make_pair(from, to), weight);
  }

  bool has_argument(const ArgumentId& name) const {
    return arguments_.contains(name);
  }

  Degree initial(const ArgumentId& name) const {
    const auto it = arguments_.find(name);
    if (it == arguments_.end())
      throw DomainError("unknown argument '" + name + "'");
    return it->second;
  }

  // Zero when no attack is recorded.
  Degree attack_weight(const ArgumentId& from, const ArgumentId& to) const {
    const auto it = attacks_.find({from, to});
    return it == attacks_.end() ? Degree::zero() : it->second;
  }

  const std::map<ArgumentId, Degree>& arguments() const { return arguments_; }
  const std::map<std::pair<ArgumentId, ArgumentId>, Degree>& attacks() const {
    return attacks_;
  }

  std::size_t size() const { return arguments_.size(); }

  friend bool operator==(const Fas&, const Fas&) = default;

 private:
  std::map<ArgumentId, Degree> arguments_;
  std::map<std::pair<ArgumentId, ArgumentId>, Degree> attacks_;
};

// Att(a): attackers with nonzero initial degree attacking through a nonzero
// weight.
inline std::set<ArgumentId> attackers(const Fas& fas, const ArgumentId& a) {
  if (!fas.has_argument(a)) throw DomainError("unknown argument '" + a + "'");
  std::set<ArgumentId> out;
  for (const auto& [edge, weight] : fas.attacks())
    if (edge.second == a && !fas.initial(edge.first).is_zero())
      out.insert(edge.first);
  return out;
}

// Intensity of one fuzzy argument's attack under the Godel t-norm.
inline Degree attack_intensity(const Degree& attacker, const Degree& weight) {
  return tnorm(attacker, weight);
}

// Strongest attack a fuzzy set mounts against `a`; zero when Att(a) is empty.
inline Degree joint_attack_intensity(const Fas& fas, const FuzzySet& s,
                                     const ArgumentId& a) {
  Degree best = Degree::zero();
  for (const auto& attacker : attackers(fas, a))
    best = dmax(best, tnorm(s.at(attacker), fas.attack_weight(attacker, a)));
  return best;
}

// Tolerable iff the attack intensity plus the target degree stays within 1.
inline AttackClass classify_attack(const Degree& attacker, const Degree& weight,
                                   const Degree& target) {
  const Rat sum = tnorm(attacker, weight).value() + target.value();
  return sum <= Rat::integer(1) ? AttackClass::Tolerable : AttackClass::Sufficient;
}

// Renames every argument through a bijection, keeping degrees and weights.
inline Fas apply_isomorphism(const Fas& fas,
                             const std::map<ArgumentId, ArgumentId>& f) {
  std::set<ArgumentId> images;
  Fas out;
  for (const auto& [name, degree] : fas.arguments()) {
    const auto it = f.find(name);
    if (it == f.end())
      throw DomainError("isomorphism undefined on argument '" + name + "'");
    if (!images.insert(it->second).second)
      throw DomainError("isomorphism not injective at '" + it->second + "'");
    out.add_argument(it->second, degree);
  }
  for (const auto& [edge, weight] : fas.attacks())
    out.add_attack(f.at(edge.first), f.at(edge.second), weight);
  return out;
}

struct LabelTriple {
  Degree a;
  Degree r;
  Degree u;

  friend bool operator==(const LabelTriple&, const LabelTriple&) = default;
  friend std::strong_ordering operator<=>(const LabelTriple&, const LabelTriple&) = default;
};

// Total assignment of (acceptability, rejectability, undecidability) degrees.
// No structural constraint ties the three components together; postulate
// checks do that separately.
class FuzzyLabeling {
 public:
  void set(const ArgumentId& name, const LabelTriple& triple) {
    triples_.insert_or_assign(name, triple);
  }

  const LabelTriple& at(const ArgumentId& name) const {
    const auto it = triples_.find(name);
    if (it == triples_.end())
      throw DomainError("labeling undefined on argument '" + name + "'");
    return it->second;
  }

  bool contains(const ArgumentId& name) const { return triples_.contains(name); }
  std::size_t size() const { return triples_.size(); }
  const std::map<ArgumentId, LabelTriple>& triples() const { return triples_; }

  FuzzySet acceptability_part() const { return part(&LabelTriple::a); }
  FuzzySet rejectability_part() const { return part(&LabelTriple::r); }
  FuzzySet undecidability_part() const { return part(&LabelTriple::u); }

  void require_total(const Fas& fas) const {
    for (const auto& [name, degree] : fas.arguments())
      if (!triples_.contains(name))
        throw DomainError("labeling not total: missing argument '" + name + "'");
    for (const auto& [name, triple] : triples_)
      if (!fas.has_argument(name))
        throw DomainError("labeling mentions unknown argument '" + name + "'");
  }

  friend bool operator==(const FuzzyLabeling&, const FuzzyLabeling&) = default;
  friend std::strong_ordering operator<=>(const FuzzyLabeling&,
                                          const FuzzyLabeling&) = default;

 private:
  FuzzySet part(Degree LabelTriple::* member) const {
    FuzzySet out;
    for (const auto& [name, triple] : triples_) out.set(name, triple.*member);
    return out;
  }

  std::map<ArgumentId, LabelTriple> triples_;
};

// l1 is `smaller' than l2: pointwise <= on both the acceptability and the
// rejectability parts; undecidability is not compared.
inline bool leq_labeling(const FuzzyLabeling& l1, const FuzzyLabeling& l2) {
  if (l1.size() != l2.size())
    throw DomainError("labelings over different argument sets");
  for (const auto& [name, triple] : l1.triples()) {
    if (!l2.contains(name))
      throw DomainError("labelings over different argument sets");
    const LabelTriple& other = l2.at(name);
    if (triple.a > other.a || triple.r > other.r) return false;
  }
  return true;
}

// Flat index-addressed snapshot of an FAS for solver loops: arguments in name
// order, nontrivial attacker adjacency precomputed.
class FasView {
 public:
  struct InAttack {
    int attacker;
    Degree weight;
  };

  explicit FasView(const Fas& fas) {
    names_.reserve(fas.size());
    for (const auto& [name, degree] : fas.arguments()) {
      index_.emplace(name, static_cast<int>(names_.size()));
      names_.push_back(name);
      initial_.push_back(degree);
    }
    incoming_.resize(names_.size());
    for (const auto& [edge, weight] : fas.attacks()) {
      const int from = index_.at(edge.first);
      const int to = index_.at(edge.second);
      if (!initial_[from].is_zero())
        incoming_[to].push_back({from, weight});
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<ArgumentId>& names() const { return names_; }
  const std::vector<Degree>& initial() const { return initial_; }
  const std::vector<InAttack>& incoming(std::size_t i) const { return incoming_[i]; }

  int index_of(const ArgumentId& name) const {
    const auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  // max_{B in Att(i)} min(accept_B, weight); zero over the empty set.
  Degree intensity_at(const std::vector<Degree>& accept, std::size_t i) const {
    Degree best = Degree::zero();
    for (const auto& in : incoming_[i])
      best = dmax(best, tnorm(accept[in.attacker], in.weight));
    return best;
  }

  // min_{B in Att(i)} max(reject_B, 1 - min(initial_B, weight)); one over the
  // empty set.
  Degree defense_bound_at(const std::vector<Degree>& reject, std::size_t i) const {
    Degree bound = Degree::one();
    for (const auto& in : incoming_[i]) {
      const Degree cap = complement(tnorm(initial_[in.attacker], in.weight));
      bound = dmin(bound, dmax(reject[in.attacker], cap));
    }
    return bound;
  }

  // The strict-defense value for argument i given the rejectability vector.
  Degree sdp_at(const std::vector<Degree>& reject, std::size_t i) const {
    return dmin(defense_bound_at(reject, i), initial_[i]);
  }

  std::vector<Degree> swp(const std::vector<Degree>& accept) const {
    std::vector<Degree> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = intensity_at(accept, i);
    return out;
  }

  std::vector<Degree> sdp(const std::vector<Degree>& reject) const {
    std::vector<Degree> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = sdp_at(reject, i);
    return out;
  }

  std::vector<Degree> labeling_part(const FuzzyLabeling& lab,
                                    Degree LabelTriple::* member) const {
    std::vector<Degree> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = lab.at(names_[i]).*member;
    return out;
  }

  FuzzyLabeling make_labeling(const std::vector<Degree>& accept,
                              const std::vector<Degree>& reject) const {
    FuzzyLabeling lab;
    for (std::size_t i = 0; i < size(); ++i) {
      const Degree u(Rat::integer(1) - accept[i].value() - reject[i].value());
      lab.set(names_[i], LabelTriple{accept[i], reject[i], u});
    }
    return lab;
  }

 private:
  std::vector<ArgumentId> names_;
  std::vector<Degree> initial_;
  std::vector<std::vector<InAttack>> incoming_;
  std::map<ArgumentId, int> index_;
};

}  // namespace flab
