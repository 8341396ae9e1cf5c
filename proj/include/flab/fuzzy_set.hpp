#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "flab/degree.hpp"
#include "flab/errors.hpp"

namespace flab {

// Argument names are nonempty tokens over letters, digits and underscore;
// comparison is case-sensitive.
using ArgumentId = std::string;

// Finite fuzzy set of arguments. Zero-grade pairs are never stored; looking
// up an absent argument yields degree zero.
class FuzzySet {
 public:
  FuzzySet() = default;

  FuzzySet(std::initializer_list<std::pair<ArgumentId, Degree>> items) {
    for (const auto& [name, grade] : items) set(name, grade);
  }

  Degree at(const ArgumentId& x) const {
    const auto it = entries_.find(x);
    return it == entries_.end() ? Degree::zero() : it->second;
  }

  void set(const ArgumentId& x, const Degree& grade) {
    if (grade.is_zero())
      entries_.erase(x);
    else
      entries_.insert_or_assign(x, grade);
  }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  const std::map<ArgumentId, Degree>& entries() const { return entries_; }

  std::set<ArgumentId> support() const {
    std::set<ArgumentId> out;
    for (const auto& [name, grade] : entries_) out.insert(name);
    return out;
  }

  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;
  friend std::strong_ordering operator<=>(const FuzzySet&, const FuzzySet&) = default;

 private:
  std::map<ArgumentId, Degree> entries_;
};

// Pointwise max.
inline FuzzySet fs_union(const FuzzySet& s1, const FuzzySet& s2) {
  FuzzySet out = s1;
  for (const auto& [name, grade] : s2.entries())
    out.set(name, dmax(out.at(name), grade));
  return out;
}

// Pointwise min.
inline FuzzySet fs_intersect(const FuzzySet& s1, const FuzzySet& s2) {
  FuzzySet out;
  for (const auto& [name, grade] : s1.entries())
    out.set(name, dmin(grade, s2.at(name)));
  return out;
}

// Pointwise 1-x over a fixed universe; the set's support must lie inside it.
inline FuzzySet fs_complement(const FuzzySet& s, const std::set<ArgumentId>& universe) {
  for (const auto& [name, grade] : s.entries())
    if (!universe.contains(name))
      throw DomainError("complement: support member '" + name +
                        "' outside the universe");
  FuzzySet out;
  for (const auto& name : universe) out.set(name, complement(s.at(name)));
  return out;
}

// True iff s1(x) <= s2(x) everywhere.
inline bool fs_subset(const FuzzySet& s1, const FuzzySet& s2) {
  for (const auto& [name, grade] : s1.entries())
    if (grade > s2.at(name)) return false;
  return true;
}

}  // namespace flab
