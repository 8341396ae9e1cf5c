#include "flab/extensions.hpp"

#include <gtest/gtest.h>

#include "flab/principles.hpp"
#include "instances.hpp"

namespace flab {
namespace {

using testing::chain_fas;
using testing::chain_lab2;
using testing::cycle_fas;
using testing::cycle_lab1;
using testing::cycle_lab3;
using testing::deg;
using testing::labeling_of;
using testing::single_fas;

FExtension ext_of(std::initializer_list<std::pair<ArgumentId, std::string>> items) {
  FExtension out;
  for (const auto& [name, degree] : items) out.degrees.set(name, deg(degree));
  return out;
}

TEST(Weaken, SufficientAttacksOnly) {
  EXPECT_EQ(weaken(deg("0.8"), deg("1"), deg("0.6")), deg("0.2"));
  EXPECT_EQ(weaken(deg("0.5"), deg("1"), deg("0.8")), deg("0.5"));
  EXPECT_EQ(weaken(deg("1"), deg("1"), deg("1")), deg("0"));
  // min(0.2, 1) + 0.8 = 1 is tolerable, so weakening is undefined
  EXPECT_THROW(weaken(deg("0.2"), deg("1"), deg("0.8")), DomainError);
}

TEST(WeakeningDefends, Examples) {
  EXPECT_TRUE(weakening_defends(cycle_fas(), ext_of({{"a", "0.8"}}), "a", deg("0.8")));
  EXPECT_FALSE(weakening_defends(chain_fas(), FExtension{}, "c", deg("0.6")));
  EXPECT_TRUE(weakening_defends(chain_fas(), FExtension{}, "a", deg("0.8")));
  EXPECT_THROW(weakening_defends(chain_fas(), FExtension{}, "ghost", deg("0.1")),
               DomainError);
}

TEST(CheckFExtension, Examples) {
  EXPECT_TRUE(check_fextension(cycle_fas(), ext_of({{"a", "0.8"}, {"b", "0.2"}}),
                               FExtensionKind::AdmissibleFExt));
  EXPECT_TRUE(check_fextension(cycle_fas(), ext_of({{"a", "0.4"}, {"b", "0.2"}}),
                               FExtensionKind::CompleteFExt));
  EXPECT_TRUE(check_fextension(cycle_fas(), FExtension{},
                               FExtensionKind::ConflictFreeFSet));
  // below the largest defended degree: not complete
  EXPECT_FALSE(check_fextension(cycle_fas(), FExtension{},
                                FExtensionKind::CompleteFExt));
  EXPECT_TRUE(check_fextension(cycle_fas(), ext_of({{"a", "0.8"}, {"b", "0.2"}}),
                               FExtensionKind::StableFExt));
  EXPECT_FALSE(check_fextension(cycle_fas(), ext_of({{"a", "0.8"}}),
                                FExtensionKind::StableFExt));
  EXPECT_THROW(check_fextension(cycle_fas(), ext_of({{"a", "0.9"}}),
                                FExtensionKind::AdmissibleFExt),
               DomainError);
  EXPECT_THROW(check_fextension(cycle_fas(), FExtension{},
                                FExtensionKind::PreferredFExt),
               DomainError);
}

TEST(EnumerateFExtensions, CycleGroundedPreferredStable) {
  const auto grounded =
      enumerate_fextensions(cycle_fas(), FExtensionKind::GroundedFExt);
  ASSERT_EQ(grounded.size(), 1u);
  EXPECT_EQ(grounded[0], ext_of({{"a", "0.4"}, {"b", "0.2"}}));

  const auto preferred =
      enumerate_fextensions(cycle_fas(), FExtensionKind::PreferredFExt);
  const auto stable = enumerate_fextensions(cycle_fas(), FExtensionKind::StableFExt);
  const std::vector<FExtension> expected{ext_of({{"a", "0.4"}, {"b", "0.6"}}),
                                         ext_of({{"a", "0.6"}, {"b", "0.4"}}),
                                         ext_of({{"a", "0.8"}, {"b", "0.2"}})};
  EXPECT_EQ(preferred, expected);
  EXPECT_EQ(stable, expected);
}

TEST(EnumerateFExtensions, SingleArgumentComplete) {
  const auto complete =
      enumerate_fextensions(single_fas(), FExtensionKind::CompleteFExt);
  ASSERT_EQ(complete.size(), 1u);
  EXPECT_EQ(complete[0], ext_of({{"a", "0.8"}}));
  EXPECT_THROW(enumerate_fextensions(single_fas(), FExtensionKind::ConflictFreeFSet),
               DomainError);
}

TEST(ExtToFlab, Examples) {
  EXPECT_EQ(ext_to_flab(cycle_fas(), ext_of({{"a", "0.8"}, {"b", "0.2"}})),
            cycle_lab1());
  EXPECT_EQ(ext_to_flab(chain_fas(),
                        ext_of({{"a", "0.8"}, {"b", "0.2"}, {"c", "0.6"}})),
            chain_lab2());
  EXPECT_EQ(ext_to_flab(cycle_fas(), FExtension{}),
            labeling_of({{"a", "0", "0", "1"}, {"b", "0", "0", "1"}}));
  // residual would be negative at b: rejected
  EXPECT_THROW(ext_to_flab(cycle_fas(), ext_of({{"a", "0.8"}, {"b", "0.6"}})),
               DomainError);
}

TEST(FlabToExt, ProjectsTheAcceptabilityPart) {
  EXPECT_EQ(flab_to_ext(chain_lab2()),
            ext_of({{"a", "0.8"}, {"b", "0.2"}, {"c", "0.6"}}));
  EXPECT_EQ(flab_to_ext(labeling_of({{"a", "0", "0", "1"}})), FExtension{});
  EXPECT_EQ(flab_to_ext(cycle_lab3()), ext_of({{"a", "0.4"}, {"b", "0.2"}}));
}

// The enumerator's closed-form completeness test must agree with the
// membership check, which scans defended degrees over the grid directly.
TEST(CheckFExtension, ClosedFormAgreesWithGridScan) {
  InstanceFamily family;
  family.seed = 41;
  family.count = 40;
  family.max_args = 3;
  for (std::size_t i = 0; i < family.count; ++i) {
    const Fas fas = random_fas(family, i);
    const auto complete = enumerate_fextensions(fas, FExtensionKind::CompleteFExt);
    const std::set<FExtension> complete_set(complete.begin(), complete.end());
    const FasView view(fas);
    const std::vector<Degree> grid = characteristic_values(fas);
    std::vector<std::vector<Degree>> domains(view.size());
    for (std::size_t k = 0; k < view.size(); ++k)
      domains[k] = detail::grid_between(grid, Degree::zero(), view.initial()[k]);
    detail::for_each_combination(domains, [&](const std::vector<Degree>& member) {
      FExtension ext;
      for (std::size_t k = 0; k < view.size(); ++k)
        ext.degrees.set(view.names()[k], member[k]);
      EXPECT_EQ(check_fextension(fas, ext, FExtensionKind::CompleteFExt),
                complete_set.contains(ext))
          << render_fas(fas) << render_extension(ext);
    });
  }
}

InstanceFamily bridge_family(std::uint64_t seed, std::size_t count) {
  InstanceFamily family;
  family.seed = seed;
  family.count = count;
  family.max_args = 3;
  return family;
}

TEST(Bridge, AdmissibleExtensionsMapToAdmissibleLabelings) {
  const InstanceFamily family = bridge_family(43, 60);
  for (std::size_t i = 0; i < family.count; ++i) {
    const Fas fas = random_fas(family, i);
    for (const auto& ext :
         enumerate_fextensions(fas, FExtensionKind::AdmissibleFExt)) {
      const FuzzyLabeling lab = ext_to_flab(fas, ext);
      EXPECT_TRUE(is_labeling(fas, lab, Semantics::Admissible)) << render_fas(fas);
      EXPECT_TRUE(is_labeling(fas, lab, Semantics::JvAdmissible)) << render_fas(fas);
      EXPECT_EQ(flab_to_ext(lab), ext);
    }
  }
}

TEST(Bridge, AdmissibleLabelingsMapToAdmissibleExtensions) {
  const InstanceFamily family = bridge_family(47, 25);
  for (std::size_t i = 0; i < family.count; ++i) {
    const Fas fas = random_fas(family, i);
    for (const auto& lab : solve(fas, Semantics::Admissible).labelings)
      EXPECT_TRUE(check_fextension(fas, flab_to_ext(lab),
                                   FExtensionKind::AdmissibleFExt))
          << render_fas(fas) << render_labeling(lab);
  }
}

TEST(Bridge, CompleteSetsCorrespondBijectively) {
  const InstanceFamily family = bridge_family(53, 60);
  for (std::size_t i = 0; i < family.count; ++i) {
    const Fas fas = random_fas(family, i);
    const auto complete_exts =
        enumerate_fextensions(fas, FExtensionKind::CompleteFExt);
    const LabelingSet complete_labs = enumerate_complete(fas);

    std::vector<FuzzyLabeling> mapped_labs;
    for (const auto& ext : complete_exts)
      mapped_labs.push_back(ext_to_flab(fas, ext));
    detail::canonicalize(mapped_labs);
    EXPECT_EQ(mapped_labs, complete_labs.labelings) << render_fas(fas);

    std::vector<FExtension> mapped_exts;
    for (const auto& lab : complete_labs.labelings)
      mapped_exts.push_back(flab_to_ext(lab));
    std::sort(mapped_exts.begin(), mapped_exts.end());
    EXPECT_EQ(mapped_exts, complete_exts) << render_fas(fas);
  }
}

TEST(Bridge, ConversionIsInverseOnJvAdmissibleLabelings) {
  const InstanceFamily family = bridge_family(59, 60);
  for (std::size_t i = 0; i < family.count; ++i) {
    const Fas fas = random_fas(family, i);
    for (const auto& lab : solve(fas, Semantics::JvAdmissible).labelings)
      EXPECT_EQ(ext_to_flab(fas, flab_to_ext(lab)), lab)
          << render_fas(fas) << render_labeling(lab);
    for (const auto& lab : enumerate_complete(fas).labelings)
      EXPECT_EQ(ext_to_flab(fas, flab_to_ext(lab)), lab) << render_fas(fas);
  }
}

TEST(Bridge, GroundedAndPreferredCorrespond) {
  const InstanceFamily family = bridge_family(61, 60);
  for (std::size_t i = 0; i < family.count; ++i) {
    const Fas fas = random_fas(family, i);

    std::vector<FuzzyLabeling> grounded_mapped;
    for (const auto& ext : enumerate_fextensions(fas, FExtensionKind::GroundedFExt))
      grounded_mapped.push_back(ext_to_flab(fas, ext));
    detail::canonicalize(grounded_mapped);
    EXPECT_EQ(grounded_mapped,
              select_extremal(fas, Semantics::Grounded).labelings)
        << render_fas(fas);

    std::vector<FuzzyLabeling> preferred_mapped;
    for (const auto& ext :
         enumerate_fextensions(fas, FExtensionKind::PreferredFExt))
      preferred_mapped.push_back(ext_to_flab(fas, ext));
    detail::canonicalize(preferred_mapped);
    EXPECT_EQ(preferred_mapped,
              select_extremal(fas, Semantics::Preferred).labelings)
        << render_fas(fas);
  }
}

// Over the continuum the stable and preferred f-extensions coincide; the
// characteristic grid keeps one inclusion but can miss the midpoint degrees
// an exact coincidence needs (a self-attack asks for s with s + s = 1, and
// {0, 1} has no such point). So: inclusion always, equality where the grid
// is rich enough.
TEST(Bridge, StableExtensionsArePreferredExtensions) {
  const InstanceFamily family = bridge_family(67, 80);
  for (std::size_t i = 0; i < family.count; ++i) {
    const Fas fas = random_fas(family, i);
    const auto preferred =
        enumerate_fextensions(fas, FExtensionKind::PreferredFExt);
    for (const auto& ext : enumerate_fextensions(fas, FExtensionKind::StableFExt))
      EXPECT_TRUE(std::find(preferred.begin(), preferred.end(), ext) !=
                  preferred.end())
          << render_fas(fas) << render_extension(ext);
  }
  EXPECT_EQ(enumerate_fextensions(cycle_fas(), FExtensionKind::StableFExt),
            enumerate_fextensions(cycle_fas(), FExtensionKind::PreferredFExt));
}

TEST(Bridge, GridCanLackStableWitnessesForPreferred) {
  Fas self_loop;
  self_loop.add_argument("a", deg("1"));
  self_loop.add_attack("a", "a", deg("1"));
  // the only grid degrees are 0 and 1; the continuum's stable point 0.5 is
  // not representable, so the preferred f-extension (the empty set) has no
  // stable counterpart
  EXPECT_TRUE(enumerate_fextensions(self_loop, FExtensionKind::StableFExt).empty());
  EXPECT_EQ(enumerate_fextensions(self_loop, FExtensionKind::PreferredFExt),
            std::vector<FExtension>{FExtension{}});
}

// Preferred f-extensions are defined as maximal admissible; whether those
// coincide with maximal complete on the grid is checked, not assumed.
TEST(Bridge, MaximalAdmissibleEqualsMaximalComplete) {
  const InstanceFamily family = bridge_family(71, 60);
  for (std::size_t i = 0; i < family.count; ++i) {
    const Fas fas = random_fas(family, i);
    const auto complete = enumerate_fextensions(fas, FExtensionKind::CompleteFExt);
    std::vector<FExtension> maximal_complete;
    for (const auto& candidate : complete) {
      bool maximal = true;
      for (const auto& other : complete)
        if (!(other == candidate) &&
            fs_subset(candidate.degrees, other.degrees)) {
          maximal = false;
          break;
        }
      if (maximal) maximal_complete.push_back(candidate);
    }
    EXPECT_EQ(enumerate_fextensions(fas, FExtensionKind::PreferredFExt),
              maximal_complete)
        << render_fas(fas);
  }
}

}  // namespace
}  // namespace flab
