#include <gtest/gtest.h>

#include "corpus.hpp"
#include "pbij/algebra.hpp"
#include "pbij/error.hpp"
#include "pbij/near_bijection.hpp"
#include "pbij/oracle.hpp"

using namespace pbij;
using test_support::Corpus;

namespace
{

// f(0) = f(1) = 0, identity elsewhere
NearBijection const collapse = NearBijection::make({0, 0}, 0);
NearBijection const id = NearBijection::make({}, 0);
// f(0) = 3, n -> n + 1 for n >= 1; collides with f(2) = 3
NearBijection const bump = NearBijection::make({3}, 1);

} // namespace

TEST(NearBijection, Make)
{
  EXPECT_EQ(bump.threshold(), 1u);
  EXPECT_EQ(bump.apply(0), 3u);
  EXPECT_EQ(bump.apply(2), 3u);
  EXPECT_NO_THROW(NearBijection::make({5, 6}, -2));
  EXPECT_THROW(NearBijection::make({5}, -2), Error);
  EXPECT_EQ(collapse.structural_bound(), 3u);
  EXPECT_EQ(bump.structural_bound(), 7u);
}

TEST(NearBijection, MonosetComplement)
{
  EXPECT_EQ(monoset_complement(collapse), (FiniteNatSet{0, 1}));
  EXPECT_TRUE(monoset_complement(id).empty());
  EXPECT_EQ(monoset_complement(bump), (FiniteNatSet{0, 2}));

  // brute force at W = 8
  EXPECT_EQ(oracle::shared_points(oracle::materialize(collapse, 8)), (FiniteNatSet{0, 1}));
  EXPECT_EQ(oracle::shared_points(oracle::materialize(bump, 8)), (FiniteNatSet{0, 2}));
}

TEST(NearBijection, RangeComplement)
{
  EXPECT_EQ(range_complement(collapse), FiniteNatSet{1});
  EXPECT_TRUE(range_complement(id).empty());
  EXPECT_EQ(range_complement(bump), (FiniteNatSet{0, 1}));
  EXPECT_EQ(oracle::image_complement(oracle::materialize(bump, 8)), (FiniteNatSet{0, 1}));
}

TEST(NearBijection, LegacyIndex)
{
  EXPECT_EQ(legacy_index(collapse), 0);
  EXPECT_EQ(legacy_index(id), 0);
  EXPECT_EQ(legacy_index(bump), -1);
  EXPECT_EQ(oracle::oracle_legacy_index(oracle::materialize(collapse, 8)), 0);
  EXPECT_EQ(oracle::oracle_legacy_index(oracle::materialize(bump, 8)), -1);
}

TEST(NearBijection, RestrictToPartial)
{
  auto r = restrict_to_partial(collapse);
  EXPECT_EQ(r, PartialBijection::make(0, {0, 1}));
  EXPECT_EQ(r.index(), 0);

  EXPECT_EQ(restrict_to_partial(id), PartialBijection::identity());

  auto rb = restrict_to_partial(bump);
  EXPECT_EQ(rb.holes(), (FiniteNatSet{0, 2}));
  EXPECT_EQ(rb.codomain_complement(), (FiniteNatSet{0, 1, 3}));
  EXPECT_EQ(rb.index(), -1);
}

TEST(NearBijection, Reconciliation)
{
  EXPECT_TRUE(reconciliation_check(collapse));
  EXPECT_TRUE(reconciliation_check(id));
  EXPECT_TRUE(reconciliation_check(bump));
  EXPECT_EQ(restrict_to_partial(bump).codomain_complement().size(), 3u);
}

TEST(NearBijectionProperty, AgreesWithOracle)
{
  Corpus corpus(41);
  for (int i = 0; i < 1000; ++i) {
    auto f = corpus.near_bijection();
    auto w = f.structural_bound();
    for (auto window : {w, 2 * w}) {
      auto t = oracle::materialize(f, window);
      ASSERT_EQ(oracle::shared_points(t), monoset_complement(f));
      ASSERT_EQ(oracle::image_complement(t), range_complement(f));
      ASSERT_EQ(oracle::oracle_legacy_index(t), legacy_index(f));
      ASSERT_EQ(oracle::oracle_monoset_image_complement_size(t),
                restrict_to_partial(f).codomain_complement().size());
    }
  }
}

TEST(NearBijectionProperty, IndexAgreement)
{
  Corpus corpus(42);
  for (int i = 0; i < 1000; ++i) {
    auto f = corpus.near_bijection();
    auto r = restrict_to_partial(f);
    ASSERT_EQ(legacy_index(f), r.index());
    ASSERT_TRUE(reconciliation_check(f));

    // restriction keeps values on the monoset
    for (Natural n = 0; n < f.structural_bound(); ++n) {
      if (auto v = r.apply(n))
        ASSERT_EQ(*v, f.apply(n));
    }

    bool extends = true;
    try {
      extend_to_permutation(r);
    } catch (Error const &) {
      extends = false;
    }
    ASSERT_EQ(legacy_index(f) == 0, extends);
  }
}

TEST(NearBijectionProperty, ComplementsStayBelowBound)
{
  Corpus corpus(43);
  for (int i = 0; i < 1000; ++i) {
    auto f = corpus.near_bijection();
    Natural top = 0;
    for (Natural v : f.prefix())
      top = std::max(top, v);
    Natural magnitude = f.shift() < 0 ? -f.shift() : f.shift();
    Natural bound = f.threshold() + magnitude + top + 1;
    for (Natural n : monoset_complement(f))
      ASSERT_LT(n, bound);
    for (Natural n : range_complement(f))
      ASSERT_LT(n, bound);
  }
}
