#include <gtest/gtest.h>

#include "pbij/error.hpp"
#include "pbij/oracle.hpp"

using namespace pbij;
using namespace pbij::oracle;

namespace
{

PartialBijection const u = PartialBijection::make(1, {});
PartialBijection const hole_two = PartialBijection::make(0, {2}, {{7, 2}});
PartialBijection const shift_two = PartialBijection::make(2, {1}, {{0, 0}});

std::vector<std::optional<Natural>> table(std::initializer_list<std::optional<Natural>> e)
{ return e; }

} // namespace

TEST(Oracle, Materialize)
{
  EXPECT_EQ(materialize(u, 4).entries, table({1, 2, 3, 4}));
  EXPECT_EQ(materialize(hole_two, 9).entries,
            table({0, 1, std::nullopt, 3, 4, 5, 6, 2, 8}));
  EXPECT_THROW(materialize(PartialBijection::identity(), 0), Error);
  EXPECT_THROW(materialize(hole_two, 7), Error);
  EXPECT_EQ(materialize(NearBijection::make({0, 0}, 0), 4).entries, table({0, 0, 2, 3}));
}

TEST(Oracle, Index)
{
  EXPECT_EQ(oracle_index(materialize(u, 8)), -1);
  EXPECT_EQ(oracle_index(materialize(PartialBijection::identity(), 8)), 0);
  EXPECT_EQ(oracle_index(materialize(shift_two, 12)), -2);
  EXPECT_EQ(domain_complement(materialize(shift_two, 12)), FiniteNatSet{1});
  EXPECT_EQ(image_complement(materialize(shift_two, 12)), (FiniteNatSet{1, 2, 3}));
}

TEST(Oracle, ComposeCheck)
{
  auto id = PartialBijection::identity();
  EXPECT_TRUE(oracle_compose_check(id, hole_two, 8));
  EXPECT_TRUE(oracle_compose_check(u, u, 10));
  EXPECT_TRUE(oracle_compose_check(PartialBijection::make(0, {0, 5}), u, 16));
  // the composite u ∘ u has bound 5
  EXPECT_THROW(oracle_compose_check(u, u, 4), Error);
}

TEST(Oracle, StableUnderLargerWindows)
{
  for (auto const &f : {u, hole_two, shift_two, PartialBijection::pure_shift(-3)}) {
    auto w = f.structural_bound();
    for (auto window : {w, w + 1, 2 * w, 5 * w}) {
      auto t = materialize(f, window);
      EXPECT_EQ(oracle_index(t), f.index());
      EXPECT_EQ(image_complement(t), f.codomain_complement());
    }
  }
}
