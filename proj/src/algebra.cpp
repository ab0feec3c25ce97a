#include "pbij/algebra.hpp"

#include <string>
#include <vector>

#include "pbij/error.hpp"

namespace pbij
{

PartialBijection compose(PartialBijection const &g, PartialBijection const &f)
{
  // Outside `interesting`, n is a tail point of f whose image is a tail
  // point of g, so the composite is n -> n + shift_f + shift_g there.
  std::vector<Natural> interesting(f.holes().begin(), f.holes().end());
  for (auto const &[key, value] : f.exceptions())
    interesting.push_back(key);

  auto pull_back = [&](Natural v) {
    if (auto n = f.preimage(v))
      interesting.push_back(*n);
  };
  for (Natural h : g.holes())
    pull_back(h);
  for (auto const &[key, value] : g.exceptions())
    pull_back(key);

  std::vector<Natural> holes;
  ExceptionMap exceptions;
  for (Natural n : FiniteNatSet(std::move(interesting))) {
    auto mid = f.apply(n);
    auto out = mid ? g.apply(*mid) : std::nullopt;
    if (out)
      exceptions.emplace(n, *out);
    else
      holes.push_back(n);
  }

  return PartialBijection::make(f.shift() + g.shift(),
                                FiniteNatSet(std::move(holes)),
                                std::move(exceptions));
}

PartialBijection inverse(PartialBijection const &f)
{
  ExceptionMap swapped;
  for (auto const &[key, value] : f.exceptions())
    swapped.emplace(value, key);

  return PartialBijection::make(-f.shift(), f.codomain_complement(), std::move(swapped));
}

std::pair<PartialBijection, PartialBijection>
sandwich_identities(PartialBijection const &f)
{
  auto inv = inverse(f);
  return {compose(inv, f), compose(f, inv)};
}

Permutation extend_to_permutation(PartialBijection const &f)
{
  if (auto ind = f.index(); ind != 0)
    throw Error(ErrorCode::NonZeroIndex,
                "map has index " + std::to_string(ind) + ", only index 0 extends");

  auto codomain_holes = f.codomain_complement();
  ExceptionMap exceptions = f.exceptions();
  auto target = codomain_holes.begin();
  for (Natural h : f.holes())
    exceptions.emplace(h, *target++);

  return Permutation(PartialBijection::make(f.shift(), {}, std::move(exceptions)));
}

std::int64_t permutation_sandwich_index(PartialBijection const &f,
                                        Permutation const &p,
                                        Side side)
{
  auto const &pi = p.as_partial();
  return side == Side::Left ? compose(pi, f).index() : compose(f, pi).index();
}

namespace
{

void require_equal_index(PartialBijection const &f, PartialBijection const &g)
{
  auto fi = f.index();
  auto gi = g.index();
  if (fi != gi)
    throw Error(ErrorCode::IndexMismatch,
                "indices differ: " + std::to_string(fi) + " vs " + std::to_string(gi));
}

} // namespace

Permutation factor_left(PartialBijection const &f, PartialBijection const &g)
{
  require_equal_index(f, g);
  return extend_to_permutation(compose(g, inverse(f)));
}

Permutation factor_right(PartialBijection const &f, PartialBijection const &g)
{
  require_equal_index(f, g);
  return extend_to_permutation(compose(inverse(f), g));
}

} // namespace pbij
