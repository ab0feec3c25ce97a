#include "pbij/partial_bijection.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pbij/error.hpp"

namespace pbij
{

namespace
{

std::optional<Natural> offset(Natural n, Shift k)
{
  if (k < 0 && n < static_cast<Natural>(-k))
    return std::nullopt;
  return n + static_cast<Natural>(k);
}

Natural magnitude(Shift k)
{ return k < 0 ? static_cast<Natural>(-(k + 1)) + 1 : static_cast<Natural>(k); }

} // namespace

PartialBijection PartialBijection::make(Shift shift,
                                        FiniteNatSet holes,
                                        ExceptionMap exceptions)
{
  for (auto const &[key, value] : exceptions) {
    if (holes.contains(key))
      throw Error(ErrorCode::HoleExceptionOverlap,
                  "point " + std::to_string(key) + " is both a hole and an exception key");
  }

  auto is_tail_point = [&](Natural n) {
    return !holes.contains(n) && !exceptions.contains(n);
  };

  if (shift < 0) {
    // every point below -shift must be a hole or an exception key
    Natural const floor = magnitude(shift);
    Natural covered = 0;
    for (Natural h : holes)
      covered += h < floor;
    for (auto const &[key, value] : exceptions)
      covered += key < floor;

    if (covered != floor) {
      Natural n = 0;
      while (!is_tail_point(n))
        ++n;
      throw Error(ErrorCode::NegativeValue,
                  "point " + std::to_string(n) + " would map to " +
                    std::to_string(static_cast<Shift>(n) + shift));
    }
  }

  std::set<Natural> seen;
  for (auto const &[key, value] : exceptions) {
    if (!seen.insert(value).second)
      throw Error(ErrorCode::NotInjective,
                  "value " + std::to_string(value) + " is taken by two exception keys");

    auto tail_preimage = offset(value, -shift);
    if (tail_preimage && is_tail_point(*tail_preimage))
      throw Error(ErrorCode::NotInjective,
                  "exception " + std::to_string(key) + " -> " + std::to_string(value) +
                    " collides with tail point " + std::to_string(*tail_preimage));
  }

  std::erase_if(exceptions, [shift](auto const &kv) {
    return offset(kv.first, shift) == kv.second;
  });

  PartialBijection res;
  res._shift = shift;
  res._holes = std::move(holes);
  res._exceptions = std::move(exceptions);
  return res;
}

PartialBijection PartialBijection::pure_shift(Shift k)
{
  if (k >= 0)
    return make(k, {});
  return make(k, FiniteNatSet::range(0, magnitude(k)));
}

std::optional<Natural> PartialBijection::apply(Natural n) const
{
  if (_holes.contains(n))
    return std::nullopt;

  if (auto it = _exceptions.find(n); it != _exceptions.end())
    return it->second;

  return offset(n, _shift);
}

std::optional<Natural> PartialBijection::preimage(Natural value) const
{
  for (auto const &[key, v] : _exceptions) {
    if (v == value)
      return key;
  }

  auto candidate = offset(value, -_shift);
  if (!candidate || _holes.contains(*candidate) || _exceptions.contains(*candidate))
    return std::nullopt;
  return candidate;
}

FiniteNatSet PartialBijection::codomain_complement() const
{
  // A value is missed iff it is not an exception value and its tail
  // preimage is negative, a hole or an exception key.
  std::vector<Natural> candidates;
  for (Natural v = 0; _shift > 0 && v < static_cast<Natural>(_shift); ++v)
    candidates.push_back(v);

  auto add_offset = [&](Natural n) {
    if (auto v = offset(n, _shift))
      candidates.push_back(*v);
  };
  for (Natural h : _holes)
    add_offset(h);
  for (auto const &[key, value] : _exceptions)
    add_offset(key);

  std::vector<Natural> values;
  for (auto const &[key, value] : _exceptions)
    values.push_back(value);

  return set_difference(FiniteNatSet(std::move(candidates)),
                        FiniteNatSet(std::move(values)));
}

std::int64_t PartialBijection::index() const
{
  return static_cast<std::int64_t>(_holes.size()) -
         static_cast<std::int64_t>(codomain_complement().size());
}

PartialBijection PartialBijection::restrict(FiniteNatSet const &removed) const
{
  PartialBijection res = *this;
  res._holes = set_union(_holes, removed);
  std::erase_if(res._exceptions, [&](auto const &kv) {
    return removed.contains(kv.first);
  });
  return res;
}

Natural PartialBijection::structural_bound() const
{
  Natural top = 0;
  if (!_holes.empty())
    top = std::max(top, _holes.max());
  for (auto const &[key, value] : _exceptions)
    top = std::max({top, key, value});

  return 1 + top + 2 * magnitude(_shift);
}

Permutation::Permutation(PartialBijection f)
  : _inner(std::move(f))
{
  if (!_inner.holes().empty() || !_inner.codomain_complement().empty())
    throw Error(ErrorCode::NotPermutation,
                "map has index " + std::to_string(_inner.index()) +
                  " and a non-empty domain or codomain complement");
}

Permutation Permutation::transposition(Natural a, Natural b)
{
  if (a == b)
    return identity();
  return Permutation(PartialBijection::make(0, {}, {{a, b}, {b, a}}));
}

DisagreementSet disagreement_set(PartialBijection const &f,
                                 PartialBijection const &g)
{
  if (f.shift() != g.shift())
    return Infinite{};

  // Off the exception keys both maps are n -> n + shift.
  std::vector<Natural> res;
  auto check = [&](Natural n) {
    if (f.holes().contains(n) || g.holes().contains(n))
      return;
    if (f.apply(n) != g.apply(n))
      res.push_back(n);
  };
  for (auto const &[key, value] : f.exceptions())
    check(key);
  for (auto const &[key, value] : g.exceptions())
    check(key);

  return FiniteNatSet(std::move(res));
}

bool almost_equal(PartialBijection const &f, PartialBijection const &g)
{ return f.shift() == g.shift(); }

} // namespace pbij
