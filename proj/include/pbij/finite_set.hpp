#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace pbij
{

using Natural = std::uint64_t;
using Shift = std::int64_t;

// A finite set of naturals stored as a strictly increasing sequence, so that
// structural equality is set equality.
class FiniteNatSet
{
public:
  using const_iterator = std::vector<Natural>::const_iterator;

  FiniteNatSet() = default;

  // Sorts and removes duplicates.
  FiniteNatSet(std::initializer_list<Natural> elems);
  explicit FiniteNatSet(std::vector<Natural> elems);

  // Throws ParseError unless `elems` is strictly increasing.
  static FiniteNatSet from_sorted(std::vector<Natural> elems);

  // {lo, lo + 1, ..., hi - 1}
  static FiniteNatSet range(Natural lo, Natural hi);

  std::size_t size() const
  { return _elems.size(); }

  bool empty() const
  { return _elems.empty(); }

  bool contains(Natural n) const;

  // Largest element; the set must be non-empty.
  Natural max() const
  { return _elems.back(); }

  std::span<Natural const> elements() const
  { return _elems; }

  const_iterator begin() const
  { return _elems.begin(); }

  const_iterator end() const
  { return _elems.end(); }

  bool operator==(FiniteNatSet const &) const = default;

private:
  std::vector<Natural> _elems;
};

FiniteNatSet set_union(FiniteNatSet const &x, FiniteNatSet const &y);
FiniteNatSet set_difference(FiniteNatSet const &x, FiniteNatSet const &y);
FiniteNatSet set_intersection(FiniteNatSet const &x, FiniteNatSet const &y);

// |x \ y| + |y| == |y \ x| + |x|; both sides count x ∪ y, so this always
// holds. Each side is computed from its own difference.
bool card_identity_check(FiniteNatSet const &x, FiniteNatSet const &y);

} // namespace pbij
