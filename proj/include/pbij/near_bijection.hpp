#pragma once

#include <cstdint>
#include <vector>

#include "pbij/finite_set.hpp"
#include "pbij/partial_bijection.hpp"

namespace pbij
{

// A total self-map of the naturals given by a finite prefix table
// f(0), ..., f(T - 1) and an eventual shift f(n) = n + k for n >= T.
class NearBijection
{
public:
  NearBijection() = default;

  // Throws NegativeValue if T + k < 0.
  static NearBijection make(std::vector<Natural> prefix, Shift shift);

  std::vector<Natural> const &prefix() const
  { return _prefix; }

  Shift shift() const
  { return _shift; }

  Natural threshold() const
  { return _prefix.size(); }

  Natural apply(Natural n) const;

  // 1 + max(T, max prefix value + 1) + 2|k|
  Natural structural_bound() const;

  bool operator==(NearBijection const &) const = default;

private:
  std::vector<Natural> _prefix;
  Shift _shift = 0;
};

// Points whose value is shared with some other point.
FiniteNatSet monoset_complement(NearBijection const &f);

FiniteNatSet range_complement(NearBijection const &f);

// |Ω_f'| - |f(Ω_f')| - |f(Ω)'|
std::int64_t legacy_index(NearBijection const &f);

// f restricted to its monoset, as a bijection onto f(Ω_f).
PartialBijection restrict_to_partial(NearBijection const &f);

// Checks |f(Ω_f)'| == |f(Ω)'| + |f(Ω_f')|, with each term counted separately.
bool reconciliation_check(NearBijection const &f);

} // namespace pbij
