#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pbij/finite_set.hpp"
#include "pbij/near_bijection.hpp"
#include "pbij/partial_bijection.hpp"

namespace pbij::oracle
{

// A map tabulated on [0, window). Entry n is f(n), or empty outside the
// domain. Once a table is built, every count below works from the entries and
// the tail shift alone by direct enumeration.
struct WindowTable
{
  Natural window = 0;
  Shift shift = 0;
  std::vector<std::optional<Natural>> entries;

  bool operator==(WindowTable const &) const = default;
};

// Throws WindowTooSmall if `window` is below the map's structural bound.
WindowTable materialize(PartialBijection const &f, Natural window);
WindowTable materialize(NearBijection const &f, Natural window);

FiniteNatSet domain_complement(WindowTable const &t);

// Values in [0, window - |shift|) that no entry reaches. Past that point
// every value is hit by a tail entry.
FiniteNatSet image_complement(WindowTable const &t);

std::int64_t oracle_index(WindowTable const &t);

// Entries sharing their value with another entry.
FiniteNatSet shared_points(WindowTable const &t);

// Brute-force |Ω_f'| - |f(Ω_f')| - |f(Ω)'| on a total table.
std::int64_t oracle_legacy_index(WindowTable const &t);

// |f(Ω_f)'| recounted from the table.
std::size_t oracle_monoset_image_complement_size(WindowTable const &t);

// Pointwise agreement of compose(g, f) with table-level composition on
// [0, window). Throws WindowTooSmall if `window` is below the bound of f, g
// or the composite.
bool oracle_compose_check(PartialBijection const &g,
                          PartialBijection const &f,
                          Natural window);

// True if `f` and the table agree on every entry.
bool agrees_pointwise(PartialBijection const &f, WindowTable const &t);

} // namespace pbij::oracle
