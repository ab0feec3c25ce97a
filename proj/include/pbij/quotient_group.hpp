#pragma once

#include <cstdint>

#include "pbij/partial_bijection.hpp"

namespace pbij
{

// An almost-equality class of eventual-shift maps. Two such maps are almost
// equal exactly when their shifts agree, so the class is its shift and the
// canonical representative is the pure shift.
struct GermClass
{
  Shift shift = 0;

  PartialBijection representative() const
  { return PartialBijection::pure_shift(shift); }

  bool operator==(GermClass const &) const = default;
};

GermClass class_of(PartialBijection const &f);

// [g][f] = [g ∘ f]
GermClass class_mul(GermClass a, GermClass b);

GermClass class_inv(GermClass a);

GermClass class_identity();

// a^n, with negative powers through the inverse.
GermClass class_pow(GermClass a, std::int64_t n);

// The index homomorphism on classes: minus the shift.
std::int64_t class_index(GermClass a);

// [u] for u : n -> n + 1, a generator of index -1.
GermClass unit_shift_class();

// n -> [u]^-n, a homomorphic section of class_index.
GermClass section(std::int64_t n);

} // namespace pbij
