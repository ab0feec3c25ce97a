#pragma once

#include <cstdint>
#include <utility>

#include "pbij/partial_bijection.hpp"

namespace pbij
{

// g after f. The domain is the f-preimage of B_f ∩ A_g and the codomain its
// image under g.
PartialBijection compose(PartialBijection const &g, PartialBijection const &f);

PartialBijection inverse(PartialBijection const &f);

// (f^-1 ∘ f, f ∘ f^-1): the identities on A_f and B_f.
std::pair<PartialBijection, PartialBijection>
sandwich_identities(PartialBijection const &f);

// Extends an index-zero map to a permutation, sending the i-th smallest
// domain hole to the i-th smallest codomain hole. Throws NonZeroIndex
// otherwise.
Permutation extend_to_permutation(PartialBijection const &f);

enum class Side
{
  Left,  // p ∘ f
  Right, // f ∘ p
};

std::int64_t permutation_sandwich_index(PartialBijection const &f,
                                        Permutation const &p,
                                        Side side);

// λ with λ ∘ f ≡ g. Throws IndexMismatch if the indices differ.
Permutation factor_left(PartialBijection const &f, PartialBijection const &g);

// ρ with f ∘ ρ ≡ g. Throws IndexMismatch if the indices differ.
Permutation factor_right(PartialBijection const &f, PartialBijection const &g);

} // namespace pbij
