#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <variant>

#include "pbij/finite_set.hpp"

namespace pbij
{

using ExceptionMap = std::map<Natural, Natural>;

// A bijection f : A -> B between cofinite subsets of the naturals, restricted
// to maps that agree with n -> n + shift outside a finite set.
//
// The domain complement A' is `holes()`. Every other point n maps to
// `exceptions()[n]` if present and to n + shift otherwise. Values are kept
// canonical: no exception pair (a, b) has b == a + shift, so two objects
// compare equal exactly when they describe the same map.
class PartialBijection
{
public:
  // The identity on all naturals.
  PartialBijection() = default;

  // Validates raw data and strips redundant exceptions. Throws Error with
  // HoleExceptionOverlap, NegativeValue or NotInjective.
  static PartialBijection make(Shift shift,
                               FiniteNatSet holes,
                               ExceptionMap exceptions = {});

  static PartialBijection identity()
  { return {}; }

  // The pure shift n -> n + k. For k < 0 the points {0, ..., -k - 1} are
  // removed from the domain.
  static PartialBijection pure_shift(Shift k);

  Shift shift() const
  { return _shift; }

  FiniteNatSet const &holes() const
  { return _holes; }

  ExceptionMap const &exceptions() const
  { return _exceptions; }

  std::optional<Natural> apply(Natural n) const;

  // The unique n with f(n) == value, if value lies in the codomain.
  std::optional<Natural> preimage(Natural value) const;

  FiniteNatSet const &domain_complement() const
  { return _holes; }

  FiniteNatSet codomain_complement() const;

  // |A'| - |B'|
  std::int64_t index() const;

  // Removes `removed` from the domain.
  PartialBijection restrict(FiniteNatSet const &removed) const;

  // 1 + max({0} ∪ holes ∪ keys ∪ values) + 2|shift|. Both complements lie
  // below this bound and every point at or past it is a pure shift point.
  Natural structural_bound() const;

  bool operator==(PartialBijection const &) const = default;

private:
  Shift _shift = 0;
  FiniteNatSet _holes;
  ExceptionMap _exceptions;
};

// A partial bijection with empty domain and codomain complements.
class Permutation
{
public:
  Permutation() = default;

  // Throws NotPermutation if either complement of `f` is non-empty.
  explicit Permutation(PartialBijection f);

  static Permutation identity()
  { return {}; }

  static Permutation transposition(Natural a, Natural b);

  PartialBijection const &as_partial() const
  { return _inner; }

  Natural apply(Natural n) const
  { return *_inner.apply(n); }

  bool operator==(Permutation const &) const = default;

private:
  PartialBijection _inner;
};

struct Infinite
{
  bool operator==(Infinite const &) const = default;
};

// Either the exact finite set of common-domain points where two maps differ,
// or Infinite.
using DisagreementSet = std::variant<FiniteNatSet, Infinite>;

DisagreementSet disagreement_set(PartialBijection const &f,
                                 PartialBijection const &g);

// f and g agree on a cofinite subset of their common domain.
bool almost_equal(PartialBijection const &f, PartialBijection const &g);

} // namespace pbij
