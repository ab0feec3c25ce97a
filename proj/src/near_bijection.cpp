#include "pbij/near_bijection.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pbij/error.hpp"

namespace pbij
{

namespace
{

Natural magnitude(Shift k)
{ return k < 0 ? static_cast<Natural>(-(k + 1)) + 1 : static_cast<Natural>(k); }

// The tail point mapping to `value`, if there is one.
std::optional<Natural> tail_preimage(NearBijection const &f, Natural value)
{
  auto k = f.shift();
  if (k > 0 && value < static_cast<Natural>(k))
    return std::nullopt;

  Natural n = k >= 0 ? value - static_cast<Natural>(k) : value + magnitude(k);
  if (n < f.threshold())
    return std::nullopt;
  return n;
}

FiniteNatSet image_of(NearBijection const &f, FiniteNatSet const &points)
{
  std::vector<Natural> res;
  for (Natural n : points)
    res.push_back(f.apply(n));
  return FiniteNatSet(std::move(res));
}

} // namespace

NearBijection NearBijection::make(std::vector<Natural> prefix, Shift shift)
{
  if (shift < 0 && prefix.size() < magnitude(shift))
    throw Error(ErrorCode::NegativeValue,
                "tail point " + std::to_string(prefix.size()) + " would map to " +
                  std::to_string(static_cast<Shift>(prefix.size()) + shift));

  NearBijection res;
  res._prefix = std::move(prefix);
  res._shift = shift;
  return res;
}

Natural NearBijection::apply(Natural n) const
{
  if (n < threshold())
    return _prefix[n];
  return _shift >= 0 ? n + static_cast<Natural>(_shift) : n - magnitude(_shift);
}

Natural NearBijection::structural_bound() const
{
  Natural top = threshold();
  if (!_prefix.empty())
    top = std::max(top, *std::max_element(_prefix.begin(), _prefix.end()) + 1);
  return 1 + top + 2 * magnitude(_shift);
}

FiniteNatSet monoset_complement(NearBijection const &f)
{
  // Tail points are pairwise distinct in value, so every collision involves
  // a prefix value.
  std::map<Natural, std::size_t> multiplicity;
  for (Natural v : f.prefix())
    ++multiplicity[v];

  std::vector<Natural> res;
  for (auto const &[value, count] : multiplicity) {
    auto tail = tail_preimage(f, value);
    if (count + (tail ? 1 : 0) < 2)
      continue;

    for (Natural n = 0; n < f.threshold(); ++n) {
      if (f.prefix()[n] == value)
        res.push_back(n);
    }
    if (tail)
      res.push_back(*tail);
  }
  return FiniteNatSet(std::move(res));
}

FiniteNatSet range_complement(NearBijection const &f)
{
  // Tail values are exactly the naturals >= T + k.
  Natural const tail_start = f.apply(f.threshold());
  FiniteNatSet prefix_values(f.prefix());
  std::vector<Natural> res;
  for (Natural v = 0; v < tail_start; ++v) {
    if (!prefix_values.contains(v))
      res.push_back(v);
  }
  return FiniteNatSet(std::move(res));
}

std::int64_t legacy_index(NearBijection const &f)
{
  auto shared = monoset_complement(f);
  auto shared_image = image_of(f, shared);
  auto missed = range_complement(f);
  return static_cast<std::int64_t>(shared.size()) -
         static_cast<std::int64_t>(shared_image.size()) -
         static_cast<std::int64_t>(missed.size());
}

PartialBijection restrict_to_partial(NearBijection const &f)
{
  auto shared = monoset_complement(f);
  ExceptionMap exceptions;
  for (Natural n = 0; n < f.threshold(); ++n) {
    if (!shared.contains(n))
      exceptions.emplace(n, f.prefix()[n]);
  }
  return PartialBijection::make(f.shift(), shared, std::move(exceptions));
}

bool reconciliation_check(NearBijection const &f)
{
  auto monoset_image_missed = restrict_to_partial(f).codomain_complement().size();
  auto range_missed = range_complement(f).size();
  auto shared_image = image_of(f, monoset_complement(f)).size();
  return monoset_image_missed == range_missed + shared_image;
}

} // namespace pbij
