#include "pbij/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pbij/algebra.hpp"
#include "pbij/error.hpp"

namespace pbij::oracle
{

namespace
{

void require_window(Natural window, Natural bound)
{
  if (window < bound)
    throw Error(ErrorCode::WindowTooSmall,
                "window " + std::to_string(window) + " is below the structural bound " +
                  std::to_string(bound));
}

Natural magnitude(Shift k)
{ return k < 0 ? static_cast<Natural>(-(k + 1)) + 1 : static_cast<Natural>(k); }

Natural shifted(Natural n, Shift k)
{ return k >= 0 ? n + static_cast<Natural>(k) : n - magnitude(k); }

// Values whose every possible preimage lies inside the table.
Natural decidable_limit(WindowTable const &t)
{
  auto m = magnitude(t.shift);
  return t.window > m ? t.window - m : 0;
}

std::map<Natural, std::size_t> value_counts(WindowTable const &t)
{
  std::map<Natural, std::size_t> counts;
  for (auto const &e : t.entries) {
    if (e)
      ++counts[*e];
  }
  return counts;
}

} // namespace

WindowTable materialize(PartialBijection const &f, Natural window)
{
  require_window(window, f.structural_bound());

  WindowTable t{window, f.shift(), {}};
  t.entries.reserve(window);
  for (Natural n = 0; n < window; ++n) {
    if (f.holes().contains(n))
      t.entries.emplace_back();
    else if (auto it = f.exceptions().find(n); it != f.exceptions().end())
      t.entries.emplace_back(it->second);
    else
      t.entries.emplace_back(shifted(n, f.shift()));
  }
  return t;
}

WindowTable materialize(NearBijection const &f, Natural window)
{
  require_window(window, f.structural_bound());

  WindowTable t{window, f.shift(), {}};
  t.entries.reserve(window);
  for (Natural n = 0; n < window; ++n) {
    if (n < f.prefix().size())
      t.entries.emplace_back(f.prefix()[n]);
    else
      t.entries.emplace_back(shifted(n, f.shift()));
  }
  return t;
}

FiniteNatSet domain_complement(WindowTable const &t)
{
  std::vector<Natural> res;
  for (Natural n = 0; n < t.window; ++n) {
    if (!t.entries[n])
      res.push_back(n);
  }
  return FiniteNatSet(std::move(res));
}

FiniteNatSet image_complement(WindowTable const &t)
{
  auto counts = value_counts(t);
  std::vector<Natural> res;
  for (Natural v = 0; v < decidable_limit(t); ++v) {
    if (!counts.contains(v))
      res.push_back(v);
  }
  return FiniteNatSet(std::move(res));
}

std::int64_t oracle_index(WindowTable const &t)
{
  return static_cast<std::int64_t>(domain_complement(t).size()) -
         static_cast<std::int64_t>(image_complement(t).size());
}

FiniteNatSet shared_points(WindowTable const &t)
{
  auto counts = value_counts(t);
  std::vector<Natural> res;
  for (Natural n = 0; n < t.window; ++n) {
    if (t.entries[n] && counts[*t.entries[n]] >= 2)
      res.push_back(n);
  }
  return FiniteNatSet(std::move(res));
}

std::int64_t oracle_legacy_index(WindowTable const &t)
{
  auto shared = shared_points(t);
  std::vector<Natural> shared_values;
  for (Natural n : shared)
    shared_values.push_back(*t.entries[n]);

  return static_cast<std::int64_t>(shared.size()) -
         static_cast<std::int64_t>(FiniteNatSet(std::move(shared_values)).size()) -
         static_cast<std::int64_t>(image_complement(t).size());
}

std::size_t oracle_monoset_image_complement_size(WindowTable const &t)
{
  auto shared = shared_points(t);
  WindowTable monoset = t;
  for (Natural n : shared)
    monoset.entries[n].reset();
  return image_complement(monoset).size();
}

bool oracle_compose_check(PartialBijection const &g,
                          PartialBijection const &f,
                          Natural window)
{
  require_window(window, g.structural_bound());
  auto composite = compose(g, f);
  require_window(window, composite.structural_bound());

  auto tf = materialize(f, window);
  Natural reach = g.structural_bound();
  for (auto const &e : tf.entries) {
    if (e)
      reach = std::max(reach, *e + 1);
  }
  auto tg = materialize(g, std::max(window, reach));
  auto tr = materialize(composite, window);

  for (Natural n = 0; n < window; ++n) {
    std::optional<Natural> expected;
    if (tf.entries[n])
      expected = tg.entries[*tf.entries[n]];
    if (expected != tr.entries[n])
      return false;
  }
  return true;
}

bool agrees_pointwise(PartialBijection const &f, WindowTable const &t)
{
  for (Natural n = 0; n < t.window; ++n) {
    if (f.apply(n) != t.entries[n])
      return false;
  }
  return true;
}

} // namespace pbij::oracle
