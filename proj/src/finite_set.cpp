#include "pbij/finite_set.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "pbij/error.hpp"

namespace pbij
{

FiniteNatSet::FiniteNatSet(std::initializer_list<Natural> elems)
  : FiniteNatSet(std::vector<Natural>(elems))
{}

FiniteNatSet::FiniteNatSet(std::vector<Natural> elems)
  : _elems(std::move(elems))
{
  std::sort(_elems.begin(), _elems.end());
  _elems.erase(std::unique(_elems.begin(), _elems.end()), _elems.end());
}

FiniteNatSet FiniteNatSet::from_sorted(std::vector<Natural> elems)
{
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (elems[i - 1] >= elems[i])
      throw Error(ErrorCode::ParseError,
                  "set elements must be strictly increasing (position " +
                    std::to_string(i) + ")");
  }

  FiniteNatSet res;
  res._elems = std::move(elems);
  return res;
}

FiniteNatSet FiniteNatSet::range(Natural lo, Natural hi)
{
  FiniteNatSet res;
  for (Natural n = lo; n < hi; ++n)
    res._elems.push_back(n);
  return res;
}

bool FiniteNatSet::contains(Natural n) const
{ return std::binary_search(_elems.begin(), _elems.end(), n); }

FiniteNatSet set_union(FiniteNatSet const &x, FiniteNatSet const &y)
{
  std::vector<Natural> res;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(res));
  return FiniteNatSet::from_sorted(std::move(res));
}

FiniteNatSet set_difference(FiniteNatSet const &x, FiniteNatSet const &y)
{
  std::vector<Natural> res;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(res));
  return FiniteNatSet::from_sorted(std::move(res));
}

FiniteNatSet set_intersection(FiniteNatSet const &x, FiniteNatSet const &y)
{
  std::vector<Natural> res;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(res));
  return FiniteNatSet::from_sorted(std::move(res));
}

bool card_identity_check(FiniteNatSet const &x, FiniteNatSet const &y)
{
  auto lhs = set_difference(x, y).size() + y.size();
  auto rhs = set_difference(y, x).size() + x.size();
  return lhs == rhs;
}

} // namespace pbij
