#include "pbij/json_codec.hpp"

#include <string>

#include "pbij/error.hpp"

namespace pbij::codec
{

namespace
{

// Windows and complements scale with these magnitudes, so documents beyond
// them are rejected rather than allowed to exhaust memory.
constexpr std::int64_t max_magnitude = std::int64_t{1} << 32;
constexpr std::int64_t max_shift = std::int64_t{1} << 20;

[[noreturn]] void fail(std::string const &what)
{ throw Error(ErrorCode::ParseError, what); }

Natural natural_from_json(json const &j, char const *what)
{
  if (!j.is_number_integer())
    fail(std::string(what) + " must be an integer");
  auto v = j.get<std::int64_t>();
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(max_magnitude))
    fail(std::string(what) + " is out of range");
  if (v < 0)
    fail(std::string(what) + " must be non-negative");
  if (v > max_magnitude)
    fail(std::string(what) + " is out of range");
  return static_cast<Natural>(v);
}

Shift shift_from_json(json const &j)
{
  if (!j.is_object() || !j.contains("shift"))
    fail("expected an object with a \"shift\" member");

  auto const &s = j.at("shift");
  if (!s.is_number_integer())
    fail("\"shift\" must be an integer");
  if (s.is_number_unsigned() && s.get<std::uint64_t>() > static_cast<std::uint64_t>(max_shift))
    fail("\"shift\" is out of range");
  auto k = s.get<std::int64_t>();
  if (k > max_shift || k < -max_shift)
    fail("\"shift\" is out of range");
  return k;
}

json const &array_member(json const &j, char const *name)
{
  static json const empty = json::array();
  if (!j.contains(name))
    return empty;
  auto const &a = j.at(name);
  if (!a.is_array())
    fail(std::string("\"") + name + "\" must be an array");
  return a;
}

} // namespace

json to_json(FiniteNatSet const &s)
{
  json res = json::array();
  for (Natural n : s)
    res.push_back(n);
  return res;
}

FiniteNatSet finite_set_from_json(json const &j)
{
  if (!j.is_array())
    fail("a finite set must be a JSON array");

  std::vector<Natural> elems;
  for (auto const &e : j)
    elems.push_back(natural_from_json(e, "set element"));
  return FiniteNatSet::from_sorted(std::move(elems));
}

json to_json(PartialBijection const &f)
{
  json exceptions = json::array();
  for (auto const &[key, value] : f.exceptions())
    exceptions.push_back(json::array({key, value}));

  return {{"shift", f.shift()}, {"holes", to_json(f.holes())}, {"exceptions", exceptions}};
}

PartialBijection partial_bijection_from_json(json const &j)
{
  auto shift = shift_from_json(j);

  std::vector<Natural> holes;
  for (auto const &h : array_member(j, "holes"))
    holes.push_back(natural_from_json(h, "hole"));

  ExceptionMap exceptions;
  for (auto const &pair : array_member(j, "exceptions")) {
    if (!pair.is_array() || pair.size() != 2)
      fail("each exception must be a [point, value] pair");
    auto key = natural_from_json(pair[0], "exception point");
    auto value = natural_from_json(pair[1], "exception value");
    if (!exceptions.emplace(key, value).second)
      fail("exception point " + std::to_string(key) + " is listed twice");
  }

  return PartialBijection::make(shift, FiniteNatSet(std::move(holes)), std::move(exceptions));
}

json to_json(Permutation const &p)
{ return to_json(p.as_partial()); }

json to_json(GermClass const &c)
{ return {{"shift", c.shift}}; }

GermClass germ_class_from_json(json const &j)
{ return {shift_from_json(j)}; }

json to_json(NearBijection const &f)
{ return {{"prefix", f.prefix()}, {"shift", f.shift()}}; }

NearBijection near_bijection_from_json(json const &j)
{
  auto shift = shift_from_json(j);

  std::vector<Natural> prefix;
  for (auto const &v : array_member(j, "prefix"))
    prefix.push_back(natural_from_json(v, "prefix value"));

  return NearBijection::make(std::move(prefix), shift);
}

} // namespace pbij::codec
