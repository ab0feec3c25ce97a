#pragma once

#include <json.hpp>

#include "pbij/finite_set.hpp"
#include "pbij/near_bijection.hpp"
#include "pbij/partial_bijection.hpp"
#include "pbij/quotient_group.hpp"

namespace pbij::codec
{

using json = nlohmann::ordered_json;

// Parsers throw Error with ParseError for malformed documents and forward
// validation errors from the value constructors.

json to_json(FiniteNatSet const &s);
FiniteNatSet finite_set_from_json(json const &j);

// {"shift": int, "holes": [nat...], "exceptions": [[nat, nat]...]}.
// Input holes and exception pairs may be unordered; output is canonical.
json to_json(PartialBijection const &f);
PartialBijection partial_bijection_from_json(json const &j);

json to_json(Permutation const &p);

// {"shift": int}
json to_json(GermClass const &c);
GermClass germ_class_from_json(json const &j);

// {"prefix": [nat...], "shift": int}
json to_json(NearBijection const &f);
NearBijection near_bijection_from_json(json const &j);

} // namespace pbij::codec
