#include "pbij/quotient_group.hpp"

namespace pbij
{

GermClass class_of(PartialBijection const &f)
{ return {f.shift()}; }

GermClass class_mul(GermClass a, GermClass b)
{ return {a.shift + b.shift}; }

GermClass class_inv(GermClass a)
{ return {-a.shift}; }

GermClass class_identity()
{ return {0}; }

GermClass class_pow(GermClass a, std::int64_t n)
{
  GermClass base = n < 0 ? class_inv(a) : a;
  GermClass res = class_identity();
  for (auto e = n < 0 ? -n : n; e > 0; e >>= 1) {
    if (e & 1)
      res = class_mul(res, base);
    base = class_mul(base, base);
  }
  return res;
}

std::int64_t class_index(GermClass a)
{ return -a.shift; }

GermClass unit_shift_class()
{ return {1}; }

GermClass section(std::int64_t n)
{ return class_pow(unit_shift_class(), -n); }

} // namespace pbij
