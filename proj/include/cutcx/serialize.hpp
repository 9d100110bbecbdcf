#pragma once

#include <string>

#include <json.hpp>

#include "cutcx/bad_complements.hpp"
#include "cutcx/closed_forms.hpp"
#include "cutcx/cut_complex.hpp"
#include "cutcx/polynomial.hpp"

namespace cutcx {

using Json = nlohmann::ordered_json;

// Structured text forms. Each starts with a header line naming the object
// and its parameters as key=value pairs, followed by one record per line.
//
//   fvector n=<n> k=<k> void=<true|false>
//   p=<cardinality> f=<count>
//
//   profile k=<k> n=<n>
//   m=<m> q=<count>
//
//   layers k=<k> n=<n> r=<r>
//   level=r-1 count=<c>
//   level=r-1 set={...}
//   level=r j=<j> count=<c>
//   level=r j=<j> set={...}
//
//   genfun pole_order=<e>
//   numerator=[c0, c1, ...]
std::string to_text(const FVector& fv);
std::string to_text(const BadProfile& profile);
std::string to_text(const NonfaceLayers& layers);
std::string to_text(const RationalGenFun& gf);

// JSON forms. Arbitrary-precision integers and rationals are decimal strings.
Json to_json(const FVector& fv);
Json to_json(const BadProfile& profile);
Json to_json(const NonfaceLayers& layers);
Json to_json(const IntPolynomial& p);
Json to_json(const RatPolynomial& p);
Json to_json(const RationalGenFun& gf);
Json to_json(VertexSet s);

}  // namespace cutcx
