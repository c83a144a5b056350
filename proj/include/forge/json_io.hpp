#pragma once

// The vendored json header lives at the vendor root rather than under nlohmann/.
#include <json.hpp>

#include "forge/betti.hpp"
#include "forge/complex.hpp"
#include "forge/constructors.hpp"

namespace forge {

using Json = nlohmann::json;

Json vec_to_json(const IntVec& v);
IntVec vec_from_json(const Json& j);

Json vectors_to_json(const std::vector<IntVec>& vs);

// {"ambient_dim": r, "generators": [[...],[...]]}
Json semigroup_to_json(const AffineSemigroup& gamma);
AffineSemigroup semigroup_from_json(const Json& j);

// {"family":"gap","a":[...],"d":[...],"h":1,"n":3},
// {"family":"join","left":{...},"right":{...}},
// {"family":"backelin","n":2,"r":8}, or a plain semigroup document.
AffineSemigroup family_from_json(const Json& j);

// {"variables":[...],"degree_map":[[...]],"binomials":[{"plus":[..],"minus":[..]}]}
Json ideal_to_json(const BinomialIdeal& ideal);
BinomialIdeal ideal_from_json(const Json& j);

// {"kind":"neg_degrevlex","permutation":["x2","x3","x1","x4"]}; the
// permutation entries are variable names resolved against `context`.
Json order_to_json(const MonomialOrder& order, const VarContext& context);
MonomialOrder order_from_json(const Json& j, const VarContext& context);

// {"entries":[{"i":1,"degree":[..],"rank":3}],"totals":[1,3,2]}
Json betti_to_json(const BettiTable& table);

// Sparse differential encoding {row, col, terms:[{coeff:+1|-1, exponents:[...]}]}.
Json complex_to_json(const GradedFreeComplex& c);

}  // namespace forge
