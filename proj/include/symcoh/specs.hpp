#pragma once

#include <json.hpp>

#include "symcoh/group.hpp"
#include "symcoh/twisted.hpp"

namespace symcoh {

using Json = nlohmann::json;

// {"family":"cyclic","n":6} | {"family":"symmetric","n":4} |
// {"family":"dihedral","n":4} | {"family":"klein"} | {"family":"quaternion8"} |
// {"product":[spec,spec]} | {"table":[[...]]}
FiniteGroup group_from_spec(const Json& spec);

// {"Fp": p} | "Q"
Domain field_from_spec(const Json& spec);

// integer, or a string like "7" or "2/3" (rationals only)
Scalar scalar_from_literal(const Domain& dom, const Json& v);

// {"kind":"trivial"} | {"kind":"pairing","zeta":<literal>} |
// {"kind":"table","values":[[...]]}
TwoCocycle cocycle_from_spec(const FiniteGroup& g, const Domain& dom, const Json& spec);

}  // namespace symcoh
