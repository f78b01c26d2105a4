#pragma once

#include "aqecc/css.hpp"
#include "aqecc/families.hpp"
#include "aqecc/symplectic.hpp"

// Single interchange format: ordered JSON, so repeated runs serialize
// byte-identically.
#include "json.hpp"

namespace aqecc {

using Json = nlohmann::ordered_json;

Json field_to_json(const FiniteField& f);
FieldPtr field_from_json(const Json& j);

Json code_to_json(const LinearCode& c);
LinearCode code_from_json(const Json& j);

Json pair_to_json(const CssPair& p);
CssPair pair_from_json(const Json& j);

Json weight_report_to_json(const WeightReport& r);
Json params_to_json(const AqeccParams& p);
Json claim_to_json(const TheoremClaim& c);

Json additive_to_json(const AdditiveCode& c);
AdditiveCode additive_from_json(const Json& j);

Json derivation_to_json(const AqeccDerivation& d);
Json additive_derivation_to_json(const AdditiveDerivation& d);

}  // namespace aqecc
