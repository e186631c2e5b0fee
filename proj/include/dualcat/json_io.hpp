#pragma once

#include <json.hpp>

#include "dualcat/functor.hpp"
#include "dualcat/stability.hpp"

namespace dualcat {

using Json = nlohmann::json;

// Scalars: a FieldElem is a decimal string, "p/q" in lowest terms with q > 0
// for rationals; a DualScalar is {"a": ..., "b": ...}.
Json to_json(const FieldElem& v);
FieldElem field_elem_from_json(const Field& f, const Json& j);
Json to_json(const DualScalar& v);
DualScalar dual_from_json(const Field& f, const Json& j);

// {"ranks": {"-2": 1}, "diffs": {"-2": [[{"a":"0","b":"1"}]]}}; degrees are
// string keys, differentials row-major.
Json to_json(const FreeComplex& c);
FreeComplex free_complex_from_json(const Field& f, const Json& j);

// Adds "kterms" and typed diff blocks {"aa", "ka", "ak", "kk"}.
Json to_json(const ModuleComplex& c);
ModuleComplex module_complex_from_json(const Field& f, const Json& j);

// {"summands": [{"i": 3 | "inf", "h": 0, "m": 1}]}
Json to_json(const FormalObject& o);
FormalObject formal_object_from_json(const Json& j);
Json to_json(const XIndex& i);
XIndex xindex_from_json(const Json& j);

// {"source": ..., "target": ..., "blocks": [{"from": u, "to": v, "a", "b"}]}
Json to_json(const SymMorphism& m);
SymMorphism sym_from_json(const Field& f, const Json& j);

// {"shift": 0, "window": {"imax": 6, "amax": 8}, "coeffs": [...]}
Json to_json(const CoeffAssignment& c);
CoeffAssignment coeffs_from_json(const Field& f, const Json& j);

Json to_json(const StabilityCondition& s);
StabilityCondition sigma_from_json(const Json& j);
Json to_json(const GroupElem& g);

Json to_json(const HomDescriptor& d);
Json to_json(const HeartVerdict& v);
Json to_json(const std::vector<HNFactor>& factors);
Json to_json(const SiltingReport& r);

}  // namespace dualcat
