#ifndef FREECURVE_SERIALIZE_HPP
#define FREECURVE_SERIALIZE_HPP

#include <json.hpp>

#include "freecurve/generator.hpp"
#include "freecurve/verification.hpp"

namespace freecurve {

using Json = nlohmann::json;

Json segment_json(const MaximalSegment& s);
Json component_json(const ComponentDescriptor& c);
Json constraint_json(const Constraint& c);
Json certificate_json(const CurveCertificate& cert);
Json verdict_json(const FreenessVerdict& v);

// Inverse of certificate_json, close enough to verify: n, g, abc, family,
// segment, and the matrix columns are restored.
CurveCertificate certificate_from_json(const Json& j);

}  // namespace freecurve

#endif
