#pragma once

#include <json.hpp>

#include "fibcl/clifford.hpp"
#include "fibcl/fibquat.hpp"
#include "fibcl/qsqrt5.hpp"
#include "fibcl/quaternion.hpp"

namespace fibcl {

// Ordered so that keys serialize in declaration order; output is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const QSqrt5& x);
QSqrt5 qsqrt5_from_json(const Json& j);

Json to_json(const Quaternion& x);
Quaternion quaternion_from_json(const Json& j);

Json to_json(const ThresholdCertificate& c);
ThresholdCertificate certificate_from_json(const Json& j);

Json to_json(const GrowthProfile& g);

Json to_json(const ClassificationReport& r);

}  // namespace fibcl
