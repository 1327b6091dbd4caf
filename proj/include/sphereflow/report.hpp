#pragma once

#include "sphereflow/darboux.hpp"
#include "sphereflow/dynamics.hpp"
#include "sphereflow/great_circles.hpp"
#include "sphereflow/stereographic.hpp"

#include <json.hpp>

#include <string>

namespace sphereflow {

using Json = nlohmann::ordered_json;

Json to_json(Polynomial const &p);
Json to_json(SphereField const &field);
Json to_json(PlanarField const &planar);
Json to_json(InvariantSetReport const &report);
Json to_json(CircleSpec const &circle);
Json to_json(GreatCircleResult const &result);
Json to_json(PeriodicityVerdict const &verdict);
Json to_json(SingularityReport const &report);
Json to_json(InteriorCharacteristicData const &data);

/// Location class used by topology signatures: origin, axis-u, axis-v, boundary, interior or
/// outside (southern hemisphere, not drawn).
std::string location_class(SingularityReport const &report);

/// Fixed-point text of a 50-digit value.
std::string to_string(Real50 const &value, int digits = 50);

} // namespace sphereflow
