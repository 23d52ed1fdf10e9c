// JSON renderings of divisors, ideals and factor lists. Decimal fields are
// outward-rounded; rational values are exact "p/q" strings.
#pragma once

#include <json.hpp>

#include "anaring/divisor.hpp"
#include "anaring/ideal.hpp"

namespace anaring {

nlohmann::json point_to_json(const Point& p, int digits = 17);
nlohmann::json divisor_to_json(const Divisor& d, int digits = 17);
nlohmann::json ideal_to_json(const Ideal& i, int digits = 17);
nlohmann::json factors_to_json(const std::vector<MaximalFactor>& fs, int digits = 17);

}  // namespace anaring
