#include "anaring/json_io.hpp"

namespace anaring {

using nlohmann::json;

json point_to_json(const Point& p, int digits) {
    json j;
    if (p.is_exact()) {
        j["kind"] = "rational";
        j["value"] = to_string(p.value());
    } else {
        j["kind"] = "enclosure";
        j["lo"] = p.interval().lo().to_decimal(digits, MPFR_RNDD);
        j["hi"] = p.interval().hi().to_decimal(digits, MPFR_RNDU);
        j["width"] = p.interval().width(64).to_decimal(6, MPFR_RNDU);
    }
    return j;
}

json divisor_to_json(const Divisor& d, int digits) {
    json arr = json::array();
    for (const DivisorEntry& e : d) {
        json entry;
        entry["point"] = point_to_json(e.point, digits);
        entry["multiplicity"] = e.multiplicity;
        arr.push_back(std::move(entry));
    }
    return json{{"divisor", std::move(arr)}};
}

json ideal_to_json(const Ideal& i, int digits) {
    if (i.is_zero()) return json{{"ideal", "zero"}};
    json j;
    j["ideal"] = "principal";
    j["divisor"] = divisor_to_json(i.divisor(), digits)["divisor"];
    if (i.generator())
        j["generator"] = serialize(*i.generator());
    else
        j["generator"] = nullptr;
    return j;
}

json factors_to_json(const std::vector<MaximalFactor>& fs, int digits) {
    json arr = json::array();
    for (const MaximalFactor& f : fs) {
        json entry;
        entry["point"] = point_to_json(f.point, digits);
        entry["exponent"] = f.exponent;
        arr.push_back(std::move(entry));
    }
    return arr;
}

}  // namespace anaring
