#include "jtc/device_json.hpp"

#include <stdexcept>
#include <string>

namespace jtc {

using nlohmann::json;

SystemSpec system_from_json(const json& device) {
    SystemSpec spec;

    for (const auto& q : device.at("qudits")) {
        if (q.contains("levels")) {
            spec.qudits.push_back(QuditSpec{q.at("levels").get<std::vector<double>>()});
        } else if (q.contains("qubit")) {
            spec.qudits.push_back(make_qubit(q.at("qubit").at("freq").get<double>()));
        } else if (q.contains("transmon")) {
            const auto& t = q.at("transmon");
            spec.qudits.push_back(make_transmon_qutrit(
                TransmonParams{t.at("EC").get<double>(), t.at("EJ").get<double>()}));
        } else {
            throw std::invalid_argument(
                "device: each qudit needs one of 'levels', 'qubit' or 'transmon'");
        }
    }

    for (const auto& r : device.at("resonators"))
        spec.resonators.push_back(ResonatorSpec{r.at("freq").get<double>()});

    for (const auto& row : device.at("couplings")) {
        std::vector<Coupling> out_row;
        for (const auto& c : row) {
            if (c.contains("uniform"))
                out_row.push_back(Coupling::uniform(c.at("uniform").get<double>()));
            else if (c.contains("explicit"))
                out_row.push_back(
                    Coupling::explicit_rungs(c.at("explicit").get<std::vector<double>>()));
            else
                throw std::invalid_argument("device: coupling entries need 'uniform' or 'explicit'");
        }
        spec.couplings.push_back(std::move(out_row));
    }

    return validate(std::move(spec));
}

SystemSpec system_from_json_text(std::string_view text) {
    return system_from_json(json::parse(text));
}

}  // namespace jtc
