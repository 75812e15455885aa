#pragma once

#include <string_view>

#include <json.hpp>

#include "jtc/model.hpp"

namespace jtc {

/// Builds a validated SystemSpec from the JSON device schema:
///
///   {
///     "qudits":     [ {"levels": [..]} | {"qubit": {"freq": f}}
///                     | {"transmon": {"EC": x, "EJ": y}}, ... ],
///     "resonators": [ {"freq": f}, ... ],
///     "couplings":  [ [ {"uniform": g} | {"explicit": [..]}, ... ], ... ]
///   }
///
/// The coupling tensor is indexed [resonator p][qudit k].
SystemSpec system_from_json(const nlohmann::json& device);

/// Parses text first, then delegates to system_from_json.
SystemSpec system_from_json_text(std::string_view text);

}  // namespace jtc
