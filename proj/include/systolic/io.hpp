#pragma once

#include <cstdint>
#include <string>

#include "systolic/gen.hpp"
#include "systolic/surface.hpp"

namespace systolic {

// Shared instance format:
//   {"vertices": n, "maximal_simplices": [[ids...], ...],
//    "certificates": {"simply_connected": "disc"|"ball"|"cone"|null},
//    "subcomplexes": {"name": [ids...]}, "notes": {...},
//    "boundary_cycle": [ids...]}   (discs only)
// Surfaces: {"domain": <instance>, "assignment": [target ids]}.

std::string instance_to_json(const GeneratedInstance& inst);
GeneratedInstance instance_from_json(const std::string& text);

GeneratedInstance load_instance(const std::string& path);
void save_instance(const std::string& path, const GeneratedInstance& inst);

std::string surface_to_json(const SurfaceMap& surface);
SurfaceMap surface_from_json(const std::string& text);

// FNV-1a over the canonical serialization; used to echo instances in reports.
std::uint64_t instance_hash(const GeneratedInstance& inst);

}  // namespace systolic
