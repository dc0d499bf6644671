#ifndef TDL_SERIALIZE_HPP
#define TDL_SERIALIZE_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "tdl/designs.hpp"
#include "tdl/geometry.hpp"
#include "tdl/spectra.hpp"

namespace tdl {

/// {"n":.., "dim":.., "counts": {"<weight>": "<decimal-string>"}} — counts as
/// decimal strings so no integer width is ever lost.
nlohmann::json to_json(const WeightDistribution& dist);

/// {"v":.., "k":.., "blocks": [[..],..]} with blocks sorted lexicographically.
nlohmann::json to_json(const BlockSet& blocks);

/// {"v","k","b","t","lambda","is_steiner","checks":{..}}; lambda is null when
/// the block set is not a design.
nlohmann::json design_report_json(const BlockSet& blocks, const DesignCheck& check,
                                  const std::map<std::string, bool>& checks);

}  // namespace tdl

#endif
