#include "tdl/serialize.hpp"

namespace tdl {

nlohmann::json to_json(const WeightDistribution& dist) {
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [w, c] : dist.counts) counts[std::to_string(w)] = c.get_str();
    return nlohmann::json{{"n", dist.n}, {"dim", dist.dim}, {"counts", counts}};
}

nlohmann::json to_json(const BlockSet& blocks) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& b : blocks.blocks) list.push_back(b);
    const int k = blocks.blocks.empty() ? 0 : static_cast<int>(blocks.blocks.front().size());
    return nlohmann::json{{"v", blocks.v}, {"k", k}, {"blocks", list}};
}

nlohmann::json design_report_json(const BlockSet& blocks, const DesignCheck& check,
                                  const std::map<std::string, bool>& checks) {
    nlohmann::json j{{"v", blocks.v},
                     {"k", blocks.blocks.empty() ? 0 : static_cast<int>(blocks.blocks.front().size())},
                     {"b", blocks.blocks.size()},
                     {"t", 2},
                     {"is_steiner", check.is_design && check.lambda == 1}};
    if (check.is_design)
        j["lambda"] = check.lambda;
    else
        j["lambda"] = nullptr;
    nlohmann::json c = nlohmann::json::object();
    for (const auto& [name, ok] : checks) c[name] = ok;
    j["checks"] = c;
    return j;
}

}  // namespace tdl
