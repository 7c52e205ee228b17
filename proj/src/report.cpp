#include <json.hpp>

#include "z2z4/verification.hpp"

namespace z2z4 {

namespace {

nlohmann::ordered_json one_indexed(const std::vector<std::size_t>& perm)
{
    auto out = nlohmann::ordered_json::array();
    for (auto p : perm) out.push_back(p + 1);
    return out;
}

struct WitnessToJson {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }

    nlohmann::ordered_json operator()(const std::vector<MixedVector>& vs) const
    {
        if (vs.size() == 1) return vs.front().to_string();
        auto out = nlohmann::ordered_json::array();
        for (const auto& v : vs) out.push_back(v.to_string());
        return out;
    }

    nlohmann::ordered_json operator()(const std::vector<BinaryVector>& vs) const
    {
        if (vs.size() == 1) return vs.front().to_string();
        auto out = nlohmann::ordered_json::array();
        for (const auto& v : vs) out.push_back(v.to_string());
        return out;
    }

    nlohmann::ordered_json operator()(const Arrangement& a) const
    {
        return {{"pi_x", one_indexed(a.pi_x)}, {"pi_y", one_indexed(a.pi_y)}};
    }
};

}  // namespace

std::string AuditReport::to_json(bool include_timing, int indent) const
{
    nlohmann::ordered_json j;
    j["claim"] = claim;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    j["verdict"] = to_string(verdict);
    j["witness"] = std::visit(WitnessToJson{}, witness);
    j["counters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : counters) j["counters"][k] = v;
    j["summary"] = summary;
    if (include_timing) j["elapsed_ms"] = elapsed_ms;
    return j.dump(indent);
}

}  // namespace z2z4
