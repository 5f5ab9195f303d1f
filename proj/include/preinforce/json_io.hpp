#pragma once

#include "preinforce/bounds.hpp"
#include "preinforce/reinforcement.hpp"

#include <json.hpp>

#include <string>

namespace preinforce {

// Certificate record: r_p, B (edge pairs), X (sorted vertex list),
// gamma_before, gamma_after.
inline void to_json(nlohmann::json& j, const ReinforcementCertificate& cert) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : cert.edges_B) edges.push_back({e.u, e.v});
    j = nlohmann::json{{"r_p", cert.r_p},
                       {"B", edges},
                       {"X", cert.witness_X.to_vector()},
                       {"gamma_before", cert.gamma_before},
                       {"gamma_after", cert.gamma_after}};
}

inline void from_json(const nlohmann::json& j, ReinforcementCertificate& cert) {
    cert.r_p = j.at("r_p").get<int>();
    cert.edges_B.clear();
    for (const auto& pair : j.at("B")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("certificate: B entries must be [u, v] pairs");
        cert.edges_B.push_back(Edge(pair[0].get<int>(), pair[1].get<int>()));
    }
    cert.witness_X = VertexSet::from_indices(j.at("X").get<std::vector<int>>());
    cert.gamma_before = j.at("gamma_before").get<int>();
    cert.gamma_after = j.at("gamma_after").get<int>();
}

inline void to_json(nlohmann::json& j, const BoundReport& rep) {
    j = nlohmann::json{{"r_p_exact", rep.r_p_exact},
                       {"mu_p", rep.mu_p},
                       {"Delta_plus_p", rep.Delta_plus_p},
                       {"all_hold", rep.all_hold}};
    j["delta_plus_p"] = rep.delta_plus_p ? nlohmann::json(*rep.delta_plus_p)
                                         : nlohmann::json(nullptr);
    j["corollary22_value"] = rep.corollary22_value
                                 ? nlohmann::json(*rep.corollary22_value)
                                 : nlohmann::json(nullptr);
}

inline std::string certificate_to_json(const ReinforcementCertificate& cert) {
    return nlohmann::json(cert).dump(2);
}

inline ReinforcementCertificate certificate_from_json(const std::string& text) {
    return nlohmann::json::parse(text).get<ReinforcementCertificate>();
}

}  // namespace preinforce
