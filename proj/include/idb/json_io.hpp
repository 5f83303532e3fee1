#pragma once

#include <json.hpp>

#include "idb/bondage.hpp"
#include "idb/graph.hpp"
#include "idb/solvers.hpp"

namespace idb {

// Field order is fixed so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

inline Json to_json(const VertexSet& s) {
    Json arr = Json::array();
    s.for_each([&](int v) { arr.push_back(v); });
    return arr;
}

inline Json to_json(const EdgeSet& es) {
    Json arr = Json::array();
    for (const Edge& e : es) arr.push_back(Json::array({e.u, e.v}));
    return arr;
}

inline Json to_json(const IdsResult& r) {
    return Json{{"value", r.size}, {"witness", to_json(r.witness)}, {"nodes", r.nodes_explored}};
}

inline Json to_json(const BondageCertificate& c) {
    return Json{{"k", c.k},
                {"removed", to_json(c.removed)},
                {"gamma_before", c.gamma_before},
                {"gamma_after", c.gamma_after},
                {"subsets_tested", c.subsets_tested},
                {"direction", to_string(c.direction)}};
}

} // namespace idb
