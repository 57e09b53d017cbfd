#include "planar/graph_json.hpp"

#include <json.hpp>

namespace planar {

namespace {

using nlohmann::json;

json require(const json& j, const char* field) {
    if (!j.contains(field))
        throw GraphError(GraphErrorCode::validation_error,
                         std::string("missing field \"") + field + "\"");
    return j.at(field);
}

json timings_to_json(const StageTimings& t) {
    return json{{"validate", t.validate_ms}, {"decompose", t.decompose_ms},
                {"embed", t.embed_ms},       {"vertex_check", t.vertex_ms},
                {"edge_check", t.edge_ms},   {"triangle_check", t.triangle_ms},
                {"total", t.total_ms}};
}

StageTimings timings_from_json(const json& j) {
    StageTimings t;
    t.validate_ms = j.value("validate", 0.0);
    t.decompose_ms = j.value("decompose", 0.0);
    t.embed_ms = j.value("embed", 0.0);
    t.vertex_ms = j.value("vertex_check", 0.0);
    t.edge_ms = j.value("edge_check", 0.0);
    t.triangle_ms = j.value("triangle_check", 0.0);
    t.total_ms = j.value("total", 0.0);
    return t;
}

const char* kind_name(KernelKind k) {
    switch (k) {
        case KernelKind::vertex: return "vertex";
        case KernelKind::edge: return "edge";
        case KernelKind::triangle: return "triangle";
    }
    return "vertex";
}

KernelKind kind_from(const std::string& s) {
    if (s == "vertex") return KernelKind::vertex;
    if (s == "edge") return KernelKind::edge;
    if (s == "triangle") return KernelKind::triangle;
    throw GraphError(GraphErrorCode::validation_error, "unknown kernel kind \"" + s + "\"");
}

}  // namespace

GraphDocument parse_graph(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw GraphError(GraphErrorCode::parse_error, e.what());
    }

    GraphDocument doc;
    try {
        doc.format_version = require(j, "format_version").get<int>();
        int n = require(j, "n").get<int>();
        auto rotation = require(j, "rotation").get<std::vector<std::vector<int>>>();
        auto outer = require(j, "outer_face").get<std::vector<int>>();
        if (static_cast<int>(rotation.size()) != n)
            throw GraphError(GraphErrorCode::validation_error,
                             "rotation has " + std::to_string(rotation.size()) +
                                 " entries for n = " + std::to_string(n));
        doc.graph = build_plane_graph(n, std::move(rotation), std::move(outer));

        if (j.contains("coords") && !j.at("coords").is_null()) {
            auto raw = j.at("coords").get<std::vector<std::vector<int>>>();
            if (static_cast<int>(raw.size()) != n)
                throw GraphError(GraphErrorCode::validation_error,
                                 "coords has " + std::to_string(raw.size()) +
                                     " entries for n = " + std::to_string(n));
            GridEmbedding e;
            for (const auto& p : raw) {
                if (p.size() != 2)
                    throw GraphError(GraphErrorCode::validation_error,
                                     "coords entries must be [x, y] pairs");
                e.coords.push_back({p[0], p[1]});
            }
            auto check = verify_plane_drawing(doc.graph, e);
            if (!check.ok)
                throw GraphError(GraphErrorCode::validation_error,
                                 "coords are not a plane drawing: " + check.problem);
            doc.coords = std::move(e);
        }
    } catch (const json::exception& e) {
        throw GraphError(GraphErrorCode::validation_error, e.what());
    }
    return doc;
}

std::string emit_graph(const PlaneGraph& g, const GridEmbedding* coords) {
    json j;
    j["format_version"] = 1;
    j["n"] = g.n;
    j["rotation"] = g.rotation;
    j["outer_face"] = g.outer_face;
    if (coords) {
        json c = json::array();
        for (const auto& p : coords->coords) c.push_back({p.x, p.y});
        j["coords"] = c;
    }
    return j.dump(2) + "\n";
}

std::string emit_verdict(const Verdict& v) {
    json j;
    j["status"] = v.status == Status::perfect ? "perfect" : "not_perfect";
    if (v.witness) {
        json w;
        w["kernel"] = {{"kind", kind_name(v.witness->kernel.kind)},
                       {"vertices", v.witness->kernel.vertices}};
        w["hole"] = v.witness->hole;
        w["component_index"] = v.witness->component_index;
        j["witness"] = w;
    }
    j["timings_ms"] = timings_to_json(v.timings);
    return j.dump(2) + "\n";
}

Verdict parse_verdict(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw GraphError(GraphErrorCode::parse_error, e.what());
    }
    Verdict v;
    try {
        std::string status = require(j, "status").get<std::string>();
        if (status != "perfect" && status != "not_perfect")
            throw GraphError(GraphErrorCode::validation_error, "unknown status \"" + status + "\"");
        v.status = status == "perfect" ? Status::perfect : Status::not_perfect;
        if ((v.status == Status::not_perfect) != j.contains("witness"))
            throw GraphError(GraphErrorCode::validation_error,
                             "witness must be present exactly when status is not_perfect");
        if (j.contains("witness")) {
            const auto& w = j.at("witness");
            Witness witness;
            witness.kernel.kind = kind_from(require(w.at("kernel"), "kind").get<std::string>());
            witness.kernel.vertices = require(w.at("kernel"), "vertices").get<std::vector<int>>();
            witness.hole = require(w, "hole").get<std::vector<int>>();
            witness.component_index = require(w, "component_index").get<int>();
            v.witness = std::move(witness);
        }
        if (j.contains("timings_ms")) v.timings = timings_from_json(j.at("timings_ms"));
    } catch (const json::exception& e) {
        throw GraphError(GraphErrorCode::validation_error, e.what());
    }
    return v;
}

std::string emit_components(const std::vector<WComponent>& comps) {
    json arr = json::array();
    for (const auto& c : comps) {
        json j;
        j["format_version"] = 1;
        j["n"] = c.graph.n;
        j["rotation"] = c.graph.rotation;
        j["outer_face"] = c.graph.outer_face;
        j["parent_ids"] = c.parent_ids;
        j["apex_removed"] = c.apex_removed;
        arr.push_back(j);
    }
    return json{{"components", arr}}.dump(2) + "\n";
}

std::string emit_oracle(const OracleResult& r) {
    json j;
    j["hole_found"] = r.hole_found;
    if (r.hole_found) j["hole"] = r.hole;
    return j.dump(2) + "\n";
}

}  // namespace planar
