#include "nureg/json_io.hpp"

#include "nureg/graph_io.hpp"

namespace nureg {

using nlohmann::json;

json vertices_json(std::span<const Vertex> seq) {
    json out = json::array();
    for (Vertex v : seq) out.push_back(v + 1);
    return out;
}

json vertices_json(VertexSet set) {
    json out = json::array();
    for (Vertex v : set) out.push_back(v + 1);
    return out;
}

namespace {

json edges_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (auto [u, v] : edges) out.push_back({u + 1, v + 1});
    return out;
}

}  // namespace

json to_json(const Graph& g) {
    return {{"n", g.order()}, {"edges", edges_json(g.edges())}, {"graph6", to_graph6(g)}};
}

json to_json(const OrientedPathFamily& fam) {
    json paths = json::array();
    for (const auto& p : fam.paths)
        paths.push_back({{"vertices", vertices_json(p.vertices)}, {"start", p.start + 1}, {"end", p.end + 1}});
    json out = {{"paths", paths}, {"edges", fam.total_edges()}};
    if (fam.order) {
        json order = json::array();
        for (int i : *fam.order) order.push_back(i + 1);
        out["sigma"] = order;
    }
    return out;
}

json to_json(const DirectedMultigraph& k) {
    json arcs = json::array();
    for (const Arc& a : k.arcs)
        arcs.push_back({{"from", a.from + 1}, {"to", a.to + 1}, {"path", vertices_json(a.witness)}});
    return {{"vertices", k.vertex_count}, {"arcs", arcs}};
}

json to_json(const AcyclicityResult& r) {
    json out = {{"acyclic", r.acyclic}};
    json seq = json::array();
    for (int i : r.acyclic ? r.order : r.cycle) seq.push_back(i + 1);
    out[r.acyclic ? "order" : "cycle"] = seq;
    return out;
}

json to_json(const DoipResult& r) {
    json out = {{"doip", r.doip}};
    if (r.doip) out["certificate"] = to_json(r.family);
    json failures = json::array();
    for (const auto& f : r.failures) {
        json item = {{"starts", vertices_json(f.starts)}};
        if (!f.cycle.empty()) {
            json cycle = json::array();
            for (int i : f.cycle) cycle.push_back(i + 1);
            item["cycle"] = cycle;
        }
        if (f.order_violation) item["order_violation"] = {f.order_violation->first + 1, f.order_violation->second + 1};
        failures.push_back(item);
    }
    out["failures"] = failures;
    return out;
}

json to_json(const ForbiddenWitness& w) {
    return {{"kind", std::string(forbidden_kind_name(w.kind))},
            {"from", w.from_path + 1},
            {"to", w.to_path + 1},
            {"path", vertices_json(w.core)},
            {"anchors", vertices_json(w.anchors)},
            {"vertices", vertices_json(w.vertices)},
            {"edges", edges_json(w.edges)}};
}

json to_json(const SquarefreeMonomialIdeal& ideal) {
    json gens = json::array();
    for (const auto& m : ideal.generators) gens.push_back(m.to_string());
    return {{"n", ideal.n}, {"generators", gens}};
}

json to_json(const BettiTable& table) {
    json entries = json::array();
    for (const auto& [ij, b] : table.entries) entries.push_back({{"i", ij.first}, {"j", ij.second}, {"b", b}});
    return {{"characteristic", table.characteristic},
            {"regularity", table.regularity()},
            {"projective_dimension", table.projective_dimension()},
            {"entries", entries}};
}

json to_json(const BlockDecomposition& blocks) {
    json list = json::array();
    for (VertexSet b : blocks.blocks) list.push_back(vertices_json(b));
    return {{"blocks", list}, {"cut_vertices", vertices_json(blocks.cut_vertices)}};
}

json labeling_json(const Labeling& lab) {
    return json(lab);
}

}  // namespace nureg
