#include "nureg/corpus.hpp"

#include <map>
#include <set>
#include <cstdint>
#include <string>

#include "nureg/error.hpp"

namespace nureg {

namespace {

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1U) g.add_edge(u, v);
    return g;
}

}  // namespace

std::vector<Graph> labeled_graphs(int n, bool connected_only) {
    if (n < 0 || n > 7) throw Error(ErrorCode::TooLarge, "labelled enumeration limited to 7 vertices");
    int pairs = n * (n - 1) / 2;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (!connected_only || is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> graphs_up_to_isomorphism(int n, bool connected_only) {
    if (n < 0 || n > 7) throw Error(ErrorCode::TooLarge, "isomorphism classes limited to 7 vertices");
    // Deleting the last vertex of a graph on k + 1 vertices leaves a graph on
    // k vertices, so adding a vertex in every way to each class reaches them all.
    std::map<std::string, Graph> level;
    level.emplace(canonical_form(Graph(0)), Graph(0));
    for (int k = 0; k < n; ++k) {
        std::map<std::string, Graph> next;
        for (const auto& [key, g] : level) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
                Graph h(k + 1);
                for (auto [a, b] : g.edges()) h.add_edge(a, b);
                for (Vertex v = 0; v < k; ++v)
                    if ((mask >> v) & 1U) h.add_edge(v, k);
                next.emplace(canonical_form(h), h);
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (auto& [key, g] : level)
        if (!connected_only || is_connected(g)) out.push_back(g);
    return out;
}

std::vector<Graph> connected_block_graphs(int n) {
    if (n < 1 || n > 11) throw Error(ErrorCode::TooLarge, "block graph enumeration limited to 11 vertices");
    // level[k] holds the classes on k vertices; each grows by gluing a clique
    // at one vertex, which reaches every connected block graph.
    std::vector<std::map<std::string, Graph>> level(static_cast<std::size_t>(n) + 1);
    level[1].emplace(canonical_form(Graph(1)), Graph(1));
    for (int k = 1; k < n; ++k) {
        for (const auto& [key, g] : level[k]) {
            for (int s = 2; k + s - 1 <= n; ++s) {
                for (Vertex v = 0; v < k; ++v) {
                    Graph h(k + s - 1);
                    for (auto [a, b] : g.edges()) h.add_edge(a, b);
                    std::vector<Vertex> clique{v};
                    for (int t = 0; t < s - 1; ++t) clique.push_back(k + t);
                    for (std::size_t a = 0; a < clique.size(); ++a)
                        for (std::size_t b = a + 1; b < clique.size(); ++b) h.add_edge(clique[a], clique[b]);
                    level[k + s - 1].emplace(canonical_form(h), h);
                }
            }
        }
    }
    std::vector<Graph> out;
    for (auto& [key, g] : level[n]) out.push_back(g);
    return out;
}

std::vector<Graph> block_graphs(int max_n, bool include_disconnected) {
    std::vector<Graph> pieces;
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n)
        for (Graph& g : connected_block_graphs(n)) {
            out.push_back(g);
            if (n >= 2) pieces.push_back(g);
        }
    if (!include_disconnected) return out;
    // Multisets of pieces, chosen with non-decreasing index.
    std::set<std::string> seen;
    std::vector<std::size_t> pick;
    auto extend = [&](auto&& self, std::size_t from, const Graph& acc) -> void {
        for (std::size_t k = from; k < pieces.size(); ++k) {
            if (acc.order() + pieces[k].order() > max_n) continue;
            Graph next = disjoint_union(acc, pieces[k]);
            pick.push_back(k);
            if (pick.size() >= 2 && seen.insert(canonical_form(next)).second) out.push_back(next);
            self(self, k, next);
            pick.pop_back();
        }
    };
    extend(extend, 0, Graph(0));
    return out;
}

Graph random_connected_graph(std::mt19937_64& rng, int n) {
    while (true) {
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng() & 1U) g.add_edge(u, v);
        if (is_connected(g)) return g;
    }
}

}  // namespace nureg
