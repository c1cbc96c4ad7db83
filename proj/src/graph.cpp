#include "nureg/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "detail/path_search.hpp"
#include "nureg/error.hpp"
#include "nureg/graph_io.hpp"

namespace nureg {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
        throw Error(ErrorCode::TooLarge, "graphs are limited to 64 vertices, got " + std::to_string(n));
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw Error(ErrorCode::VertexOutOfRange,
                        "edge " + std::to_string(u) + "-" + std::to_string(v) + " outside 1.." + std::to_string(n),
                        {u, v});
        g.add_edge(u - 1, v - 1);
    }
    return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v + 1) + " outside 1.." + std::to_string(n_),
                    {v});
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u + 1), {u});
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

int Graph::edge_count() const {
    int twice = 0;
    for (auto row : adj_) twice += std::popcount(row);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph induced_subgraph(const Graph& g, VertexSet w) {
    std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
    int k = 0;
    for (Vertex v : w) {
        if (v >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex outside graph", {v});
        pos[v] = k++;
    }
    Graph h(k);
    for (Vertex u : w)
        for (Vertex v : g.neighbors(u) & w)
            if (u < v) h.add_edge(pos[u], pos[v]);
    return h;
}

Graph vertex_completion(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "vertex outside graph", {v});
    Graph h = g;
    VertexSet nb = g.neighbors(v);
    for (Vertex a : nb)
        for (Vertex b : nb)
            if (a < b) h.add_edge(a, b);
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
    return g;
}

Graph relabel(const Graph& g, std::span<const int> new_name) {
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(new_name[u], new_name[v]);
    return h;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet seen;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp = VertexSet::single(s);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.neighbors(v);
            frontier = next - comp;
            comp |= next;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

VertexSet vertex_set_of(std::span<const Vertex> seq) {
    VertexSet s;
    for (Vertex v : seq) s.insert(v);
    return s;
}

bool is_induced_path(const Graph& g, std::span<const Vertex> seq) {
    if (seq.empty()) return false;
    for (Vertex v : seq)
        if (v < 0 || v >= g.order()) return false;
    if (vertex_set_of(seq).size() != static_cast<int>(seq.size())) return false;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (g.adjacent(seq[a], seq[b]) != (b == a + 1)) return false;
    return true;
}

std::vector<VertexSequence> enumerate_induced_paths(const Graph& g,
                                                    std::optional<std::pair<Vertex, Vertex>> endpoints) {
    std::vector<VertexSequence> out;
    VertexSet all = g.vertices();
    if (endpoints) {
        auto [s, t] = *endpoints;
        if (s < 0 || s >= g.order() || t < 0 || t >= g.order())
            throw Error(ErrorCode::VertexOutOfRange, "endpoint outside graph");
        if (s == t) {
            out.push_back({s});
            return out;
        }
        detail::for_each_induced_path_between(g, all, s, t, [&](const detail::PathState& st) {
            out.push_back(st.seq);
            return detail::Step::Extend;
        });
        return out;
    }
    for (Vertex s = 0; s < g.order(); ++s) {
        detail::for_each_induced_path_from(g, all, s, [&](const detail::PathState& st) {
            if (st.seq.size() == 1 || st.seq.back() > s) out.push_back(st.seq);
            return detail::Step::Extend;
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSequence longest_induced_path(const Graph& g) {
    VertexSequence best;
    VertexSet all = g.vertices();
    for (Vertex s = 0; s < g.order(); ++s) {
        detail::for_each_induced_path_from(g, all, s, [&](const detail::PathState& st) {
            if (st.seq.size() > best.size()) best = st.seq;
            int room = (all - st.blocked - st.members).size();
            if (st.seq.size() + static_cast<std::size_t>(room) <= best.size()) return detail::Step::Prune;
            return detail::Step::Extend;
        });
    }
    return best;
}

int longest_induced_path_length(const Graph& g) { return static_cast<int>(longest_induced_path(g).size()) - 1; }

namespace {

// Colour refinement with colours ranked by their signatures, so the final
// ordered partition does not depend on the vertex numbering.
std::vector<int> refine_colours(const Graph& g) {
    int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) colour[v] = g.degree(v);
    int classes = -1;
    while (true) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            sig[v].push_back(colour[v]);
            std::vector<int> nb;
            for (Vertex u : g.neighbors(v)) nb.push_back(colour[u]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::map<std::vector<int>, int> rank;
        for (auto& s : sig) rank.emplace(s, 0);
        int r = 0;
        for (auto& [s, id] : rank) id = r++;
        for (Vertex v = 0; v < n; ++v) colour[v] = rank[sig[v]];
        if (r == classes) break;
        classes = r;
    }
    return colour;
}

}  // namespace

std::string canonical_form(const Graph& g) {
    int n = g.order();
    if (n > 11) throw Error(ErrorCode::TooLarge, "canonical form limited to 11 vertices");
    std::vector<int> colour = refine_colours(g);
    std::vector<std::vector<Vertex>> cells;
    {
        std::map<int, std::vector<Vertex>> by_colour;
        for (Vertex v = 0; v < n; ++v) by_colour[colour[v]].push_back(v);
        for (auto& [c, vs] : by_colour) cells.push_back(vs);
    }
    double work = 1;
    for (auto& c : cells)
        for (std::size_t k = 2; k <= c.size(); ++k) work *= static_cast<double>(k);
    if (work > 2e7) throw Error(ErrorCode::TooLarge, "graph too symmetric for canonical form");

    std::vector<int> pos(static_cast<std::size_t>(n));
    std::uint64_t best = 0;
    bool have = false;
    std::vector<int> best_order;
    while (true) {
        std::vector<Vertex> order;
        for (auto& c : cells) order.insert(order.end(), c.begin(), c.end());
        std::uint64_t key = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) key = (key << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
        if (!have || key > best) {
            best = key;
            best_order = order;
            have = true;
        }
        std::size_t c = 0;
        for (; c < cells.size(); ++c)
            if (std::next_permutation(cells[c].begin(), cells[c].end())) break;
        if (c == cells.size()) break;
    }
    for (int i = 0; i < n; ++i) pos[best_order[i]] = i;
    return to_graph6(relabel(g, pos));
}

}  // namespace nureg
