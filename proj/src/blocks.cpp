#include "nureg/blocks.hpp"

#include <algorithm>

#include "nureg/error.hpp"

namespace nureg {

namespace {

struct Tarjan {
    const Graph& g;
    std::vector<int> disc;
    std::vector<int> low;
    std::vector<Edge> stack;
    std::vector<VertexSet> blocks;
    int clock = 0;

    explicit Tarjan(const Graph& graph)
        : g(graph), disc(static_cast<std::size_t>(graph.order()), -1), low(static_cast<std::size_t>(graph.order()), 0) {}

    void visit(Vertex u, Vertex parent) {
        disc[u] = low[u] = clock++;
        for (Vertex v : g.neighbors(u)) {
            if (v == parent) continue;
            if (disc[v] < 0) {
                stack.emplace_back(u, v);
                visit(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    VertexSet block;
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block.insert(e.first);
                        block.insert(e.second);
                        if (e == Edge{u, v}) break;
                    }
                    blocks.push_back(block);
                }
            } else if (disc[v] < disc[u]) {
                stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    Tarjan t(g);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (t.disc[v] >= 0) continue;
        if (g.degree(v) == 0) {
            t.blocks.push_back(VertexSet::single(v));
            t.disc[v] = t.clock++;
            continue;
        }
        t.visit(v, -1);
    }
    BlockDecomposition d;
    d.blocks = std::move(t.blocks);
    std::sort(d.blocks.begin(), d.blocks.end(), [](VertexSet a, VertexSet b) {
        if (a.min() != b.min()) return a.min() < b.min();
        return a.bits() < b.bits();
    });
    std::vector<int> count(static_cast<std::size_t>(g.order()), 0);
    for (VertexSet b : d.blocks)
        for (Vertex v : b) ++count[v];
    for (Vertex v = 0; v < g.order(); ++v)
        if (count[v] >= 2) d.cut_vertices.insert(v);
    for (VertexSet b : d.blocks) d.block_cut_vertices.push_back(b & d.cut_vertices);
    return d;
}

namespace {

bool is_clique(const Graph& g, VertexSet s) {
    for (Vertex v : s)
        if (!(s - VertexSet::single(v)).subset_of(g.neighbors(v))) return false;
    return true;
}

}  // namespace

bool is_block_graph(const Graph& g) {
    for (VertexSet b : block_decomposition(g).blocks)
        if (!is_clique(g, b)) return false;
    return true;
}

CliqueStructure structure_predicates(const Graph& g) {
    BlockDecomposition d = block_decomposition(g);
    CliqueStructure s;
    s.clique_degree.assign(static_cast<std::size_t>(g.order()), 0);
    s.path_of_cliques = true;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        VertexSet b = d.blocks[i];
        if (!is_clique(g, b)) throw Error(ErrorCode::NotBlockGraph, "a block is not a clique");
        if (b.size() < 2) continue;
        ++s.clique_count;
        for (Vertex v : b) ++s.clique_degree[v];
        if (d.block_cut_vertices[i].size() > 2) s.path_of_cliques = false;
    }
    s.two_block = std::all_of(s.clique_degree.begin(), s.clique_degree.end(), [](int c) { return c <= 2; });
    return s;
}

}  // namespace nureg
