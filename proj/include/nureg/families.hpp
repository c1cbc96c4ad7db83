#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nureg/binomial_edge.hpp"
#include "nureg/path_family.hpp"

namespace nureg {

// Bipartite graph on 1..2m with edges {2i, 2j-1} for 1 <= i <= j <= m.
Graph make_fm(int m);

// Identifies the degree-one vertices f1 of a and f2 of b. Vertices of a keep
// their numbers; those of b follow in order, f2 becoming f1.
Graph star_op(const Graph& a, Vertex f1, const Graph& b, Vertex f2);

// Deletes the degree-one vertices f1, f2 and identifies their neighbours,
// which must have degree at least three. Survivors of a come first, then those
// of b, each in their old order.
Graph circ_op(const Graph& a, Vertex f1, const Graph& b, Vertex f2);

struct CMComponent {
    enum class Kind { F, Chain };
    Kind kind = Kind::F;
    // F: {n}; Chain: {m_1, ..., m_t}.
    std::vector<int> sizes;

    static CMComponent f(int n) { return {Kind::F, {n}}; }
    static CMComponent chain(std::vector<int> ms) { return {Kind::Chain, std::move(ms)}; }
};

// Components glued left to right by the star operation; inside a chain the
// F_{m_k} are glued by the circle operation. Gluing always uses the right
// whisker (vertex 2m of the last F) of the left part and vertex 1 of the first
// F of the right part.
struct CMBipartiteSpec {
    std::vector<CMComponent> components;
};

struct CMBipartiteGraph {
    Graph graph;
    int alpha = 0;
    int beta = 0;
    int formula = 0;  // 3 alpha + beta
    OrientedPathFamily witness;
    // vertex_maps[piece][k] is the vertex of local vertex k (0-based) of each
    // F piece, listed component by component, or -1 if it was deleted.
    std::vector<std::vector<Vertex>> vertex_maps;
};

// Throws SpecInvariantViolated for chains shorter than 2, chain entries below
// 3, or F_n with n < 1.
CMBipartiteGraph build_cm_bipartite(const CMBipartiteSpec& spec);

// Text form: components separated by ';', e.g. "chain 3 4 3 4; F 1; F 4".
CMBipartiteSpec parse_cm_spec(const std::string& text);
std::string format_cm_spec(const CMBipartiteSpec& spec);

// Every generator of the initial ideal has degree two.
bool is_closed_labeling(const Graph& g, const Labeling& lab);

// Tries all labelings in lexicographic order. Throws TooLarge above 9 vertices.
std::optional<Labeling> find_closed_labeling(const Graph& g);

// Starting from one vertex, repeatedly glues a clique on 2..max_block vertices
// at a uniformly chosen existing vertex; the last clique is shrunk so that
// the graph has exactly n vertices.
Graph random_block_graph(std::uint64_t seed, int n, int max_block);

}  // namespace nureg
