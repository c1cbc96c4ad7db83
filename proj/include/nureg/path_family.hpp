#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nureg/graph.hpp"

namespace nureg {

struct OrientedPath {
    VertexSequence vertices;  // in path order
    Vertex start = 0;
    Vertex end = 0;

    // Oriented from the first listed vertex to the last.
    static OrientedPath forward(VertexSequence seq);

    bool singleton() const { return vertices.size() == 1; }
    int edge_count() const { return static_cast<int>(vertices.size()) - 1; }
    VertexSet vertex_set() const { return vertex_set_of(vertices); }
    // Vertices of degree two in the path.
    VertexSet interior() const;
    OrientedPath flipped() const;
    // Path edges as sorted pairs.
    std::vector<Edge> edges() const;
};

struct OrientedPathFamily {
    std::vector<OrientedPath> paths;
    // Path indices listed by position; every arc (i, j) of the shortcut digraph
    // has j placed before i.
    std::optional<std::vector<int>> order;

    int size() const { return static_cast<int>(paths.size()); }
    VertexSet support() const;
    int total_edges() const;
};

// Checks that every path is induced, that paths are pairwise vertex-disjoint,
// that orientations match endpoints and that the order is a permutation.
// Returns the vertex set of the induced subgraph on the union of the paths.
VertexSet validate_family(const Graph& g, const OrientedPathFamily& fam);

// Edges of g joining two different paths of the family.
std::vector<Edge> induced_edges(const Graph& g, const OrientedPathFamily& fam);

// Same family with paths sorted by smallest vertex; the order is remapped.
OrientedPathFamily canonical_family(const OrientedPathFamily& fam);

// Text format, 1-based: one line per path "v1 v2 ... vk | start end", and an
// optional line "sigma: i1 i2 ...". The "| start end" part may be omitted.
OrientedPathFamily parse_family(std::istream& in);
OrientedPathFamily parse_family_string(const std::string& text);
std::string format_family(const OrientedPathFamily& fam);

// Calls visit on every family of 1..max_paths pairwise vertex-disjoint induced
// paths of g, each oriented from its smaller endpoint and listed in the order
// of enumerate_induced_paths.
void for_each_family(const Graph& g, int max_paths, bool singletons,
                     const std::function<void(const OrientedPathFamily&)>& visit);

}  // namespace nureg
