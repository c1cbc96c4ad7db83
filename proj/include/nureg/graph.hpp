#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nureg/vertex_set.hpp"

namespace nureg {

using Edge = std::pair<Vertex, Vertex>;
using VertexSequence = std::vector<Vertex>;

// Simple undirected graph on vertices 0..n-1 (n <= 64). Text formats and the
// command line use 1-based vertex names; everything in the library is 0-based.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Edges given with 1-based endpoints, as in edge-list files.
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

    void add_edge(Vertex u, Vertex v);

    int order() const { return n_; }
    int edge_count() const;
    bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
    VertexSet neighbors(Vertex v) const { return VertexSet{adj_[v]}; }
    int degree(Vertex v) const { return neighbors(v).size(); }
    VertexSet vertices() const { return VertexSet::first_n(n_); }
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);

// Subgraph induced on w, renumbered so that the members of w keep their
// relative order.
Graph induced_subgraph(const Graph& g, VertexSet w);

// Adds an edge between every pair of neighbours of v.
Graph vertex_completion(const Graph& g, Vertex v);

Graph disjoint_union(const Graph& a, const Graph& b);

// new_name[v] is the vertex that v becomes.
Graph relabel(const Graph& g, std::span<const int> new_name);

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

bool is_induced_path(const Graph& g, std::span<const Vertex> seq);

VertexSet vertex_set_of(std::span<const Vertex> seq);

// All induced paths, each listed once with the smaller endpoint first
// (singletons included), sorted lexicographically. With endpoints (s, t)
// given, lists every induced path from s to t.
std::vector<VertexSequence> enumerate_induced_paths(
    const Graph& g, std::optional<std::pair<Vertex, Vertex>> endpoints = std::nullopt);

// Number of edges of a longest induced path; -1 for the empty graph.
int longest_induced_path_length(const Graph& g);
VertexSequence longest_induced_path(const Graph& g);

// Isomorphism-invariant graph6 string, used to deduplicate corpora.
std::string canonical_form(const Graph& g);

}  // namespace nureg
