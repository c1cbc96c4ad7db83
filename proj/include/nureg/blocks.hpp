#pragma once

#include <vector>

#include "nureg/graph.hpp"

namespace nureg {

struct BlockDecomposition {
    // Maximal 2-connected pieces, bridges and isolated vertices, sorted by
    // smallest vertex.
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
    // Cut vertices lying in each block (the block-cut tree, one row per block).
    std::vector<VertexSet> block_cut_vertices;
};

BlockDecomposition block_decomposition(const Graph& g);

bool is_block_graph(const Graph& g);

struct CliqueStructure {
    // Maximal cliques with at least one edge; isolated vertices are not counted.
    int clique_count = 0;
    std::vector<int> clique_degree;
    bool two_block = false;
    bool path_of_cliques = false;
};

// Throws NotBlockGraph.
CliqueStructure structure_predicates(const Graph& g);

}  // namespace nureg
