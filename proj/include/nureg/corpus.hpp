#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nureg/graph.hpp"

namespace nureg {

// Every graph on n labelled vertices, one per upper-triangular adjacency
// mask (isomorphic copies included). n <= 7.
std::vector<Graph> labeled_graphs(int n, bool connected_only);

// One representative per isomorphism class on exactly n vertices. n <= 7.
std::vector<Graph> graphs_up_to_isomorphism(int n, bool connected_only);

// Connected block graphs on exactly n vertices, one per isomorphism class.
// n <= 11.
std::vector<Graph> connected_block_graphs(int n);

// Block graphs on 1..max_n vertices up to isomorphism. Disconnected ones are
// unions of connected pieces with at least two vertices each.
std::vector<Graph> block_graphs(int max_n, bool include_disconnected);

// Uniform over connected graphs on n labelled vertices (edge probability 1/2
// with rejection).
Graph random_connected_graph(std::mt19937_64& rng, int n);

}  // namespace nureg
