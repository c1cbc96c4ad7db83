#pragma once

#include <string>
#include <vector>

#include "nureg/graph.hpp"
#include "nureg/path_family.hpp"

namespace fixtures {

using nureg::Graph;

// Two paths [1,3,2] and [4,6,5] joined by the edge 3-4.
inline Graph h_tree() { return Graph::from_edge_list(6, {{1, 3}, {2, 3}, {3, 4}, {4, 6}, {5, 6}}); }

// Three graphs in which [1,3,2] and [4,6,5] are not DOIP.
inline Graph not_doip_a() { return Graph::from_edge_list(6, {{1, 3}, {2, 3}, {3, 6}, {4, 6}, {5, 6}}); }
inline Graph not_doip_b() {
    return Graph::from_edge_list(6, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {4, 6}, {5, 6}});
}
inline Graph not_doip_c() { return Graph::from_edge_list(6, {{1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}}); }

// Triangle-free graph with the paths [1,2] and [3,5,4].
inline Graph square_tail() { return Graph::from_edge_list(5, {{1, 2}, {1, 3}, {2, 5}, {3, 5}, {4, 5}}); }

// Block graph on 29 vertices used for the forbidden structures.
inline Graph gallery() {
    return Graph::from_edge_list(
        29, {{1, 2},   {2, 3},   {2, 5},   {3, 5},   {4, 5},   {5, 6},   {5, 10},  {7, 8},   {7, 9},
             {8, 9},   {9, 10},  {10, 11}, {11, 13}, {12, 13}, {12, 15}, {13, 15}, {14, 15}, {15, 16},
             {15, 18}, {17, 18}, {17, 19}, {17, 20}, {18, 19}, {18, 20}, {19, 20}, {19, 21}, {21, 22},
             {21, 25}, {22, 23}, {22, 25}, {24, 25}, {25, 26}, {25, 27}, {25, 28}, {27, 28}, {28, 29}});
}

// The eleven paths on the gallery graph, each oriented from its first vertex.
inline nureg::OrientedPathFamily gallery_family() {
    return nureg::parse_family_string(
        "1 2 3\n4 5 6\n7 8\n9 10 11\n12 13\n14 15 16\n17 18\n19 20\n21 22 23\n24 25 26\n27 28 29\n");
}

inline nureg::OrientedPathFamily family(const std::string& text) { return nureg::parse_family_string(text); }

// Triangle with a pendant edge at every corner.
inline Graph net() { return Graph::from_edge_list(6, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 5}, {3, 6}}); }

inline Graph claw() { return nureg::star_graph(3); }

inline Graph two_triangles() { return Graph::from_edge_list(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}}); }

// Vertex lists 1-based -> 0-based.
inline std::vector<int> zero_based(std::vector<int> v) {
    for (int& x : v) --x;
    return v;
}

}  // namespace fixtures
