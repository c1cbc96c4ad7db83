#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nureg/path_family.hpp"

namespace nureg {

struct Arc {
    int from = 0;
    int to = 0;
    VertexSequence witness;  // the shortcut path that produces the arc
};

// Shortcut digraph of an oriented family: vertices are path indices, and every
// induced path of the family's induced subgraph from the start of P_i to the
// end of P_j that contains no family path gives one arc (i, j).
struct DirectedMultigraph {
    int vertex_count = 0;
    std::vector<Arc> arcs;

    int multiplicity(int i, int j) const;
    bool has_loop() const;
    bool has_multiarc() const;
    bool has_two_cycle() const;
};

DirectedMultigraph build_k(const Graph& g, const OrientedPathFamily& fam);

struct AcyclicityResult {
    bool acyclic = false;
    // When acyclic: vertices by position, each arc (i, j) has j before i.
    std::vector<int> order;
    // Otherwise a shortest directed cycle v0 v1 ... v0 (a loop is v0 v0).
    std::vector<int> cycle;
};

AcyclicityResult is_directed_acyclic(const DirectedMultigraph& k);

enum class OrientationMode { Fixed, Search };

struct OrientationAttempt {
    std::vector<Vertex> starts;  // start vertex of every path
    std::vector<int> cycle;
    // Set when a supplied order was checked and an arc runs against it.
    std::optional<std::pair<int, int>> order_violation;
};

struct DoipResult {
    bool doip = false;
    // The family with the accepted orientations and an order filled in.
    OrientedPathFamily family;
    std::vector<OrientationAttempt> failures;
};

// Fixed: checks the given orientations (and the order, when one is supplied).
// Search: singletons stay fixed, the remaining orientations are tried in Gray
// code order starting from the given ones; the first acyclic choice wins.
DoipResult is_doip(const Graph& g, const OrientedPathFamily& fam, OrientationMode mode);

}  // namespace nureg
