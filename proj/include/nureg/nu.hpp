#pragma once

#include "nureg/path_family.hpp"

namespace nureg {

enum class NuMethod {
    // Families are accepted when some orientation makes the shortcut digraph acyclic.
    General,
    // Block graphs only: families are accepted when they have no forbidden structure.
    Block,
};

struct NuOptions {
    NuMethod method = NuMethod::General;
    // Also consider single-vertex paths. They never change the optimum; the
    // switch exists so that this can be checked.
    bool allow_singletons = false;
    // Refuse graphs with more vertices than this (TooLarge).
    int max_vertices = 20;
};

struct NuResult {
    int value = 0;
    // An optimal family with orientations and order, paths sorted by
    // smallest vertex.
    OrientedPathFamily certificate;
};

// Largest total number of edges of a family of vertex-disjoint induced paths
// admitting orientations and an order with no shortcut paths.
NuResult nu(const Graph& g, const NuOptions& opts = {});
NuResult nu(const Graph& g, NuMethod method);

struct NuBounds {
    int lower = 0;  // longest induced path length
    int upper = 0;  // number of maximal cliques for block graphs, else min(|E|, n - 1)
};

NuBounds nu_bounds(const Graph& g);

// First cut vertex c (smallest index) with nu(G_c) < nu(G), where G_c is the
// vertex completion at c. Throws NotBlockGraph, NoCutVertex, or
// SpecInvariantViolated when no cut vertex decreases nu.
Vertex completion_descent_check(const Graph& g);

}  // namespace nureg
