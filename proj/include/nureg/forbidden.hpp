#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "nureg/path_family.hpp"

namespace nureg {

enum class ForbiddenKind { CompleteLadder, InternalStrand, InternalFork, DoubleFork };

std::string_view forbidden_kind_name(ForbiddenKind kind);

struct ForbiddenWitness {
    ForbiddenKind kind = ForbiddenKind::CompleteLadder;
    int from_path = 0;  // i
    int to_path = 0;    // j
    // The connecting induced path Q, oriented from the P_i side (empty for a
    // complete ladder).
    VertexSequence core;
    // Ladder: a b c d. Strand: Q0 Qr. Fork: a b c. Double fork: a b c d.
    std::vector<Vertex> anchors;
    VertexSet vertices;
    std::vector<Edge> edges;
};

struct ForbiddenSearch {
    // Require the witness to share no edge with the family's paths.
    bool edge_disjoint_only = false;
    // Look for one kind only instead of all kinds in their fixed order.
    std::optional<ForbiddenKind> only_kind;
};

// Searches complete ladders, internal strands, internal forks and double
// forks, in that order; within a kind the smallest (i, j, Q) is reported.
std::optional<ForbiddenWitness> find_forbidden(const Graph& g, const OrientedPathFamily& fam,
                                               const ForbiddenSearch& opts = {});

// Every forbidden structure of the given kind, in search order.
std::vector<ForbiddenWitness> all_forbidden(const Graph& g, const OrientedPathFamily& fam, ForbiddenKind kind,
                                            bool edge_disjoint_only = false);

// Re-checks a witness against the definitions, independently of the search.
bool check_witness(const Graph& g, const OrientedPathFamily& fam, const ForbiddenWitness& w,
                   bool edge_disjoint_only = false);

struct Strand {
    VertexSequence path;  // oriented from P_i to P_j
    bool internal = false;
};

// All strands from P_i to P_j under the family's orientations.
std::vector<Strand> find_strands(const Graph& g, const OrientedPathFamily& fam, int i, int j);

struct CorrespondenceResult {
    bool ok = true;
    std::optional<std::pair<int, int>> offending;
};

// For block graphs: the shortcut digraph has arc (i, j) exactly when a strand
// from P_i to P_j exists. Throws NotBlockGraph.
CorrespondenceResult arc_strand_correspondence_check(const Graph& g, const OrientedPathFamily& fam);

}  // namespace nureg
