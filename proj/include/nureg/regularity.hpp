#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "nureg/binomial_edge.hpp"
#include "nureg/monomial.hpp"

namespace nureg {

// Vertex k < n stands for x_{k+1}, vertex n + k for y_{k+1}.
struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<std::uint64_t> facets;  // sorted
};

SimplicialComplex stanley_reisner(const SquarefreeMonomialIdeal& ideal);

// Reduced Betti numbers over GF(p): entry d + 1 holds dim H~_d for
// d = -1 .. dim. The void complex has all entries zero.
std::vector<long> reduced_homology(const SimplicialComplex& complex, int characteristic = 2);

struct BettiTable {
    int characteristic = 2;
    // (i, j) -> graded Betti number b_{i,j}(S/I); zero entries are omitted.
    std::map<std::pair<int, int>, long> entries;

    long at(int i, int j) const;
    int regularity() const;
    int projective_dimension() const;
    bool operator==(const BettiTable&) const = default;
};

struct HochsterOptions {
    int characteristic = 2;
    // Largest number of variables in the support of the generators.
    int max_variables = 16;
    // Only visit variable sets that are unions of generator supports; other
    // sets contribute nothing. Switching this off is for cross-checks.
    bool lcm_pruning = true;
};

bool is_supported_characteristic(int p);

// Throws UnitIdeal, TooLarge, ConfigError.
BettiTable betti_table(const SquarefreeMonomialIdeal& ideal, const HochsterOptions& opts = {});
int regularity(const SquarefreeMonomialIdeal& ideal, const HochsterOptions& opts = {});

int reg_binomial_edge(const Graph& g, const Labeling& lab, const HochsterOptions& opts = {});
int reg_binomial_edge(const Graph& g, const HochsterOptions& opts = {});

}  // namespace nureg
