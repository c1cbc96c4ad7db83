#pragma once

#include <span>
#include <vector>

#include "nureg/monomial.hpp"
#include "nureg/path_family.hpp"

namespace nureg {

// labeling[v] is the label (1..n) given to vertex v.
using Labeling = std::vector<int>;

Labeling identity_labeling(int n);
bool is_labeling(const Labeling& lab, int n);

// seq runs from the vertex labelled i to the vertex labelled j with i < j.
bool is_admissible_path(const Graph& g, const Labeling& lab, std::span<const Vertex> seq);

// x_i y_j times x_k for interior labels k > j and y_l for interior labels l < i.
Monomial admissible_monomial(const Labeling& lab, std::span<const Vertex> seq);

// Lex initial ideal of the binomial edge ideal (x1 > ... > xn > y1 > ... > yn),
// generated by the monomials of all admissible paths; variables are indexed
// by label.
SquarefreeMonomialIdeal initial_ideal(const Graph& g, const Labeling& lab);
SquarefreeMonomialIdeal initial_ideal(const Graph& g);

// Generators whose support lies in w.
SquarefreeMonomialIdeal restrict_ideal(const SquarefreeMonomialIdeal& ideal, const VariableSet& w);

// Labels the path in position p (0-based) with 2p+1 at its start and 2p+2 at
// its end, and the remaining vertices 2l+1, 2l+2, ... in increasing order.
// Uses the family's order, or the one forced by its orientations. Throws
// NotDoip or SingletonPath.
Labeling doip_labeling(const Graph& g, const OrientedPathFamily& fam);

struct CompleteIntersectionCheck {
    bool holds = false;
    OrientedPathFamily family;  // with the orientations and order used
    Labeling labeling;
    std::vector<Monomial> path_monomials;
    SquarefreeMonomialIdeal restricted;
};

// Restricting the initial ideal (under the DOIP labelling) to the variables
// of the path monomials leaves exactly those monomials, with disjoint
// supports. Throws NotDoip.
CompleteIntersectionCheck complete_intersection_check(const Graph& g, const OrientedPathFamily& fam);
bool verify_complete_intersection(const Graph& g, const OrientedPathFamily& fam);

}  // namespace nureg
