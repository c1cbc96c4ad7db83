#pragma once

#include <json.hpp>

#include "nureg/binomial_edge.hpp"
#include "nureg/blocks.hpp"
#include "nureg/doip.hpp"
#include "nureg/forbidden.hpp"
#include "nureg/regularity.hpp"

namespace nureg {

// All vertices and path indices are written 1-based.
nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const OrientedPathFamily& fam);
nlohmann::json to_json(const DirectedMultigraph& k);
nlohmann::json to_json(const AcyclicityResult& r);
nlohmann::json to_json(const DoipResult& r);
nlohmann::json to_json(const ForbiddenWitness& w);
nlohmann::json to_json(const SquarefreeMonomialIdeal& ideal);
nlohmann::json to_json(const BettiTable& table);
nlohmann::json to_json(const BlockDecomposition& blocks);
nlohmann::json labeling_json(const Labeling& lab);

nlohmann::json vertices_json(std::span<const Vertex> seq);
nlohmann::json vertices_json(VertexSet set);

}  // namespace nureg
