#pragma once

#include <cstdint>
#include <vector>

#include "detail/path_search.hpp"
#include "nureg/path_family.hpp"

namespace nureg::detail {

// Lookup of which path owns each vertex, plus path vertex sets.
struct FamilyIndex {
    std::vector<int> owner;
    std::vector<VertexSet> masks;
    VertexSet support;

    FamilyIndex(const Graph& g, const OrientedPathFamily& fam)
        : owner(static_cast<std::size_t>(g.order()), -1) {
        for (int i = 0; i < fam.size(); ++i) {
            VertexSet m = fam.paths[i].vertex_set();
            masks.push_back(m);
            support |= m;
            for (Vertex v : m) owner[v] = i;
        }
    }

    // True when the newest vertex of a path completes some family path.
    bool completes_path(VertexSet members, Vertex newest) const {
        int k = owner[newest];
        return k >= 0 && masks[k].subset_of(members);
    }

    bool contains_some_path(VertexSet members) const {
        for (VertexSet m : masks)
            if (m.subset_of(members)) return true;
        return false;
    }
};

// Visits every induced path of the family's induced subgraph that starts at
// s and contains no family path. Pruning is sound because containment is
// preserved by extension.
template <class Visit>
bool for_each_shortcut_from(const Graph& g, const FamilyIndex& idx, Vertex s, Visit&& visit) {
    return for_each_induced_path_from(g, idx.support, s, [&](const PathState& st) {
        if (idx.completes_path(st.members, st.seq.back())) return Step::Prune;
        return visit(st);
    });
}

// For every pair of path endpoints, whether a shortcut path joins them.
// Endpoint 0 of a path is its first listed vertex, endpoint 1 its last.
class ShortcutTable {
public:
    ShortcutTable(const Graph& g, const OrientedPathFamily& fam) : l_(fam.size()), reach_(4 * l_ * l_, false) {
        FamilyIndex idx(g, fam);
        std::vector<std::vector<std::pair<int, int>>> at(static_cast<std::size_t>(g.order()));
        for (int j = 0; j < l_; ++j) {
            const auto& vs = fam.paths[j].vertices;
            at[vs.front()].emplace_back(j, 0);
            at[vs.back()].emplace_back(j, 1);
        }
        for (int i = 0; i < l_; ++i) {
            const auto& vs = fam.paths[i].vertices;
            if (vs.size() == 1) continue;
            for (int a = 0; a < 2; ++a) {
                Vertex s = a == 0 ? vs.front() : vs.back();
                for_each_shortcut_from(g, idx, s, [&](const PathState& st) {
                    if (st.seq.size() > 1)
                        for (auto [j, b] : at[st.seq.back()]) reach_[slot(i, a, j, b)] = true;
                    return Step::Extend;
                });
            }
        }
    }

    bool reach(int i, int a, int j, int b) const { return reach_[slot(i, a, j, b)]; }

    // Out-neighbourhoods of the shortcut digraph when path i starts at its
    // endpoint start_end[i].
    std::vector<std::uint64_t> arcs(const std::vector<int>& start_end) const {
        std::vector<std::uint64_t> out(static_cast<std::size_t>(l_), 0);
        for (int i = 0; i < l_; ++i)
            for (int j = 0; j < l_; ++j)
                if (reach(i, start_end[i], j, 1 - start_end[j])) out[i] |= std::uint64_t{1} << j;
        return out;
    }

private:
    std::size_t slot(int i, int a, int j, int b) const {
        return ((static_cast<std::size_t>(i) * 2 + a) * l_ + j) * 2 + b;
    }

    int l_;
    std::vector<bool> reach_;
};

// Positions for an acyclic digraph given by out-neighbourhood masks: every
// arc (i, j) has j placed before i; ties go to the smallest index. Empty when
// a cycle or loop exists.
inline std::vector<int> topological_positions(const std::vector<std::uint64_t>& out) {
    int l = static_cast<int>(out.size());
    std::uint64_t unplaced = l >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << l) - 1;
    std::vector<int> order;
    while (unplaced) {
        int pick = -1;
        for (int i = 0; i < l; ++i) {
            if (((unplaced >> i) & 1U) && (out[i] & unplaced) == 0) {
                pick = i;
                break;
            }
        }
        if (pick < 0) return {};
        order.push_back(pick);
        unplaced &= ~(std::uint64_t{1} << pick);
    }
    return order;
}

}  // namespace nureg::detail
