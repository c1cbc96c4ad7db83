#include "nureg/nu.hpp"

#include <algorithm>

#include "detail/shortcuts.hpp"
#include "nureg/blocks.hpp"
#include "nureg/doip.hpp"
#include "nureg/error.hpp"
#include "nureg/forbidden.hpp"

namespace nureg {

namespace {

bool admits_order(const Graph& g, const OrientedPathFamily& fam) {
    detail::ShortcutTable table(g, fam);
    int l = fam.size();
    std::vector<int> start_end(static_cast<std::size_t>(l), 0);
    std::vector<int> free;
    for (int i = 0; i < l; ++i)
        if (!fam.paths[i].singleton()) free.push_back(i);
    std::uint64_t prev = 0;
    for (std::uint64_t step = 0; step < (std::uint64_t{1} << free.size()); ++step) {
        std::uint64_t gray = step ^ (step >> 1);
        std::uint64_t changed = gray ^ prev;
        prev = gray;
        for (std::size_t b = 0; b < free.size(); ++b)
            if ((changed >> b) & 1U) start_end[free[b]] ^= 1;
        auto out = table.arcs(start_end);
        if (!detail::topological_positions(out).empty() || l == 0) return true;
    }
    return false;
}

class Search {
public:
    Search(const Graph& g, const NuOptions& opts) : g_(g), opts_(opts) {
        for (auto& seq : enumerate_induced_paths(g))
            if (seq.size() >= 2 || opts.allow_singletons) cands_.push_back(OrientedPath::forward(seq));
        std::stable_sort(cands_.begin(), cands_.end(),
                         [](const OrientedPath& a, const OrientedPath& b) { return a.edge_count() > b.edge_count(); });
        for (auto& p : cands_) masks_.push_back(p.vertex_set());
        ceiling_ = std::max(0, g.order() - 1);
    }

    OrientedPathFamily run() {
        OrientedPathFamily fam;
        dfs(0, VertexSet{}, fam, 0);
        return best_;
    }

    int best_value() const { return best_value_; }

private:
    bool feasible(const OrientedPathFamily& fam) const {
        if (opts_.method == NuMethod::General) return admits_order(g_, fam);
        return !find_forbidden(g_, fam).has_value();
    }

    void dfs(std::size_t from, VertexSet used, OrientedPathFamily& fam, int total) {
        if (total > best_value_) {
            best_value_ = total;
            best_ = fam;
        }
        if (best_value_ >= ceiling_) return;
        for (std::size_t k = from; k < cands_.size(); ++k) {
            if (masks_[k].intersects(used)) continue;
            VertexSet room;
            for (std::size_t r = k; r < cands_.size(); ++r)
                if (!masks_[r].intersects(used)) room |= masks_[r];
            if (total + room.size() - 1 <= best_value_) return;
            fam.paths.push_back(cands_[k]);
            if (feasible(fam)) dfs(k + 1, used | masks_[k], fam, total + cands_[k].edge_count());
            fam.paths.pop_back();
            if (best_value_ >= ceiling_) return;
        }
    }

    const Graph& g_;
    NuOptions opts_;
    std::vector<OrientedPath> cands_;
    std::vector<VertexSet> masks_;
    int ceiling_ = 0;
    int best_value_ = 0;
    OrientedPathFamily best_;
};

}  // namespace

NuResult nu(const Graph& g, const NuOptions& opts) {
    if (g.order() > opts.max_vertices)
        throw Error(ErrorCode::TooLarge, "nu search limited to " + std::to_string(opts.max_vertices) + " vertices");
    if (opts.method == NuMethod::Block && !is_block_graph(g))
        throw Error(ErrorCode::NotBlockGraph, "block method needs a block graph");
    Search s(g, opts);
    OrientedPathFamily fam = s.run();
    NuResult r;
    r.value = s.best_value();
    DoipResult d = is_doip(g, fam, OrientationMode::Search);
    r.certificate = canonical_family(d.doip ? d.family : fam);
    return r;
}

NuResult nu(const Graph& g, NuMethod method) {
    NuOptions opts;
    opts.method = method;
    return nu(g, opts);
}

NuBounds nu_bounds(const Graph& g) {
    NuBounds b;
    b.lower = std::max(0, longest_induced_path_length(g));
    if (is_block_graph(g))
        b.upper = structure_predicates(g).clique_count;
    else
        b.upper = std::min(g.edge_count(), std::max(0, g.order() - 1));
    return b;
}

Vertex completion_descent_check(const Graph& g) {
    if (!is_block_graph(g)) throw Error(ErrorCode::NotBlockGraph, "completion descent needs a block graph");
    VertexSet cuts = block_decomposition(g).cut_vertices;
    if (cuts.empty()) throw Error(ErrorCode::NoCutVertex, "graph is a disjoint union of complete graphs");
    int base = nu(g, NuMethod::Block).value;
    for (Vertex c : cuts)
        if (nu(vertex_completion(g, c), NuMethod::Block).value < base) return c;
    throw Error(ErrorCode::SpecInvariantViolated, "no cut vertex lowers nu under completion");
}

}  // namespace nureg
