#include "nureg/forbidden.hpp"

#include <algorithm>

#include "detail/shortcuts.hpp"
#include "nureg/blocks.hpp"
#include "nureg/doip.hpp"
#include "nureg/error.hpp"

namespace nureg {

std::string_view forbidden_kind_name(ForbiddenKind kind) {
    switch (kind) {
        case ForbiddenKind::CompleteLadder: return "complete-ladder";
        case ForbiddenKind::InternalStrand: return "internal-strand";
        case ForbiddenKind::InternalFork: return "internal-fork";
        case ForbiddenKind::DoubleFork: return "double-fork";
    }
    return "unknown";
}

namespace {

Edge sorted_edge(Vertex u, Vertex v) { return {std::min(u, v), std::max(u, v)}; }

void add_core(ForbiddenWitness& w) {
    for (std::size_t k = 0; k < w.core.size(); ++k) {
        w.vertices.insert(w.core[k]);
        if (k + 1 < w.core.size()) w.edges.push_back(sorted_edge(w.core[k], w.core[k + 1]));
    }
}

void add_spoke(ForbiddenWitness& w, Vertex hub, Vertex tip) {
    w.vertices.insert(tip);
    w.edges.push_back(sorted_edge(hub, tip));
}

class Searcher {
public:
    Searcher(const Graph& g, const OrientedPathFamily& fam, bool edge_disjoint)
        : g_(g), fam_(fam), idx_(g, fam), edge_disjoint_(edge_disjoint) {}

    // Calls emit for each witness of the kind in search order; stops when
    // emit returns false.
    template <class Emit>
    void run(ForbiddenKind kind, Emit&& emit) {
        int l = fam_.size();
        if (kind == ForbiddenKind::CompleteLadder) {
            for (int i = 0; i < l; ++i)
                for (int j = i + 1; j < l; ++j)
                    if (!ladders(i, j, emit)) return;
            return;
        }
        for (int i = 0; i < l; ++i) {
            for (int j = 0; j < l; ++j) {
                if (i == j) continue;
                bool go = true;
                switch (kind) {
                    case ForbiddenKind::InternalStrand: go = strands(i, j, emit); break;
                    case ForbiddenKind::InternalFork: go = forks(i, j, emit); break;
                    case ForbiddenKind::DoubleFork: go = double_forks(i, j, emit); break;
                    default: break;
                }
                if (!go) return;
            }
        }
    }

private:
    // Visits induced paths from s inside `allowed` that contain no family
    // path (and, when asked, use no path edge).
    template <class Visit>
    bool walk(Vertex s, VertexSet allowed, Visit&& visit) {
        return detail::for_each_induced_path_from(g_, allowed, s, [&](const detail::PathState& st) {
            Vertex last = st.seq.back();
            if (idx_.completes_path(st.members, last)) return detail::Step::Prune;
            if (edge_disjoint_ && st.seq.size() > 1) {
                Vertex prev = st.seq[st.seq.size() - 2];
                if (idx_.owner[prev] >= 0 && idx_.owner[prev] == idx_.owner[last]) return detail::Step::Prune;
            }
            return visit(st);
        });
    }

    std::vector<Vertex> two_neighbours_in(Vertex v, int j) const {
        std::vector<Vertex> out;
        for (Vertex u : g_.neighbors(v) & idx_.masks[j]) {
            out.push_back(u);
            if (out.size() == 2) break;
        }
        return out;
    }

    template <class Emit>
    bool ladders(int i, int j, Emit& emit) {
        for (auto [a, b] : fam_.paths[i].edges()) {
            for (auto [c, d] : fam_.paths[j].edges()) {
                if (!(g_.adjacent(a, c) && g_.adjacent(a, d) && g_.adjacent(b, c) && g_.adjacent(b, d))) continue;
                ForbiddenWitness w;
                w.kind = ForbiddenKind::CompleteLadder;
                w.from_path = i;
                w.to_path = j;
                w.anchors = {a, b, c, d};
                for (Vertex v : w.anchors) w.vertices.insert(v);
                w.edges = {sorted_edge(a, b), sorted_edge(a, c), sorted_edge(a, d),
                           sorted_edge(b, c), sorted_edge(b, d), sorted_edge(c, d)};
                std::sort(w.edges.begin(), w.edges.end());
                if (!emit(std::move(w))) return false;
            }
        }
        return true;
    }

    template <class Emit>
    bool strands(int i, int j, Emit& emit) {
        VertexSet pi = idx_.masks[i];
        VertexSet pj = idx_.masks[j];
        VertexSet target = fam_.paths[j].interior();
        for (Vertex a : fam_.paths[i].interior()) {
            VertexSet allowed = (idx_.support - pi - pj) | VertexSet::single(a) | target;
            bool stopped = walk(a, allowed, [&](const detail::PathState& st) {
                Vertex last = st.seq.back();
                if (!target.contains(last)) return detail::Step::Extend;
                ForbiddenWitness w;
                w.kind = ForbiddenKind::InternalStrand;
                w.from_path = i;
                w.to_path = j;
                w.core = st.seq;
                w.anchors = {a, last};
                add_core(w);
                return emit(std::move(w)) ? detail::Step::Prune : detail::Step::Stop;
            });
            if (stopped) return false;
        }
        return true;
    }

    template <class Emit>
    bool forks(int i, int j, Emit& emit) {
        VertexSet allowed_base = idx_.support - idx_.masks[i] - idx_.masks[j];
        for (Vertex a : fam_.paths[i].interior()) {
            bool stopped = walk(a, allowed_base | VertexSet::single(a), [&](const detail::PathState& st) {
                Vertex last = st.seq.back();
                auto bc = two_neighbours_in(last, j);
                if (bc.size() < 2) return detail::Step::Extend;
                ForbiddenWitness w;
                w.kind = ForbiddenKind::InternalFork;
                w.from_path = i;
                w.to_path = j;
                w.core = st.seq;
                w.anchors = {a, bc[0], bc[1]};
                add_core(w);
                add_spoke(w, last, bc[0]);
                add_spoke(w, last, bc[1]);
                return emit(std::move(w)) ? detail::Step::Extend : detail::Step::Stop;
            });
            if (stopped) return false;
        }
        return true;
    }

    template <class Emit>
    bool double_forks(int i, int j, Emit& emit) {
        VertexSet allowed = idx_.support - idx_.masks[i] - idx_.masks[j];
        for (Vertex s : allowed) {
            auto ab = two_neighbours_in(s, i);
            if (ab.size() < 2) continue;
            bool stopped = walk(s, allowed, [&](const detail::PathState& st) {
                Vertex last = st.seq.back();
                auto cd = two_neighbours_in(last, j);
                if (cd.size() < 2) return detail::Step::Extend;
                ForbiddenWitness w;
                w.kind = ForbiddenKind::DoubleFork;
                w.from_path = i;
                w.to_path = j;
                w.core = st.seq;
                w.anchors = {ab[0], ab[1], cd[0], cd[1]};
                add_core(w);
                add_spoke(w, s, ab[0]);
                add_spoke(w, s, ab[1]);
                add_spoke(w, last, cd[0]);
                add_spoke(w, last, cd[1]);
                return emit(std::move(w)) ? detail::Step::Extend : detail::Step::Stop;
            });
            if (stopped) return false;
        }
        return true;
    }

    const Graph& g_;
    const OrientedPathFamily& fam_;
    detail::FamilyIndex idx_;
    bool edge_disjoint_;
};

constexpr ForbiddenKind kSearchOrder[] = {ForbiddenKind::CompleteLadder, ForbiddenKind::InternalStrand,
                                          ForbiddenKind::InternalFork, ForbiddenKind::DoubleFork};

}  // namespace

std::optional<ForbiddenWitness> find_forbidden(const Graph& g, const OrientedPathFamily& fam,
                                               const ForbiddenSearch& opts) {
    validate_family(g, fam);
    Searcher s(g, fam, opts.edge_disjoint_only);
    std::optional<ForbiddenWitness> found;
    for (ForbiddenKind kind : kSearchOrder) {
        if (opts.only_kind && *opts.only_kind != kind) continue;
        s.run(kind, [&](ForbiddenWitness w) {
            found = std::move(w);
            return false;
        });
        if (found) break;
    }
    return found;
}

std::vector<ForbiddenWitness> all_forbidden(const Graph& g, const OrientedPathFamily& fam, ForbiddenKind kind,
                                            bool edge_disjoint_only) {
    validate_family(g, fam);
    Searcher s(g, fam, edge_disjoint_only);
    std::vector<ForbiddenWitness> out;
    s.run(kind, [&](ForbiddenWitness w) {
        out.push_back(std::move(w));
        return true;
    });
    return out;
}

bool check_witness(const Graph& g, const OrientedPathFamily& fam, const ForbiddenWitness& w, bool edge_disjoint_only) {
    int l = fam.size();
    if (w.from_path < 0 || w.from_path >= l || w.to_path < 0 || w.to_path >= l || w.from_path == w.to_path) return false;
    const OrientedPath& pi = fam.paths[w.from_path];
    const OrientedPath& pj = fam.paths[w.to_path];
    VertexSet vi = pi.vertex_set();
    VertexSet vj = pj.vertex_set();
    auto distinct_in = [](Vertex a, Vertex b, VertexSet s) { return a != b && s.contains(a) && s.contains(b); };

    if (w.kind == ForbiddenKind::CompleteLadder) {
        if (w.anchors.size() != 4) return false;
        Vertex a = w.anchors[0], b = w.anchors[1], c = w.anchors[2], d = w.anchors[3];
        if (!distinct_in(a, b, vi) || !distinct_in(c, d, vj)) return false;
        for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y)
                if (!g.adjacent(w.anchors[x], w.anchors[y])) return false;
        return true;
    }

    const VertexSequence& q = w.core;
    if (q.empty() || !is_induced_path(g, q)) return false;
    VertexSet vq = vertex_set_of(q);
    if (!vq.subset_of(fam.support())) return false;
    for (const auto& p : fam.paths) {
        // Q contains P_k when P_k appears in Q as a run of consecutive vertices.
        auto it = std::search(q.begin(), q.end(), p.vertices.begin(), p.vertices.end());
        auto rit = std::search(q.begin(), q.end(), p.vertices.rbegin(), p.vertices.rend());
        if (it != q.end() || rit != q.end()) return false;
    }
    if (edge_disjoint_only) {
        for (std::size_t k = 0; k + 1 < q.size(); ++k)
            for (const auto& p : fam.paths)
                for (auto e : p.edges())
                    if (e == sorted_edge(q[k], q[k + 1])) return false;
    }
    Vertex q0 = q.front();
    Vertex qr = q.back();
    switch (w.kind) {
        case ForbiddenKind::InternalStrand:
            return pi.interior().contains(q0) && pj.interior().contains(qr) && (vq & vi) == VertexSet::single(q0) &&
                   (vq & vj) == VertexSet::single(qr);
        case ForbiddenKind::InternalFork: {
            if (w.anchors.size() != 3) return false;
            Vertex b = w.anchors[1], c = w.anchors[2];
            return w.anchors[0] == q0 && pi.interior().contains(q0) && (vq & vi) == VertexSet::single(q0) &&
                   !vq.intersects(vj) && distinct_in(b, c, vj) && g.adjacent(qr, b) && g.adjacent(qr, c);
        }
        case ForbiddenKind::DoubleFork: {
            if (w.anchors.size() != 4) return false;
            Vertex a = w.anchors[0], b = w.anchors[1], c = w.anchors[2], d = w.anchors[3];
            return distinct_in(a, b, vi) && distinct_in(c, d, vj) && g.adjacent(q0, a) && g.adjacent(q0, b) &&
                   g.adjacent(qr, c) && g.adjacent(qr, d) && !vq.intersects(vi | vj);
        }
        default: return false;
    }
}

std::vector<Strand> find_strands(const Graph& g, const OrientedPathFamily& fam, int i, int j) {
    validate_family(g, fam);
    if (i < 0 || j < 0 || i >= fam.size() || j >= fam.size() || i == j)
        throw Error(ErrorCode::InvalidArgument, "strands need two different path indices");
    detail::FamilyIndex idx(g, fam);
    const OrientedPath& pi = fam.paths[i];
    const OrientedPath& pj = fam.paths[j];
    VertexSet targets = pj.vertex_set() - VertexSet::single(pj.start);
    VertexSet base = idx.support - pi.vertex_set() - pj.vertex_set();
    std::vector<Strand> out;
    for (Vertex a : pi.vertex_set() - VertexSet::single(pi.end)) {
        detail::for_each_induced_path_from(g, base | VertexSet::single(a) | targets, a, [&](const detail::PathState& st) {
            Vertex last = st.seq.back();
            if (idx.completes_path(st.members, last)) return detail::Step::Prune;
            if (!targets.contains(last)) return detail::Step::Extend;
            out.push_back(Strand{st.seq, pi.interior().contains(a) && pj.interior().contains(last)});
            return detail::Step::Prune;
        });
    }
    return out;
}

CorrespondenceResult arc_strand_correspondence_check(const Graph& g, const OrientedPathFamily& fam) {
    if (!is_block_graph(g)) throw Error(ErrorCode::NotBlockGraph, "arc/strand correspondence needs a block graph");
    DirectedMultigraph k = build_k(g, fam);
    CorrespondenceResult r;
    for (int i = 0; i < fam.size(); ++i) {
        for (int j = 0; j < fam.size(); ++j) {
            if (i == j) continue;
            bool arc = k.multiplicity(i, j) > 0;
            bool strand = !find_strands(g, fam, i, j).empty();
            if (arc != strand) {
                r.ok = false;
                r.offending = std::make_pair(i, j);
                return r;
            }
        }
    }
    return r;
}

}  // namespace nureg
