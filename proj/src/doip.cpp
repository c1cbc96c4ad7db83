#include "nureg/doip.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "detail/shortcuts.hpp"

namespace nureg {

int DirectedMultigraph::multiplicity(int i, int j) const {
    return static_cast<int>(std::count_if(arcs.begin(), arcs.end(), [&](const Arc& a) { return a.from == i && a.to == j; }));
}

bool DirectedMultigraph::has_loop() const {
    return std::any_of(arcs.begin(), arcs.end(), [](const Arc& a) { return a.from == a.to; });
}

bool DirectedMultigraph::has_multiarc() const {
    std::set<std::pair<int, int>> seen;
    for (const Arc& a : arcs)
        if (!seen.emplace(a.from, a.to).second) return true;
    return false;
}

bool DirectedMultigraph::has_two_cycle() const {
    std::set<std::pair<int, int>> seen;
    for (const Arc& a : arcs) seen.emplace(a.from, a.to);
    for (auto [i, j] : seen)
        if (i != j && seen.count({j, i})) return true;
    return false;
}

DirectedMultigraph build_k(const Graph& g, const OrientedPathFamily& fam) {
    validate_family(g, fam);
    detail::FamilyIndex idx(g, fam);
    DirectedMultigraph k;
    k.vertex_count = fam.size();
    std::vector<std::vector<int>> ending_at(static_cast<std::size_t>(g.order()));
    for (int j = 0; j < fam.size(); ++j) ending_at[fam.paths[j].end].push_back(j);
    for (int i = 0; i < fam.size(); ++i) {
        if (fam.paths[i].singleton()) continue;
        std::vector<Arc> found;
        detail::for_each_shortcut_from(g, idx, fam.paths[i].start, [&](const detail::PathState& st) {
            if (st.seq.size() > 1)
                for (int j : ending_at[st.seq.back()]) found.push_back(Arc{i, j, st.seq});
            return detail::Step::Extend;
        });
        std::stable_sort(found.begin(), found.end(), [](const Arc& a, const Arc& b) { return a.to < b.to; });
        k.arcs.insert(k.arcs.end(), found.begin(), found.end());
    }
    return k;
}

namespace {

std::vector<int> shortest_cycle(int n, const std::vector<std::uint64_t>& out) {
    for (int v = 0; v < n; ++v)
        if ((out[v] >> v) & 1U) return {v, v};
    std::vector<int> best;
    for (int s = 0; s < n; ++s) {
        std::vector<int> parent(static_cast<std::size_t>(n), -2);
        std::deque<int> q{s};
        parent[s] = -1;
        bool done = false;
        while (!q.empty() && !done) {
            int u = q.front();
            q.pop_front();
            for (int w = 0; w < n && !done; ++w) {
                if (!((out[u] >> w) & 1U)) continue;
                if (w == s) {
                    std::vector<int> cyc;
                    for (int x = u; x != -1; x = parent[x]) cyc.push_back(x);
                    std::reverse(cyc.begin(), cyc.end());
                    cyc.push_back(s);
                    if (best.empty() || cyc.size() < best.size()) best = cyc;
                    done = true;
                } else if (parent[w] == -2) {
                    parent[w] = u;
                    q.push_back(w);
                }
            }
        }
    }
    return best;
}

AcyclicityResult acyclicity_from_masks(const std::vector<std::uint64_t>& out) {
    AcyclicityResult r;
    r.order = detail::topological_positions(out);
    r.acyclic = out.empty() || !r.order.empty();
    if (!r.acyclic) r.cycle = shortest_cycle(static_cast<int>(out.size()), out);
    return r;
}

std::optional<std::pair<int, int>> order_violation(const std::vector<std::uint64_t>& out, const std::vector<int>& order) {
    for (std::size_t p = 0; p < order.size(); ++p)
        for (std::size_t q = p; q < order.size(); ++q)
            if ((out[order[p]] >> order[q]) & 1U) return std::make_pair(order[p], order[q]);
    return std::nullopt;
}

}  // namespace

AcyclicityResult is_directed_acyclic(const DirectedMultigraph& k) {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(k.vertex_count), 0);
    for (const Arc& a : k.arcs) out[a.from] |= std::uint64_t{1} << a.to;
    return acyclicity_from_masks(out);
}

DoipResult is_doip(const Graph& g, const OrientedPathFamily& fam, OrientationMode mode) {
    validate_family(g, fam);
    detail::ShortcutTable table(g, fam);
    int l = fam.size();
    std::vector<int> start_end(static_cast<std::size_t>(l));
    std::vector<int> free;
    for (int i = 0; i < l; ++i) {
        const OrientedPath& p = fam.paths[i];
        start_end[i] = p.start == p.vertices.front() ? 0 : 1;
        if (!p.singleton()) free.push_back(i);
    }

    DoipResult result;
    std::uint64_t tries = mode == OrientationMode::Fixed ? 1 : std::uint64_t{1} << free.size();
    std::uint64_t prev_gray = 0;
    for (std::uint64_t step = 0; step < tries; ++step) {
        std::uint64_t gray = step ^ (step >> 1);
        std::uint64_t changed = gray ^ prev_gray;
        prev_gray = gray;
        for (std::size_t b = 0; b < free.size(); ++b)
            if ((changed >> b) & 1U) start_end[free[b]] ^= 1;

        auto out = table.arcs(start_end);
        OrientationAttempt attempt;
        for (int i = 0; i < l; ++i) {
            const auto& vs = fam.paths[i].vertices;
            attempt.starts.push_back(start_end[i] == 0 ? vs.front() : vs.back());
        }
        AcyclicityResult acyc = acyclicity_from_masks(out);
        bool ok = acyc.acyclic;
        std::vector<int> order = acyc.order;
        if (ok && mode == OrientationMode::Fixed && fam.order) {
            attempt.order_violation = order_violation(out, *fam.order);
            ok = !attempt.order_violation.has_value();
            order = *fam.order;
        }
        if (ok) {
            result.doip = true;
            result.family = fam;
            for (int i = 0; i < l; ++i) {
                OrientedPath& p = result.family.paths[i];
                p.start = attempt.starts[i];
                p.end = start_end[i] == 0 ? p.vertices.back() : p.vertices.front();
            }
            result.family.order = order;
            return result;
        }
        attempt.cycle = acyc.cycle;
        result.failures.push_back(std::move(attempt));
    }
    result.family = fam;
    return result;
}

}  // namespace nureg
