#include "nureg/binomial_edge.hpp"

#include <algorithm>
#include <numeric>

#include "detail/path_search.hpp"
#include "nureg/doip.hpp"
#include "nureg/error.hpp"

namespace nureg {

Labeling identity_labeling(int n) {
    Labeling lab(static_cast<std::size_t>(n));
    std::iota(lab.begin(), lab.end(), 1);
    return lab;
}

bool is_labeling(const Labeling& lab, int n) {
    if (static_cast<int>(lab.size()) != n) return false;
    std::vector<int> sorted = lab;
    std::sort(sorted.begin(), sorted.end());
    return sorted == identity_labeling(n);
}

namespace {

void require_labeling(const Graph& g, const Labeling& lab) {
    if (!is_labeling(lab, g.order())) throw Error(ErrorCode::InvalidArgument, "labeling is not a permutation of 1..n");
}

bool is_walk(const Graph& g, const std::vector<Vertex>& seq) {
    for (std::size_t k = 0; k + 1 < seq.size(); ++k)
        if (!g.adjacent(seq[k], seq[k + 1])) return false;
    return true;
}

constexpr std::size_t kLiteralSubsetLimit = 12;

}  // namespace

bool is_admissible_path(const Graph& g, const Labeling& lab, std::span<const Vertex> seq) {
    require_labeling(g, lab);
    if (seq.size() < 2) return false;
    for (Vertex v : seq)
        if (v < 0 || v >= g.order()) return false;
    if (vertex_set_of(seq).size() != static_cast<int>(seq.size())) return false;
    std::vector<Vertex> path(seq.begin(), seq.end());
    if (!is_walk(g, path)) return false;
    int i = lab[seq.front()];
    int j = lab[seq.back()];
    if (i >= j) return false;
    for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
        int l = lab[seq[k]];
        if (l > i && l < j) return false;
    }
    std::size_t inner = seq.size() - 2;
    if (inner > kLiteralSubsetLimit) return is_induced_path(g, seq);
    // No proper subset of the interior, kept in order, may join i to j.
    for (std::uint32_t keep = 0; keep + 1 < (std::uint32_t{1} << inner); ++keep) {
        std::vector<Vertex> shorter{seq.front()};
        for (std::size_t k = 0; k < inner; ++k)
            if ((keep >> k) & 1U) shorter.push_back(seq[k + 1]);
        shorter.push_back(seq.back());
        if (is_walk(g, shorter)) return false;
    }
    return true;
}

Monomial admissible_monomial(const Labeling& lab, std::span<const Vertex> seq) {
    int i = lab[seq.front()];
    int j = lab[seq.back()];
    Monomial m;
    m.x |= std::uint64_t{1} << (i - 1);
    m.y |= std::uint64_t{1} << (j - 1);
    for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
        int l = lab[seq[k]];
        if (l > j) m.x |= std::uint64_t{1} << (l - 1);
        if (l < i) m.y |= std::uint64_t{1} << (l - 1);
    }
    return m;
}

SquarefreeMonomialIdeal initial_ideal(const Graph& g, const Labeling& lab) {
    require_labeling(g, lab);
    int n = g.order();
    std::vector<Vertex> vertex_of(static_cast<std::size_t>(n) + 1);
    for (Vertex v = 0; v < n; ++v) vertex_of[lab[v]] = v;
    SquarefreeMonomialIdeal ideal;
    ideal.n = n;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            VertexSet allowed;
            for (Vertex v = 0; v < n; ++v)
                if (lab[v] < i || lab[v] > j) allowed.insert(v);
            Vertex s = vertex_of[i];
            Vertex t = vertex_of[j];
            allowed.insert(s);
            allowed.insert(t);
            detail::for_each_induced_path_between(g, allowed, s, t, [&](const detail::PathState& st) {
                if (!is_admissible_path(g, lab, st.seq))
                    throw Error(ErrorCode::SpecInvariantViolated, "induced path failed the admissibility check");
                ideal.generators.push_back(admissible_monomial(lab, st.seq));
                return detail::Step::Extend;
            });
        }
    }
    ideal.normalize();
    return ideal;
}

SquarefreeMonomialIdeal initial_ideal(const Graph& g) { return initial_ideal(g, identity_labeling(g.order())); }

SquarefreeMonomialIdeal restrict_ideal(const SquarefreeMonomialIdeal& ideal, const VariableSet& w) {
    SquarefreeMonomialIdeal out;
    out.n = ideal.n;
    for (const auto& m : ideal.generators)
        if (m.divides(w)) out.generators.push_back(m);
    return out;
}

Labeling doip_labeling(const Graph& g, const OrientedPathFamily& fam) {
    validate_family(g, fam);
    for (int i = 0; i < fam.size(); ++i)
        if (fam.paths[i].singleton())
            throw Error(ErrorCode::SingletonPath, "path " + std::to_string(i + 1) + " has no edge", {i});
    DoipResult d = is_doip(g, fam, OrientationMode::Fixed);
    if (!d.doip) throw Error(ErrorCode::NotDoip, "family is not DOIP with the given orientations and order");
    const std::vector<int>& order = *d.family.order;
    Labeling lab(static_cast<std::size_t>(g.order()), 0);
    int next = 1;
    for (int i : order) {
        lab[fam.paths[i].start] = next++;
        lab[fam.paths[i].end] = next++;
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (lab[v] == 0) lab[v] = next++;
    return lab;
}

CompleteIntersectionCheck complete_intersection_check(const Graph& g, const OrientedPathFamily& fam) {
    DoipResult d = is_doip(g, fam, OrientationMode::Search);
    if (!d.doip) throw Error(ErrorCode::NotDoip, "no orientation makes the family DOIP");
    CompleteIntersectionCheck c;
    c.family = d.family;
    c.labeling = doip_labeling(g, c.family);
    VariableSet w;
    for (const auto& p : c.family.paths) {
        VertexSequence seq = p.vertices;
        if (seq.front() != p.start) std::reverse(seq.begin(), seq.end());
        Monomial m = admissible_monomial(c.labeling, seq);
        c.path_monomials.push_back(m);
        w = w * m;
    }
    c.restricted = restrict_ideal(initial_ideal(g, c.labeling), w);
    SquarefreeMonomialIdeal expected;
    expected.n = g.order();
    expected.generators = c.path_monomials;
    bool disjoint = true;
    for (std::size_t a = 0; a < c.path_monomials.size(); ++a)
        for (std::size_t b = a + 1; b < c.path_monomials.size(); ++b)
            if (!c.path_monomials[a].disjoint_from(c.path_monomials[b])) disjoint = false;
    c.holds = disjoint && c.restricted.same_generators(expected) &&
              c.restricted.generators.size() == c.path_monomials.size();
    return c;
}

bool verify_complete_intersection(const Graph& g, const OrientedPathFamily& fam) {
    return complete_intersection_check(g, fam).holds;
}

}  // namespace nureg
