#include "nureg/families.hpp"

#include <algorithm>
#include <numeric>
#include <limits>
#include <random>
#include <sstream>

#include "nureg/error.hpp"

namespace nureg {

Graph make_fm(int m) {
    if (m < 1) throw Error(ErrorCode::SpecInvariantViolated, "F_m needs m >= 1");
    Graph g(2 * m);
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) g.add_edge(2 * i - 1, 2 * j - 2);
    return g;
}

namespace {

void require_whisker(const Graph& g, Vertex f) {
    if (f < 0 || f >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "whisker outside graph", {f});
    if (g.degree(f) != 1)
        throw Error(ErrorCode::DegreeNotOne, "vertex " + std::to_string(f + 1) + " does not have degree one", {f});
}

}  // namespace

Graph star_op(const Graph& a, Vertex f1, const Graph& b, Vertex f2) {
    require_whisker(a, f1);
    require_whisker(b, f2);
    int na = a.order();
    auto map_b = [&](Vertex v) { return v == f2 ? f1 : na + (v < f2 ? v : v - 1); };
    Graph g(na + b.order() - 1);
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(map_b(u), map_b(v));
    return g;
}

Graph circ_op(const Graph& a, Vertex f1, const Graph& b, Vertex f2) {
    require_whisker(a, f1);
    require_whisker(b, f2);
    Vertex v1 = a.neighbors(f1).min();
    Vertex v2 = b.neighbors(f2).min();
    if (a.degree(v1) < 3 || b.degree(v2) < 3)
        throw Error(ErrorCode::NeighborDegreeTooSmall, "neighbours of the whiskers need degree at least three");
    auto map_a = [&](Vertex v) { return v < f1 ? v : v - 1; };
    std::vector<Vertex> map_b(static_cast<std::size_t>(b.order()), -1);
    int next = a.order() - 1;
    for (Vertex v = 0; v < b.order(); ++v) {
        if (v == f2) continue;
        map_b[v] = v == v2 ? map_a(v1) : next++;
    }
    Graph g(a.order() + b.order() - 3);
    for (auto [u, v] : a.edges())
        if (u != f1 && v != f1) g.add_edge(map_a(u), map_a(v));
    for (auto [u, v] : b.edges())
        if (u != f2 && v != f2) g.add_edge(map_b[u], map_b[v]);
    return g;
}

namespace {

struct Piece {
    int m = 0;
    int offset = 0;
};

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

void unite(std::vector<int>& parent, int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a > b) std::swap(a, b);
    parent[b] = a;
}

// Witness path pieces in local 1-based vertex numbers.
std::vector<int> local_range(int from, int to) {
    std::vector<int> out;
    for (int k = from; k <= to; ++k) out.push_back(k);
    return out;
}

}  // namespace

CMBipartiteGraph build_cm_bipartite(const CMBipartiteSpec& spec) {
    if (spec.components.empty()) throw Error(ErrorCode::SpecInvariantViolated, "no components");
    CMBipartiteGraph out;
    std::vector<std::vector<Piece>> pieces;
    int pool = 0;
    for (const CMComponent& c : spec.components) {
        if (c.kind == CMComponent::Kind::F) {
            if (c.sizes.size() != 1 || c.sizes[0] < 1)
                throw Error(ErrorCode::SpecInvariantViolated, "F_n needs a single n >= 1");
        } else {
            if (c.sizes.size() < 2) throw Error(ErrorCode::SpecInvariantViolated, "a chain needs at least two parts");
            for (int m : c.sizes)
                if (m < 3) throw Error(ErrorCode::SpecInvariantViolated, "chain parts need m >= 3");
        }
        std::vector<Piece> ps;
        for (int m : c.sizes) {
            ps.push_back({m, pool});
            pool += 2 * m;
        }
        pieces.push_back(ps);
    }

    std::vector<int> parent(static_cast<std::size_t>(pool));
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<char> deleted(static_cast<std::size_t>(pool), 0);
    auto at = [](const Piece& p, int local1) { return p.offset + local1 - 1; };
    for (std::size_t c = 0; c < pieces.size(); ++c) {
        const auto& ps = pieces[c];
        for (std::size_t k = 0; k + 1 < ps.size(); ++k) {
            deleted[at(ps[k], 2 * ps[k].m)] = 1;
            deleted[at(ps[k + 1], 1)] = 1;
            unite(parent, at(ps[k], 2 * ps[k].m - 1), at(ps[k + 1], 2));
        }
        if (c + 1 < pieces.size()) {
            const Piece& left = pieces[c].back();
            unite(parent, at(left, 2 * left.m), at(pieces[c + 1].front(), 1));
        }
    }

    std::vector<int> dense(static_cast<std::size_t>(pool), -1);
    int n = 0;
    for (int v = 0; v < pool; ++v) {
        if (deleted[v]) continue;
        int r = find_root(parent, v);
        if (dense[r] < 0) dense[r] = n++;
        dense[v] = dense[r];
    }
    out.graph = Graph(n);
    for (const auto& ps : pieces) {
        for (const Piece& p : ps) {
            std::vector<Vertex> map(static_cast<std::size_t>(2 * p.m));
            for (int k = 0; k < 2 * p.m; ++k) map[k] = deleted[p.offset + k] ? -1 : dense[p.offset + k];
            for (int i = 1; i <= p.m; ++i)
                for (int j = i; j <= p.m; ++j) {
                    Vertex u = map[2 * i - 1];
                    Vertex v = map[2 * j - 2];
                    if (u >= 0 && v >= 0) out.graph.add_edge(u, v);
                }
            out.vertex_maps.push_back(std::move(map));
        }
    }

    std::vector<VertexSequence> paths;
    std::size_t piece_index = 0;
    for (std::size_t c = 0; c < spec.components.size(); ++c) {
        const CMComponent& comp = spec.components[c];
        auto emit = [&](std::size_t piece, const std::vector<int>& local) {
            VertexSequence seq;
            for (int k : local) seq.push_back(out.vertex_maps[piece][k - 1]);
            paths.push_back(seq);
        };
        if (comp.kind == CMComponent::Kind::F) {
            int m = comp.sizes[0];
            if (m >= 2) {
                ++out.alpha;
                emit(piece_index, local_range(1, 4));
            } else {
                ++out.beta;
                emit(piece_index, local_range(1, 2));
            }
            ++piece_index;
            continue;
        }
        int t = static_cast<int>(comp.sizes.size());
        for (int k = 1; k <= t; ++k) {
            int m = comp.sizes[k - 1];
            std::size_t piece = piece_index + k - 1;
            if (k == 1) {
                ++out.alpha;
                emit(piece, local_range(1, 4));
            } else if (k == t) {
                ++out.alpha;
                emit(piece, local_range(2 * m - 3, 2 * m));
            } else if (m >= 4) {
                ++out.alpha;
                emit(piece, local_range(3, 6));
            } else {
                ++out.beta;
                emit(piece, local_range(3, 4));
            }
        }
        piece_index += t;
    }
    out.formula = 3 * out.alpha + out.beta;

    // Pieces that meet at a glued vertex become one path.
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t a = 0; a < paths.size() && !merged; ++a) {
            for (std::size_t b = 0; b < paths.size() && !merged; ++b) {
                if (a == b) continue;
                if (paths[a].back() == paths[b].front()) {
                    paths[a].insert(paths[a].end(), paths[b].begin() + 1, paths[b].end());
                    paths.erase(paths.begin() + static_cast<std::ptrdiff_t>(b));
                    merged = true;
                }
            }
        }
    }
    for (auto& seq : paths) out.witness.paths.push_back(OrientedPath::forward(seq));
    return out;
}

CMBipartiteSpec parse_cm_spec(const std::string& text) {
    CMBipartiteSpec spec;
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), '\n', ';');
    std::istringstream parts(normalized);
    std::string part;
    while (std::getline(parts, part, ';')) {
        std::istringstream ss(part);
        std::string kind;
        if (!(ss >> kind)) continue;
        if (kind[0] == '#') continue;
        std::vector<int> sizes;
        int v = 0;
        while (ss >> v) sizes.push_back(v);
        if (!ss.eof()) throw Error(ErrorCode::ParseError, "bad component '" + part + "'");
        if (kind == "F" || kind == "f")
            spec.components.push_back({CMComponent::Kind::F, sizes});
        else if (kind == "chain")
            spec.components.push_back({CMComponent::Kind::Chain, sizes});
        else
            throw Error(ErrorCode::ParseError, "unknown component kind '" + kind + "'");
    }
    return spec;
}

std::string format_cm_spec(const CMBipartiteSpec& spec) {
    std::string out;
    for (std::size_t c = 0; c < spec.components.size(); ++c) {
        if (c) out += "; ";
        out += spec.components[c].kind == CMComponent::Kind::F ? "F" : "chain";
        for (int m : spec.components[c].sizes) out += " " + std::to_string(m);
    }
    return out;
}

bool is_closed_labeling(const Graph& g, const Labeling& lab) {
    for (const Monomial& m : initial_ideal(g, lab).generators)
        if (m.degree() != 2) return false;
    return true;
}

namespace {

// Two edges sharing their smaller (or larger) label force the third edge.
bool quadratic_condition(const Graph& g, const Labeling& lab) {
    for (Vertex c = 0; c < g.order(); ++c) {
        for (Vertex a : g.neighbors(c)) {
            for (Vertex b : g.neighbors(c)) {
                if (a >= b || g.adjacent(a, b)) continue;
                bool both_above = lab[a] > lab[c] && lab[b] > lab[c];
                bool both_below = lab[a] < lab[c] && lab[b] < lab[c];
                if (both_above || both_below) return false;
            }
        }
    }
    return true;
}

}  // namespace

std::optional<Labeling> find_closed_labeling(const Graph& g) {
    if (g.order() > 9) throw Error(ErrorCode::TooLarge, "closed labeling search limited to 9 vertices");
    Labeling lab = identity_labeling(g.order());
    do {
        if (quadratic_condition(g, lab) && is_closed_labeling(g, lab)) return lab;
    } while (std::next_permutation(lab.begin(), lab.end()));
    return std::nullopt;
}

namespace {

int draw(std::mt19937_64& rng, int lo, int hi) {
    auto range = static_cast<std::uint64_t>(hi - lo + 1);
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x = 0;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<int>(x % range);
}

}  // namespace

Graph random_block_graph(std::uint64_t seed, int n, int max_block) {
    if (n < 1 || n > kMaxVertices) throw Error(ErrorCode::InvalidArgument, "n must lie in 1..64");
    if (max_block < 2) throw Error(ErrorCode::InvalidArgument, "max_block must be at least 2");
    std::mt19937_64 rng(seed);
    Graph g(n);
    int current = 1;
    while (current < n) {
        int size = std::min(draw(rng, 2, max_block), n - current + 1);
        Vertex anchor = draw(rng, 0, current - 1);
        std::vector<Vertex> clique{anchor};
        for (int k = 1; k < size; ++k) clique.push_back(current++);
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b) g.add_edge(clique[a], clique[b]);
    }
    return g;
}

}  // namespace nureg
