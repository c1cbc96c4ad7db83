#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "nureg/blocks.hpp"
#include "nureg/corpus.hpp"
#include "nureg/doip.hpp"
#include "nureg/error.hpp"
#include "nureg/families.hpp"
#include "nureg/graph_io.hpp"
#include "nureg/nu.hpp"
#include "nureg/regularity.hpp"
#include "oracles.hpp"

using namespace nureg;

namespace {

template <class F>
void expect_error(ErrorCode code, F&& f) {
    try {
        f();
        ADD_FAILURE() << "expected " << error_code_name(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v = 0; v < g.order(); ++v) {
                if (!g.adjacent(u, v)) continue;
                if (side[v] == side[u]) return false;
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    stack.push_back(v);
                }
            }
        }
    }
    return true;
}

int degree(const Graph& g, Vertex v) {
    int d = 0;
    for (Vertex u = 0; u < g.order(); ++u) d += g.adjacent(u, v);
    return d;
}

int expected_order(const CMBipartiteSpec& spec) {
    int total = 0;
    for (auto& c : spec.components) {
        for (int m : c.sizes) total += 2 * m;
        total -= 3 * (static_cast<int>(c.sizes.size()) - 1);
    }
    return total - (static_cast<int>(spec.components.size()) - 1);
}

// alpha and beta straight from the component list.
std::pair<int, int> alpha_beta(const CMBipartiteSpec& spec) {
    int alpha = 0, beta = 0;
    for (auto& c : spec.components) {
        if (c.kind == CMComponent::Kind::F) {
            (c.sizes[0] >= 2 ? alpha : beta) += 1;
            continue;
        }
        alpha += 2;
        for (std::size_t j = 1; j + 1 < c.sizes.size(); ++j) (c.sizes[j] >= 4 ? alpha : beta) += 1;
    }
    return {alpha, beta};
}

CMBipartiteSpec random_spec(std::mt19937_64& rng, int max_order) {
    for (;;) {
        CMBipartiteSpec spec;
        int parts = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < parts; ++k) {
            if (rng() % 3 == 0) {
                std::vector<int> ms(2 + rng() % 2);
                for (int& m : ms) m = 3 + static_cast<int>(rng() % 2);
                spec.components.push_back(CMComponent::chain(ms));
            } else {
                spec.components.push_back(CMComponent::f(1 + static_cast<int>(rng() % 4)));
            }
        }
        if (expected_order(spec) <= max_order) return spec;
    }
}

bool oracle_closed(const Graph& g, const Labeling& lab) {
    for (auto [x, y] : oracle::admissible_monomials(g, lab))
        if (std::popcount(x) + std::popcount(y) != 2) return false;
    return true;
}

}  // namespace

TEST(Fm, Edges) {
    Graph f1 = make_fm(1);
    EXPECT_EQ(f1.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}}));
    Graph f2 = make_fm(2);
    EXPECT_EQ(f2.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {2, 3}}));
    Graph f3 = make_fm(3);
    EXPECT_EQ(f3.edges(),
              (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {1, 4}, {2, 3}, {3, 4}, {4, 5}}));
    for (int m = 1; m <= 8; ++m) {
        Graph f = make_fm(m);
        EXPECT_EQ(f.order(), 2 * m);
        EXPECT_EQ(static_cast<int>(f.edges().size()), m * (m + 1) / 2);
        EXPECT_TRUE(is_bipartite(f));
        EXPECT_TRUE(is_connected(f));
        EXPECT_EQ(degree(f, 0), 1);
        EXPECT_EQ(degree(f, 2 * m - 1), 1);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) EXPECT_EQ(f.adjacent(2 * i - 1, 2 * j - 2), i <= j);
    }
}

TEST(Operations, Star) {
    Graph g = star_op(make_fm(1), 1, make_fm(1), 0);
    EXPECT_EQ(g.order(), 3);
    EXPECT_EQ(g.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}}));
    Graph h = star_op(make_fm(3), 5, make_fm(2), 0);
    EXPECT_EQ(h.order(), 9);
    EXPECT_EQ(h.edges().size(), 9u);
    EXPECT_TRUE(h.adjacent(4, 5));
    EXPECT_TRUE(h.adjacent(5, 6));
    expect_error(ErrorCode::DegreeNotOne, [] { star_op(make_fm(3), 1, make_fm(2), 0); });
    expect_error(ErrorCode::DegreeNotOne, [] { star_op(make_fm(3), 0, make_fm(2), 2); });
}

TEST(Operations, Circle) {
    Graph g = circ_op(make_fm(3), 5, make_fm(4), 0);
    EXPECT_EQ(g.order(), 11);
    EXPECT_EQ(static_cast<int>(g.edges().size()), 6 + 10 - 2);
    EXPECT_TRUE(is_bipartite(g));
    EXPECT_TRUE(is_connected(g));
    // vertex 5 of F3 keeps two neighbours and gains three from vertex 2 of F4
    EXPECT_EQ(degree(g, 4), 2 + 3);

    EXPECT_EQ(circ_op(make_fm(3), 5, make_fm(3), 0).order(), 9);
    expect_error(ErrorCode::NeighborDegreeTooSmall, [] { circ_op(make_fm(2), 3, make_fm(3), 0); });
    expect_error(ErrorCode::NeighborDegreeTooSmall, [] { circ_op(make_fm(3), 5, make_fm(2), 0); });
    expect_error(ErrorCode::DegreeNotOne, [] { circ_op(make_fm(3), 4, make_fm(3), 0); });
}

TEST(CMBipartite, SmallSpecs) {
    auto f2 = build_cm_bipartite(parse_cm_spec("F 2"));
    EXPECT_EQ(f2.alpha, 1);
    EXPECT_EQ(f2.beta, 0);
    EXPECT_EQ(f2.formula, 3);
    EXPECT_EQ(f2.graph.edges(), path_graph(4).edges());

    auto p3 = build_cm_bipartite(parse_cm_spec("F 1; F 1"));
    EXPECT_EQ(p3.alpha, 0);
    EXPECT_EQ(p3.beta, 2);
    EXPECT_EQ(p3.formula, 2);
    EXPECT_EQ(p3.graph.edges(), path_graph(3).edges());
    EXPECT_EQ(p3.witness.total_edges(), 2);
}

TEST(CMBipartite, WorkedExample) {
    auto spec = parse_cm_spec("chain 3 4 3 4; F 1; F 4");
    EXPECT_EQ(format_cm_spec(spec), "chain 3 4 3 4; F 1; F 4");
    auto cm = build_cm_bipartite(spec);
    EXPECT_EQ(cm.alpha, 4);
    EXPECT_EQ(cm.beta, 2);
    EXPECT_EQ(cm.formula, 14);
    EXPECT_EQ(cm.graph.order(), 27);
    EXPECT_TRUE(is_bipartite(cm.graph));
    EXPECT_TRUE(is_connected(cm.graph));

    validate_family(cm.graph, cm.witness);
    std::multiset<int> counts;
    for (auto& p : cm.witness.paths) counts.insert(p.edge_count());
    EXPECT_EQ(counts, (std::multiset<int>{1, 3, 3, 7}));
    EXPECT_EQ(cm.witness.total_edges(), 14);
    EXPECT_TRUE(induced_edges(cm.graph, cm.witness).empty());
    EXPECT_TRUE(is_doip(cm.graph, cm.witness, OrientationMode::Search).doip);

    // pieces: F3, F4, F3, F4 of the chain, then F1, then F4
    ASSERT_EQ(cm.vertex_maps.size(), 6u);
    auto local = [&](int piece, std::vector<int> ks) {
        VertexSet s;
        for (int k : ks) {
            Vertex v = cm.vertex_maps[piece][k - 1];
            EXPECT_GE(v, 0) << piece << ":" << k;
            s.insert(v);
        }
        return s;
    };
    std::set<std::uint64_t> expected{local(0, {1, 2, 3, 4}).bits(), local(1, {3, 4, 5, 6}).bits(),
                                     local(2, {3, 4}).bits(),
                                     (local(3, {5, 6, 7, 8}) | local(4, {1, 2}) | local(5, {1, 2, 3, 4})).bits()};
    std::set<std::uint64_t> got;
    for (auto& p : cm.witness.paths) got.insert(vertex_set_of(p.vertices).bits());
    EXPECT_EQ(got, expected);
    // glued vertices coincide
    EXPECT_EQ(cm.vertex_maps[3][7], cm.vertex_maps[4][0]);
    EXPECT_EQ(cm.vertex_maps[4][1], cm.vertex_maps[5][0]);
    EXPECT_EQ(cm.vertex_maps[0][5], -1);
    EXPECT_EQ(cm.vertex_maps[1][0], -1);
    EXPECT_EQ(cm.vertex_maps[0][4], cm.vertex_maps[1][1]);
}

TEST(CMBipartite, SpecErrors) {
    expect_error(ErrorCode::SpecInvariantViolated, [] { build_cm_bipartite(parse_cm_spec("chain 3")); });
    expect_error(ErrorCode::SpecInvariantViolated, [] { build_cm_bipartite(parse_cm_spec("chain 3 2")); });
    expect_error(ErrorCode::SpecInvariantViolated, [] { build_cm_bipartite(parse_cm_spec("F 0")); });
    expect_error(ErrorCode::ParseError, [] { parse_cm_spec("G 3"); });
    expect_error(ErrorCode::ParseError, [] { parse_cm_spec("F x"); });
}

TEST(CMBipartite, RandomSpecs) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        auto spec = random_spec(rng, 40);
        auto text = format_cm_spec(spec);
        EXPECT_EQ(format_cm_spec(parse_cm_spec(text)), text);
        auto cm = build_cm_bipartite(spec);
        EXPECT_EQ(cm.graph.order(), expected_order(spec)) << text;
        auto [alpha, beta] = alpha_beta(spec);
        EXPECT_EQ(cm.alpha, alpha) << text;
        EXPECT_EQ(cm.beta, beta) << text;
        EXPECT_EQ(cm.formula, 3 * alpha + beta);
        EXPECT_TRUE(is_bipartite(cm.graph)) << text;
        EXPECT_TRUE(is_connected(cm.graph)) << text;
        validate_family(cm.graph, cm.witness);
        EXPECT_EQ(cm.witness.total_edges(), cm.formula) << text;
        EXPECT_TRUE(induced_edges(cm.graph, cm.witness).empty()) << text;
        EXPECT_TRUE(is_doip(cm.graph, cm.witness, OrientationMode::Search).doip) << text;
        EXPECT_LE(cm.formula, nu_bounds(cm.graph).upper) << text;
    }
}

TEST(CMBipartite, FormulaIsTheRegularity) {
    std::mt19937_64 rng(62);
    HochsterOptions wide;
    wide.max_variables = 24;
    for (const char* text : {"F 1", "F 2", "F 3", "F 1; F 1", "F 1; F 2", "F 2; F 1; F 1"}) {
        auto cm = build_cm_bipartite(parse_cm_spec(text));
        EXPECT_EQ(oracle::reg(cm.graph), cm.formula) << text;
    }
    for (int trial = 0; trial < 25; ++trial) {
        auto spec = random_spec(rng, 11);
        auto cm = build_cm_bipartite(spec);
        EXPECT_EQ(reg_binomial_edge(cm.graph, wide), cm.formula) << format_cm_spec(spec);
        EXPECT_EQ(nu(cm.graph).value, cm.formula) << format_cm_spec(spec);
    }
    auto chain = build_cm_bipartite(parse_cm_spec("chain 3 3"));
    EXPECT_EQ(reg_binomial_edge(chain.graph, wide), chain.formula);
    EXPECT_EQ(nu(chain.graph).value, chain.formula);
}

TEST(CMBipartite, FormulaDependsOnlyOnTheGraph) {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 40; ++trial) {
        auto spec = random_spec(rng, 11);
        auto cm = build_cm_bipartite(spec);
        // reversing the component list builds a mirror image
        CMBipartiteSpec rev = spec;
        std::reverse(rev.components.begin(), rev.components.end());
        for (auto& c : rev.components) std::reverse(c.sizes.begin(), c.sizes.end());
        auto mirror = build_cm_bipartite(rev);
        EXPECT_EQ(canonical_form(mirror.graph), canonical_form(cm.graph)) << format_cm_spec(spec);
        EXPECT_EQ(mirror.formula, cm.formula);
    }
}

TEST(ClosedLabeling, Examples) {
    EXPECT_TRUE(is_closed_labeling(path_graph(5), identity_labeling(5)));
    EXPECT_FALSE(is_closed_labeling(path_graph(3), Labeling{1, 3, 2}));
    EXPECT_TRUE(is_closed_labeling(complete_graph(5), Labeling{3, 1, 5, 2, 4}));
    EXPECT_FALSE(find_closed_labeling(fixtures::claw()).has_value());
    EXPECT_FALSE(find_closed_labeling(cycle_graph(4)).has_value());
    auto lab = find_closed_labeling(fixtures::two_triangles());
    ASSERT_TRUE(lab.has_value());
    EXPECT_TRUE(is_closed_labeling(fixtures::two_triangles(), *lab));
    EXPECT_EQ(*find_closed_labeling(path_graph(4)), identity_labeling(4));
    expect_error(ErrorCode::TooLarge, [] { find_closed_labeling(path_graph(10)); });
}

TEST(ClosedLabeling, MatchesDefinition) {
    for (int n = 1; n <= 4; ++n)
        for (auto& g : graphs_up_to_isomorphism(n, false)) {
            Labeling lab = identity_labeling(n);
            do {
                ASSERT_EQ(is_closed_labeling(g, lab), oracle_closed(g, lab)) << to_graph6(g);
            } while (std::next_permutation(lab.begin(), lab.end()));
        }
    for (int n = 1; n <= 6; ++n)
        for (auto& g : graphs_up_to_isomorphism(n, false)) {
            auto lab = find_closed_labeling(g);
            if (n <= 5) {
                EXPECT_EQ(lab.has_value(), oracle::has_closed_labeling(g)) << to_graph6(g);
            }
            if (!lab) continue;
            EXPECT_TRUE(is_labeling(*lab, n));
            EXPECT_TRUE(oracle_closed(g, *lab)) << to_graph6(g);
        }
}

TEST(ClosedLabeling, ReversalKeepsClosedness) {
    std::mt19937_64 rng(64);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = gen::random_graph(rng, n, 0.6);
        Labeling lab = gen::random_labeling(rng, n);
        Labeling rev = lab;
        for (int& l : rev) l = n + 1 - l;
        EXPECT_EQ(is_closed_labeling(g, lab), is_closed_labeling(g, rev)) << to_graph6(g);
    }
}

TEST(RandomBlockGraph, Properties) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = 1 + static_cast<int>(seed % 15);
        int max_block = 2 + static_cast<int>(seed % 4);
        Graph g = random_block_graph(seed, n, max_block);
        EXPECT_EQ(g.order(), n);
        EXPECT_TRUE(is_connected(g));
        EXPECT_TRUE(is_block_graph(g));
        if (n <= 7) {
            EXPECT_TRUE(oracle::block_graph(g));
        }
        for (auto b : block_decomposition(g).blocks) EXPECT_LE(b.size(), max_block);
        EXPECT_EQ(random_block_graph(seed, n, max_block).edges(), g.edges());
    }
    std::set<std::string> shapes;
    for (std::uint64_t seed = 0; seed < 100; ++seed) shapes.insert(canonical_form(random_block_graph(seed, 7, 3)));
    EXPECT_GT(shapes.size(), 10u);
}
