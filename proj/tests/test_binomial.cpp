#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "nureg/binomial_edge.hpp"
#include "nureg/corpus.hpp"
#include "nureg/doip.hpp"
#include "nureg/error.hpp"
#include "nureg/graph_io.hpp"
#include "nureg/monomial.hpp"
#include "nureg/nu.hpp"
#include "oracles.hpp"

using namespace nureg;
using fixtures::zero_based;

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

SquarefreeMonomialIdeal ideal_of(int n, const std::vector<std::string>& gens) {
    SquarefreeMonomialIdeal I;
    I.n = n;
    for (auto& s : gens) I.generators.push_back(Monomial::parse(s));
    I.normalize();
    return I;
}

std::set<oracle::Mono> as_oracle(const SquarefreeMonomialIdeal& I) {
    std::set<oracle::Mono> out;
    for (auto& m : I.generators) out.insert({m.x, m.y});
    return out;
}

std::string describe(const Graph& g, const Labeling& lab) {
    std::ostringstream os;
    os << to_graph6(g) << " labels";
    for (int l : lab) os << ' ' << l;
    return os.str();
}

bool admissible(const Graph& g, const Labeling& lab, std::vector<int> one_based) {
    auto seq = zero_based(std::move(one_based));
    return is_admissible_path(g, lab, seq);
}

}  // namespace

TEST(Monomial, ParseAndPrint) {
    Monomial m = Monomial::parse("x1*x3*y2");
    EXPECT_EQ(m.x, 0b101u);
    EXPECT_EQ(m.y, 0b10u);
    EXPECT_EQ(m.to_string(), "x1*x3*y2");
    EXPECT_EQ(m.degree(), 3);
    EXPECT_EQ(Monomial{}.to_string(), "1");
    EXPECT_TRUE(Monomial::parse("x1*y2").divides(m));
    EXPECT_FALSE(m.divides(Monomial::parse("x1*y2")));
    expect_error(ErrorCode::ParseError, [] { Monomial::parse("x1*z2"); });
    expect_error(ErrorCode::ParseError, [] { Monomial::parse("x0"); });
}

TEST(Monomial, IdealNormalizeAndParse) {
    auto I = ideal_of(3, {"x1*y2*x3", "x1*y2", "y3"});
    ASSERT_EQ(I.generators.size(), 2u);
    EXPECT_TRUE(I.same_generators(ideal_of(3, {"y3", "x1*y2"})));
    EXPECT_EQ(I.support(), Monomial::parse("x1*y2*y3"));
    auto J = parse_ideal_string("n 4\nx1*y2\ny3\n");
    EXPECT_EQ(J.n, 4);
    EXPECT_TRUE(J.same_generators(ideal_of(4, {"x1*y2", "y3"})));
    EXPECT_EQ(parse_variable_set("x1,x3 y2"), Monomial::parse("x1*x3*y2"));
}

TEST(InitialIdeal, HTree) {
    Graph g = fixtures::h_tree();
    auto I = initial_ideal(g);
    auto expected = ideal_of(6, {"x5*y6", "x4*y6", "x4*x6*y5", "x3*y4", "x2*y3", "x1*y3", "x1*x3*y2"});
    EXPECT_EQ(I.generators.size(), 7u);
    EXPECT_TRUE(I.same_generators(expected)) << I.to_string();
}

TEST(InitialIdeal, SmallGraphs) {
    EXPECT_TRUE(initial_ideal(complete_graph(2)).same_generators(ideal_of(2, {"x1*y2"})));
    EXPECT_TRUE(initial_ideal(complete_graph(3)).same_generators(ideal_of(3, {"x1*y2", "x1*y3", "x2*y3"})));
    EXPECT_TRUE(initial_ideal(Graph(3)).generators.empty());
    // P3 labelled with the middle vertex last: 1 - 3 - 2.
    Graph p3 = path_graph(3);
    EXPECT_TRUE(initial_ideal(p3, Labeling{1, 3, 2})
                    .same_generators(ideal_of(3, {"x1*y3", "x2*y3", "x1*x3*y2"})));
}

TEST(Admissible, Examples) {
    Graph g = fixtures::h_tree();
    Labeling id = identity_labeling(6);
    EXPECT_TRUE(admissible(g, id, {1, 3, 2}));
    EXPECT_TRUE(admissible(g, id, {4, 6, 5}));
    EXPECT_TRUE(admissible(g, id, {3, 4}));
    EXPECT_FALSE(admissible(g, id, {1, 3, 4}));  // interior label between the ends
    EXPECT_FALSE(admissible(g, id, {2, 3, 1}));  // runs from the larger label
    EXPECT_FALSE(admissible(g, id, {1, 2}));     // not an edge
    EXPECT_FALSE(admissible(g, id, {1}));
    EXPECT_EQ(admissible_monomial(id, zero_based({1, 3, 2})), Monomial::parse("x1*x3*y2"));
    EXPECT_EQ(admissible_monomial(id, zero_based({4, 6, 5})), Monomial::parse("x4*x6*y5"));

    // In K3 the path 1 - 3 - 2 has the chord 1 - 2.
    Graph k3 = complete_graph(3);
    Labeling lab{1, 2, 3};
    EXPECT_FALSE(is_admissible_path(k3, lab, std::vector<int>{0, 2, 1}));
}

TEST(Admissible, LabelInterior) {
    // 4-cycle 1-2-3-4: from 1 to 3 through 4 has interior label 4 > 3.
    Graph c4 = cycle_graph(4);
    Labeling id = identity_labeling(4);
    EXPECT_TRUE(admissible(c4, id, {1, 4, 3}));
    EXPECT_EQ(admissible_monomial(id, zero_based({1, 4, 3})), Monomial::parse("x1*x4*y3"));
    EXPECT_FALSE(admissible(c4, id, {1, 2, 3}));
    EXPECT_TRUE(admissible(c4, id, {2, 1, 4}));
    EXPECT_EQ(admissible_monomial(id, zero_based({2, 1, 4})), Monomial::parse("x2*y1*y4"));
}

TEST(InitialIdeal, MatchesAdmissiblePathsExhaustively) {
    for (int n = 1; n <= 5; ++n)
        for (auto& g : graphs_up_to_isomorphism(n, false)) {
            Labeling lab = identity_labeling(n);
            do {
                auto expected = oracle::admissible_monomials(g, lab);
                ASSERT_EQ(as_oracle(initial_ideal(g, lab)), expected) << describe(g, lab);
            } while (std::next_permutation(lab.begin(), lab.end()));
        }
}

TEST(InitialIdeal, MatchesAdmissiblePathsRandom) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 6 + static_cast<int>(rng() % 2);
        Graph g = gen::random_graph(rng, n, 0.45);
        Labeling lab = gen::random_labeling(rng, n);
        ASSERT_EQ(as_oracle(initial_ideal(g, lab)), oracle::admissible_monomials(g, lab)) << describe(g, lab);
    }
}

TEST(InitialIdeal, GeneratorsAreMinimalAndCoverEdges) {
    std::mt19937_64 rng(42);
    for (int n = 2; n <= 6; ++n)
        for (auto& g : graphs_up_to_isomorphism(n, false)) {
            for (int rep = 0; rep < 6; ++rep) {
                Labeling lab = rep == 0 ? identity_labeling(n) : gen::random_labeling(rng, n);
                auto I = initial_ideal(g, lab);
                int edges = static_cast<int>(g.edges().size());
                EXPECT_GE(static_cast<int>(I.generators.size()), edges) << describe(g, lab);
                for (std::size_t a = 0; a < I.generators.size(); ++a) {
                    const Monomial& m = I.generators[a];
                    ASSERT_NE(m.x, 0u);
                    ASSERT_NE(m.y, 0u);
                    EXPECT_EQ(m.x & m.y, 0u);
                    for (std::size_t b = 0; b < I.generators.size(); ++b) {
                        if (a != b) {
                            EXPECT_FALSE(m.divides(I.generators[b])) << describe(g, lab);
                        }
                    }
                }
                // each edge gives the quadratic generator x_min y_max
                for (auto [u, v] : g.edges()) {
                    int i = std::min(lab[u], lab[v]), j = std::max(lab[u], lab[v]);
                    Monomial q{std::uint64_t{1} << (i - 1), std::uint64_t{1} << (j - 1)};
                    EXPECT_NE(std::find(I.generators.begin(), I.generators.end(), q), I.generators.end());
                }
            }
        }
}

TEST(InitialIdeal, Restrict) {
    auto I = initial_ideal(fixtures::h_tree());
    auto R = restrict_ideal(I, parse_variable_set("x1,x3,y2,x4,x6,y5"));
    EXPECT_TRUE(R.same_generators(ideal_of(6, {"x4*x6*y5", "x1*x3*y2"}))) << R.to_string();
    EXPECT_TRUE(restrict_ideal(I, I.support()).same_generators(I));
    EXPECT_TRUE(restrict_ideal(I, VariableSet{}).generators.empty());
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = gen::random_graph(rng, 6, 0.5);
        auto J = initial_ideal(g, gen::random_labeling(rng, 6));
        VariableSet w{rng() & 0x3f, rng() & 0x3f};
        auto K = restrict_ideal(J, w);
        std::size_t inside = 0;
        for (auto& m : J.generators)
            if (m.divides(w)) ++inside;
        EXPECT_EQ(K.generators.size(), inside);
        for (auto& m : K.generators) EXPECT_TRUE(m.divides(w));
    }
}

TEST(DoipLabeling, HTree) {
    Graph g = fixtures::h_tree();
    auto fam = fixtures::family("1 3 2\n4 6 5\n");
    Labeling lab = doip_labeling(g, fam);
    EXPECT_EQ(lab, (Labeling{1, 2, 5, 3, 4, 6}));
    EXPECT_TRUE(is_labeling(lab, 6));
    EXPECT_TRUE(admissible(g, lab, {1, 3, 2}));
    EXPECT_TRUE(admissible(g, lab, {4, 6, 5}));
}

TEST(DoipLabeling, SmallCases) {
    EXPECT_EQ(doip_labeling(complete_graph(2), fixtures::family("2 1\n")), (Labeling{2, 1}));
    Graph three = Graph::from_edge_list(6, {{1, 2}, {3, 4}, {5, 6}});
    auto lab = doip_labeling(three, fixtures::family("1 2\n3 4\n5 6\nsigma: 3 1 2\n"));
    EXPECT_EQ(lab, (Labeling{3, 4, 5, 6, 1, 2}));
    expect_error(ErrorCode::SingletonPath, [] { doip_labeling(path_graph(3), fixtures::family("1 2\n3\n")); });
    expect_error(ErrorCode::NotDoip,
                 [] { doip_labeling(fixtures::not_doip_a(), fixtures::family("1 3 2\n4 6 5\n")); });
}

TEST(CompleteIntersection, Examples) {
    EXPECT_TRUE(verify_complete_intersection(fixtures::h_tree(), fixtures::family("1 3 2\n4 6 5\n")));
    auto c = complete_intersection_check(fixtures::h_tree(), fixtures::family("1 3 2\n4 6 5\n"));
    EXPECT_TRUE(c.holds);
    ASSERT_EQ(c.path_monomials.size(), 2u);
    EXPECT_EQ(c.path_monomials[0], Monomial::parse("x1*x5*y2"));
    EXPECT_EQ(c.path_monomials[1], Monomial::parse("x3*x6*y4"));
    EXPECT_EQ(c.restricted.generators.size(), 2u);
    expect_error(ErrorCode::NotDoip, [] {
        verify_complete_intersection(fixtures::not_doip_a(), fixtures::family("1 3 2\n4 6 5\n"));
    });
}

TEST(CompleteIntersection, HoldsForEveryDoipFamily) {
    for (int n = 2; n <= 6; ++n)
        for (auto& g : graphs_up_to_isomorphism(n, false)) {
            for_each_family(g, 3, false, [&](const OrientedPathFamily& fam) {
                if (!is_doip(g, fam, OrientationMode::Search).doip) return;
                auto c = complete_intersection_check(g, fam);
                EXPECT_TRUE(c.holds) << to_graph6(g) << "\n" << format_family(fam);
                for (std::size_t a = 0; a < c.path_monomials.size(); ++a)
                    for (std::size_t b = a + 1; b < c.path_monomials.size(); ++b)
                        EXPECT_TRUE(c.path_monomials[a].disjoint_from(c.path_monomials[b]));
            });
        }
}

TEST(CompleteIntersection, NuCertificates) {
    for (int n = 2; n <= 7; ++n)
        for (auto& g : graphs_up_to_isomorphism(n, false)) {
            auto r = nu(g);
            if (r.certificate.paths.empty()) continue;
            EXPECT_TRUE(verify_complete_intersection(g, r.certificate)) << to_graph6(g);
        }
}
