#include <gtest/gtest.h>

#include <random>

#include "cubekit/duality.hpp"
#include "cubekit/errors.hpp"
#include "cubekit/graph_systems.hpp"
#include "cubekit/one_inclusion.hpp"
#include "cubekit/oracle.hpp"
#include "cubekit/shattering.hpp"
#include "fixtures.hpp"

using namespace cubekit;

namespace {

Graph path3() {
    Graph g({"a", "b", "c"});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

std::set<std::string> rendered_family(const SetSystem& s) {
    std::set<std::string> out;
    for (const auto& m : s.family()) {
        out.insert(s.render(m));
    }
    return out;
}

}  // namespace

TEST(Graph, Construction) {
    EXPECT_THROW(Graph({"a", "a"}), InputError);
    Graph g({"a", "b"});
    EXPECT_THROW(g.add_edge(0, 0), InputError);
    EXPECT_THROW(g.add_loop(0), LoopsNotSupported);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    EXPECT_EQ(g.edges().size(), 1u);
    EXPECT_EQ(g.degree(0), 1u);
    Graph loopy({"a"}, true);
    loopy.add_loop(0);
    EXPECT_TRUE(loopy.has_loops());
    EXPECT_EQ(loopy.degree(0), 0u);
    EXPECT_TRUE(loopy.neighbourhood(0).test(0));
}

TEST(NeighbourhoodSystem, Examples) {
    const auto h1 = neighbourhood_system(make_half_graph(1));
    EXPECT_EQ(rendered_family(h1), (std::set<std::string>{"{a1}", "{b1}"}));

    const auto k3 = closed_neighbourhood_system(make_uniform_graph(3, true));
    EXPECT_EQ(k3.size(), 1u);
    EXPECT_EQ(k3.member(0), k3.full_set());

    const auto g = disjoint_union(make_half_graph(2), make_uniform_graph(1, false, "z"));
    EXPECT_EQ(rendered_family(neighbourhood_system(g)),
              (std::set<std::string>{"{}", "{a1}", "{a1,a2}", "{b2}", "{b1,b2}"}));
}

TEST(TwinAnalysis, Examples) {
    const auto iso = twin_analysis(make_uniform_graph(2, false));
    EXPECT_FALSE(iso.twin_free);
    EXPECT_TRUE(iso.semi_twin_free);
    const auto k2 = twin_analysis(make_uniform_graph(2, true));
    EXPECT_FALSE(k2.closed_twin_free);
    EXPECT_TRUE(k2.semi_closed_twin_free);
    const auto p = twin_analysis(path3());
    EXPECT_FALSE(p.twin_free);
    EXPECT_FALSE(p.semi_twin_free);
    EXPECT_TRUE(p.closed_twin_free);
}

TEST(Constructions, HalfGraphs) {
    const auto h5 = make_half_graph(5);
    EXPECT_EQ(h5.size(), 10u);
    EXPECT_EQ(h5.edges().size(), 15u);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
            EXPECT_EQ(h5.adjacent(i, 5 + j), i <= j);
        }
    }
    const auto ge = make_half_graph(3, HalfOrientation::GreaterEq);
    EXPECT_TRUE(ge.adjacent(*ge.find("a3"), *ge.find("b1")));
    EXPECT_FALSE(ge.adjacent(*ge.find("a1"), *ge.find("b3")));
    EXPECT_TRUE(make_co_half_graph(1).edges().empty());
    EXPECT_EQ(make_co_half_graph(1).size(), 2u);
    for (std::size_t n = 1; n <= 5; ++n) {
        EXPECT_EQ(make_co_half_graph(n), graph_complement(make_half_graph(n)));
    }
}

TEST(Constructions, ComplementAndUnions) {
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        const auto g = graph_from_mask(4, mask);
        EXPECT_EQ(graph_complement(graph_complement(g)), g);
    }
    Graph loopy({"a"}, true);
    loopy.add_loop(0);
    EXPECT_THROW(graph_complement(loopy), LoopsNotSupported);
    const auto j = between_full_union(make_uniform_graph(2, false, "x"), make_uniform_graph(2, false, "y"));
    EXPECT_EQ(j.edges().size(), 4u);
    EXPECT_THROW(disjoint_union(make_uniform_graph(1, false), make_uniform_graph(1, false)), InputError);
}

TEST(Decompose, Examples) {
    const auto iso = decompose_neighbourhood_wg(make_uniform_graph(3, false));
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(iso->pairs.empty());
    EXPECT_EQ(iso->isolated.size(), 3u);

    const auto g = disjoint_union(make_half_graph(5), make_uniform_graph(1, false, "z"));
    const auto d = decompose_neighbourhood_wg(g);
    ASSERT_TRUE(d.has_value());
    ASSERT_EQ(d->pairs.size(), 1u);
    EXPECT_EQ(d->pairs[0].order(), 5u);
    EXPECT_EQ(d->isolated, (std::vector<std::size_t>{10}));
    EXPECT_EQ(reassemble(*d, g.names()), g);
    EXPECT_TRUE(is_half_graph_union(g));

    EXPECT_FALSE(decompose_neighbourhood_wg(make_half_graph(2)).has_value());
    EXPECT_FALSE(is_half_graph_union(make_half_graph(2)));

    Graph loopy({"a"}, true);
    loopy.add_loop(0);
    EXPECT_THROW(decompose_neighbourhood_wg(loopy), LoopsNotSupported);
}

TEST(Decompose, GreaterEqOrientationNormalized) {
    const auto g = disjoint_union(make_half_graph(3, HalfOrientation::GreaterEq), make_uniform_graph(1, false, "z"));
    const auto d = decompose_neighbourhood_wg(g);
    ASSERT_TRUE(d.has_value());
    ASSERT_EQ(d->pairs.size(), 1u);
    const auto& p = d->pairs[0];
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            EXPECT_EQ(g.adjacent(p.a[i], p.b[j]), i <= j);
        }
    }
}

TEST(Flags, Examples) {
    EXPECT_TRUE(neighbourhood_flags(make_uniform_graph(4, true)).cnmax);
    EXPECT_TRUE(neighbourhood_flags(make_uniform_graph(2, false)).nmax);
    const auto g = disjoint_union(make_half_graph(2), make_uniform_graph(1, false, "z"));
    const auto f = neighbourhood_flags(g);
    EXPECT_TRUE(f.nwg);
    EXPECT_TRUE(f.next);
    EXPECT_FALSE(f.nmax);
    const auto co = between_full_union(make_co_half_graph(2), make_uniform_graph(1, true, "k"));
    EXPECT_TRUE(neighbourhood_flags(co).cnwg);
    EXPECT_TRUE(is_co_half_graph_join(co));
}

TEST(Flags, CharacterizationsOnFiveVertices) {
    Caps debug;
    debug.debug_asserts = true;
    for (std::size_t k = 1; k <= 5; ++k) {
        for_each_graph(k, [&](const Graph& g) {
            const auto f = neighbourhood_flags(g, debug);
            ASSERT_EQ(f.nwg, f.next);
            ASSERT_EQ(f.nwg, decompose_neighbourhood_wg(g).has_value());
            ASSERT_EQ(f.nwg, is_half_graph_union(g));
            ASSERT_EQ(f.cnwg, is_co_half_graph_join(g));
            ASSERT_EQ(f.cnwg, neighbourhood_flags(graph_complement(g)).nwg);
            ASSERT_EQ(f.nmax, g.edges().empty());
            ASSERT_EQ(f.cnmax, g.edges().size() == k * (k - 1) / 2);
            if (f.nwg) {
                ASSERT_TRUE(twin_analysis(g).semi_twin_free);
                ASSERT_TRUE(classify_dual_properties(neighbourhood_system(g)).self_and_dual_wg);
            }
        });
    }
}

TEST(Flags, TwinFreeGraphsHaveSelfDualNeighbourhoodSystems) {
    for (std::size_t k = 1; k <= 4; ++k) {
        for_each_graph(k, [&](const Graph& g) {
            const auto n = neighbourhood_system(g);
            const auto f = classify_dual_properties(n);
            ASSERT_TRUE(f.almost_self_dual);
            if (twin_analysis(g).twin_free) {
                ASSERT_TRUE(f.self_dual);
            }
        });
    }
}

TEST(NeighbourhoodChains, NoChainMemberAdjacentToALaterOne) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t k = 2 + static_cast<std::size_t>(trial % 5);
        const auto g = graph_from_mask(k, rng() & ((std::uint64_t{1} << (k * (k - 1) / 2)) - 1));
        for (std::size_t u = 0; u < k; ++u) {
            for (std::size_t v = 0; v < k; ++v) {
                if (u != v && g.neighbourhood(u).is_subset_of(g.neighbourhood(v))) {
                    ASSERT_FALSE(g.adjacent(u, v));
                }
            }
        }
    }
}

TEST(Cliques, Examples) {
    const auto k3 = clique_system(make_uniform_graph(3, true));
    EXPECT_EQ(k3.size(), 8u);
    EXPECT_EQ(vc_dimension(k3), 3u);

    const auto p = clique_system(path3());
    EXPECT_EQ(rendered_family(p), (std::set<std::string>{"{}", "{a}", "{b}", "{c}", "{a,b}", "{b,c}"}));
    EXPECT_EQ(vc_dimension(p), 2u);

    const auto ind = independent_set_system(path3());
    EXPECT_EQ(rendered_family(ind), (std::set<std::string>{"{}", "{a}", "{b}", "{c}", "{a,c}"}));

    Caps caps;
    caps.max_vertices = 2;
    EXPECT_THROW(clique_system(path3(), caps), VertexCapExceeded);
    EXPECT_THROW(independent_set_system(path3(), caps), VertexCapExceeded);
}

TEST(Cliques, MaximumIffComplete) {
    for (std::size_t k = 2; k <= 5; ++k) {
        for_each_graph(k, [&](const Graph& g) {
            const auto c = clique_system(g);
            ASSERT_TRUE(is_extremal(c));
            if (!g.edges().empty()) {
                ASSERT_EQ(is_maximum(c), g.edges().size() == k * (k - 1) / 2);
            }
        });
    }
}
