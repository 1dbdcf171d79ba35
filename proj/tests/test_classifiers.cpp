#include <gtest/gtest.h>

#include "brute.hpp"
#include "cubekit/classifiers.hpp"
#include "cubekit/duality.hpp"
#include "cubekit/errors.hpp"
#include "cubekit/one_inclusion.hpp"
#include "cubekit/shattering.hpp"
#include "fixtures.hpp"

using namespace cubekit;
using fixtures::sys;

namespace {

SetSystem claw() { return sys({"1", "2", "3"}, {{"1"}, {"1", "2"}, {"1", "3"}}); }

template <typename Fn>
void for_each_small_system(int max_n, Fn&& fn) {
    for (int n = 0; n <= max_n; ++n) {
        for (brute::Mask fam = 1; fam < (brute::Mask{1} << (1U << n)); ++fam) {
            std::vector<Subset> family;
            for (brute::Mask m = 0; m < (brute::Mask{1} << n); ++m) {
                if ((fam >> m) & 1U) {
                    family.push_back(Subset::from_mask(static_cast<std::size_t>(n), m));
                }
            }
            fn(SetSystem(fixtures::digits(n), family));
        }
    }
}

}  // namespace

TEST(Kind, Names) {
    EXPECT_EQ(to_string(Kind::FullChain), "FullChain");
    EXPECT_EQ(to_string(Kind::UpwardStarlike), "UpwardStarlike");
    EXPECT_EQ(to_string(Kind::DownwardStarlike), "DownwardStarlike");
    EXPECT_EQ(to_string(Kind::TreeDistinctLabels), "TreeDistinctLabels");
    EXPECT_EQ(to_string(Kind::Semitree), "Semitree");
    EXPECT_EQ(to_string(Kind::Other), "Other");
}

TEST(TreeDistinctLabels, Examples) {
    EXPECT_TRUE(is_tree_distinct_labels(claw()));
    EXPECT_FALSE(is_tree_distinct_labels(fixtures::worked_example()));
    EXPECT_FALSE(is_tree_distinct_labels(sys({"1", "2"}, {{}, {"1"}, {"2"}, {"1", "2"}})));
}

TEST(RootedTreeAfterFlip, Examples) {
    const auto s = claw();
    EXPECT_TRUE(is_uniformly_directed_rooted_tree_after_flip(s, s.subset_of({"1"})));
    const auto chain = sys({"1", "2"}, {{}, {"1"}, {"1", "2"}});
    EXPECT_TRUE(is_uniformly_directed_rooted_tree_after_flip(chain, chain.empty_set()));
    EXPECT_THROW(is_uniformly_directed_rooted_tree_after_flip(s, s.empty_set()), MemberNotInFamily);
}

TEST(Semitree, WorkedExampleWitness) {
    const auto s = fixtures::worked_example();
    const auto g = build_graph(s);
    const auto w = is_semitree(g);
    ASSERT_TRUE(w.has_value());
    std::vector<std::string> cycle;
    for (std::size_t v : w->cycle) {
        cycle.push_back(s.render(g.state(v)));
    }
    EXPECT_EQ(cycle, (std::vector<std::string>{"{a}", "{a,b}", "{a,b,c}", "{a,c}"}));
    EXPECT_EQ(s.name(w->labels[0]), "b");
    EXPECT_EQ(s.name(w->labels[1]), "c");
    EXPECT_FALSE(w->pure_cycle);
    ASSERT_FALSE(w->uniform_origins.empty());
    EXPECT_EQ(s.render(g.state(w->uniform_origins.front())), "{a}");
    EXPECT_TRUE(w->uniformly_directed());
}

TEST(Semitree, PureCycleAndTrees) {
    const auto cube = sys({"1", "2"}, {{}, {"1"}, {"2"}, {"1", "2"}});
    const auto w = is_semitree(build_graph(cube));
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(w->pure_cycle);
    EXPECT_FALSE(is_semitree(build_graph(claw())).has_value());
    EXPECT_FALSE(is_semitree(build_graph(sys({"1", "2"}, {{}, {"1"}, {"1", "2"}}))).has_value());
}

TEST(Classify, Examples) {
    const auto star = classify(sys({"1", "2", "3"}, {{}, {"1"}, {"2"}}));
    EXPECT_EQ(star.kind, Kind::UpwardStarlike);
    ASSERT_EQ(star.wings.size(), 2u);
    EXPECT_EQ(star.wings[0].members.size(), 1u);
    EXPECT_EQ(star.wings[1].members.size(), 1u);
    EXPECT_EQ(star.wings[0].domain.count(), 1u);
    EXPECT_FALSE(star.wings[0].domain.intersects(star.wings[1].domain));
    EXPECT_EQ(star.centre, std::optional<std::size_t>{0});

    const auto down = classify(sys({"1", "2", "3"}, {{"1", "2", "3"}, {"2", "3"}, {"1", "3"}}));
    EXPECT_EQ(down.kind, Kind::DownwardStarlike);
    EXPECT_EQ(down.wings.size(), 2u);

    const auto chain = classify(sys({"1", "2"}, {{}, {"1"}, {"1", "2"}}));
    EXPECT_EQ(chain.kind, Kind::FullChain);
    EXPECT_EQ(chain.chain, (std::vector<std::size_t>{0, 1, 2}));

    EXPECT_EQ(classify(claw()).kind, Kind::TreeDistinctLabels);
    EXPECT_EQ(classify(fixtures::worked_example()).kind, Kind::Semitree);
    EXPECT_EQ(classify(sys({"1", "2"}, {{"1"}, {"2"}})).kind, Kind::Other);
    EXPECT_EQ(classify(sys({"1", "2"}, {{"1"}})).kind, Kind::FullChain);
}

TEST(Classify, StarlikeNeedsAnUnusedElement) {
    // Same graph shape as an upward star, but every element is used by some member.
    const auto s = sys({"1", "2"}, {{}, {"1"}, {"2"}});
    EXPECT_FALSE(is_upward_starlike(s));
    EXPECT_EQ(classify(s).kind, Kind::TreeDistinctLabels);
}

TEST(FullChainOrder, Examples) {
    const auto s = sys({"1", "2", "3"}, {{}, {"1"}, {"1", "2"}, {"1", "2", "3"}});
    EXPECT_EQ(full_chain_order(s), (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_FALSE(full_chain_order(sys({"1", "2"}, {{}, {"1", "2"}})).has_value());
}

TEST(Verdict, Examples) {
    EXPECT_TRUE(verdict_self_and_dual(sys({"1", "2", "3"}, {{}, {"1"}, {"1", "2"}, {"1", "2", "3"}})));
    EXPECT_FALSE(verdict_self_and_dual(claw()));
    EXPECT_FALSE(verdict_self_and_dual(fixtures::worked_example()));
}

TEST(Classify, InvariantsExhaustive) {
    for_each_small_system(3, [](const SetSystem& s) {
        const auto g = build_graph(s);
        const auto c = classify(s);
        switch (c.kind) {
            case Kind::FullChain: {
                ASSERT_EQ(c.chain.size(), s.size());
                ASSERT_EQ(g.edge_count() + 1, s.size());
                for (std::size_t v = 0; v < g.vertex_count(); ++v) {
                    ASSERT_LE(g.out_degree(v), 1u);
                    ASSERT_LE(g.in_degree(v), 1u);
                }
                break;
            }
            case Kind::UpwardStarlike:
            case Kind::DownwardStarlike: {
                const bool up = c.kind == Kind::UpwardStarlike;
                ASSERT_TRUE(c.centre.has_value());
                ASSERT_EQ(s.member(*c.centre), up ? s.empty_set() : s.full_set());
                ASSERT_TRUE(up ? is_source(g, *c.centre) : is_sink(g, *c.centre));
                ASSERT_GE(c.wings.size(), 2u);
                Subset used = s.empty_set();
                for (const auto& w : c.wings) {
                    ASSERT_FALSE(w.domain.intersects(used)) << s.render();
                    used |= w.domain;
                }
                break;
            }
            case Kind::TreeDistinctLabels:
                ASSERT_TRUE(is_tree_distinct_labels(s));
                break;
            case Kind::Semitree:
                ASSERT_TRUE(c.semitree.has_value());
                ASSERT_EQ(g.edge_count(), g.vertex_count());
                break;
            case Kind::Other:
                break;
        }
        if (is_connected(g)) {
            std::size_t sources = 0;
            std::size_t sinks = 0;
            for (std::size_t v = 0; v < g.vertex_count(); ++v) {
                sources += is_source(g, v) ? 1 : 0;
                sinks += is_sink(g, v) ? 1 : 0;
            }
            ASSERT_LE(sources, 1u) << s.render();
            ASSERT_LE(sinks, 1u) << s.render();
        }
        std::size_t rooted = 0;
        for (const auto& d : s.family()) {
            rooted += is_uniformly_directed_rooted_tree_after_flip(s, d) ? 1 : 0;
        }
        ASSERT_TRUE(rooted == 0 || rooted == s.size()) << s.render();
        ASSERT_EQ(rooted > 0, is_tree_distinct_labels(s)) << s.render();
        if (s.domain_size() > 0) {
            Caps debug;
            debug.debug_asserts = true;
            const bool verdict = verdict_self_and_dual(s, debug);
            const bool structural =
                c.kind == Kind::FullChain || c.kind == Kind::UpwardStarlike || c.kind == Kind::DownwardStarlike;
            ASSERT_EQ(verdict, structural) << s.render();
            if (verdict) {
                ASSERT_EQ(additionality(s), 1);
            }
        }
    });
}
