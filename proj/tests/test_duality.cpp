#include <gtest/gtest.h>

#include "brute.hpp"
#include "cubekit/duality.hpp"
#include "cubekit/errors.hpp"
#include "cubekit/one_inclusion.hpp"
#include "fixtures.hpp"

using namespace cubekit;
using fixtures::sys;

namespace {

SetSystem claw() { return sys({"1", "2", "3"}, {{"1"}, {"1", "2"}, {"1", "3"}}); }

template <typename Fn>
void for_each_small_system(int min_n, int max_n, Fn&& fn) {
    for (int n = min_n; n <= max_n; ++n) {
        for (brute::Mask fam = 1; fam < (brute::Mask{1} << (1U << n)); ++fam) {
            std::vector<Subset> family;
            for (brute::Mask m = 0; m < (brute::Mask{1} << n); ++m) {
                if ((fam >> m) & 1U) {
                    family.push_back(Subset::from_mask(static_cast<std::size_t>(n), m));
                }
            }
            fn(SetSystem(fixtures::digits(n), family), n);
        }
    }
}

}  // namespace

TEST(Dual, Claw) {
    const auto d = dual(claw());
    EXPECT_EQ(d.system.domain(), (SetSystem::Domain{"y_{1}", "y_{1,2}", "y_{1,3}"}));
    EXPECT_EQ(d.system, sys(d.system.domain(), {{"y_{1}", "y_{1,2}", "y_{1,3}"}, {"y_{1,2}"}, {"y_{1,3}"}}));
    ASSERT_EQ(d.member_of_element.size(), 3u);
    EXPECT_EQ(d.system.member(*d.member_of_element[0]).count(), 3u);
}

TEST(Dual, EmptyMemberOnly) {
    const auto d = dual(sys({"x", "y"}, {{}}));
    EXPECT_EQ(d.system.domain(), (SetSystem::Domain{"y_{}"}));
    EXPECT_EQ(d.system, sys({"y_{}"}, {{}}));
    EXPECT_EQ(d.member_of_element[0], d.member_of_element[1]);
}

TEST(Dual, StarWithUnusedElement) {
    const auto s = sys({"1", "2", "3"}, {{}, {"1"}, {"2"}});
    const auto d = dual(s);
    const auto& y = d.system.domain();
    EXPECT_EQ(y, (SetSystem::Domain{"y_{}", "y_{1}", "y_{2}"}));
    EXPECT_EQ(d.system, sys(y, {{"y_{1}"}, {"y_{2}"}, {}}));
    const auto e = ess_dual(s);
    EXPECT_EQ(e.system, sys(y, {{"y_{1}"}, {"y_{2}"}}));
    EXPECT_FALSE(e.member_of_element[2].has_value());
}

TEST(Dual, FullCubeEssDualEqualsDual) {
    const auto s = sys({"1", "2"}, {{}, {"1"}, {"2"}, {"1", "2"}});
    EXPECT_EQ(ess_dual(s).system, dual(s).system);
}

TEST(Dual, Errors) {
    EXPECT_THROW(dual(sys({}, {{}})), EmptyDomainDual);
    EXPECT_THROW(ess_dual(sys({"x"}, {{}})), NoEssentialElements);
}

TEST(Dual, MatchesBruteAndSizeBound) {
    for_each_small_system(1, 3, [](const SetSystem& s, int n) {
        const auto d = dual(s);
        std::vector<brute::Mask> order;
        for (const auto& m : s.family()) {
            order.push_back(m.low_word());
        }
        const auto expected = brute::dual(order, n);
        std::set<brute::Mask> actual;
        for (const auto& m : d.system.family()) {
            actual.insert(m.low_word());
        }
        ASSERT_EQ(actual, expected) << s.render();
        ASSERT_LE(d.system.size(), essential_mask(s).count() + 2);
        for (std::size_t x = 0; x < s.domain_size(); ++x) {
            ASSERT_EQ(d.system.member(*d.member_of_element[x]), dual_member(s, x));
        }
    });
}

TEST(SecondDual, Examples) {
    const auto s = sys({"1", "2"}, {{"1", "2"}});
    EXPECT_EQ(dual(dual(s).system).system.domain_size(), 1u);
    EXPECT_TRUE(second_dual_is_purification(s));
    const auto w = fixtures::worked_example();
    EXPECT_TRUE(second_dual_is_purification(w));
}

TEST(SecondDual, PurifiedSystemsReturnToThemselves) {
    for_each_small_system(1, 3, [](const SetSystem& s, int) {
        ASSERT_TRUE(second_dual_is_purification(s)) << s.render();
        const auto p = purify(s);
        if (p.domain_size() > 0) {
            ASSERT_TRUE(is_isomorphic(dual(dual(p).system).system, p)) << s.render();
        }
    });
}

TEST(DualProperties, Examples) {
    const auto chain = sys({"1", "2", "3"}, {{}, {"1"}, {"1", "2"}, {"1", "2", "3"}});
    const auto c = classify_dual_properties(chain);
    EXPECT_TRUE(c.self_and_dual_wg);
    EXPECT_TRUE(c.self_and_dual_extremal);
    EXPECT_EQ(c.self_and_ess_dual_wg, true);

    // Frozen from brute force: {∅,X} on two elements is not even well-graded.
    const auto ends = classify_dual_properties(sys({"1", "2"}, {{}, {"1", "2"}}));
    EXPECT_FALSE(ends.well_graded);
    EXPECT_FALSE(ends.self_and_dual_maximum);
    EXPECT_TRUE(ends.dual_wg);

    const auto k = classify_dual_properties(claw());
    EXPECT_TRUE(k.well_graded);
    EXPECT_FALSE(k.dual_wg);
    EXPECT_FALSE(k.self_and_dual_wg);

    const auto none = classify_dual_properties(sys({"x"}, {{}}));
    EXPECT_FALSE(none.ess_dual_wg.has_value());
    EXPECT_FALSE(none.self_and_ess_dual_wg.has_value());
}

TEST(DualProperties, InvariantsExhaustive) {
    for_each_small_system(1, 3, [](const SetSystem& s, int) {
        const auto f = classify_dual_properties(s);
        if (f.self_dual) {
            ASSERT_TRUE(f.almost_self_dual) << s.render();
        }
        const auto c = classify_dual_properties(complement_family(s));
        ASSERT_EQ(f.dual_wg, c.dual_wg) << s.render();
        const std::size_t ess = essential_mask(s).count();
        if (f.self_and_dual_wg) {
            ASSERT_LE(ess + 1, s.size());
            ASSERT_LE(s.size(), ess + r_values(s).r + 1);
        }
        if (f.self_and_ess_dual_wg.value_or(false)) {
            ASSERT_EQ(s.size(), ess + 1);
            ASSERT_EQ(r_values(s).r_prime, 2u);
        }
    });
}

TEST(DualProperties, ComplementCommutesWithDual) {
    for_each_small_system(1, 3, [](const SetSystem& s, int) {
        const auto lhs = dual(complement_family(s)).system;
        const auto rhs = complement_family(dual(s).system);
        // y_{A^c} in lhs corresponds to y_A in rhs.
        const auto cs = complement_family(s);
        std::vector<std::size_t> map(s.size());
        for (std::size_t i = 0; i < cs.size(); ++i) {
            map[i] = *s.index_of(cs.member(i).complement(s.domain_size()));
        }
        ASSERT_EQ(lhs.size(), rhs.size());
        for (const auto& m : lhs.family()) {
            Subset image(s.size());
            m.for_each([&](std::size_t y) { image.set(map[y]); });
            ASSERT_TRUE(rhs.contains(image)) << s.render();
        }
    });
}

TEST(RValues, Examples) {
    const auto ends = r_values(sys({"1", "2"}, {{}, {"1", "2"}}));
    EXPECT_EQ(ends.r, 2u);
    EXPECT_EQ(ends.r_prime, 2u);
    const auto k = r_values(claw());
    EXPECT_EQ(k.r, 0u);
    EXPECT_EQ(k.r_prime, 1u);
}
