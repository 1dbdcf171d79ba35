#include <gtest/gtest.h>

#include "brute.hpp"
#include "cubekit/errors.hpp"
#include "cubekit/shattering.hpp"
#include "fixtures.hpp"

using namespace cubekit;
using fixtures::sys;

namespace {

std::vector<std::string> rendered(const SetSystem& s, const std::vector<Subset>& list) {
    std::vector<std::string> out;
    for (const auto& y : list) {
        out.push_back(s.render(y));
    }
    return out;
}

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
            fn(SetSystem(fixtures::digits(n), family), n);
        }
    }
}

}  // namespace

TEST(ShatterReport, FullCube) {
    const auto s = sys({"1", "2"}, {{}, {"1"}, {"2"}, {"1", "2"}});
    const auto r = shatter_report(s);
    EXPECT_EQ(rendered(s, r.shattered), (std::vector<std::string>{"{}", "{1}", "{2}", "{1,2}"}));
    EXPECT_EQ(r.strongly_shattered, r.shattered);
    EXPECT_EQ(r.vc_dim, 2u);
}

TEST(ShatterReport, EmptyAndFullOnTwoElements) {
    // Frozen from the brute-force oracle: the strongly shattered list is {∅} only.
    const auto s = sys({"1", "2"}, {{}, {"1", "2"}});
    const auto r = shatter_report(s);
    EXPECT_EQ(rendered(s, r.shattered), (std::vector<std::string>{"{}", "{1}", "{2}"}));
    EXPECT_EQ(rendered(s, r.strongly_shattered), (std::vector<std::string>{"{}"}));
    EXPECT_EQ(r.vc_dim, 1u);
    EXPECT_FALSE(is_extremal(s));
    EXPECT_FALSE(is_maximum(s));
}

TEST(ShatterReport, WorkedExample) {
    const auto s = fixtures::worked_example();
    const auto r = shatter_report(s);
    EXPECT_EQ(r.vc_dim, 2u);
    EXPECT_EQ(r.shattered.size(), 13u);
    EXPECT_EQ(r.strongly_shattered.size(), 13u);
    EXPECT_TRUE(is_extremal(s));
    EXPECT_FALSE(is_maximum(s));
}

TEST(ShatterReport, SingleEmptyMember) {
    const auto s = sys({"x", "y"}, {{}});
    const auto r = shatter_report(s);
    EXPECT_EQ(r.vc_dim, 0u);
    EXPECT_EQ(r.shattered.size(), 1u);
    EXPECT_EQ(r.strongly_shattered.size(), 1u);
}

TEST(ShatterReport, DomainCap) {
    Caps caps;
    caps.max_domain = 2;
    const auto s = sys({"1", "2", "3"}, {{}});
    EXPECT_THROW(shatter_report(s, caps), DomainTooLarge);
    EXPECT_THROW(is_maximum(s, caps), DomainTooLarge);
    EXPECT_THROW(is_extremal(s, caps), DomainTooLarge);
    EXPECT_THROW(check_sandwich(s, caps), DomainTooLarge);
}

TEST(Maximum, Examples) {
    EXPECT_TRUE(is_maximum(sys({"1", "2", "3"}, {{}, {"1"}, {"1", "2"}, {"1", "2", "3"}})));
    EXPECT_FALSE(is_maximum(sys({"1", "2", "3"}, {{"1"}, {"1", "2"}, {"1", "3"}})));
    // {∅,X} is maximum only on a one-element domain.
    EXPECT_TRUE(is_maximum(sys({"1"}, {{}, {"1"}})));
    for (int n = 2; n <= 4; ++n) {
        const auto d = fixtures::digits(n);
        EXPECT_FALSE(is_maximum(sys(d, {{}, d}))) << n;
    }
}

TEST(Extremal, Examples) {
    EXPECT_TRUE(is_extremal(sys({"1", "2", "3"}, {{"1"}, {"1", "2"}, {"1", "3"}})));
    EXPECT_TRUE(is_extremal(sys({"1", "2", "3"}, {{}, {"1"}, {"2"}, {"1", "2"}, {"1", "2", "3"}})));
    EXPECT_EQ(vc_dimension(sys({"1", "2", "3"}, {{}, {"1"}, {"2"}, {"1", "2"}, {"1", "2", "3"}})), 2u);
}

TEST(Sandwich, Examples) {
    const auto cube = check_sandwich(sys({"1", "2"}, {{}, {"1"}, {"2"}, {"1", "2"}}));
    EXPECT_EQ(cube.strongly_shattered, 4u);
    EXPECT_EQ(cube.family, 4u);
    EXPECT_EQ(cube.shattered, 4u);
    const auto claw = check_sandwich(sys({"1", "2", "3"}, {{"1"}, {"1", "2"}, {"1", "3"}}));
    EXPECT_EQ(claw.strongly_shattered, 3u);
    EXPECT_EQ(claw.family, 3u);
    EXPECT_EQ(claw.shattered, 3u);
}

TEST(SauerShelah, Bound) {
    EXPECT_EQ(sauer_shelah_bound(4, 0), 1u);
    EXPECT_EQ(sauer_shelah_bound(4, 1), 5u);
    EXPECT_EQ(sauer_shelah_bound(4, 2), 11u);
    EXPECT_EQ(sauer_shelah_bound(4, 9), 16u);
    EXPECT_EQ(sauer_shelah_bound(0, 0), 1u);
    EXPECT_EQ(sauer_shelah_bound(200, 100), SIZE_MAX);
}

TEST(Shattering, AgreesWithBruteExhaustively) {
    Caps debug;
    debug.debug_asserts = true;
    for_each_small_system(3, [&](const SetSystem& s, int n) {
        const auto f = brute::masks(s);
        const auto r = shatter_report(s);
        std::vector<brute::Mask> sht;
        std::vector<brute::Mask> ssht;
        for (const auto& y : r.shattered) {
            sht.push_back(y.low_word());
        }
        for (const auto& y : r.strongly_shattered) {
            ssht.push_back(y.low_word());
        }
        std::sort(sht.begin(), sht.end());
        std::sort(ssht.begin(), ssht.end());
        ASSERT_EQ(sht, brute::shattered(f, n)) << s.render();
        ASSERT_EQ(ssht, brute::strongly_shattered(f, n)) << s.render();
        ASSERT_EQ(static_cast<int>(r.vc_dim), brute::vc(f, n));
        ASSERT_EQ(is_maximum(s), brute::maximum(f, n)) << s.render();
        ASSERT_EQ(is_extremal(s, debug), brute::extremal(f, n)) << s.render();
        const auto t = check_sandwich(s);
        ASSERT_LE(t.strongly_shattered, t.family);
        ASSERT_LE(t.family, t.shattered);
        ASSERT_EQ(is_extremal(s), t.family == t.shattered);
        ASSERT_EQ(is_extremal(s), t.family == t.strongly_shattered);
        if (is_maximum(s)) {
            ASSERT_TRUE(is_extremal(s));
        }
        for (brute::Mask y = 0; y < (brute::Mask{1} << n); ++y) {
            ASSERT_LE(brute::trace(f, y).size(), sauer_shelah_bound(static_cast<std::size_t>(brute::pop(y)), r.vc_dim));
            const Subset ys = Subset::from_mask(static_cast<std::size_t>(n), y);
            ASSERT_EQ(is_shattered(s, ys), std::binary_search(sht.begin(), sht.end(), y));
            ASSERT_EQ(is_strongly_shattered(s, ys), std::binary_search(ssht.begin(), ssht.end(), y));
        }
    });
}

TEST(Shattering, ListsAreDownwardClosed) {
    for_each_small_system(3, [&](const SetSystem& s, int) {
        const auto r = shatter_report(s);
        for (const auto* list : {&r.shattered, &r.strongly_shattered}) {
            for (const auto& y : *list) {
                y.for_each([&](std::size_t x) {
                    Subset smaller = y;
                    smaller.reset(x);
                    ASSERT_NE(std::find(list->begin(), list->end(), smaller), list->end());
                });
            }
        }
    });
}
