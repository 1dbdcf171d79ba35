#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cubekit/set_system.hpp"

namespace fixtures {

using cubekit::SetSystem;
using Members = std::vector<std::vector<std::string>>;

inline SetSystem sys(const std::vector<std::string>& domain, const Members& members) {
    return SetSystem::from_names(domain, members);
}

inline std::vector<std::string> digits(int n) {
    std::vector<std::string> d;
    for (int i = 1; i <= n; ++i) {
        d.push_back(std::to_string(i));
    }
    return d;
}

/// Thirteen members over {a..l}: well-graded, additionality 2, one-inclusion graph a semitree.
inline SetSystem worked_example() {
    return sys({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"},
               {{"a"},
                {"a", "b"},
                {"a", "b", "c"},
                {"a", "c"},
                {"a", "c", "e"},
                {"a", "c", "e", "f"},
                {"a", "c", "e", "g"},
                {"a", "h"},
                {"a", "b", "c", "d"},
                {"a", "b", "i"},
                {"a", "b", "j"},
                {"a", "b", "j", "k"},
                {"a", "b", "j", "l"}});
}

/// Random nonempty family over an n-element domain (n <= 6).
inline SetSystem random_system(std::mt19937_64& rng, int n) {
    std::vector<cubekit::Subset> family;
    std::bernoulli_distribution keep(0.4);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        if (keep(rng)) {
            family.push_back(cubekit::Subset::from_mask(static_cast<std::size_t>(n), m));
        }
    }
    if (family.empty()) {
        family.push_back(cubekit::Subset(static_cast<std::size_t>(n)));
    }
    return SetSystem(digits(n), std::move(family));
}

}  // namespace fixtures
