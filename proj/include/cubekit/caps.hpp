#pragma once

#include <cstddef>
#include <string_view>

namespace cubekit {

/// Resource limits for the exponential operations, plus the debug cross-check switch.
struct Caps {
    /// Largest domain accepted by shattering-based operations (2^|X| subsets are visited).
    std::size_t max_domain = 20;
    /// Largest domain accepted by the brute-force isomorphism search.
    std::size_t max_iso_domain = 12;
    /// Largest vertex count accepted by clique / independent-set enumeration.
    std::size_t max_vertices = 20;
    /// Evaluate redundant characterizations and throw InvariantViolation on disagreement.
    bool debug_asserts = false;
};

/// Parses "max_domain=16,max_iso=10,max_vertices=18,debug=1" over `base`.
/// Unknown keys or malformed values raise InputError.
Caps parse_caps(std::string_view spec, Caps base = {});

}  // namespace cubekit
