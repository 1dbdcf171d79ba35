#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubekit/caps.hpp"
#include "cubekit/set_system.hpp"

namespace cubekit {

/// Dual (or ess-dual) of a set system.
///
/// The domain Y_F has one element per member of the original family, in
/// family order, named "y_" + the member's rendering. The family is
/// {A_x : x ∈ X} as a set: elements with equal A_x merge into one member.
struct DualSystem {
    SetSystem system;
    /// For each original domain element x, the index of A_x in system.family(),
    /// or nullopt when x was left out (non-essential x in an ess-dual).
    std::vector<std::optional<std::size_t>> member_of_element;
};

/// A_x = {y_A : x ∈ A} as a subset of Y_F.
Subset dual_member(const SetSystem& s, std::size_t element);

/// Name of y_A for the i-th member of s.
std::string dual_element_name(const SetSystem& s, std::size_t member);

/// Throws EmptyDomainDual when the domain is empty.
DualSystem dual(const SetSystem& s);

/// Restricted to essential x. Throws NoEssentialElements when there are none.
DualSystem ess_dual(const SetSystem& s);

/// The second dual is isomorphic to the purification. Always true on a
/// correct implementation; isomorphism caps apply.
bool second_dual_is_purification(const SetSystem& s, const Caps& caps = {});

struct DualFlags {
    bool well_graded = false;
    bool dual_wg = false;
    /// Undefined (nullopt) when the essential domain is empty: the ess-dual
    /// family would be empty.
    std::optional<bool> ess_dual_wg;
    bool self_dual = false;
    bool almost_self_dual = false;
    bool self_and_dual_wg = false;
    std::optional<bool> self_and_ess_dual_wg;
    bool self_and_dual_extremal = false;
    bool self_and_dual_maximum = false;
};

/// Every flag from first principles: duals built, predicates evaluated,
/// isomorphism searched for the self-duality flags.
DualFlags classify_dual_properties(const SetSystem& s, const Caps& caps = {});

struct RValues {
    /// How many of ∅ and X are members.
    std::size_t r = 0;
    /// Members containing ess(X) or disjoint from it.
    std::size_t r_prime = 0;
};

RValues r_values(const SetSystem& s);

}  // namespace cubekit
