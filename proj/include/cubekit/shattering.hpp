#pragma once

#include <cstddef>
#include <vector>

#include "cubekit/caps.hpp"
#include "cubekit/set_system.hpp"

namespace cubekit {

/// Shattered and strongly shattered subsets of the domain, both listed in
/// canonical subset order, plus the VC-dimension.
struct ShatterReport {
    std::vector<Subset> shattered;
    std::vector<Subset> strongly_shattered;
    std::size_t vc_dim = 0;
};

/// Enumerates all 2^|X| subsets. Throws DomainTooLarge above caps.max_domain.
ShatterReport shatter_report(const SetSystem& s, const Caps& caps = {});

/// True iff F ∩ Y = P(Y).
bool is_shattered(const SetSystem& s, const Subset& y);

/// True iff F contains {Z ∪ T : Z ⊆ Y} for some tag T ⊆ X \ Y.
bool is_strongly_shattered(const SetSystem& s, const Subset& y);

std::size_t vc_dimension(const SetSystem& s, const Caps& caps = {});

/// Σ_{i ≤ d} C(n, i), saturating at SIZE_MAX.
std::size_t sauer_shelah_bound(std::size_t n, std::size_t d);

/// Sauer-Shelah holds with equality on every Y ⊆ X.
bool is_maximum(const SetSystem& s, const Caps& caps = {});

/// sht(F) = ssht(F). With caps.debug_asserts the two sandwich equalities are
/// cross-checked as well.
bool is_extremal(const SetSystem& s, const Caps& caps = {});

struct SandwichTriple {
    std::size_t strongly_shattered = 0;
    std::size_t family = 0;
    std::size_t shattered = 0;
};

/// (|ssht|, |F|, |sht|); throws InvariantViolation if the inequalities fail.
SandwichTriple check_sandwich(const SetSystem& s, const Caps& caps = {});

}  // namespace cubekit
