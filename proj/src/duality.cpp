#include "cubekit/duality.hpp"

#include "cubekit/one_inclusion.hpp"
#include "cubekit/shattering.hpp"

namespace cubekit {

Subset dual_member(const SetSystem& s, std::size_t element) {
    Subset ax(s.size());
    for (std::size_t m = 0; m < s.size(); ++m) {
        if (s.member(m).test(element)) {
            ax.set(m);
        }
    }
    return ax;
}

std::string dual_element_name(const SetSystem& s, std::size_t member) {
    return "y_" + s.render(s.member(member));
}

namespace {

DualSystem build_dual(const SetSystem& s, const Subset& elements) {
    SetSystem::Domain y;
    y.reserve(s.size());
    for (std::size_t m = 0; m < s.size(); ++m) {
        y.push_back(dual_element_name(s, m));
    }
    std::vector<Subset> family;
    std::vector<std::optional<Subset>> per_element(s.domain_size());
    elements.for_each([&](std::size_t x) {
        per_element[x] = dual_member(s, x);
        family.push_back(*per_element[x]);
    });
    SetSystem system = SetSystem::collapsed(std::move(y), std::move(family));
    std::vector<std::optional<std::size_t>> index(s.domain_size());
    for (std::size_t x = 0; x < s.domain_size(); ++x) {
        if (per_element[x]) {
            index[x] = system.index_of(*per_element[x]);
        }
    }
    return {std::move(system), std::move(index)};
}

}  // namespace

DualSystem dual(const SetSystem& s) {
    if (s.domain_size() == 0) {
        throw EmptyDomainDual("the dual of a system over an empty domain has an empty family");
    }
    return build_dual(s, s.full_set());
}

DualSystem ess_dual(const SetSystem& s) {
    const Subset ess = essential_mask(s);
    if (ess.empty()) {
        throw NoEssentialElements("the ess-dual needs at least one essential element");
    }
    return build_dual(s, ess);
}

bool second_dual_is_purification(const SetSystem& s, const Caps& caps) {
    const DualSystem first = dual(s);
    const DualSystem second = dual(first.system);
    return is_isomorphic(second.system, purify(s), caps);
}

DualFlags classify_dual_properties(const SetSystem& s, const Caps& caps) {
    DualFlags f;
    const DualSystem d = dual(s);
    f.well_graded = is_well_graded(s, caps);
    f.dual_wg = is_well_graded(d.system, caps);
    if (!essential_mask(s).empty()) {
        f.ess_dual_wg = is_well_graded(ess_dual(s).system, caps);
        f.self_and_ess_dual_wg = f.well_graded && *f.ess_dual_wg;
    }
    f.self_dual = is_isomorphic(s, d.system, caps);
    f.almost_self_dual = is_isomorphic(d.system, purify(s), caps);
    f.self_and_dual_wg = f.well_graded && f.dual_wg;
    f.self_and_dual_extremal = is_extremal(s, caps) && is_extremal(d.system, caps);
    f.self_and_dual_maximum = is_maximum(s, caps) && is_maximum(d.system, caps);
    return f;
}

RValues r_values(const SetSystem& s) {
    RValues r;
    r.r = (s.contains(s.empty_set()) ? 1U : 0U) + (s.contains(s.full_set()) ? 1U : 0U);
    if (s.domain_size() == 0) {
        r.r = 1;  // ∅ = X counts once
    }
    const Subset ess = essential_mask(s);
    for (const auto& m : s.family()) {
        if (ess.is_subset_of(m) || !m.intersects(ess)) {
            ++r.r_prime;
        }
    }
    return r;
}

}  // namespace cubekit
