#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubekit/caps.hpp"
#include "cubekit/errors.hpp"
#include "cubekit/subset.hpp"

namespace cubekit {

/// An element of a set-system domain: its index and its original label.
struct ElementId {
    std::size_t index = 0;
    std::string name;

    friend bool operator==(const ElementId&, const ElementId&) = default;
};

/// A finite domain together with a nonempty family of distinct subsets.
///
/// Members are kept in canonical order (cardinality, then lexicographic on
/// indices), so two systems over the same domain with the same members compare
/// equal. Values are immutable; the domain table is shared between derived
/// systems (trace, complement, flip) that keep the same domain.
class SetSystem {
public:
    using Domain = std::vector<std::string>;

    /// Validates and canonicalizes. Throws InputError on an empty family or a
    /// repeated domain name, DuplicateMember on repeated members.
    SetSystem(Domain domain, std::vector<Subset> family);

    /// Same as the constructor but silently merges repeated members.
    static SetSystem collapsed(Domain domain, std::vector<Subset> family);

    /// Builds members from element names. Throws UnknownElement.
    static SetSystem from_names(Domain domain, const std::vector<std::vector<std::string>>& members);

    /// New family over this system's domain (shares the name table).
    [[nodiscard]] SetSystem with_family(std::vector<Subset> family, bool collapse = false) const;

    [[nodiscard]] std::size_t domain_size() const { return domain_->size(); }
    [[nodiscard]] const Domain& domain() const { return *domain_; }
    [[nodiscard]] const std::string& name(std::size_t element) const { return (*domain_)[element]; }
    [[nodiscard]] ElementId element(std::size_t index) const { return {index, (*domain_)[index]}; }
    [[nodiscard]] std::optional<std::size_t> find_element(const std::string& name) const;

    [[nodiscard]] std::span<const Subset> family() const { return family_; }
    [[nodiscard]] const Subset& member(std::size_t i) const { return family_[i]; }
    [[nodiscard]] std::size_t size() const { return family_.size(); }

    /// Position of `member` in the canonical family order, if present.
    [[nodiscard]] std::optional<std::size_t> index_of(const Subset& member) const;
    [[nodiscard]] bool contains(const Subset& member) const { return index_of(member).has_value(); }

    [[nodiscard]] Subset empty_set() const { return Subset(domain_size()); }
    [[nodiscard]] Subset full_set() const { return Subset::full(domain_size()); }

    /// Subset from element names; throws UnknownElement.
    [[nodiscard]] Subset subset_of(const std::vector<std::string>& names) const;
    [[nodiscard]] std::vector<std::string> names_of(const Subset& s) const;
    /// "{a,b}" in domain order; the empty set renders as "{}".
    [[nodiscard]] std::string render(const Subset& s) const;
    /// Whole family, e.g. "{{},{a},{a,b}}".
    [[nodiscard]] std::string render() const;

    friend bool operator==(const SetSystem& a, const SetSystem& b);

private:
    SetSystem(std::shared_ptr<const Domain> domain, std::vector<Subset> family, bool collapse);

    std::shared_ptr<const Domain> domain_;
    std::vector<Subset> family_;
};

/// Elements contained in some member and missing from another.
Subset essential_mask(const SetSystem& s);
std::vector<ElementId> essential_domain(const SetSystem& s);

/// |F| - |ess(X)|.
long additionality(const SetSystem& s);

/// System on domain `y` with family {A ∩ y}; repeated traces merge.
SetSystem trace(const SetSystem& s, const Subset& y);

/// Every member replaced by its complement in the domain.
SetSystem complement_family(const SetSystem& s);

/// XORs every member with `source` △ `target`. Throws MemberNotInFamily.
SetSystem flip(const SetSystem& s, const Subset& source, const Subset& target);

/// Shorthand for flip(s, source -> ∅).
SetSystem flip_to_empty(const SetSystem& s, const Subset& source);

/// Quotient of the domain by equal membership pattern; each class keeps its
/// lowest-index element (and that element's name) as representative.
SetSystem purify(const SetSystem& s);

/// Domain bijection (index in `s` -> index in `t`) carrying s's family onto t's.
/// Returns nullopt when none exists; throws DomainTooLarge above caps.max_iso_domain.
std::optional<std::vector<std::size_t>> find_isomorphism(const SetSystem& s, const SetSystem& t,
                                                         const Caps& caps = {});
bool is_isomorphic(const SetSystem& s, const SetSystem& t, const Caps& caps = {});

}  // namespace cubekit
