#include "cubekit/set_system.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace cubekit {

namespace {

void check_domain_names(const SetSystem::Domain& domain) {
    std::unordered_set<std::string> seen;
    for (const auto& n : domain) {
        if (!seen.insert(n).second) {
            throw InputError("domain element '" + n + "' appears more than once");
        }
    }
}

}  // namespace

SetSystem::SetSystem(Domain domain, std::vector<Subset> family)
    : SetSystem(std::make_shared<const Domain>(std::move(domain)), std::move(family), false) {
    check_domain_names(*domain_);
}

SetSystem::SetSystem(std::shared_ptr<const Domain> domain, std::vector<Subset> family, bool collapse)
    : domain_(std::move(domain)), family_(std::move(family)) {
    if (family_.empty()) {
        throw InputError("a set system needs a nonempty family");
    }
    const std::size_t words = Subset::word_count_for(domain_->size());
    const Subset full = Subset::full(domain_->size());
    for (const auto& m : family_) {
        if (m.word_count() != words || !m.is_subset_of(full)) {
            throw InputError("member is not a subset of the domain");
        }
    }
    std::sort(family_.begin(), family_.end(), canonical_less);
    auto dup = std::adjacent_find(family_.begin(), family_.end());
    if (dup != family_.end()) {
        if (!collapse) {
            throw DuplicateMember("member " + render(*dup) + " appears more than once");
        }
        family_.erase(std::unique(family_.begin(), family_.end()), family_.end());
    }
}

SetSystem SetSystem::collapsed(Domain domain, std::vector<Subset> family) {
    check_domain_names(domain);
    return SetSystem(std::make_shared<const Domain>(std::move(domain)), std::move(family), true);
}

SetSystem SetSystem::from_names(Domain domain, const std::vector<std::vector<std::string>>& members) {
    check_domain_names(domain);
    auto shared = std::make_shared<const Domain>(std::move(domain));
    std::vector<Subset> family;
    family.reserve(members.size());
    for (const auto& names : members) {
        Subset s(shared->size());
        for (const auto& n : names) {
            auto it = std::find(shared->begin(), shared->end(), n);
            if (it == shared->end()) {
                throw UnknownElement("unknown element '" + n + "'");
            }
            s.set(static_cast<std::size_t>(it - shared->begin()));
        }
        family.push_back(std::move(s));
    }
    return SetSystem(std::move(shared), std::move(family), false);
}

SetSystem SetSystem::with_family(std::vector<Subset> family, bool collapse) const {
    return SetSystem(domain_, std::move(family), collapse);
}

std::optional<std::size_t> SetSystem::find_element(const std::string& name) const {
    auto it = std::find(domain_->begin(), domain_->end(), name);
    if (it == domain_->end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - domain_->begin());
}

std::optional<std::size_t> SetSystem::index_of(const Subset& member) const {
    auto it = std::lower_bound(family_.begin(), family_.end(), member, canonical_less);
    if (it == family_.end() || !(*it == member)) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - family_.begin());
}

Subset SetSystem::subset_of(const std::vector<std::string>& names) const {
    Subset s(domain_size());
    for (const auto& n : names) {
        auto idx = find_element(n);
        if (!idx) {
            throw UnknownElement("unknown element '" + n + "'");
        }
        s.set(*idx);
    }
    return s;
}

std::vector<std::string> SetSystem::names_of(const Subset& s) const {
    std::vector<std::string> out;
    s.for_each([&](std::size_t i) { out.push_back((*domain_)[i]); });
    return out;
}

std::string SetSystem::render(const Subset& s) const {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t i) {
        if (!first) {
            out += ',';
        }
        out += (*domain_)[i];
        first = false;
    });
    out += '}';
    return out;
}

std::string SetSystem::render() const {
    std::string out = "{";
    for (std::size_t i = 0; i < family_.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += render(family_[i]);
    }
    out += '}';
    return out;
}

bool operator==(const SetSystem& a, const SetSystem& b) {
    return (a.domain_ == b.domain_ || *a.domain_ == *b.domain_) && a.family_ == b.family_;
}

Subset essential_mask(const SetSystem& s) {
    Subset in_some = s.empty_set();
    Subset in_all = s.full_set();
    for (const auto& m : s.family()) {
        in_some |= m;
        in_all &= m;
    }
    return in_some - in_all;
}

std::vector<ElementId> essential_domain(const SetSystem& s) {
    std::vector<ElementId> out;
    essential_mask(s).for_each([&](std::size_t i) { out.push_back(s.element(i)); });
    return out;
}

long additionality(const SetSystem& s) {
    return static_cast<long>(s.size()) - static_cast<long>(essential_mask(s).count());
}

SetSystem trace(const SetSystem& s, const Subset& y) {
    const std::vector<std::size_t> kept = y.elements();
    SetSystem::Domain domain;
    domain.reserve(kept.size());
    for (std::size_t i : kept) {
        domain.push_back(s.name(i));
    }
    std::vector<Subset> family;
    family.reserve(s.size());
    for (const auto& m : s.family()) {
        Subset t(kept.size());
        for (std::size_t k = 0; k < kept.size(); ++k) {
            if (m.test(kept[k])) {
                t.set(k);
            }
        }
        family.push_back(std::move(t));
    }
    return SetSystem::collapsed(std::move(domain), std::move(family));
}

SetSystem complement_family(const SetSystem& s) {
    std::vector<Subset> family;
    family.reserve(s.size());
    for (const auto& m : s.family()) {
        family.push_back(m.complement(s.domain_size()));
    }
    return s.with_family(std::move(family));
}

SetSystem flip(const SetSystem& s, const Subset& source, const Subset& target) {
    if (!s.contains(source)) {
        throw MemberNotInFamily("flip source " + s.render(source) + " is not a member");
    }
    const Subset delta = source ^ target;
    std::vector<Subset> family;
    family.reserve(s.size());
    for (const auto& m : s.family()) {
        family.push_back(m ^ delta);
    }
    return s.with_family(std::move(family));
}

SetSystem flip_to_empty(const SetSystem& s, const Subset& source) {
    return flip(s, source, s.empty_set());
}

SetSystem purify(const SetSystem& s) {
    const std::size_t n = s.domain_size();
    // Membership pattern of each element, one bit per member.
    std::vector<Subset> type(n, Subset(s.size()));
    for (std::size_t m = 0; m < s.size(); ++m) {
        s.member(m).for_each([&](std::size_t x) { type[x].set(m); });
    }
    std::vector<std::size_t> class_of(n);
    std::vector<std::size_t> reps;
    for (std::size_t x = 0; x < n; ++x) {
        auto it = std::find_if(reps.begin(), reps.end(), [&](std::size_t r) { return type[r] == type[x]; });
        if (it == reps.end()) {
            class_of[x] = reps.size();
            reps.push_back(x);
        } else {
            class_of[x] = static_cast<std::size_t>(it - reps.begin());
        }
    }
    SetSystem::Domain domain;
    for (std::size_t r : reps) {
        domain.push_back(s.name(r));
    }
    std::vector<Subset> family;
    for (const auto& m : s.family()) {
        Subset q(reps.size());
        m.for_each([&](std::size_t x) { q.set(class_of[x]); });
        family.push_back(std::move(q));
    }
    return SetSystem::collapsed(std::move(domain), std::move(family));
}

namespace {

// Backtracking search over domain bijections. Elements are assigned in a fixed
// order; after each assignment the family projections onto the assigned prefix
// must agree as multisets, which prunes most partial maps early.
class IsoSearch {
public:
    IsoSearch(const SetSystem& s, const SetSystem& t) : s_(s), t_(t), n_(s.domain_size()) {
        const auto sig_s = signatures(s_);
        const auto sig_t = signatures(t_);
        candidates_.resize(n_);
        for (std::size_t x = 0; x < n_; ++x) {
            for (std::size_t y = 0; y < n_; ++y) {
                if (sig_s[x] == sig_t[y]) {
                    candidates_[x].push_back(y);
                }
            }
        }
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            return candidates_[a].size() < candidates_[b].size();
        });
        mapping_.assign(n_, 0);
        used_.assign(n_, false);
    }

    std::optional<std::vector<std::size_t>> run() {
        for (const auto& c : candidates_) {
            if (c.empty()) {
                return std::nullopt;
            }
        }
        std::vector<std::uint64_t> ps(s_.size(), 0);
        std::vector<std::uint64_t> pt(t_.size(), 0);
        if (extend(0, ps, pt)) {
            return mapping_;
        }
        return std::nullopt;
    }

private:
    static std::vector<std::vector<std::size_t>> signatures(const SetSystem& sys) {
        std::vector<std::vector<std::size_t>> sig(sys.domain_size());
        for (const auto& m : sys.family()) {
            const std::size_t c = m.count();
            m.for_each([&](std::size_t x) { sig[x].push_back(c); });
        }
        for (auto& v : sig) {
            std::sort(v.begin(), v.end());
        }
        return sig;
    }

    bool extend(std::size_t depth, const std::vector<std::uint64_t>& ps, const std::vector<std::uint64_t>& pt) {
        if (depth == n_) {
            return true;
        }
        const std::size_t x = order_[depth];
        const std::uint64_t bit = std::uint64_t{1} << depth;
        std::vector<std::uint64_t> nps = ps;
        for (std::size_t m = 0; m < s_.size(); ++m) {
            if (s_.member(m).test(x)) {
                nps[m] |= bit;
            }
        }
        std::vector<std::uint64_t> sorted_s = nps;
        std::sort(sorted_s.begin(), sorted_s.end());
        for (std::size_t y : candidates_[x]) {
            if (used_[y]) {
                continue;
            }
            std::vector<std::uint64_t> npt = pt;
            for (std::size_t m = 0; m < t_.size(); ++m) {
                if (t_.member(m).test(y)) {
                    npt[m] |= bit;
                }
            }
            std::vector<std::uint64_t> sorted_t = npt;
            std::sort(sorted_t.begin(), sorted_t.end());
            if (sorted_s != sorted_t) {
                continue;
            }
            used_[y] = true;
            mapping_[x] = y;
            if (extend(depth + 1, nps, npt)) {
                return true;
            }
            used_[y] = false;
        }
        return false;
    }

    const SetSystem& s_;
    const SetSystem& t_;
    std::size_t n_;
    std::vector<std::vector<std::size_t>> candidates_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> mapping_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const SetSystem& s, const SetSystem& t, const Caps& caps) {
    if (s.domain_size() != t.domain_size() || s.size() != t.size()) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.member(i).count() != t.member(i).count()) {
            return std::nullopt;  // canonical order groups members by cardinality
        }
    }
    const std::size_t limit = std::min<std::size_t>(caps.max_iso_domain, 64);
    if (s.domain_size() > limit) {
        throw DomainTooLarge("isomorphism search refuses domains above " + std::to_string(limit) +
                             " elements (got " + std::to_string(s.domain_size()) + ")");
    }
    return IsoSearch(s, t).run();
}

bool is_isomorphic(const SetSystem& s, const SetSystem& t, const Caps& caps) {
    return find_isomorphism(s, t, caps).has_value();
}

}  // namespace cubekit
