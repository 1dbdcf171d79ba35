#include "cubekit/shattering.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace cubekit {

namespace {

void require_enumerable(const SetSystem& s, const Caps& caps) {
    const std::size_t limit = std::min<std::size_t>(caps.max_domain, 62);
    if (s.domain_size() > limit) {
        throw DomainTooLarge("subset enumeration refuses domains above " + std::to_string(limit) +
                             " elements (got " + std::to_string(s.domain_size()) + ")");
    }
}

template <typename Fn>
void for_each_subset(std::size_t n, Fn&& fn) {
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        fn(Subset::from_mask(n, mask));
    }
}

std::size_t distinct_traces(const SetSystem& s, const Subset& y) {
    std::unordered_set<Subset, SubsetHash> traces;
    traces.reserve(s.size() * 2);
    for (const auto& m : s.family()) {
        traces.insert(m & y);
    }
    return traces.size();
}

bool fits_cube(const SetSystem& s, std::size_t k) {
    return k < 63 && s.size() >= (std::size_t{1} << k);
}

}  // namespace

bool is_shattered(const SetSystem& s, const Subset& y) {
    const std::size_t k = y.count();
    if (!fits_cube(s, k)) {
        return false;
    }
    return distinct_traces(s, y) == (std::size_t{1} << k);
}

bool is_strongly_shattered(const SetSystem& s, const Subset& y) {
    const std::size_t k = y.count();
    if (!fits_cube(s, k)) {
        return false;
    }
    // Members agreeing outside Y form one coset; a coset of size 2^|Y| is a full Y-cube.
    std::unordered_map<Subset, std::size_t, SubsetHash> cosets;
    cosets.reserve(s.size() * 2);
    const std::size_t cube = std::size_t{1} << k;
    for (const auto& m : s.family()) {
        if (++cosets[m - y] == cube) {
            return true;
        }
    }
    return false;
}

ShatterReport shatter_report(const SetSystem& s, const Caps& caps) {
    require_enumerable(s, caps);
    ShatterReport report;
    for_each_subset(s.domain_size(), [&](const Subset& y) {
        if (is_shattered(s, y)) {
            report.vc_dim = std::max(report.vc_dim, y.count());
            report.shattered.push_back(y);
        }
        if (is_strongly_shattered(s, y)) {
            report.strongly_shattered.push_back(y);
        }
    });
    std::sort(report.shattered.begin(), report.shattered.end(), canonical_less);
    std::sort(report.strongly_shattered.begin(), report.strongly_shattered.end(), canonical_less);
    return report;
}

std::size_t vc_dimension(const SetSystem& s, const Caps& caps) {
    require_enumerable(s, caps);
    std::size_t best = 0;
    for_each_subset(s.domain_size(), [&](const Subset& y) {
        const std::size_t k = y.count();
        if (k > best && is_shattered(s, y)) {
            best = k;
        }
    });
    return best;
}

std::size_t sauer_shelah_bound(std::size_t n, std::size_t d) {
    constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
    std::size_t total = 0;
    std::size_t binom = 1;  // C(n, i)
    for (std::size_t i = 0; i <= d && i <= n; ++i) {
        if (i > 0) {
            // C(n,i) = C(n,i-1) * (n-i+1) / i; n is small enough here for exact arithmetic.
            if (binom > kMax / (n - i + 1)) {
                return kMax;
            }
            binom = binom * (n - i + 1) / i;
        }
        if (total > kMax - binom) {
            return kMax;
        }
        total += binom;
    }
    return total;
}

bool is_maximum(const SetSystem& s, const Caps& caps) {
    const std::size_t d = vc_dimension(s, caps);
    bool ok = true;
    for_each_subset(s.domain_size(), [&](const Subset& y) {
        if (ok && distinct_traces(s, y) != sauer_shelah_bound(y.count(), d)) {
            ok = false;
        }
    });
    return ok;
}

bool is_extremal(const SetSystem& s, const Caps& caps) {
    const ShatterReport r = shatter_report(s, caps);
    const bool extremal = r.shattered == r.strongly_shattered;
    if (caps.debug_asserts) {
        ensure(extremal == (s.size() == r.shattered.size()), "extremal: sht=ssht disagrees with |F|=|sht|");
        ensure(extremal == (s.size() == r.strongly_shattered.size()),
               "extremal: sht=ssht disagrees with |F|=|ssht|");
    }
    return extremal;
}

SandwichTriple check_sandwich(const SetSystem& s, const Caps& caps) {
    const ShatterReport r = shatter_report(s, caps);
    SandwichTriple t{r.strongly_shattered.size(), s.size(), r.shattered.size()};
    ensure(t.strongly_shattered <= t.family && t.family <= t.shattered,
           "sandwich inequality violated on " + s.render());
    return t;
}

}  // namespace cubekit
