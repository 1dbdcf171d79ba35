#include "cubekit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <thread>

#include "cubekit/duality.hpp"
#include "cubekit/one_inclusion.hpp"
#include "cubekit/shattering.hpp"

namespace cubekit {

namespace {

constexpr std::size_t kMaxSystemDomain = 4;
constexpr std::size_t kMaxGraphVertices = 6;

SetSystem::Domain numbered_domain(std::size_t n) {
    SetSystem::Domain d;
    for (std::size_t i = 1; i <= n; ++i) {
        d.push_back(std::to_string(i));
    }
    return d;
}

}  // namespace

SetSystem system_from_mask(std::size_t n, std::uint64_t family_mask) {
    if (n > kMaxSystemDomain) {
        throw SizeTooLarge("system enumeration supports domains of at most 4 elements");
    }
    std::vector<Subset> family;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
        if ((family_mask >> i) & 1U) {
            family.push_back(Subset::from_mask(n, i));
        }
    }
    return SetSystem(numbered_domain(n), std::move(family));
}

void for_each_system(std::size_t n, const std::function<void(const SetSystem&)>& fn) {
    if (n > kMaxSystemDomain) {
        throw SizeTooLarge("system enumeration supports domains of at most 4 elements");
    }
    const std::uint64_t count = (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
    for (std::uint64_t mask = 1; mask <= count; ++mask) {
        fn(system_from_mask(n, mask));
    }
}

std::vector<SetSystem> enumerate_systems(std::size_t n) {
    std::vector<SetSystem> out;
    for_each_system(n, [&](const SetSystem& s) { out.push_back(s); });
    return out;
}

Graph graph_from_mask(std::size_t k, std::uint64_t edge_mask) {
    if (k > kMaxGraphVertices) {
        throw SizeTooLarge("graph enumeration supports at most 6 vertices");
    }
    Graph g = make_uniform_graph(k, false);
    std::size_t e = 0;
    for (std::size_t u = 0; u < k; ++u) {
        for (std::size_t v = u + 1; v < k; ++v, ++e) {
            if ((edge_mask >> e) & 1U) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

void for_each_graph(std::size_t k, const std::function<void(const Graph&)>& fn) {
    if (k > kMaxGraphVertices) {
        throw SizeTooLarge("graph enumeration supports at most 6 vertices");
    }
    const std::uint64_t pairs = k * (k - (k > 0 ? 1 : 0)) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        fn(graph_from_mask(k, mask));
    }
}

std::vector<Graph> enumerate_graphs(std::size_t k) {
    std::vector<Graph> out;
    for_each_graph(k, [&](const Graph& g) { out.push_back(g); });
    return out;
}

namespace {

using Failure = std::optional<std::string>;

// Quantities shared by several checks on one system, computed on first use.
class SystemContext {
public:
    SystemContext(const SetSystem& s, const Caps& caps, const Hooks& hooks) : s(s), caps(caps), hooks(hooks) {}

    const SetSystem& s;
    const Caps& caps;
    const Hooks& hooks;

    const OneInclusionGraph& graph() {
        if (!graph_) {
            graph_.emplace(build_graph(s));
        }
        return *graph_;
    }
    bool wg() {
        if (!wg_) {
            wg_ = is_well_graded(s, caps);
        }
        return *wg_;
    }
    bool connected() { return is_connected(graph()); }
    const ShatterReport& shatter() {
        if (!shatter_) {
            shatter_.emplace(shatter_report(s, caps));
        }
        return *shatter_;
    }
    bool extremal() { return shatter().shattered == shatter().strongly_shattered; }
    const Subset& ess() {
        if (!ess_) {
            ess_.emplace(essential_mask(s));
        }
        return *ess_;
    }
    std::size_t ess_count() { return ess().count(); }
    long add() { return static_cast<long>(s.size()) - static_cast<long>(ess_count()); }
    bool has_dual() const { return s.domain_size() > 0; }
    const DualSystem& dual_system() {
        if (!dual_) {
            dual_.emplace(dual(s));
        }
        return *dual_;
    }
    bool dual_wg() {
        if (!dual_wg_) {
            dual_wg_ = is_well_graded(dual_system().system, caps);
        }
        return *dual_wg_;
    }
    bool has_ess() { return !ess().empty(); }
    bool ess_dual_wg() {
        if (!ess_dual_wg_) {
            ess_dual_wg_ = is_well_graded(ess_dual(s).system, caps);
        }
        return *ess_dual_wg_;
    }
    Kind kind() {
        if (!kind_) {
            kind_ = classify(s).kind;
        }
        return *kind_;
    }
    bool contains_empty_and_full() { return s.contains(s.empty_set()) && s.contains(s.full_set()); }

private:
    std::optional<OneInclusionGraph> graph_;
    std::optional<bool> wg_;
    std::optional<ShatterReport> shatter_;
    std::optional<Subset> ess_;
    std::optional<DualSystem> dual_;
    std::optional<bool> dual_wg_;
    std::optional<bool> ess_dual_wg_;
    std::optional<Kind> kind_;
};

struct GraphContext {
    const Graph& g;
    const Caps& caps;
    const Hooks& hooks;
};

std::string flags(std::initializer_list<std::pair<const char*, bool>> values) {
    std::string out;
    for (const auto& [name, value] : values) {
        if (!out.empty()) {
            out += ' ';
        }
        out += name;
        out += value ? "=1" : "=0";
    }
    return out;
}

template <class... T>
std::string cat(const T&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

bool all_equal(std::initializer_list<bool> values) {
    return std::all_of(values.begin(), values.end(), [&](bool v) { return v == *values.begin(); });
}

std::size_t label_count(const OneInclusionGraph& g, std::size_t label) {
    return static_cast<std::size_t>(
        std::count_if(g.edges().begin(), g.edges().end(), [&](const LabelledEdge& e) { return e.label == label; }));
}

// ---- set-system checks ----

Failure check_sandwich(SystemContext& c) {
    const auto& r = c.shatter();
    for (const auto& y : r.strongly_shattered) {
        if (!std::binary_search(r.shattered.begin(), r.shattered.end(), y, canonical_less)) {
            return cat("strongly shattered but not shattered: ", c.s.render(y));
        }
    }
    const std::size_t f = c.s.size();
    if (!(r.strongly_shattered.size() <= f && f <= r.shattered.size())) {
        return cat("sandwich violated: ", r.strongly_shattered.size(), " <= ", f, " <= ", r.shattered.size());
    }
    const std::size_t n = c.s.domain_size();
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
        const Subset ys = Subset::from_mask(n, y);
        const std::size_t t = trace(c.s, ys).size();
        const std::size_t bound = sauer_shelah_bound(ys.count(), r.vc_dim);
        if (t > bound) {
            return cat("Sauer-Shelah violated on ", c.s.render(ys), ": ", t, " > ", bound);
        }
    }
    const bool e1 = r.shattered == r.strongly_shattered;
    const bool e2 = f == r.shattered.size();
    const bool e3 = f == r.strongly_shattered.size();
    if (!all_equal({e1, e2, e3})) {
        return cat("extremal characterizations disagree: ",
                   flags({{"sht=ssht", e1}, {"|F|=|sht|", e2}, {"|F|=|ssht|", e3}}));
    }
    if (is_extremal(c.s, c.caps) != e1) {
        return std::string("is_extremal disagrees with sht=ssht");
    }
    if (is_maximum(c.s, c.caps) && !e1) {
        return std::string("maximum but not extremal");
    }
    return std::nullopt;
}

Failure check_prop_ineq(SystemContext& c) {
    const auto& g = c.graph();
    if (!is_bipartite_by_parity(g)) {
        return std::string("one-inclusion graph is not bipartite by parity");
    }
    if (c.wg() != is_well_graded_midpoint(c.s)) {
        return cat("distance and midpoint tests disagree: distance=", c.wg());
    }
    if (c.connected() && label_set(g) != c.ess()) {
        return std::string("connected graph whose labels differ from the essential domain");
    }
    if (c.wg()) {
        if (!c.connected()) {
            return std::string("well-graded but disconnected");
        }
        const std::size_t f = c.s.size();
        if (!(c.ess_count() + 1 <= f && f <= g.edge_count() + 1)) {
            return cat("inequalities violated: |ess|+1=", c.ess_count() + 1, " |F|=", f,
                       " |E|+1=", g.edge_count() + 1);
        }
    }
    return std::nullopt;
}

Failure check_additionality_one(SystemContext& c) {
    const auto& g = c.graph();
    const std::size_t f = c.s.size();
    const std::size_t e = g.edge_count();
    const std::size_t ess = c.ess_count();
    const std::size_t vc = c.shatter().vc_dim;
    const bool tree = is_tree(g);
    const bool distinct = labels_distinct(g);
    bool every = true;
    bool some = false;
    for (const auto& a : c.s.family()) {
        const bool ok = is_uniformly_directed_rooted_tree_after_flip(c.s, a);
        every = every && ok;
        some = some || ok;
    }
    const bool c1 = c.wg() && vc <= 1;
    const bool c2 = is_extremal(c.s, c.caps) && vc <= 1;
    const bool c3 = c.connected() && f == ess + 1 && f == e + 1;
    const bool c4 = c.wg() && f == e + 1;
    const bool c5 = c.wg() && c.add() == 1;
    const bool c6 = tree && distinct;
    const bool c7 = tree && f == ess + 1 && e == ess && distinct && label_set(g) == c.ess();
    if (!all_equal({c1, c2, c3, c4, c5, c6, c7, every, some})) {
        return cat("clauses disagree: ", flags({{"wg-vc1", c1},
                                               {"ext-vc1", c2},
                                               {"conn-tight", c3},
                                               {"wg-right", c4},
                                               {"wg-add1", c5},
                                               {"tree-distinct", c6},
                                               {"tree-ess", c7},
                                               {"every-flip", every},
                                               {"some-flip", some}}));
    }
    return std::nullopt;
}

Failure check_additionality_two(SystemContext& c) {
    bool every = true;
    bool some = false;
    for (const auto& d : c.s.family()) {
        const auto w = c.hooks.semitree(build_graph(flip_to_empty(c.s, d)));
        const bool ok = w && w->uniformly_directed();
        every = every && ok;
        some = some || ok;
    }
    const bool a1 = c.wg() && c.add() == 2;
    const bool a4 = c.hooks.semitree(c.graph()).has_value();
    if (!all_equal({a1, every, some, a4})) {
        return cat("clauses disagree: ",
                   flags({{"wg-add2", a1}, {"every-flip", every}, {"some-flip", some}, {"semitree", a4}}));
    }
    return std::nullopt;
}

Failure check_vc_add2(SystemContext& c) {
    const std::size_t vc = c.shatter().vc_dim;
    if (vc <= 1 && c.add() > 1) {
        return cat("VC ", vc, " with additionality ", c.add());
    }
    if (c.wg() && c.add() == 2 && vc != 2) {
        return cat("well-graded with additionality 2 but VC ", vc);
    }
    return std::nullopt;
}

Failure check_below(SystemContext& c) {
    if (!c.wg() || !c.s.contains(c.s.empty_set())) {
        return std::nullopt;
    }
    const std::size_t m = c.s.size();
    const auto& g = c.graph();
    std::vector<std::uint32_t> under(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (c.s.member(j).is_subset_of(c.s.member(i))) {
                under[i] |= std::uint32_t{1} << j;
            }
        }
    }
    const long r = c.add();
    const std::uint32_t total = std::uint32_t{1} << m;
    std::vector<std::uint32_t> bel(total, 0);
    std::vector<std::uint64_t> st(total, 0);
    for (std::uint32_t u = 1; u < total; ++u) {
        const unsigned low = static_cast<unsigned>(std::countr_zero(u));
        const std::uint32_t rest = u & (u - 1);
        bel[u] = bel[rest] | under[low];
        st[u] = st[rest] | c.s.member(low).low_word();
        const long nb = std::popcount(bel[u]);
        const long ns = std::popcount(st[u]);
        if (nb < ns + 1 || nb > ns + r) {
            return cat("bounds violated for U mask ", u, ": |st(U)|=", ns, " |below(U)|=", nb, " r=", r);
        }
    }
    // Library evaluation agrees with the bitmask one on singletons and on V.
    std::vector<std::size_t> all(m);
    for (std::size_t i = 0; i < m; ++i) {
        all[i] = i;
        const std::size_t one[] = {i};
        if (below(g, one).size() != static_cast<std::size_t>(std::popcount(under[i])) ||
            st_union(g, one) != c.s.member(i)) {
            return cat("below/st disagree with the bitmask evaluation at ", c.s.render(c.s.member(i)));
        }
    }
    if (below(g, all).size() != m || st_union(g, all).low_word() != st[total - 1]) {
        return std::string("below/st disagree with the bitmask evaluation on all vertices");
    }
    return std::nullopt;
}

Failure check_shattered_labels(SystemContext& c) {
    if (!c.wg()) {
        return std::nullopt;
    }
    for (const auto& d : c.shatter().shattered) {
        const std::size_t need = d.empty() ? 0 : std::size_t{1} << (d.count() - 1);
        for (std::size_t a : d.elements()) {
            const std::size_t have = label_count(c.graph(), a);
            if (have < need) {
                return cat("label ", c.s.name(a), " of shattered ", c.s.render(d), " on ", have, " < ", need,
                           " edges");
            }
        }
    }
    return std::nullopt;
}

Failure check_cut_set(SystemContext& c) {
    const auto& g = c.graph();
    for (std::size_t a : label_set(g).elements()) {
        const auto cut = cut_set(g, a);
        std::size_t expected = 0;
        for (const auto& m : c.s.family()) {
            if (!m.test(a)) {
                Subset up = m;
                up.set(a);
                expected += c.s.contains(up) ? 1 : 0;
            }
        }
        if (cut.size() != expected) {
            return cat("cut-set of ", c.s.name(a), " has ", cut.size(), " edges, expected ", expected);
        }
    }
    return std::nullopt;
}

Failure check_second_dual(SystemContext& c) {
    if (!c.has_dual()) {
        return std::nullopt;
    }
    const auto& d = c.dual_system();
    for (std::size_t x = 0; x < c.s.domain_size(); ++x) {
        if (!d.member_of_element[x] || d.system.member(*d.member_of_element[x]) != dual_member(c.s, x)) {
            return cat("dual index map broken at element ", c.s.name(x));
        }
    }
    if (!second_dual_is_purification(c.s, c.caps)) {
        return std::string("second dual not isomorphic to the purification");
    }
    const SetSystem p = purify(c.s);
    for (std::size_t x = 0; x < p.domain_size(); ++x) {
        for (std::size_t y = x + 1; y < p.domain_size(); ++y) {
            if (dual_member(p, x) == dual_member(p, y)) {
                return cat("purification keeps equal types ", p.name(x), " and ", p.name(y));
            }
        }
    }
    return std::nullopt;
}

Failure check_complement_dual(SystemContext& c) {
    if (!c.has_dual()) {
        return std::nullopt;
    }
    const std::size_t n = c.s.domain_size();
    const SetSystem comp = complement_family(c.s);
    const SetSystem dc = dual(comp).system;
    const SetSystem cd = complement_family(c.dual_system().system);
    // y_{A^c} in dc corresponds to y_A in cd.
    std::vector<std::size_t> to_original(comp.size());
    for (std::size_t j = 0; j < comp.size(); ++j) {
        to_original[j] = *c.s.index_of(comp.member(j).complement(n));
    }
    std::vector<Subset> mapped;
    for (const auto& m : dc.family()) {
        Subset image(c.s.size());
        m.for_each([&](std::size_t j) { image.set(to_original[j]); });
        mapped.push_back(image);
    }
    std::sort(mapped.begin(), mapped.end(), canonical_less);
    if (!std::equal(mapped.begin(), mapped.end(), cd.family().begin(), cd.family().end())) {
        return std::string("dual of the complement differs from the complement of the dual under y_A -> y_A^c");
    }
    if (c.dual_wg() != is_well_graded(dc, c.caps)) {
        return std::string("dual well-gradedness not preserved by complementation");
    }
    return std::nullopt;
}

Failure check_flip_invariance(SystemContext& c) {
    const long vc = static_cast<long>(c.shatter().vc_dim);
    for (const auto& a : c.s.family()) {
        const SetSystem f = flip_to_empty(c.s, a);
        if (!f.contains(f.empty_set()) || essential_mask(f) != c.ess() || additionality(f) != c.add() ||
            static_cast<long>(vc_dimension(f, c.caps)) != vc || is_well_graded(f, c.caps) != c.wg()) {
            return cat("flip at ", c.s.render(a), " changes an invariant");
        }
    }
    const SetSystem comp = complement_family(c.s);
    if (!(complement_family(comp) == c.s)) {
        return std::string("complement is not an involution");
    }
    if (essential_mask(comp) != c.ess()) {
        return std::string("complement changes the essential domain");
    }
    return std::nullopt;
}

Failure check_reverse(SystemContext& c) {
    const OneInclusionGraph r = reverse(c.graph());
    if (r.edge_count() != build_graph(complement_family(c.s)).edge_count()) {
        return std::string("reverse and complement graph differ in edge count");
    }
    return std::nullopt;
}

Failure check_source_sink(SystemContext& c) {
    if (!c.connected()) {
        return std::nullopt;
    }
    const auto& g = c.graph();
    std::size_t sources = 0;
    std::size_t sinks = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        sources += is_source(g, v) ? 1 : 0;
        sinks += is_sink(g, v) ? 1 : 0;
    }
    if (sources > 1 || sinks > 1) {
        return cat(sources, " sources and ", sinks, " sinks");
    }
    return std::nullopt;
}

Failure check_extremal_wg(SystemContext& c) {
    if (c.extremal() && !c.wg()) {
        return std::string("extremal but not well-graded");
    }
    return std::nullopt;
}

Failure check_selfdual_char(SystemContext& c) {
    if (!c.has_dual()) {
        return std::nullopt;
    }
    const bool analytic = c.wg() && c.dual_wg();
    const Kind k = c.kind();
    const bool structural = k == Kind::FullChain || k == Kind::UpwardStarlike || k == Kind::DownwardStarlike;
    if (analytic != structural) {
        return cat("self-and-dual well-graded=", analytic, " but kind ", to_string(k));
    }
    if (verdict_self_and_dual(c.s, c.caps) != analytic) {
        return std::string("verdict disagrees with the direct evaluation");
    }
    if (analytic && c.add() != 1) {
        return cat("self-and-dual well-graded with additionality ", c.add());
    }
    if (c.has_ess()) {
        const bool ess_side = c.wg() && c.ess_dual_wg();
        if (ess_side != (k == Kind::FullChain)) {
            return cat("self-and-ess-dual well-graded=", ess_side, " but kind ", to_string(k));
        }
    }
    return std::nullopt;
}

Failure check_r_values(SystemContext& c) {
    if (!c.has_dual()) {
        return std::nullopt;
    }
    const RValues rv = r_values(c.s);
    const std::size_t f = c.s.size();
    const std::size_t ess = c.ess_count();
    if (c.wg() && c.dual_wg() && !(ess + 1 <= f && f <= ess + rv.r + 1)) {
        return cat("|F|=", f, " outside [|ess|+1, |ess|+r+1] with |ess|=", ess, " r=", rv.r);
    }
    if (c.has_ess() && c.wg() && c.ess_dual_wg() && (f != ess + 1 || rv.r_prime != 2)) {
        return cat("self-and-ess-dual well-graded with |F|=", f, " |ess|=", ess, " r'=", rv.r_prime);
    }
    return std::nullopt;
}

Failure check_semitree_dual(SystemContext& c) {
    if (!c.has_dual() || !is_semitree(c.graph())) {
        return std::nullopt;
    }
    if (c.dual_wg()) {
        return std::string("semitree with a well-graded dual");
    }
    if (c.has_ess() && c.ess_dual_wg()) {
        return std::string("semitree with a well-graded ess-dual");
    }
    return std::nullopt;
}

Failure check_selfdual_ext(SystemContext& c) {
    if (!c.has_dual()) {
        return std::nullopt;
    }
    const bool ext = c.extremal() && is_extremal(c.dual_system().system, c.caps);
    const bool wg = c.wg() && c.dual_wg();
    if (ext != wg) {
        return cat("self-and-dual extremal=", ext, " self-and-dual well-graded=", wg);
    }
    return std::nullopt;
}

bool self_and_dual_maximum(SystemContext& c) {
    return is_maximum(c.s, c.caps) && is_maximum(c.dual_system().system, c.caps);
}

Failure check_selfdual_max(SystemContext& c) {
    if (!c.has_dual()) {
        return std::nullopt;
    }
    const bool lhs = self_and_dual_maximum(c);
    const bool rhs = c.s.size() == 1 || (c.s.size() == 2 && c.contains_empty_and_full());
    if (lhs != rhs) {
        return cat("self-and-dual maximum=", lhs, " but (|F|=1 or F={{},X})=", rhs);
    }
    return std::nullopt;
}

Failure check_selfdual_max_repaired(SystemContext& c) {
    if (!c.has_dual()) {
        return std::nullopt;
    }
    const bool lhs = self_and_dual_maximum(c);
    const bool rhs =
        c.s.size() == 1 || (c.s.size() == 2 && c.contains_empty_and_full() && c.s.domain_size() == 1);
    if (lhs != rhs) {
        return cat("self-and-dual maximum=", lhs, " but (|F|=1 or F={{},X} with |X|=1)=", rhs);
    }
    return std::nullopt;
}

Failure check_self_dual_almost(SystemContext& c) {
    if (!c.has_dual()) {
        return std::nullopt;
    }
    const SetSystem& d = c.dual_system().system;
    if (is_isomorphic(c.s, d, c.caps) && !is_isomorphic(d, purify(c.s), c.caps)) {
        return std::string("self-dual but not almost self-dual");
    }
    return std::nullopt;
}

// ---- graph checks ----

bool all_isolated(const Graph& g) {
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.degree(v) != 0) {
            return false;
        }
    }
    return true;
}

bool complete(const Graph& g) {
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.degree(v) + 1 != g.size()) {
            return false;
        }
    }
    return true;
}

Failure check_halfgraph(GraphContext& c) {
    const SetSystem nsys = neighbourhood_system(c.g);
    const bool nwg = is_well_graded(nsys, c.caps);
    const auto dec = decompose_neighbourhood_wg(c.g, c.caps);
    const bool structural = is_half_graph_union(c.g);
    if (nwg != dec.has_value() || nwg != structural) {
        return cat("neighbourhood-wg=", nwg, " decomposition=", dec.has_value(), " half-graph-union=", structural);
    }
    if (dec) {
        if (dec->isolated.empty()) {
            return std::string("decomposition without isolated vertices");
        }
        if (!(reassemble(*dec, c.g.names()) == c.g)) {
            return std::string("decomposition does not reassemble the graph");
        }
    }
    const bool next = is_extremal(nsys, c.caps);
    if (next != nwg) {
        return cat("neighbourhood-extremal=", next, " neighbourhood-wg=", nwg);
    }
    const bool nmax = is_maximum(nsys, c.caps);
    if (nmax != all_isolated(c.g)) {
        return cat("neighbourhood-maximum=", nmax, " all-isolated=", all_isolated(c.g));
    }
    return std::nullopt;
}

Failure check_closed_halfgraph(GraphContext& c) {
    const SetSystem csys = closed_neighbourhood_system(c.g);
    const bool cnwg = is_well_graded(csys, c.caps);
    const bool reduced = is_well_graded(neighbourhood_system(graph_complement(c.g)), c.caps);
    const bool structural = is_co_half_graph_join(c.g);
    if (cnwg != reduced || cnwg != structural) {
        return cat("closed-wg=", cnwg, " complement-wg=", reduced, " co-half-graph-join=", structural);
    }
    if (is_extremal(csys, c.caps) != cnwg) {
        return std::string("closed-extremal differs from closed-wg");
    }
    const bool cnmax = is_maximum(csys, c.caps);
    if (cnmax != complete(c.g)) {
        return cat("closed-maximum=", cnmax, " complete=", complete(c.g));
    }
    return std::nullopt;
}

Failure check_clique_systems(GraphContext& c) {
    const std::size_t k = c.g.size();
    std::size_t omega = 0;
    std::size_t alpha = 0;
    std::size_t cliques = 0;
    std::size_t independents = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
        bool clique = true;
        bool independent = true;
        for (std::size_t u = 0; u < k; ++u) {
            for (std::size_t v = u + 1; v < k; ++v) {
                if (((m >> u) & 1U) && ((m >> v) & 1U)) {
                    clique = clique && c.g.adjacent(u, v);
                    independent = independent && !c.g.adjacent(u, v);
                }
            }
        }
        const auto size = static_cast<std::size_t>(std::popcount(m));
        if (clique) {
            ++cliques;
            omega = std::max(omega, size);
        }
        if (independent) {
            ++independents;
            alpha = std::max(alpha, size);
        }
    }
    const SetSystem cs = clique_system(c.g, c.caps);
    const SetSystem is = independent_set_system(c.g, c.caps);
    if (cs.size() != cliques || is.size() != independents) {
        return cat("family sizes ", cs.size(), "/", is.size(), " expected ", cliques, "/", independents);
    }
    for (const SetSystem* s : {&cs, &is}) {
        for (const auto& m : s->family()) {
            for (std::size_t x : m.elements()) {
                Subset smaller = m;
                smaller.reset(x);
                if (!s->contains(smaller)) {
                    return std::string("system not down-closed");
                }
            }
        }
        if (!is_extremal(*s, c.caps)) {
            return std::string("down-closed system not extremal");
        }
    }
    if (vc_dimension(cs, c.caps) != omega || vc_dimension(is, c.caps) != alpha) {
        return cat("VC ", vc_dimension(cs, c.caps), "/", vc_dimension(is, c.caps), " but clique/independence number ",
                   omega, "/", alpha);
    }
    if (omega >= 2 && is_maximum(cs, c.caps) != complete(c.g)) {
        return std::string("clique system maximum differs from completeness");
    }
    if (alpha >= 2 && is_maximum(is, c.caps) != all_isolated(c.g)) {
        return std::string("independent-set system maximum differs from edgelessness");
    }
    return std::nullopt;
}

Failure check_semi_twin(GraphContext& c) {
    const TwinFlags t = twin_analysis(c.g);
    if (is_well_graded(neighbourhood_system(c.g), c.caps) && !t.semi_twin_free) {
        return std::string("neighbourhood-wg but not semi-twin-free");
    }
    if (is_well_graded(closed_neighbourhood_system(c.g), c.caps) && !t.semi_closed_twin_free) {
        return std::string("closed-neighbourhood-wg but not semi-closed-twin-free");
    }
    return std::nullopt;
}

Failure check_neigh_selfdual(GraphContext& c) {
    const SetSystem nsys = neighbourhood_system(c.g);
    const SetSystem d = dual(nsys).system;
    if (!is_isomorphic(d, purify(nsys), c.caps)) {
        return std::string("neighbourhood system not almost self-dual");
    }
    if (twin_analysis(c.g).twin_free && !is_isomorphic(nsys, d, c.caps)) {
        return std::string("twin-free graph whose neighbourhood system is not self-dual");
    }
    return std::nullopt;
}

Failure check_neigh_selfanddual(GraphContext& c) {
    const SetSystem nsys = neighbourhood_system(c.g);
    if (is_well_graded(nsys, c.caps) && !is_well_graded(dual(nsys).system, c.caps)) {
        return std::string("neighbourhood-wg with a non-well-graded dual");
    }
    return std::nullopt;
}

Failure check_chain_exclusion(GraphContext& c) {
    for (std::size_t u = 0; u < c.g.size(); ++u) {
        for (std::size_t v = 0; v < c.g.size(); ++v) {
            const Subset& nu = c.g.neighbourhood(u);
            const Subset& nv = c.g.neighbourhood(v);
            if (nu.is_subset_of(nv) && (nv.test(u) || nu.test(v) || nu.test(u) || nv.test(v))) {
                return cat("N(", c.g.name(u), ") within N(", c.g.name(v), ") yet the two are related");
            }
        }
    }
    return std::nullopt;
}

struct CheckEntry {
    CheckInfo info;
    Failure (*system_fn)(SystemContext&) = nullptr;
    Failure (*graph_fn)(GraphContext&) = nullptr;
};

const std::vector<CheckEntry>& registry() {
    static const std::vector<CheckEntry> entries = [] {
        std::vector<CheckEntry> e;
        auto sys = [&](std::string id, std::string statement, Failure (*fn)(SystemContext&),
                       std::size_t max_size = kMaxSystemDomain) {
            e.push_back({{std::move(id), std::move(statement), Target::Systems, max_size}, fn, nullptr});
        };
        auto gr = [&](std::string id, std::string statement, Failure (*fn)(GraphContext&),
                      std::size_t max_size = kMaxGraphVertices) {
            e.push_back({{std::move(id), std::move(statement), Target::Graphs, max_size}, nullptr, fn});
        };
        sys("sandwich", "|ssht| <= |F| <= |sht|, Sauer-Shelah on every trace, extremal three-way agreement",
            check_sandwich);
        sys("prop-ineq", "WG => connected and |ess|+1 <= |F| <= |E|+1; labels = ess when connected; midpoint test",
            check_prop_ineq);
        sys("thm-3-equivalences", "nine characterizations of additionality-1 well-graded families agree",
            check_additionality_one);
        sys("thm-additionality-2", "WG with additionality 2 <=> every/some flip uniformly directed semitree <=> semitree",
            check_additionality_two);
        sys("rem-vc-add2", "VC <= 1 => additionality <= 1; WG with additionality 2 => VC = 2", check_vc_add2);
        sys("lemma-below", "WG with {} in F: |st(U)|+1 <= |below(U)| <= |st(U)|+r for every nonempty U",
            check_below);
        sys("rem-shattered-labels", "WG and D shattered => every a in D labels >= 2^(|D|-1) edges",
            check_shattered_labels);
        sys("rem-cut-set", "edges labelled a form the cut between members with and without a", check_cut_set);
        sys("rem-second-dual", "second dual isomorphic to the purification", check_second_dual);
        sys("rem-complement-dual", "dual of complement = complement of dual under y_A -> y_A^c",
            check_complement_dual);
        sys("rem-flip-invariance", "flips keep ess, additionality, VC and WG; complement is an involution",
            check_flip_invariance);
        sys("rem-reverse", "reversed one-inclusion graph is the graph of the complement family", check_reverse);
        sys("rem-source-sink", "a connected one-inclusion graph has at most one source and one sink",
            check_source_sink);
        sys("rem-extremal-wg", "extremal => well-graded", check_extremal_wg);
        sys("thm-selfdual-char",
            "WG and dual WG <=> full-chain or upward/downward-starlike, with additionality 1; ess-dual variant "
            "<=> full-chain",
            check_selfdual_char);
        sys("lemma-r-values", "self-and-dual WG => |ess|+1 <= |F| <= |ess|+r+1; self-and-ess-dual WG => r' = 2",
            check_r_values);
        sys("lemma-semitree-dual", "semitree => dual and ess-dual not WG", check_semitree_dual);
        sys("cor-selfdual-ext", "self-and-dual extremal <=> self-and-dual WG", check_selfdual_ext);
        sys("cor-selfdual-max", "self-and-dual maximum <=> |F| = 1 or F = {{}, X}", check_selfdual_max);
        sys("cor-selfdual-max-repaired", "self-and-dual maximum <=> |F| = 1 or (F = {{}, X} and |X| = 1)",
            check_selfdual_max_repaired);
        sys("cor-self-dual-almost", "self-dual => almost self-dual", check_self_dual_almost);
        gr("thm-halfgraph",
           "neighbourhood-WG <=> half-graphs plus isolated vertices; decomposition reassembles; extremal <=> WG; "
           "maximum <=> all isolated",
           check_halfgraph);
        gr("thm-closed-halfgraph",
           "closed-WG <=> complement neighbourhood-WG <=> co-half-graphs joined to a clique; maximum <=> complete",
           check_closed_halfgraph);
        gr("rem-clique-systems",
           "clique and independent-set systems are down-closed, extremal, VC = clique/independence number",
           check_clique_systems, 5);
        gr("rem-semi-twin", "neighbourhood-WG => semi-twin-free (closed variant likewise)", check_semi_twin);
        gr("rem-neigh-selfdual", "neighbourhood systems are almost self-dual, self-dual when twin-free",
           check_neigh_selfdual, 5);
        gr("rem-neigh-selfanddual", "neighbourhood-WG => neighbourhood system has a WG dual",
           check_neigh_selfanddual);
        gr("rem-chain-exclusion", "N(u) within N(v) in a loopless graph => u, v not adjacent", check_chain_exclusion);
        return e;
    }();
    return entries;
}

const CheckEntry& find_entry(std::string_view id) {
    for (const auto& e : registry()) {
        if (e.info.id == id) {
            return e;
        }
    }
    throw InputError("unknown check id '" + std::string(id) + "'");
}

Failure guarded(const std::function<Failure()>& fn) {
    try {
        return fn();
    } catch (const std::exception& ex) {
        return std::string("exception: ") + ex.what();
    }
}

Failure run_entry(const CheckEntry& e, const Instance& instance, const Hooks& hooks, const Caps& caps) {
    if (e.info.target == Target::Systems) {
        const auto* s = std::get_if<SetSystem>(&instance);
        if (s == nullptr) {
            throw InputError("check '" + e.info.id + "' expects a set system");
        }
        SystemContext ctx(*s, caps, hooks);
        return guarded([&] { return e.system_fn(ctx); });
    }
    const auto* g = std::get_if<Graph>(&instance);
    if (g == nullptr) {
        throw InputError("check '" + e.info.id + "' expects a graph");
    }
    GraphContext ctx{*g, caps, hooks};
    return guarded([&] { return e.graph_fn(ctx); });
}

// Instance i of the flattened enumeration over all sizes up to `max`.
struct Slot {
    std::size_t size;
    std::uint64_t mask;
};

std::vector<std::pair<std::size_t, std::uint64_t>> size_ranges(Target t, std::size_t max) {
    // (size, number of instances of that size)
    std::vector<std::pair<std::size_t, std::uint64_t>> out;
    if (t == Target::Systems) {
        for (std::size_t n = 0; n <= max; ++n) {
            out.emplace_back(n, (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1);
        }
    } else {
        for (std::size_t k = 1; k <= max; ++k) {
            out.emplace_back(k, std::uint64_t{1} << (k * (k - 1) / 2));
        }
    }
    return out;
}

Slot slot_at(Target t, const std::vector<std::pair<std::size_t, std::uint64_t>>& ranges, std::uint64_t index) {
    for (const auto& [size, count] : ranges) {
        if (index < count) {
            return {size, t == Target::Systems ? index + 1 : index};
        }
        index -= count;
    }
    return {0, 0};
}

struct Tally {
    std::size_t instances = 0;
    std::size_t failure_count = 0;
    std::vector<std::pair<std::uint64_t, Counterexample>> failures;
};

}  // namespace

const std::vector<CheckInfo>& check_catalogue() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> out;
        for (const auto& e : registry()) {
            out.push_back(e.info);
        }
        return out;
    }();
    return infos;
}

std::optional<std::string> run_check(std::string_view id, const Instance& instance, const Hooks& hooks,
                                     const Caps& caps) {
    return run_entry(find_entry(id), instance, hooks, caps);
}

std::vector<TheoremCheck> run_checks(const Bounds& bounds, const std::vector<std::string>& ids, const Hooks& hooks) {
    if (bounds.systems > kMaxSystemDomain) {
        throw SizeTooLarge("system bound above 4");
    }
    if (bounds.graphs > kMaxGraphVertices) {
        throw SizeTooLarge("graph bound above 6");
    }
    std::vector<const CheckEntry*> selected;
    for (const auto& e : registry()) {
        if (ids.empty() || std::find(ids.begin(), ids.end(), e.info.id) != ids.end()) {
            selected.push_back(&e);
        }
    }
    for (const auto& id : ids) {
        find_entry(id);
    }

    std::vector<TheoremCheck> results;
    for (Target target : {Target::Systems, Target::Graphs}) {
        std::vector<const CheckEntry*> group;
        std::vector<std::size_t> limits;
        std::size_t max = 0;
        for (const auto* e : selected) {
            if (e->info.target == target) {
                const std::size_t limit =
                    std::min(e->info.max_size, target == Target::Systems ? bounds.systems : bounds.graphs);
                group.push_back(e);
                limits.push_back(limit);
                max = std::max(max, limit);
            }
        }
        if (group.empty()) {
            continue;
        }
        const auto ranges = size_ranges(target, max);
        std::uint64_t total = 0;
        for (const auto& r : ranges) {
            total += r.second;
        }
        unsigned threads = bounds.threads != 0 ? bounds.threads : std::max(1U, std::thread::hardware_concurrency());
        threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));

        std::vector<std::vector<Tally>> per_thread(threads, std::vector<Tally>(group.size()));
        auto work = [&](unsigned t) {
            auto& tallies = per_thread[t];
            for (std::uint64_t i = t; i < total; i += threads) {
                const Slot slot = slot_at(target, ranges, i);
                std::optional<Instance> instance;
                for (std::size_t c = 0; c < group.size(); ++c) {
                    if (slot.size > limits[c]) {
                        continue;
                    }
                    if (!instance) {
                        if (target == Target::Systems) {
                            instance.emplace(system_from_mask(slot.size, slot.mask));
                        } else {
                            instance.emplace(graph_from_mask(slot.size, slot.mask));
                        }
                    }
                    ++tallies[c].instances;
                    auto failure = run_entry(*group[c], *instance, hooks, bounds.caps);
                    if (failure) {
                        ++tallies[c].failure_count;
                        if (tallies[c].failures.size() < bounds.max_failures) {
                            tallies[c].failures.push_back({i, Counterexample{*instance, std::move(*failure)}});
                        }
                    }
                }
            }
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back(work, t);
            }
            for (auto& th : pool) {
                th.join();
            }
        }

        for (std::size_t c = 0; c < group.size(); ++c) {
            TheoremCheck out;
            out.id = group[c]->info.id;
            out.statement = group[c]->info.statement;
            out.bound = (target == Target::Systems ? "|X|<=" : "|V|<=") + std::to_string(limits[c]);
            std::vector<std::pair<std::uint64_t, Counterexample>> merged;
            for (auto& tallies : per_thread) {
                out.instances += tallies[c].instances;
                out.failure_count += tallies[c].failure_count;
                for (auto& f : tallies[c].failures) {
                    merged.push_back(std::move(f));
                }
            }
            std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            for (std::size_t k = 0; k < merged.size() && k < bounds.max_failures; ++k) {
                out.failures.push_back(std::move(merged[k].second));
            }
            results.push_back(std::move(out));
        }
    }
    // Catalogue order.
    std::vector<TheoremCheck> ordered;
    for (const auto& e : registry()) {
        for (auto& r : results) {
            if (r.id == e.info.id) {
                ordered.push_back(std::move(r));
            }
        }
    }
    return ordered;
}

}  // namespace cubekit
