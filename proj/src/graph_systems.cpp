#include "cubekit/graph_systems.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_set>

#include "cubekit/classifiers.hpp"
#include "cubekit/one_inclusion.hpp"
#include "cubekit/shattering.hpp"

namespace cubekit {

Graph::Graph(std::vector<std::string> names, bool loops_allowed)
    : names_(std::move(names)), rows_(names_.size(), Subset(names_.size())), loops_allowed_(loops_allowed) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (!seen.insert(n).second) {
            throw InputError("repeated vertex name '" + n + "'");
        }
    }
}

std::optional<std::size_t> Graph::find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - names_.begin());
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= size() || v >= size()) {
        throw InputError("edge refers to a missing vertex");
    }
    if (u == v) {
        throw InputError("an edge [v,v] is a loop; list it under loops");
    }
    rows_[u].set(v);
    rows_[v].set(u);
}

void Graph::add_loop(std::size_t v) {
    if (!loops_allowed_) {
        throw LoopsNotSupported("graph was built without loops");
    }
    if (v >= size()) {
        throw InputError("loop refers to a missing vertex");
    }
    rows_[v].set(v);
}

Subset Graph::closed_neighbourhood(std::size_t v) const {
    Subset n = rows_[v];
    n.set(v);
    return n;
}

std::size_t Graph::degree(std::size_t v) const {
    return rows_[v].count() - (rows_[v].test(v) ? 1 : 0);
}

bool Graph::has_loops() const {
    for (std::size_t v = 0; v < size(); ++v) {
        if (rows_[v].test(v)) {
            return true;
        }
    }
    return false;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u) {
        for (std::size_t v = u + 1; v < size(); ++v) {
            if (rows_[u].test(v)) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

std::vector<std::size_t> Graph::loops() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < size(); ++v) {
        if (rows_[v].test(v)) {
            out.push_back(v);
        }
    }
    return out;
}

bool operator==(const Graph& a, const Graph& b) { return a.names_ == b.names_ && a.rows_ == b.rows_; }

namespace {

void require_vertices(const Graph& g) {
    if (g.size() == 0) {
        throw InputError("graph has no vertices");
    }
}

void require_loopless(const Graph& g, const char* what) {
    if (g.has_loops()) {
        throw LoopsNotSupported(std::string(what) + " needs a loopless graph");
    }
}

}  // namespace

SetSystem neighbourhood_system(const Graph& g) {
    require_vertices(g);
    std::vector<Subset> family;
    for (std::size_t v = 0; v < g.size(); ++v) {
        family.push_back(g.neighbourhood(v));
    }
    return SetSystem::collapsed(g.names(), std::move(family));
}

SetSystem closed_neighbourhood_system(const Graph& g) {
    require_vertices(g);
    std::vector<Subset> family;
    for (std::size_t v = 0; v < g.size(); ++v) {
        family.push_back(g.closed_neighbourhood(v));
    }
    return SetSystem::collapsed(g.names(), std::move(family));
}

TwinFlags twin_analysis(const Graph& g) {
    TwinFlags f{true, true, true, true};
    const Subset all = Subset::full(g.size());
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t v = u + 1; v < g.size(); ++v) {
            if (g.neighbourhood(u) == g.neighbourhood(v)) {
                f.twin_free = false;
                if (!g.neighbourhood(u).empty()) {
                    f.semi_twin_free = false;
                }
            }
            if (g.closed_neighbourhood(u) == g.closed_neighbourhood(v)) {
                f.closed_twin_free = false;
                if (g.closed_neighbourhood(u) != all) {
                    f.semi_closed_twin_free = false;
                }
            }
        }
    }
    return f;
}

namespace {

std::vector<std::string> half_graph_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("a" + std::to_string(i));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("b" + std::to_string(i));
    }
    return names;
}

}  // namespace

Graph make_half_graph(std::size_t n, HalfOrientation orientation) {
    if (n == 0) {
        throw InputError("half-graph order must be positive");
    }
    Graph g(half_graph_names(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (orientation == HalfOrientation::LessEq ? i <= j : i >= j) {
                g.add_edge(i, n + j);
            }
        }
    }
    return g;
}

Graph make_co_half_graph(std::size_t n) {
    if (n == 0) {
        throw InputError("co-half-graph order must be positive");
    }
    Graph g(half_graph_names(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                g.add_edge(i, j);
                g.add_edge(n + i, n + j);
            }
            if (i > j) {
                g.add_edge(i, n + j);
            }
        }
    }
    ensure(g == graph_complement(make_half_graph(n)), "co-half-graph differs from the half-graph complement");
    return g;
}

namespace {

Graph union_of(const Graph& g1, const Graph& g2, bool join) {
    std::vector<std::string> names = g1.names();
    names.insert(names.end(), g2.names().begin(), g2.names().end());
    Graph g(std::move(names), g1.loops_allowed() || g2.loops_allowed());
    const std::size_t off = g1.size();
    for (const auto& [u, v] : g1.edges()) {
        g.add_edge(u, v);
    }
    for (const auto& [u, v] : g2.edges()) {
        g.add_edge(off + u, off + v);
    }
    for (std::size_t v : g1.loops()) {
        g.add_loop(v);
    }
    for (std::size_t v : g2.loops()) {
        g.add_loop(off + v);
    }
    if (join) {
        for (std::size_t u = 0; u < g1.size(); ++u) {
            for (std::size_t v = 0; v < g2.size(); ++v) {
                g.add_edge(u, off + v);
            }
        }
    }
    return g;
}

}  // namespace

Graph between_full_union(const Graph& g1, const Graph& g2) { return union_of(g1, g2, true); }

Graph disjoint_union(const Graph& g1, const Graph& g2) { return union_of(g1, g2, false); }

Graph graph_complement(const Graph& g) {
    require_loopless(g, "complement");
    Graph c(g.names(), g.loops_allowed());
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t v = u + 1; v < g.size(); ++v) {
            if (!g.adjacent(u, v)) {
                c.add_edge(u, v);
            }
        }
    }
    return c;
}

Graph make_uniform_graph(std::size_t n, bool complete, const std::string& prefix) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back(prefix + std::to_string(i));
    }
    Graph g(std::move(names));
    if (complete) {
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

std::optional<HalfGraphDecomposition> decompose_neighbourhood_wg(const Graph& g, const Caps& caps) {
    require_loopless(g, "half-graph decomposition");
    const SetSystem nsys = neighbourhood_system(g);
    if (!is_well_graded(nsys, caps)) {
        return std::nullopt;
    }
    HalfGraphDecomposition d;
    std::vector<std::vector<std::size_t>> by_member(nsys.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        by_member[*nsys.index_of(g.neighbourhood(v))].push_back(v);
        if (g.neighbourhood(v).empty()) {
            d.isolated.push_back(v);
        }
    }
    ensure(!d.isolated.empty(), "neighbourhood-well-graded graph without an isolated vertex");
    if (nsys.size() == 1) {
        return d;
    }

    const Classification c = classify(nsys);
    ensure(c.kind == Kind::UpwardStarlike, "neighbourhood system of a well-graded graph is not upward-starlike");

    // V(W): the vertices whose neighbourhoods lie along wing W.
    std::vector<Subset> wing_vertices;
    for (const auto& w : c.wings) {
        Subset vs(g.size());
        for (std::size_t m : w.members) {
            ensure(by_member[m].size() == 1, "twin vertices along a wing");
            vs.set(by_member[m].front());
        }
        wing_vertices.push_back(vs);
    }
    std::vector<bool> used(c.wings.size(), false);
    for (std::size_t i = 0; i < c.wings.size(); ++i) {
        if (used[i]) {
            continue;
        }
        // The accompanying wing uses exactly the vertices of wing i as labels.
        std::optional<std::size_t> partner;
        for (std::size_t j = 0; j < c.wings.size(); ++j) {
            if (j != i && !used[j] && c.wings[j].domain == wing_vertices[i]) {
                partner = j;
            }
        }
        ensure(partner.has_value(), "wing without an accompanying wing");
        ensure(c.wings[i].domain == wing_vertices[*partner], "accompanying relation is not symmetric");
        used[i] = used[*partner] = true;

        std::size_t wa = i;
        std::size_t wb = *partner;
        if (wing_vertices[wb].lowest() < wing_vertices[wa].lowest()) {
            std::swap(wa, wb);
        }
        const auto& ma = c.wings[wa].members;
        const auto& mb = c.wings[wb].members;
        ensure(ma.size() == mb.size(), "accompanying wings differ in length");
        const std::size_t n = ma.size();
        HalfGraphPair p;
        for (std::size_t k = 0; k < n; ++k) {
            p.a.push_back(by_member[ma[n - 1 - k]].front());
            p.b.push_back(by_member[mb[k]].front());
        }
        for (std::size_t k = 0; k < n; ++k) {
            Subset na(g.size());
            Subset nb(g.size());
            for (std::size_t j = k; j < n; ++j) {
                na.set(p.b[j]);
            }
            for (std::size_t j = 0; j <= k; ++j) {
                nb.set(p.a[j]);
            }
            ensure(g.neighbourhood(p.a[k]) == na && g.neighbourhood(p.b[k]) == nb,
                   "wing pair does not induce a half-graph");
        }
        d.pairs.push_back(std::move(p));
    }

    std::size_t covered = d.isolated.size();
    for (const auto& p : d.pairs) {
        covered += 2 * p.order();
    }
    ensure(covered == g.size(), "decomposition does not cover every vertex");
    return d;
}

Graph reassemble(const HalfGraphDecomposition& d, const std::vector<std::string>& names) {
    Graph g(names);
    for (const auto& p : d.pairs) {
        for (std::size_t i = 0; i < p.order(); ++i) {
            for (std::size_t j = i; j < p.order(); ++j) {
                g.add_edge(p.a[i], p.b[j]);
            }
        }
    }
    return g;
}

namespace {

struct ComponentScan {
    bool half_graphs = true;
    std::size_t isolated = 0;
};

// Splits g into components and checks every nontrivial one against the half-graph pattern.
ComponentScan scan_components(const Graph& g) {
    ComponentScan scan;
    std::vector<int> colour(g.size(), -1);
    for (std::size_t start = 0; start < g.size(); ++start) {
        if (colour[start] != -1) {
            continue;
        }
        if (g.degree(start) == 0) {
            colour[start] = 0;
            ++scan.isolated;
            continue;
        }
        std::vector<std::size_t> side[2];
        std::deque<std::size_t> queue{start};
        colour[start] = 0;
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            side[colour[v]].push_back(v);
            bool bipartite = true;
            g.neighbourhood(v).for_each([&](std::size_t w) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if (colour[w] == colour[v]) {
                    bipartite = false;
                }
            });
            if (!bipartite) {
                scan.half_graphs = false;
            }
        }
        if (!scan.half_graphs) {
            continue;
        }
        auto& a = side[0];
        auto& b = side[1];
        if (a.size() != b.size()) {
            scan.half_graphs = false;
            continue;
        }
        const std::size_t n = a.size();
        std::stable_sort(a.begin(), a.end(), [&](std::size_t x, std::size_t y) { return g.degree(x) > g.degree(y); });
        std::stable_sort(b.begin(), b.end(), [&](std::size_t x, std::size_t y) { return g.degree(x) < g.degree(y); });
        for (std::size_t i = 0; i < n && scan.half_graphs; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (g.adjacent(a[i], b[j]) != (i <= j)) {
                    scan.half_graphs = false;
                    break;
                }
            }
        }
    }
    return scan;
}

}  // namespace

bool is_half_graph_union(const Graph& g) {
    require_loopless(g, "half-graph recognition");
    const ComponentScan scan = scan_components(g);
    return scan.half_graphs && scan.isolated > 0;
}

bool is_co_half_graph_join(const Graph& g) {
    require_loopless(g, "co-half-graph recognition");
    if (g.size() == 0) {
        return false;
    }
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.degree(v) + 1 != g.size()) {
            rest.push_back(v);
        }
    }
    if (rest.size() == g.size()) {
        return false;
    }
    // Non-adjacency inside the rest must split into half-graphs.
    std::vector<std::string> names;
    for (std::size_t v : rest) {
        names.push_back(g.name(v));
    }
    Graph h(std::move(names));
    for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            if (!g.adjacent(rest[i], rest[j])) {
                h.add_edge(i, j);
            }
        }
    }
    const ComponentScan scan = scan_components(h);
    return scan.half_graphs && scan.isolated == 0;
}

NeighbourhoodFlags neighbourhood_flags(const Graph& g, const Caps& caps) {
    NeighbourhoodFlags f;
    const SetSystem nsys = neighbourhood_system(g);
    const SetSystem csys = closed_neighbourhood_system(g);
    f.nwg = is_well_graded(nsys, caps);
    f.next = is_extremal(nsys, caps);
    f.nmax = is_maximum(nsys, caps);
    f.cnwg = is_well_graded(csys, caps);
    f.cnext = is_extremal(csys, caps);
    f.cnmax = is_maximum(csys, caps);
    if (caps.debug_asserts && !g.has_loops()) {
        bool all_isolated = true;
        bool complete = true;
        for (std::size_t v = 0; v < g.size(); ++v) {
            all_isolated = all_isolated && g.degree(v) == 0;
            complete = complete && g.degree(v) + 1 == g.size();
        }
        ensure(f.nwg == f.next, "neighbourhood: well-graded and extremal disagree");
        ensure(f.nwg == is_half_graph_union(g), "neighbourhood: well-graded disagrees with the half-graph structure");
        ensure(f.nmax == all_isolated, "neighbourhood: maximum disagrees with all-isolated");
        ensure(f.cnwg == is_well_graded(neighbourhood_system(graph_complement(g)), caps),
               "closed neighbourhood: complement reduction fails");
        ensure(f.cnwg == is_co_half_graph_join(g), "closed neighbourhood: well-graded disagrees with the structure");
        ensure(f.cnmax == complete, "closed neighbourhood: maximum disagrees with completeness");
    }
    return f;
}

namespace {

// Every set of pairwise related vertices, each found once by extending with higher indices.
SetSystem pairwise_system(const Graph& g, const Caps& caps, bool related_if_adjacent) {
    require_vertices(g);
    if (g.size() > caps.max_vertices) {
        throw VertexCapExceeded("graph has " + std::to_string(g.size()) + " vertices; cap is " +
                                std::to_string(caps.max_vertices));
    }
    const std::size_t n = g.size();
    std::vector<Subset> related(n, Subset(n));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u != v && g.adjacent(u, v) == related_if_adjacent) {
                related[u].set(v);
            }
        }
    }
    std::vector<Subset> family;
    std::function<void(const Subset&, const Subset&)> extend = [&](const Subset& current, const Subset& candidates) {
        family.push_back(current);
        candidates.for_each([&](std::size_t v) {
            Subset next = current;
            next.set(v);
            Subset higher = candidates & related[v];
            for (std::size_t w = 0; w <= v; ++w) {
                higher.reset(w);
            }
            extend(next, higher);
        });
    };
    extend(Subset(n), Subset::full(n));
    SetSystem s(g.names(), std::move(family));
    for (const auto& m : s.family()) {
        m.for_each([&](std::size_t x) {
            Subset smaller = m;
            smaller.reset(x);
            ensure(s.contains(smaller), "clique or independent-set system is not down-closed");
        });
    }
    return s;
}

}  // namespace

SetSystem clique_system(const Graph& g, const Caps& caps) { return pairwise_system(g, caps, true); }

SetSystem independent_set_system(const Graph& g, const Caps& caps) { return pairwise_system(g, caps, false); }

}  // namespace cubekit
