#include "cubekit/one_inclusion.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace cubekit {

OneInclusionGraph::OneInclusionGraph(std::size_t width, std::vector<Subset> states, std::vector<LabelledEdge> edges)
    : width_(width), states_(std::move(states)), edges_(std::move(edges)), adjacency_(states_.size()) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& edge = edges_[e];
        if (edge.source >= states_.size() || edge.target >= states_.size() || edge.label >= width_) {
            throw InputError("edge refers to a missing vertex or label");
        }
        adjacency_[edge.source].push_back({edge.target, e, true});
        adjacency_[edge.target].push_back({edge.source, e, false});
    }
}

std::size_t OneInclusionGraph::out_degree(std::size_t v) const {
    return static_cast<std::size_t>(
        std::count_if(adjacency_[v].begin(), adjacency_[v].end(), [](const Incidence& i) { return i.outgoing; }));
}

std::optional<std::size_t> OneInclusionGraph::vertex_of(const Subset& state) const {
    auto it = std::find(states_.begin(), states_.end(), state);
    if (it == states_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - states_.begin());
}

namespace {

std::vector<LabelledEdge> inclusion_edges(std::size_t width, std::span<const Subset> states) {
    std::unordered_map<Subset, std::size_t, SubsetHash> index;
    index.reserve(states.size() * 2);
    for (std::size_t i = 0; i < states.size(); ++i) {
        index.emplace(states[i], i);
    }
    std::vector<LabelledEdge> edges;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const Subset missing = states[i].complement(width);
        missing.for_each([&](std::size_t b) {
            Subset up = states[i];
            up.set(b);
            auto it = index.find(up);
            if (it != index.end()) {
                edges.push_back({i, it->second, b});
            }
        });
    }
    std::sort(edges.begin(), edges.end(), [](const LabelledEdge& a, const LabelledEdge& b) {
        return a.source != b.source ? a.source < b.source : a.target < b.target;
    });
    return edges;
}

}  // namespace

OneInclusionGraph build_graph(const SetSystem& s) {
    std::vector<Subset> states(s.family().begin(), s.family().end());
    auto edges = inclusion_edges(s.domain_size(), states);
    return OneInclusionGraph(s.domain_size(), std::move(states), std::move(edges));
}

std::vector<Distance> bfs_distances(const OneInclusionGraph& g, std::size_t source) {
    std::vector<Distance> dist(g.vertex_count());
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (const auto& inc : g.incidences(v)) {
            if (!dist[inc.neighbour]) {
                dist[inc.neighbour] = *dist[v] + 1;
                queue.push_back(inc.neighbour);
            }
        }
    }
    return dist;
}

DistanceTable::DistanceTable(const OneInclusionGraph& g) : n_(g.vertex_count()), table_(n_ * n_) {
    for (std::size_t u = 0; u < n_; ++u) {
        auto row = bfs_distances(g, u);
        std::copy(row.begin(), row.end(), table_.begin() + static_cast<std::ptrdiff_t>(u * n_));
    }
}

bool DistanceTable::connected() const {
    return std::all_of(table_.begin(), table_.end(), [](const Distance& d) { return d.has_value(); });
}

bool is_connected(const OneInclusionGraph& g) {
    if (g.vertex_count() == 0) {
        return true;
    }
    auto dist = bfs_distances(g, 0);
    return std::all_of(dist.begin(), dist.end(), [](const Distance& d) { return d.has_value(); });
}

bool is_bipartite_by_parity(const OneInclusionGraph& g) {
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const LabelledEdge& e) {
        return (g.state(e.source).count() % 2) != (g.state(e.target).count() % 2);
    });
}

bool is_tree(const OneInclusionGraph& g) {
    return g.vertex_count() > 0 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

bool labels_distinct(const OneInclusionGraph& g) {
    Subset seen(g.width());
    for (const auto& e : g.edges()) {
        if (seen.test(e.label)) {
            return false;
        }
        seen.set(e.label);
    }
    return true;
}

Subset label_set(const OneInclusionGraph& g) {
    Subset seen(g.width());
    for (const auto& e : g.edges()) {
        seen.set(e.label);
    }
    return seen;
}

bool is_well_graded(const OneInclusionGraph& g) {
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        const auto dist = bfs_distances(g, u);
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (!dist[v] || *dist[v] != (g.state(u) ^ g.state(v)).count()) {
                return false;
            }
        }
    }
    return true;
}

bool is_well_graded_midpoint(const SetSystem& s) {
    const auto family = s.family();
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            const Subset& a = family[i];
            const Subset& b = family[j];
            if ((a ^ b).count() < 2) {
                continue;
            }
            const Subset lo = a & b;
            const Subset hi = a | b;
            bool found = false;
            for (std::size_t k = 0; k < family.size() && !found; ++k) {
                found = k != i && k != j && lo.is_subset_of(family[k]) && family[k].is_subset_of(hi);
            }
            if (!found) {
                return false;
            }
        }
    }
    return true;
}

bool is_well_graded(const SetSystem& s, const Caps& caps) {
    const bool wg = is_well_graded(build_graph(s));
    if (caps.debug_asserts) {
        ensure(wg == is_well_graded_midpoint(s), "well-graded: distance and midpoint tests disagree on " + s.render());
    }
    return wg;
}

namespace {

// Connectivity of the subgraph induced on vertices with keep[v] == true.
bool induced_connected(const OneInclusionGraph& g, const std::vector<bool>& keep) {
    std::size_t start = g.vertex_count();
    std::size_t total = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (keep[v]) {
            ++total;
            start = std::min(start, v);
        }
    }
    if (total == 0) {
        return true;
    }
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (const auto& inc : g.incidences(v)) {
            if (keep[inc.neighbour] && !seen[inc.neighbour]) {
                seen[inc.neighbour] = true;
                ++reached;
                queue.push_back(inc.neighbour);
            }
        }
    }
    return reached == total;
}

}  // namespace

std::vector<LabelledEdge> cut_set(const OneInclusionGraph& g, std::size_t label) {
    std::vector<LabelledEdge> cut;
    for (const auto& e : g.edges()) {
        if (e.label == label) {
            cut.push_back(e);
        }
    }
    if (cut.empty()) {
        throw NotEssential("no edge is labelled by element " + std::to_string(label));
    }
    std::vector<bool> inside(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        inside[v] = g.state(v).test(label);
    }
    for (const auto& e : g.edges()) {
        const bool crossing = inside[e.source] != inside[e.target];
        ensure(crossing == (e.label == label), "cut-set: labelled edges differ from E(A_a, A_a^c)");
        if (crossing) {
            ensure(!inside[e.source] && inside[e.target], "cut-set: edge not directed into A_a");
        }
    }
    if (is_well_graded(g)) {
        std::vector<bool> outside(inside.size());
        std::transform(inside.begin(), inside.end(), outside.begin(), [](bool b) { return !b; });
        ensure(induced_connected(g, inside) && induced_connected(g, outside),
               "cut-set: a side of a well-graded cut is disconnected");
    }
    return cut;
}

std::vector<std::size_t> below(const OneInclusionGraph& g, std::span<const std::size_t> u) {
    if (u.empty()) {
        throw EmptyVertexSet("below() needs a nonempty vertex set");
    }
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const bool under = std::any_of(u.begin(), u.end(), [&](std::size_t w) {
            return g.state(v).is_subset_of(g.state(w));
        });
        if (under) {
            out.push_back(v);
        }
    }
    return out;
}

Subset st_union(const OneInclusionGraph& g, std::span<const std::size_t> u) {
    if (u.empty()) {
        throw EmptyVertexSet("st() needs a nonempty vertex set");
    }
    Subset out(g.width());
    for (std::size_t v : u) {
        out |= g.state(v);
    }
    return out;
}

bool is_one_inclusion_graph(const OneInclusionGraph& g) {
    auto expected = inclusion_edges(g.width(), g.states());
    std::vector<LabelledEdge> actual(g.edges().begin(), g.edges().end());
    auto key = [](const LabelledEdge& a, const LabelledEdge& b) {
        return a.source != b.source ? a.source < b.source : a.target < b.target;
    };
    std::sort(actual.begin(), actual.end(), key);
    return actual == expected;
}

OneInclusionGraph reverse(const OneInclusionGraph& g) {
    std::vector<LabelledEdge> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        edges.push_back({e.target, e.source, e.label});
    }
    std::vector<Subset> states(g.states().begin(), g.states().end());
    OneInclusionGraph reversed(g.width(), std::move(states), std::move(edges));

    if (is_one_inclusion_graph(g)) {
        std::vector<Subset> complemented;
        for (const auto& s : g.states()) {
            complemented.push_back(s.complement(g.width()));
        }
        // Vertex i of the complement graph carries st(v_i)^c, so v_A -> v_{A^c} is the identity on indices.
        auto expected = inclusion_edges(g.width(), complemented);
        std::vector<LabelledEdge> actual(reversed.edges().begin(), reversed.edges().end());
        std::sort(actual.begin(), actual.end(), [](const LabelledEdge& a, const LabelledEdge& b) {
            return a.source != b.source ? a.source < b.source : a.target < b.target;
        });
        ensure(actual == expected, "reverse: not the one-inclusion graph of the complement family");
    }
    return reversed;
}

std::string to_dot(const OneInclusionGraph& g, const SetSystem::Domain& names) {
    auto render = [&](const Subset& s) {
        std::string out = "{";
        bool first = true;
        s.for_each([&](std::size_t i) {
            if (!first) {
                out += ',';
            }
            out += names[i];
            first = false;
        });
        return out + "}";
    };
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') {
                out += '\\';
            }
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream os;
    os << "digraph G {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        os << "  " << quote(render(g.state(v))) << ";\n";
    }
    for (const auto& e : g.edges()) {
        os << "  " << quote(render(g.state(e.source))) << " -> " << quote(render(g.state(e.target)))
           << " [label=" << quote(names[e.label]) << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace cubekit
