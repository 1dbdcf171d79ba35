#include "cubekit/classifiers.hpp"

#include <algorithm>

#include "cubekit/duality.hpp"

namespace cubekit {

std::string_view to_string(Kind kind) {
    switch (kind) {
        case Kind::FullChain: return "FullChain";
        case Kind::UpwardStarlike: return "UpwardStarlike";
        case Kind::DownwardStarlike: return "DownwardStarlike";
        case Kind::TreeDistinctLabels: return "TreeDistinctLabels";
        case Kind::Semitree: return "Semitree";
        case Kind::Other: return "Other";
    }
    return "Other";
}

namespace {

// Every edge moves strictly away from (sign > 0) or towards (sign < 0) v.
bool edges_monotone(const OneInclusionGraph& g, std::size_t v, int sign) {
    const auto dist = bfs_distances(g, v);
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const LabelledEdge& e) {
        if (!dist[e.source] || !dist[e.target]) {
            return false;
        }
        return sign > 0 ? *dist[e.source] < *dist[e.target] : *dist[e.source] > *dist[e.target];
    });
}

std::vector<Wing> extract_wings(const OneInclusionGraph& g, std::size_t centre) {
    std::vector<Wing> wings;
    for (const auto& first : g.incidences(centre)) {
        Wing w{{}, Subset(g.width())};
        std::size_t prev = centre;
        std::size_t cur = first.neighbour;
        w.domain.set(g.edges()[first.edge].label);
        w.members.push_back(cur);
        for (;;) {
            const Incidence* step = nullptr;
            for (const auto& inc : g.incidences(cur)) {
                if (inc.neighbour != prev) {
                    step = &inc;
                }
            }
            if (step == nullptr) {
                break;
            }
            w.domain.set(g.edges()[step->edge].label);
            prev = cur;
            cur = step->neighbour;
            w.members.push_back(cur);
        }
        wings.push_back(std::move(w));
    }
    return wings;
}

// Starlike tree centred at `centre`, which must be a source (sign > 0) or a sink.
bool starlike_at(const OneInclusionGraph& g, std::size_t centre, int sign) {
    if (!is_tree(g) || !labels_distinct(g) || g.degree(centre) < 2) {
        return false;
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (v != centre && g.degree(v) > 2) {
            return false;
        }
    }
    return edges_monotone(g, centre, sign);
}

}  // namespace

bool is_source(const OneInclusionGraph& g, std::size_t v) { return edges_monotone(g, v, +1); }

bool is_sink(const OneInclusionGraph& g, std::size_t v) { return edges_monotone(g, v, -1); }

std::optional<std::vector<std::size_t>> full_chain_order(const SetSystem& s) {
    // Canonical order sorts by cardinality, so a chain must appear in that order.
    for (std::size_t i = 1; i < s.size(); ++i) {
        const Subset& lo = s.member(i - 1);
        const Subset& hi = s.member(i);
        if (!lo.is_subset_of(hi) || (hi - lo).count() != 1) {
            return std::nullopt;
        }
    }
    std::vector<std::size_t> order(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        order[i] = i;
    }
    return order;
}

bool is_upward_starlike(const SetSystem& s) {
    const auto empty = s.index_of(s.empty_set());
    if (!empty) {
        return false;
    }
    Subset used = s.empty_set();
    for (const auto& m : s.family()) {
        used |= m;
    }
    if (used == s.full_set()) {
        return false;
    }
    return starlike_at(build_graph(s), *empty, +1);
}

bool is_downward_starlike(const SetSystem& s) {
    const auto full = s.index_of(s.full_set());
    if (!full) {
        return false;
    }
    Subset common = s.full_set();
    for (const auto& m : s.family()) {
        common &= m;
    }
    if (common.empty()) {
        return false;
    }
    return starlike_at(build_graph(s), *full, -1);
}

bool is_tree_distinct_labels(const SetSystem& s) {
    const auto g = build_graph(s);
    return is_tree(g) && labels_distinct(g);
}

bool is_uniformly_directed_rooted_tree_after_flip(const SetSystem& s, const Subset& d) {
    const SetSystem flipped = flip_to_empty(s, d);
    const auto g = build_graph(flipped);
    const auto root = flipped.index_of(flipped.empty_set());
    return root && is_tree(g) && labels_distinct(g) && is_source(g, *root);
}

std::optional<SemitreeWitness> is_semitree(const OneInclusionGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 4 || g.edge_count() != n || !is_connected(g)) {
        return std::nullopt;
    }
    // Peel leaves; a connected graph with |E| = |V| keeps exactly its cycle.
    std::vector<std::size_t> degree(n);
    std::vector<bool> removed(n, false);
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (degree[v] <= 1) {
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        if (removed[v]) {
            continue;
        }
        removed[v] = true;
        for (const auto& inc : g.incidences(v)) {
            if (!removed[inc.neighbour] && --degree[inc.neighbour] == 1) {
                stack.push_back(inc.neighbour);
            }
        }
    }
    std::vector<std::size_t> cycle_vertices;
    for (std::size_t v = 0; v < n; ++v) {
        if (!removed[v]) {
            cycle_vertices.push_back(v);
        }
    }
    if (cycle_vertices.size() != 4) {
        return std::nullopt;
    }

    // Walk the cycle from its lowest vertex: a1 a2 a3 a4, remembering the edges.
    std::array<std::size_t, 4> cyc{};
    std::array<std::size_t, 4> cyc_edge{};  // edge between cyc[i] and cyc[(i+1)%4]
    cyc[0] = cycle_vertices.front();
    std::size_t prev_edge = g.edge_count();
    for (std::size_t i = 0; i < 4; ++i) {
        const Incidence* next = nullptr;
        for (const auto& inc : g.incidences(cyc[i])) {
            if (!removed[inc.neighbour] && inc.edge != prev_edge) {
                if (next == nullptr || inc.neighbour < next->neighbour) {
                    next = &inc;
                }
            }
        }
        if (next == nullptr) {
            return std::nullopt;
        }
        cyc_edge[i] = next->edge;
        prev_edge = next->edge;
        if (i < 3) {
            cyc[i + 1] = next->neighbour;
        } else if (next->neighbour != cyc[0]) {
            return std::nullopt;
        }
    }
    const auto& e12 = g.edges()[cyc_edge[0]];
    const auto& e23 = g.edges()[cyc_edge[1]];
    const auto& e34 = g.edges()[cyc_edge[2]];
    const auto& e41 = g.edges()[cyc_edge[3]];
    // a1a2 ∥ a4a3 and a2a3 ∥ a1a4, each pair sharing a label.
    const bool forward12 = e12.source == cyc[0];
    const bool forward43 = e34.source == cyc[3];
    const bool forward23 = e23.source == cyc[1];
    const bool forward14 = e41.source == cyc[0];
    if (e12.label != e34.label || forward12 != forward43) {
        return std::nullopt;
    }
    if (e23.label != e41.label || forward23 != forward14) {
        return std::nullopt;
    }
    if (e12.label == e23.label) {
        return std::nullopt;
    }

    Subset seen(g.width());
    seen.set(e12.label);
    seen.set(e23.label);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (std::find(cyc_edge.begin(), cyc_edge.end(), e) != cyc_edge.end()) {
            continue;
        }
        const std::size_t label = g.edges()[e].label;
        if (seen.test(label)) {
            return std::nullopt;
        }
        seen.set(label);
    }

    SemitreeWitness w;
    w.cycle = cyc;
    w.labels = {e12.label, e23.label};
    w.pure_cycle = n == 4;
    for (std::size_t o = 0; o < n; ++o) {
        if (is_source(g, o)) {
            w.uniform_origins.push_back(o);
        }
    }
    return w;
}

Classification classify(const SetSystem& s) {
    Classification c;
    if (auto chain = full_chain_order(s)) {
        c.kind = Kind::FullChain;
        c.chain = std::move(*chain);
        return c;
    }
    const auto g = build_graph(s);
    if (is_upward_starlike(s)) {
        c.kind = Kind::UpwardStarlike;
        c.centre = s.index_of(s.empty_set());
        c.wings = extract_wings(g, *c.centre);
        return c;
    }
    if (is_downward_starlike(s)) {
        c.kind = Kind::DownwardStarlike;
        c.centre = s.index_of(s.full_set());
        c.wings = extract_wings(g, *c.centre);
        return c;
    }
    if (is_tree(g) && labels_distinct(g)) {
        c.kind = Kind::TreeDistinctLabels;
        return c;
    }
    if (auto w = is_semitree(g)) {
        c.kind = Kind::Semitree;
        c.semitree = std::move(w);
        return c;
    }
    c.kind = Kind::Other;
    return c;
}

bool verdict_self_and_dual(const SetSystem& s, const Caps& caps) {
    const bool analytic = is_well_graded(s, caps) && is_well_graded(dual(s).system, caps);
    const Kind kind = classify(s).kind;
    const bool structural =
        kind == Kind::FullChain || kind == Kind::UpwardStarlike || kind == Kind::DownwardStarlike;
    ensure(analytic == structural, "self-and-dual verdict: well-gradedness and structure disagree on " + s.render());
    return analytic;
}

}  // namespace cubekit
