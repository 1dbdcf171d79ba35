#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubekit/caps.hpp"
#include "cubekit/set_system.hpp"

namespace cubekit {

/// Directed edge between vertex indices, labelled by a domain element.
struct LabelledEdge {
    std::size_t source = 0;
    std::size_t target = 0;
    std::size_t label = 0;

    friend bool operator==(const LabelledEdge&, const LabelledEdge&) = default;
};

/// One entry of a vertex's adjacency list; `outgoing` tells the edge direction
/// relative to the vertex that owns the list.
struct Incidence {
    std::size_t neighbour = 0;
    std::size_t edge = 0;
    bool outgoing = false;
};

/// Edge-labelled directed graph whose vertices carry members st(v) of a family.
///
/// build_graph() produces the one-inclusion graph (edge v_A -> v_B labelled b
/// iff B = A ∪ {b}); the general constructor also admits derived graphs such as
/// reverse() or hand-built fixtures.
class OneInclusionGraph {
public:
    OneInclusionGraph(std::size_t width, std::vector<Subset> states, std::vector<LabelledEdge> edges);

    [[nodiscard]] std::size_t width() const { return width_; }
    [[nodiscard]] std::size_t vertex_count() const { return states_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }
    [[nodiscard]] const Subset& state(std::size_t v) const { return states_[v]; }
    [[nodiscard]] std::span<const Subset> states() const { return states_; }
    [[nodiscard]] std::span<const LabelledEdge> edges() const { return edges_; }
    [[nodiscard]] std::span<const Incidence> incidences(std::size_t v) const { return adjacency_[v]; }
    [[nodiscard]] std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
    [[nodiscard]] std::size_t out_degree(std::size_t v) const;
    [[nodiscard]] std::size_t in_degree(std::size_t v) const { return degree(v) - out_degree(v); }
    [[nodiscard]] std::optional<std::size_t> vertex_of(const Subset& state) const;

private:
    std::size_t width_;
    std::vector<Subset> states_;
    std::vector<LabelledEdge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

/// One-inclusion graph; vertex i carries s.member(i). Edges are sorted by (source, target).
OneInclusionGraph build_graph(const SetSystem& s);

/// Undirected distance; nullopt marks unreachable pairs.
using Distance = std::optional<std::size_t>;

/// BFS distances from `source` in the underlying undirected graph.
std::vector<Distance> bfs_distances(const OneInclusionGraph& g, std::size_t source);

/// All-pairs undirected distances.
class DistanceTable {
public:
    explicit DistanceTable(const OneInclusionGraph& g);

    [[nodiscard]] Distance at(std::size_t u, std::size_t v) const { return table_[u * n_ + v]; }
    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] bool connected() const;

private:
    std::size_t n_;
    std::vector<Distance> table_;
};

bool is_connected(const OneInclusionGraph& g);

/// Two-colouring by |st(v)| parity is proper.
bool is_bipartite_by_parity(const OneInclusionGraph& g);

/// Undirected tree: connected with |E| = |V| - 1.
bool is_tree(const OneInclusionGraph& g);

/// No label occurs on two edges.
bool labels_distinct(const OneInclusionGraph& g);

/// Set of labels used by at least one edge.
Subset label_set(const OneInclusionGraph& g);

/// Graph distance equals Hamming distance on every pair of vertices.
/// Disconnected pairs count as a failure.
bool is_well_graded(const OneInclusionGraph& g);

/// Well-gradedness via the distance equation; with caps.debug_asserts the
/// midpoint characterization is evaluated too and must agree.
bool is_well_graded(const SetSystem& s, const Caps& caps = {});

/// For every A, B with |A △ B| ≥ 2 some other member C has A ∩ B ⊆ C ⊆ A ∪ B.
bool is_well_graded_midpoint(const SetSystem& s);

/// All edges labelled `label`. Verifies that they form the cut between the
/// vertices containing `label` and the rest, directed into the containing
/// side, and (for well-graded graphs) that both sides induce connected
/// subgraphs; a failure throws InvariantViolation. Throws NotEssential when no
/// edge carries the label.
std::vector<LabelledEdge> cut_set(const OneInclusionGraph& g, std::size_t label);

/// Vertices v with st(v) ⊆ st(u) for some u in `u`, ascending. Throws EmptyVertexSet.
std::vector<std::size_t> below(const OneInclusionGraph& g, std::span<const std::size_t> u);

/// Union of st(v) over `u`. Throws EmptyVertexSet.
Subset st_union(const OneInclusionGraph& g, std::span<const std::size_t> u);

/// Same vertices and labels with every direction reversed. When `g` is a
/// genuine one-inclusion graph, the result is checked against the
/// one-inclusion graph of the complemented states under v_A -> v_{A^c}.
OneInclusionGraph reverse(const OneInclusionGraph& g);

/// True when g's edges are exactly those of the one-inclusion graph of its states.
bool is_one_inclusion_graph(const OneInclusionGraph& g);

/// Graphviz rendering: directed edges with label="x"; vertex names are the
/// member's sorted element list, "{}" for the empty set.
std::string to_dot(const OneInclusionGraph& g, const SetSystem::Domain& names);

}  // namespace cubekit
