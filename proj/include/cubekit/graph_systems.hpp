#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubekit/caps.hpp"
#include "cubekit/set_system.hpp"

namespace cubekit {

/// Finite undirected graph with adjacency rows as subsets of V.
///
/// A loop at v is stored as v ∈ N(v) and is only accepted when the graph was
/// built with loops allowed.
class Graph {
public:
    /// Throws InputError on repeated vertex names.
    explicit Graph(std::vector<std::string> names, bool loops_allowed = false);

    [[nodiscard]] std::size_t size() const { return names_.size(); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] const std::string& name(std::size_t v) const { return names_[v]; }
    [[nodiscard]] std::optional<std::size_t> find(const std::string& name) const;
    [[nodiscard]] bool loops_allowed() const { return loops_allowed_; }

    /// u ≠ v; adding an existing edge is a no-op.
    void add_edge(std::size_t u, std::size_t v);
    /// Throws LoopsNotSupported unless loops are allowed.
    void add_loop(std::size_t v);

    [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
    /// N(v); contains v itself when v carries a loop.
    [[nodiscard]] const Subset& neighbourhood(std::size_t v) const { return rows_[v]; }
    /// N[v] = N(v) ∪ {v}.
    [[nodiscard]] Subset closed_neighbourhood(std::size_t v) const;
    [[nodiscard]] std::size_t degree(std::size_t v) const;
    [[nodiscard]] bool has_loops() const;
    /// Edges u < v, loops excluded, in lexicographic order.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    [[nodiscard]] std::vector<std::size_t> loops() const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<std::string> names_;
    std::vector<Subset> rows_;
    bool loops_allowed_;
};

/// Domain V, family {N(v)} with repeats merged.
SetSystem neighbourhood_system(const Graph& g);
/// Domain V, family {N[v]} with repeats merged.
SetSystem closed_neighbourhood_system(const Graph& g);

struct TwinFlags {
    bool twin_free = false;
    bool closed_twin_free = false;
    /// Every pair of twins consists of isolated vertices.
    bool semi_twin_free = false;
    /// Every pair of closed twins consists of vertices adjacent to all others.
    bool semi_closed_twin_free = false;
};

TwinFlags twin_analysis(const Graph& g);

enum class HalfOrientation { LessEq, GreaterEq };

/// Vertices a1..an, b1..bn; a_i ~ b_j iff i <= j (or i >= j).
Graph make_half_graph(std::size_t n, HalfOrientation orientation = HalfOrientation::LessEq);
/// Complement of the half-graph: a-side and b-side cliques plus a_i ~ b_j for i > j.
Graph make_co_half_graph(std::size_t n);
/// Disjoint union plus every edge between the two parts. Throws InputError on a shared name.
Graph between_full_union(const Graph& g1, const Graph& g2);
/// Throws LoopsNotSupported when g has a loop.
Graph graph_complement(const Graph& g);
/// Disjoint union. Throws InputError on a shared name.
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// n vertices named prefix1..prefixn and no edges (complete when `complete`).
Graph make_uniform_graph(std::size_t n, bool complete, const std::string& prefix = "v");

/// One half-graph of a decomposition, in the <= convention: a[i] ~ b[j] iff i <= j.
struct HalfGraphPair {
    std::vector<std::size_t> a;
    std::vector<std::size_t> b;

    [[nodiscard]] std::size_t order() const { return a.size(); }
};

struct HalfGraphDecomposition {
    std::vector<HalfGraphPair> pairs;
    /// Nonempty; vertex indices in increasing order.
    std::vector<std::size_t> isolated;
};

/// Witness for a neighbourhood-well-graded graph, or nullopt when the
/// neighbourhood system is not well-graded. The half-graphs are read off
/// the wings of the neighbourhood system; a wing whose vertices do not form a
/// half-graph raises InvariantViolation. Throws LoopsNotSupported.
std::optional<HalfGraphDecomposition> decompose_neighbourhood_wg(const Graph& g, const Caps& caps = {});

/// The graph described by a decomposition, over the given vertex names.
Graph reassemble(const HalfGraphDecomposition& d, const std::vector<std::string>& names);

/// Direct structural test on the components of g: every nontrivial component
/// is a half-graph and at least one vertex is isolated. Throws LoopsNotSupported.
bool is_half_graph_union(const Graph& g);

/// Direct structural test: g is complete, or the vertices adjacent to all
/// others form a nonempty clique K and the rest is a between-full-union of
/// co-half-graphs. Throws LoopsNotSupported.
bool is_co_half_graph_join(const Graph& g);

struct NeighbourhoodFlags {
    bool nwg = false;
    bool next = false;
    bool nmax = false;
    bool cnwg = false;
    bool cnext = false;
    bool cnmax = false;
};

/// Each flag is evaluated on the corresponding set system. With
/// caps.debug_asserts on a loopless graph the characterizations are
/// cross-checked as well.
NeighbourhoodFlags neighbourhood_flags(const Graph& g, const Caps& caps = {});

/// All cliques (∅ and singletons included). Throws VertexCapExceeded above caps.max_vertices.
SetSystem clique_system(const Graph& g, const Caps& caps = {});
/// All independent sets (∅ and singletons included). Loops are ignored.
SetSystem independent_set_system(const Graph& g, const Caps& caps = {});

}  // namespace cubekit
