#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "cubekit/caps.hpp"
#include "cubekit/one_inclusion.hpp"
#include "cubekit/set_system.hpp"

namespace cubekit {

enum class Kind { FullChain, UpwardStarlike, DownwardStarlike, TreeDistinctLabels, Semitree, Other };

std::string_view to_string(Kind kind);

/// A maximal path hanging off the centre of a starlike system.
struct Wing {
    /// Member indices along the wing, nearest to the centre first; the centre
    /// itself is not included.
    std::vector<std::size_t> members;
    /// D(W): the labels used along the wing.
    Subset domain;
};

/// The parallel-directed-labelled 4-cycle of a semitree.
struct SemitreeWitness {
    /// Vertices a1 a2 a3 a4 in cycle order; a1a2 and a4a3 share a label, as do a2a3 and a1a4.
    std::array<std::size_t, 4> cycle{};
    /// Label of a1a2 / a4a3, then label of a2a3 / a1a4.
    std::array<std::size_t, 2> labels{};
    /// Every vertex o from which all edges point away (d(o, ·) grows along each edge).
    std::vector<std::size_t> uniform_origins;
    /// The graph is the bare 4-cycle.
    bool pure_cycle = false;

    [[nodiscard]] bool uniformly_directed() const { return pure_cycle || !uniform_origins.empty(); }
};

struct Classification {
    Kind kind = Kind::Other;
    /// FullChain: member indices in chain order.
    std::vector<std::size_t> chain;
    /// Starlike kinds: index of v_∅ (upward) or v_X (downward).
    std::optional<std::size_t> centre;
    std::vector<Wing> wings;
    std::optional<SemitreeWitness> semitree;
};

/// Every edge w -> z satisfies d(w, v) < d(z, v) (source) or d(w, v) > d(z, v) (sink).
bool is_source(const OneInclusionGraph& g, std::size_t v);
bool is_sink(const OneInclusionGraph& g, std::size_t v);

/// Family can be ordered A_1 ⊆ ... ⊆ A_n with unit steps; returns that order.
std::optional<std::vector<std::size_t>> full_chain_order(const SetSystem& s);

/// Upward-starlike: starlike tree centred at v_∅ (a source) plus an element in no member.
bool is_upward_starlike(const SetSystem& s);
/// Downward-starlike: starlike tree centred at v_X (a sink) plus an element in every member.
bool is_downward_starlike(const SetSystem& s);

/// Underlying undirected G_F is a tree and no label repeats.
bool is_tree_distinct_labels(const SetSystem& s);

/// G of flip(s, d -> ∅) is a tree rooted at v_∅ with every edge directed away
/// from the root and distinct labels. Throws MemberNotInFamily.
bool is_uniformly_directed_rooted_tree_after_flip(const SetSystem& s, const Subset& d);

/// Semitree recognizer: connected, |E| = |V|, the unique cycle is a
/// parallel-directed-labelled C4 with two distinct labels, and every other
/// label is unique and differs from the cycle labels.
std::optional<SemitreeWitness> is_semitree(const OneInclusionGraph& g);

Classification classify(const SetSystem& s);

/// Well-graded with a well-graded dual. The structural side (full-chain or
/// starlike) is computed independently and must agree, else InvariantViolation.
bool verdict_self_and_dual(const SetSystem& s, const Caps& caps = {});

}  // namespace cubekit
