#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cubekit/caps.hpp"
#include "cubekit/classifiers.hpp"
#include "cubekit/graph_systems.hpp"
#include "cubekit/set_system.hpp"

namespace cubekit {

/// System over {1..n} whose family holds the subsets i with bit i of `family_mask` set.
/// Bit i of a subset index selects element i. n <= 4.
SetSystem system_from_mask(std::size_t n, std::uint64_t family_mask);

/// Every nonempty family over an n-element domain, once each, in mask order.
/// Throws SizeTooLarge for n > 4.
std::vector<SetSystem> enumerate_systems(std::size_t n);
void for_each_system(std::size_t n, const std::function<void(const SetSystem&)>& fn);

/// Loopless graph on v1..vk; bit e of `edge_mask` selects the e-th pair (u < v) in lexicographic order.
Graph graph_from_mask(std::size_t k, std::uint64_t edge_mask);

/// Every labelled loopless graph on k vertices, in mask order. Throws SizeTooLarge for k > 6.
std::vector<Graph> enumerate_graphs(std::size_t k);
void for_each_graph(std::size_t k, const std::function<void(const Graph&)>& fn);

using Instance = std::variant<SetSystem, Graph>;

struct Counterexample {
    Instance instance;
    std::string detail;
};

struct TheoremCheck {
    std::string id;
    std::string statement;
    /// Human-readable instance bound, e.g. "|X|<=4".
    std::string bound;
    std::size_t instances = 0;
    std::size_t failure_count = 0;
    /// The first few failures in enumeration order.
    std::vector<Counterexample> failures;

    [[nodiscard]] bool passed() const { return failure_count == 0; }
};

/// Replaceable recognizers, used to inject faults in tests.
struct Hooks {
    std::function<std::optional<SemitreeWitness>(const OneInclusionGraph&)> semitree = is_semitree;
};

struct Bounds {
    /// Largest domain size for system checks (every size 0..systems is visited).
    std::size_t systems = 4;
    /// Largest vertex count for graph checks (every count 1..graphs is visited).
    std::size_t graphs = 6;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
    /// Failures retained per check.
    std::size_t max_failures = 5;
    Caps caps{};
};

enum class Target { Systems, Graphs };

struct CheckInfo {
    std::string id;
    std::string statement;
    Target target;
    /// Size limit applied on top of Bounds for expensive checks.
    std::size_t max_size;
};

/// Every registered check in report order.
const std::vector<CheckInfo>& check_catalogue();

/// Runs one check on one instance: nullopt on success, else a description of the failure.
/// Throws InputError for an unknown id or an instance of the wrong kind.
std::optional<std::string> run_check(std::string_view id, const Instance& instance, const Hooks& hooks = {},
                                     const Caps& caps = {});

/// Runs the listed checks (all when `ids` is empty) over every instance within bounds.
/// Results follow catalogue order and do not depend on the thread count.
std::vector<TheoremCheck> run_checks(const Bounds& bounds, const std::vector<std::string>& ids = {},
                                     const Hooks& hooks = {});

inline std::vector<TheoremCheck> run_all_checks(const Bounds& bounds, const Hooks& hooks = {}) {
    return run_checks(bounds, {}, hooks);
}

}  // namespace cubekit
