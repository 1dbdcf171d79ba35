#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cubekit/caps.hpp"
#include "cubekit/classifiers.hpp"
#include "cubekit/graph_systems.hpp"
#include "cubekit/oracle.hpp"
#include "cubekit/set_system.hpp"

namespace cubekit {

/// Insertion-ordered JSON, so reports are byte-stable.
using Json = nlohmann::ordered_json;

/// Whole file as text. Throws InputError when it cannot be read.
std::string read_file(const std::string& path);

/// {"domain": [string...], "family": [[string...]...]}. Throws ParseError with
/// a field path, UnknownElement, DuplicateMember.
SetSystem system_from_json(const Json& j);
SetSystem parse_system(const std::string& text);
Json system_to_json(const SetSystem& s);

/// {"vertices": [string...], "edges": [[u, v]...], "loops": [string...]}.
/// An edge [v, v] is rejected; "loops" is optional.
Graph graph_from_json(const Json& j);
Graph parse_graph(const std::string& text);
Json graph_to_json(const Graph& g);

/// Member as its element names in domain order.
Json member_to_json(const SetSystem& s, const Subset& member);

Json classification_to_json(const SetSystem& s, const Classification& c);

/// Flags, counts and classification of a set system.
Json system_report(const SetSystem& s, const Caps& caps = {});
/// Neighbourhood flags, twin analysis and half-graph witnesses of a graph.
Json graph_report(const Graph& g, const Caps& caps = {});

/// {"type": "system", ...} or {"type": "graph", ...}.
Json instance_to_json(const Instance& instance);
Instance instance_from_json(const Json& j);

Json check_report(const Bounds& bounds, const std::vector<TheoremCheck>& checks);

/// One-inclusion graph in DOT; nodes named "{a,b}", edges carry label="x".
std::string system_dot(const SetSystem& s);

/// Short human-readable summaries of the reports above.
std::string pretty_system_report(const Json& report);
std::string pretty_graph_report(const Json& report);
std::string pretty_check_report(const Json& report);

}  // namespace cubekit
