#include "cubekit/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "cubekit/duality.hpp"
#include "cubekit/one_inclusion.hpp"
#include "cubekit/shattering.hpp"

namespace cubekit {

namespace {

constexpr const char* kSystemSchema = "cubekit.system-report/1";
constexpr const char* kGraphSchema = "cubekit.graph-report/1";
constexpr const char* kCheckSchema = "cubekit.check-report/1";

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("", std::string("invalid JSON: ") + e.what());
    }
}

const Json& require(const Json& j, const char* key) {
    if (!j.is_object()) {
        throw ParseError("", "expected a JSON object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(key, "missing field");
    }
    return *it;
}

std::vector<std::string> string_list(const Json& j, const std::string& field) {
    if (!j.is_array()) {
        throw ParseError(field, "expected an array of strings");
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) {
            throw ParseError(field + "[" + std::to_string(i) + "]", "expected a string");
        }
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

std::string field_at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

SetSystem system_from_json(const Json& j) {
    SetSystem::Domain domain = string_list(require(j, "domain"), "domain");
    const Json& fam = require(j, "family");
    if (!fam.is_array()) {
        throw ParseError("family", "expected an array of members");
    }
    std::vector<std::vector<std::string>> members;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        auto names = string_list(fam[i], field_at("family", i));
        std::unordered_set<std::string> seen;
        for (std::size_t k = 0; k < names.size(); ++k) {
            if (!seen.insert(names[k]).second) {
                throw ParseError(field_at(field_at("family", i), k), "element '" + names[k] + "' repeated in a member");
            }
        }
        members.push_back(std::move(names));
    }
    return SetSystem::from_names(std::move(domain), members);
}

SetSystem parse_system(const std::string& text) { return system_from_json(parse_text(text)); }

Json member_to_json(const SetSystem& s, const Subset& member) { return Json(s.names_of(member)); }

Json system_to_json(const SetSystem& s) {
    Json j;
    j["domain"] = s.domain();
    Json fam = Json::array();
    for (const auto& m : s.family()) {
        fam.push_back(member_to_json(s, m));
    }
    j["family"] = std::move(fam);
    return j;
}

Graph graph_from_json(const Json& j) {
    auto names = string_list(require(j, "vertices"), "vertices");
    const bool has_loops = j.contains("loops");
    Graph g(names, has_loops);
    auto vertex = [&](const Json& v, const std::string& field) {
        if (!v.is_string()) {
            throw ParseError(field, "expected a vertex name");
        }
        auto idx = g.find(v.get<std::string>());
        if (!idx) {
            throw ParseError(field, "unknown vertex '" + v.get<std::string>() + "'");
        }
        return *idx;
    };
    const Json& edges = require(j, "edges");
    if (!edges.is_array()) {
        throw ParseError("edges", "expected an array of vertex pairs");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string field = field_at("edges", i);
        if (!edges[i].is_array() || edges[i].size() != 2) {
            throw ParseError(field, "expected a pair of vertex names");
        }
        const std::size_t u = vertex(edges[i][0], field_at(field, 0));
        const std::size_t v = vertex(edges[i][1], field_at(field, 1));
        if (u == v) {
            throw ParseError(field, "edge [v,v] is a loop; list it under \"loops\"");
        }
        g.add_edge(u, v);
    }
    if (has_loops) {
        const Json& loops = j["loops"];
        if (!loops.is_array()) {
            throw ParseError("loops", "expected an array of vertex names");
        }
        for (std::size_t i = 0; i < loops.size(); ++i) {
            g.add_loop(vertex(loops[i], field_at("loops", i)));
        }
    }
    return g;
}

Graph parse_graph(const std::string& text) { return graph_from_json(parse_text(text)); }

Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = g.names();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) {
        edges.push_back({g.name(u), g.name(v)});
    }
    j["edges"] = std::move(edges);
    if (g.loops_allowed()) {
        Json loops = Json::array();
        for (std::size_t v : g.loops()) {
            loops.push_back(g.name(v));
        }
        j["loops"] = std::move(loops);
    }
    return j;
}

Json classification_to_json(const SetSystem& s, const Classification& c) {
    Json j;
    j["kind"] = std::string(to_string(c.kind));
    if (c.kind == Kind::FullChain) {
        Json chain = Json::array();
        for (std::size_t m : c.chain) {
            chain.push_back(member_to_json(s, s.member(m)));
        }
        j["chain"] = std::move(chain);
    }
    if (c.centre) {
        j["centre"] = member_to_json(s, s.member(*c.centre));
        Json wings = Json::array();
        for (const auto& w : c.wings) {
            Json members = Json::array();
            for (std::size_t m : w.members) {
                members.push_back(member_to_json(s, s.member(m)));
            }
            wings.push_back({{"members", std::move(members)}, {"domain", member_to_json(s, w.domain)}});
        }
        j["wings"] = std::move(wings);
    }
    if (c.semitree) {
        const auto& w = *c.semitree;
        Json cycle = Json::array();
        for (std::size_t v : w.cycle) {
            cycle.push_back(member_to_json(s, s.member(v)));
        }
        Json origins = Json::array();
        for (std::size_t v : w.uniform_origins) {
            origins.push_back(member_to_json(s, s.member(v)));
        }
        j["semitree"] = {{"cycle", std::move(cycle)},
                         {"labels", {s.name(w.labels[0]), s.name(w.labels[1])}},
                         {"pure_cycle", w.pure_cycle},
                         {"uniform_origins", std::move(origins)},
                         {"uniformly_directed", w.uniformly_directed()}};
    }
    return j;
}

namespace {

// Isomorphism-based flags are null when the search would exceed its cap.
Json iso_flag(const SetSystem& a, const SetSystem& b, const Caps& caps, Json& notes) {
    try {
        return is_isomorphic(a, b, caps);
    } catch (const DomainTooLarge& e) {
        notes.push_back(e.what());
        return nullptr;
    }
}

}  // namespace

Json system_report(const SetSystem& s, const Caps& caps) {
    const ShatterReport sh = shatter_report(s, caps);
    const OneInclusionGraph g = build_graph(s);
    const Subset ess = essential_mask(s);
    const bool wg = is_well_graded(s, caps);
    const bool extremal = is_extremal(s, caps);
    const bool maximum = is_maximum(s, caps);
    Json notes = Json::array();

    Json numbers;
    numbers["family_size"] = s.size();
    numbers["essential_size"] = ess.count();
    numbers["additionality"] = additionality(s);
    numbers["vc_dim"] = sh.vc_dim;
    numbers["shattered"] = sh.shattered.size();
    numbers["strongly_shattered"] = sh.strongly_shattered.size();
    numbers["edges"] = g.edge_count();

    Json flags;
    flags["well_graded"] = wg;
    flags["extremal"] = extremal;
    flags["maximum"] = maximum;
    flags["connected"] = is_connected(g);
    if (s.domain_size() > 0) {
        const DualSystem d = dual(s);
        const bool dual_wg = is_well_graded(d.system, caps);
        flags["dual_wg"] = dual_wg;
        if (!ess.empty()) {
            const bool ess_dual_wg = is_well_graded(ess_dual(s).system, caps);
            flags["ess_dual_wg"] = ess_dual_wg;
            flags["self_and_ess_dual_wg"] = wg && ess_dual_wg;
        } else {
            flags["ess_dual_wg"] = nullptr;
            flags["self_and_ess_dual_wg"] = nullptr;
            notes.push_back("ess-dual undefined: no essential elements");
        }
        flags["self_dual"] = iso_flag(s, d.system, caps, notes);
        flags["almost_self_dual"] = iso_flag(d.system, purify(s), caps, notes);
        flags["self_and_dual_wg"] = wg && dual_wg;
        flags["self_and_dual_extremal"] = extremal && is_extremal(d.system, caps);
        flags["self_and_dual_maximum"] = maximum && is_maximum(d.system, caps);
    } else {
        for (const char* key : {"dual_wg", "ess_dual_wg", "self_and_ess_dual_wg", "self_dual", "almost_self_dual",
                                "self_and_dual_wg", "self_and_dual_extremal", "self_and_dual_maximum"}) {
            flags[key] = nullptr;
        }
        notes.push_back("dual undefined: empty domain");
    }

    Json shattered = Json::array();
    for (const auto& y : sh.shattered) {
        shattered.push_back(member_to_json(s, y));
    }
    Json strongly = Json::array();
    for (const auto& y : sh.strongly_shattered) {
        strongly.push_back(member_to_json(s, y));
    }

    Json r;
    r["schema"] = kSystemSchema;
    r["input"] = system_to_json(s);
    r["numbers"] = std::move(numbers);
    r["essential_domain"] = member_to_json(s, ess);
    r["flags"] = std::move(flags);
    r["shattered"] = std::move(shattered);
    r["strongly_shattered"] = std::move(strongly);
    r["classification"] = classification_to_json(s, classify(s));
    r["notes"] = std::move(notes);
    return r;
}

Json graph_report(const Graph& g, const Caps& caps) {
    const NeighbourhoodFlags f = neighbourhood_flags(g, caps);
    const TwinFlags t = twin_analysis(g);
    Json r;
    r["schema"] = kGraphSchema;
    r["input"] = graph_to_json(g);
    r["numbers"] = {{"vertices", g.size()}, {"edges", g.edges().size()}, {"loops", g.loops().size()}};
    r["neighbourhood_system"] = system_to_json(neighbourhood_system(g));
    r["closed_neighbourhood_system"] = system_to_json(closed_neighbourhood_system(g));
    r["flags"] = {{"nwg", f.nwg}, {"next", f.next}, {"nmax", f.nmax},
                  {"cnwg", f.cnwg}, {"cnext", f.cnext}, {"cnmax", f.cnmax}};
    r["twins"] = {{"twin_free", t.twin_free},
                  {"closed_twin_free", t.closed_twin_free},
                  {"semi_twin_free", t.semi_twin_free},
                  {"semi_closed_twin_free", t.semi_closed_twin_free}};
    if (g.has_loops()) {
        r["half_graph_decomposition"] = nullptr;
        r["co_half_graph_join"] = nullptr;
        r["notes"] = Json::array({"half-graph characterizations need a loopless graph"});
        return r;
    }
    const auto d = decompose_neighbourhood_wg(g, caps);
    if (d) {
        Json pairs = Json::array();
        for (const auto& p : d->pairs) {
            Json a = Json::array();
            Json b = Json::array();
            for (std::size_t v : p.a) {
                a.push_back(g.name(v));
            }
            for (std::size_t v : p.b) {
                b.push_back(g.name(v));
            }
            pairs.push_back({{"order", p.order()}, {"a", std::move(a)}, {"b", std::move(b)}});
        }
        Json isolated = Json::array();
        for (std::size_t v : d->isolated) {
            isolated.push_back(g.name(v));
        }
        r["half_graph_decomposition"] = {{"pairs", std::move(pairs)}, {"isolated", std::move(isolated)}};
    } else {
        r["half_graph_decomposition"] = nullptr;
    }
    r["co_half_graph_join"] = is_co_half_graph_join(g);
    r["notes"] = Json::array();
    return r;
}

Json instance_to_json(const Instance& instance) {
    if (const auto* s = std::get_if<SetSystem>(&instance)) {
        Json j{{"type", "system"}};
        j.update(system_to_json(*s));
        return j;
    }
    Json j{{"type", "graph"}};
    j.update(graph_to_json(std::get<Graph>(instance)));
    return j;
}

Instance instance_from_json(const Json& j) {
    const Json& type = require(j, "type");
    if (type == "system") {
        return system_from_json(j);
    }
    if (type == "graph") {
        return graph_from_json(j);
    }
    throw ParseError("type", "expected \"system\" or \"graph\"");
}

Json check_report(const Bounds& bounds, const std::vector<TheoremCheck>& checks) {
    Json list = Json::array();
    bool all = true;
    for (const auto& c : checks) {
        Json failures = Json::array();
        for (const auto& f : c.failures) {
            failures.push_back({{"instance", instance_to_json(f.instance)}, {"detail", f.detail}});
        }
        list.push_back({{"check_id", c.id},
                        {"statement", c.statement},
                        {"bound", c.bound},
                        {"instances", c.instances},
                        {"failure_count", c.failure_count},
                        {"passed", c.passed()},
                        {"failures", std::move(failures)}});
        all = all && c.passed();
    }
    Json r;
    r["schema"] = kCheckSchema;
    r["bounds"] = {{"systems", bounds.systems}, {"graphs", bounds.graphs}};
    r["passed"] = all;
    r["checks"] = std::move(list);
    return r;
}

std::string system_dot(const SetSystem& s) { return to_dot(build_graph(s), s.domain()); }

namespace {

std::string render_names(const Json& names) {
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        out += (i ? "," : "") + names[i].get<std::string>();
    }
    return out + "}";
}

std::string flag_text(const Json& v) {
    if (v.is_null()) {
        return "n/a";
    }
    return v.get<bool>() ? "yes" : "no";
}

}  // namespace

std::string pretty_system_report(const Json& r) {
    std::ostringstream os;
    const auto& n = r["numbers"];
    os << "family size             " << n["family_size"] << "\n"
       << "essential domain        " << render_names(r["essential_domain"]) << " (" << n["essential_size"] << ")\n"
       << "additionality           " << n["additionality"] << "\n"
       << "VC-dimension            " << n["vc_dim"] << "\n"
       << "|ssht| <= |F| <= |sht|  " << n["strongly_shattered"] << " <= " << n["family_size"]
       << " <= " << n["shattered"] << "\n"
       << "edges                   " << n["edges"] << "\n";
    for (const auto& [key, value] : r["flags"].items()) {
        os << key << std::string(key.size() < 24 ? 24 - key.size() : 1, ' ') << flag_text(value) << "\n";
    }
    os << "kind                    " << r["classification"]["kind"].get<std::string>() << "\n";
    for (const auto& note : r["notes"]) {
        os << "note: " << note.get<std::string>() << "\n";
    }
    return os.str();
}

std::string pretty_graph_report(const Json& r) {
    std::ostringstream os;
    os << "vertices " << r["numbers"]["vertices"] << ", edges " << r["numbers"]["edges"] << "\n";
    for (const auto& [key, value] : r["flags"].items()) {
        os << key << std::string(8 - key.size(), ' ') << flag_text(value) << "\n";
    }
    const auto& d = r["half_graph_decomposition"];
    if (!d.is_null()) {
        os << "half-graphs:";
        for (const auto& p : d["pairs"]) {
            os << " " << render_names(p["a"]) << "/" << render_names(p["b"]);
        }
        os << "\nisolated: " << render_names(d["isolated"]) << "\n";
    }
    return os.str();
}

std::string pretty_check_report(const Json& r) {
    std::ostringstream os;
    for (const auto& c : r["checks"]) {
        os << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["check_id"].get<std::string>() << " ("
           << c["bound"].get<std::string>() << ", " << c["instances"] << " instances, " << c["failure_count"]
           << " failures)\n";
        for (const auto& f : c["failures"]) {
            os << "    " << f["instance"].dump() << ": " << f["detail"].get<std::string>() << "\n";
        }
    }
    os << (r["passed"].get<bool>() ? "all checks passed" : "some checks failed") << "\n";
    return os.str();
}

}  // namespace cubekit
