#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cubekit/duality.hpp"
#include "cubekit/io.hpp"

using namespace cubekit;

namespace {

constexpr int kOk = 0;
constexpr int kChecksFailed = 1;
constexpr int kInputError = 2;
constexpr int kCapExceeded = 3;
constexpr int kInvariant = 4;

struct Options {
    bool pretty = false;
    std::optional<std::size_t> max_domain;
    std::optional<std::size_t> max_vertices;
    bool debug_asserts = false;
};

Caps effective_caps(const Options& o) {
    Caps caps;
    if (const char* env = std::getenv("CUBEKIT_CAPS")) {
        caps = parse_caps(env, caps);
    }
    if (o.max_domain) {
        caps.max_domain = *o.max_domain;
    }
    if (o.max_vertices) {
        caps.max_vertices = *o.max_vertices;
    }
    caps.debug_asserts = caps.debug_asserts || o.debug_asserts;
    return caps;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void report_error(const char* kind, const std::exception& e, const std::string& field = "") {
    Json j{{"error", kind}, {"message", e.what()}};
    if (!field.empty()) {
        j["field"] = field;
    }
    std::cerr << j.dump() << "\n";
}

SetSystem gen_starlike(std::size_t wings, std::size_t length, bool upward) {
    if (wings < 2 || length < 1) {
        throw InputError("starlike systems need at least 2 wings of length >= 1");
    }
    // Wing w uses elements w*length+1 .. (w+1)*length; the last element is in no member.
    const std::size_t n = wings * length + 1;
    std::vector<Subset> family{Subset(n)};
    for (std::size_t w = 0; w < wings; ++w) {
        Subset m(n);
        for (std::size_t i = 0; i < length; ++i) {
            m.set(w * length + i);
            family.push_back(m);
        }
    }
    SetSystem::Domain domain;
    for (std::size_t i = 1; i <= n; ++i) {
        domain.push_back(std::to_string(i));
    }
    SetSystem s(std::move(domain), std::move(family));
    return upward ? s : complement_family(s);
}

SetSystem gen_full_chain(std::size_t n) {
    std::vector<Subset> family{Subset(n)};
    for (std::size_t i = 0; i < n; ++i) {
        Subset m = family.back();
        m.set(i);
        family.push_back(m);
    }
    SetSystem::Domain domain;
    for (std::size_t i = 1; i <= n; ++i) {
        domain.push_back(std::to_string(i));
    }
    return SetSystem(std::move(domain), std::move(family));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Set systems, one-inclusion graphs, duality and half-graph analysis"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--pretty", opt.pretty, "Human-readable summary instead of JSON");
    app.add_option("--max-domain", opt.max_domain, "Largest domain for shattering operations");
    app.add_option("--max-vertices", opt.max_vertices, "Largest graph for clique enumeration");
    app.add_flag("--debug-asserts", opt.debug_asserts, "Cross-check redundant characterizations");

    std::string path;
    auto* analyze_system = app.add_subcommand("analyze-system", "Report on a set-system file");
    analyze_system->add_option("file", path, "Set-system JSON")->required();
    auto* analyze_graph = app.add_subcommand("analyze-graph", "Report on a graph file");
    analyze_graph->add_option("file", path, "Graph JSON")->required();
    auto* dual_cmd = app.add_subcommand("dual", "Dual system as set-system JSON");
    dual_cmd->add_option("file", path, "Set-system JSON")->required();
    auto* ess_dual_cmd = app.add_subcommand("ess-dual", "Ess-dual system as set-system JSON");
    ess_dual_cmd->add_option("file", path, "Set-system JSON")->required();
    auto* classify_cmd = app.add_subcommand("classify", "Structural classification");
    classify_cmd->add_option("file", path, "Set-system JSON")->required();
    auto* dot_cmd = app.add_subcommand("export-dot", "One-inclusion graph in DOT");
    dot_cmd->add_option("file", path, "Set-system JSON")->required();

    std::string kind;
    std::size_t order = 0;
    std::size_t wing_length = 1;
    std::string orientation = "le";
    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph or set system");
    gen_cmd
        ->add_option("kind", kind, "half-graph | co-half-graph | full-chain | upward-starlike | downward-starlike")
        ->required()
        ->check(CLI::IsMember({"half-graph", "co-half-graph", "full-chain", "upward-starlike", "downward-starlike"}));
    gen_cmd->add_option("n", order, "Order, chain length or number of wings")->required();
    gen_cmd->add_option("--wing-length", wing_length, "Wing length for starlike systems");
    gen_cmd->add_option("--orientation", orientation, "Half-graph orientation: le (i<=j) or ge (i>=j)")
        ->check(CLI::IsMember({"le", "ge"}));

    Bounds bounds;
    std::vector<std::string> check_ids;
    auto* verify_cmd = app.add_subcommand("verify", "Run the theorem checks exhaustively");
    verify_cmd->add_option("--systems", bounds.systems, "Largest domain size (<= 4)");
    verify_cmd->add_option("--graphs", bounds.graphs, "Largest vertex count (<= 6)");
    verify_cmd->add_option("--threads", bounds.threads, "Worker threads (0 = hardware)");
    verify_cmd->add_option("--check", check_ids, "Restrict to these check ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        const Caps caps = effective_caps(opt);
        if (*analyze_system) {
            const Json r = system_report(parse_system(read_file(path)), caps);
            opt.pretty ? void(std::cout << pretty_system_report(r)) : emit(r);
        } else if (*analyze_graph) {
            const Json r = graph_report(parse_graph(read_file(path)), caps);
            opt.pretty ? void(std::cout << pretty_graph_report(r)) : emit(r);
        } else if (*dual_cmd || *ess_dual_cmd) {
            const SetSystem s = parse_system(read_file(path));
            const DualSystem d = *dual_cmd ? dual(s) : ess_dual(s);
            opt.pretty ? void(std::cout << d.system.render() << "\n") : emit(system_to_json(d.system));
        } else if (*classify_cmd) {
            const SetSystem s = parse_system(read_file(path));
            Json r{{"schema", "cubekit.classification/1"}};
            r.update(classification_to_json(s, classify(s)));
            opt.pretty ? void(std::cout << r["kind"].get<std::string>() << "\n") : emit(r);
        } else if (*dot_cmd) {
            std::cout << system_dot(parse_system(read_file(path)));
        } else if (*gen_cmd) {
            if (kind == "half-graph") {
                emit(graph_to_json(
                    make_half_graph(order, orientation == "le" ? HalfOrientation::LessEq : HalfOrientation::GreaterEq)));
            } else if (kind == "co-half-graph") {
                emit(graph_to_json(make_co_half_graph(order)));
            } else if (kind == "full-chain") {
                emit(system_to_json(gen_full_chain(order)));
            } else {
                emit(system_to_json(gen_starlike(order, wing_length, kind == "upward-starlike")));
            }
        } else if (*verify_cmd) {
            bounds.caps = caps;
            const Json r = check_report(bounds, run_checks(bounds, check_ids));
            opt.pretty ? void(std::cout << pretty_check_report(r)) : emit(r);
            return r["passed"].get<bool>() ? kOk : kChecksFailed;
        }
    } catch (const ParseError& e) {
        report_error("ParseError", e, e.field());
        return kInputError;
    } catch (const DuplicateMember& e) {
        report_error("DuplicateMember", e);
        return kInputError;
    } catch (const UnknownElement& e) {
        report_error("UnknownElement", e);
        return kInputError;
    } catch (const InputError& e) {
        report_error("InputError", e);
        return kInputError;
    } catch (const CapExceeded& e) {
        report_error("CapExceeded", e);
        return kCapExceeded;
    } catch (const InvariantViolation& e) {
        report_error("InvariantViolation", e);
        return kInvariant;
    }
    return kOk;
}
