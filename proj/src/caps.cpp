#include "cubekit/caps.hpp"

#include <charconv>
#include <string>

#include "cubekit/errors.hpp"

namespace cubekit {

namespace {

std::size_t parse_count(std::string_view key, std::string_view value) {
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw InputError("caps: bad value '" + std::string(value) + "' for " + std::string(key));
    }
    return out;
}

}  // namespace

Caps parse_caps(std::string_view spec, Caps base) {
    while (!spec.empty()) {
        const auto comma = spec.find(',');
        const std::string_view item = spec.substr(0, comma);
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        if (item.empty()) {
            continue;
        }
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw InputError("caps: expected key=value, got '" + std::string(item) + "'");
        }
        const std::string_view key = item.substr(0, eq);
        const std::string_view value = item.substr(eq + 1);
        if (key == "max_domain") {
            base.max_domain = parse_count(key, value);
        } else if (key == "max_iso" || key == "max_iso_domain") {
            base.max_iso_domain = parse_count(key, value);
        } else if (key == "max_vertices") {
            base.max_vertices = parse_count(key, value);
        } else if (key == "debug") {
            base.debug_asserts = parse_count(key, value) != 0;
        } else {
            throw InputError("caps: unknown key '" + std::string(key) + "'");
        }
    }
    return base;
}

}  // namespace cubekit
