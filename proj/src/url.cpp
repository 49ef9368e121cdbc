#include "newsbias/url.hpp"

#include "newsbias/strings.hpp"

#include <vector>

namespace newsbias {

namespace {

bool is_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_scheme_char(char c) {
    return is_alpha(c) || (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.';
}

// RFC 3986 section 5.2.4.
std::string remove_dot_segments(std::string_view path) {
    std::string input(path);
    std::string output;
    while (!input.empty()) {
        if (input.rfind("../", 0) == 0) {
            input.erase(0, 3);
        } else if (input.rfind("./", 0) == 0) {
            input.erase(0, 2);
        } else if (input.rfind("/./", 0) == 0) {
            input.erase(0, 2);
        } else if (input == "/.") {
            input = "/";
        } else if (input.rfind("/../", 0) == 0 || input == "/..") {
            input.erase(0, input == "/.." ? 3 : 3);
            if (input.empty()) input = "/";
            std::size_t slash = output.find_last_of('/');
            output.erase(slash == std::string::npos ? 0 : slash);
        } else if (input == "." || input == "..") {
            input.clear();
        } else {
            std::size_t next = input.find('/', input[0] == '/' ? 1 : 0);
            if (next == std::string::npos) {
                output += input;
                input.clear();
            } else {
                output += input.substr(0, next);
                input.erase(0, next);
            }
        }
    }
    return output;
}

std::string merge_paths(const url_parts& base, std::string_view ref_path) {
    if (!base.host.empty() && base.path.empty()) return "/" + std::string(ref_path);
    std::size_t slash = base.path.find_last_of('/');
    if (slash == std::string::npos) return std::string(ref_path);
    return base.path.substr(0, slash + 1) + std::string(ref_path);
}

// A reference carrying any scheme is absolute, even an opaque one
// (mailto:, javascript:) that parse_url cannot decompose.
bool has_scheme(std::string_view s) {
    std::size_t colon = s.find(':');
    if (colon == std::string_view::npos || colon == 0 || !is_alpha(s[0]))
        return false;
    for (std::size_t i = 0; i < colon; ++i)
        if (!is_scheme_char(s[i])) return false;
    return true;
}

} // namespace

std::string url_parts::authority() const {
    return port.empty() ? host : host + ":" + port;
}

std::string url_parts::str() const {
    std::string out = scheme + "://" + authority() + path;
    if (!query.empty()) out += "?" + query;
    return out;
}

url_parts parse_url(std::string_view url) {
    url_parts out;
    std::string_view s = trim(url);

    std::size_t colon = s.find(':');
    if (colon == std::string_view::npos || colon == 0 || !is_alpha(s[0])) return out;
    for (std::size_t i = 0; i < colon; ++i)
        if (!is_scheme_char(s[i])) return out;
    out.scheme = to_lower(s.substr(0, colon));
    s.remove_prefix(colon + 1);

    if (s.rfind("//", 0) != 0) return out;
    s.remove_prefix(2);

    std::size_t auth_end = s.find_first_of("/?#");
    std::string_view authority = s.substr(0, auth_end);
    s = auth_end == std::string_view::npos ? std::string_view{} : s.substr(auth_end);

    std::size_t port_colon = authority.rfind(':');
    if (port_colon != std::string_view::npos) {
        std::string_view port = authority.substr(port_colon + 1);
        bool digits = !port.empty();
        for (char c : port)
            if (c < '0' || c > '9') digits = false;
        if (digits) {
            out.port = std::string(port);
            authority = authority.substr(0, port_colon);
        }
    }
    if (authority.empty()) return out;
    out.host = to_lower(authority);

    std::size_t hash = s.find('#');
    if (hash != std::string_view::npos) {
        out.fragment = std::string(s.substr(hash + 1));
        s = s.substr(0, hash);
    }
    std::size_t qmark = s.find('?');
    if (qmark != std::string_view::npos) {
        out.query = std::string(s.substr(qmark + 1));
        s = s.substr(0, qmark);
    }
    out.path = std::string(s);
    out.valid = true;
    return out;
}

bool is_absolute_url(std::string_view url) {
    return parse_url(url).valid;
}

std::string resolve_url(std::string_view base_str, std::string_view ref_str) {
    std::string_view ref = trim(ref_str);
    url_parts base = parse_url(base_str);
    if (!base.valid) return std::string(ref);

    url_parts target;
    url_parts abs = parse_url(ref);
    if (abs.valid) {
        target = abs;
        target.path = remove_dot_segments(target.path);
        return target.str();
    }
    if (has_scheme(ref)) return std::string(ref);

    target.scheme = base.scheme;
    if (ref.rfind("//", 0) == 0) {
        // network-path reference
        url_parts with_scheme = parse_url(base.scheme + ":" + std::string(ref));
        if (!with_scheme.valid) return std::string(ref);
        with_scheme.path = remove_dot_segments(with_scheme.path);
        return with_scheme.str();
    }

    target.host = base.host;
    target.port = base.port;

    std::string_view path_ref = ref;
    std::size_t hash = path_ref.find('#');
    if (hash != std::string_view::npos) path_ref = path_ref.substr(0, hash);

    if (path_ref.empty()) {
        target.path = base.path;
        target.query = base.query;
    } else if (path_ref[0] == '?') {
        target.path = base.path;
        target.query = std::string(path_ref.substr(1));
    } else {
        std::string_view p = path_ref;
        std::size_t qmark = p.find('?');
        if (qmark != std::string_view::npos) {
            target.query = std::string(p.substr(qmark + 1));
            p = p.substr(0, qmark);
        }
        std::string merged =
            p[0] == '/' ? std::string(p) : merge_paths(base, p);
        target.path = remove_dot_segments(merged);
    }
    target.valid = true;
    return target.str();
}

std::string url_host_key(std::string_view url) {
    url_parts p = parse_url(url);
    if (!p.valid) return std::string(url);
    std::string port = p.port;
    if (port.empty()) port = p.scheme == "https" ? "443" : "80";
    return p.scheme + "://" + p.host + ":" + port;
}

} // namespace newsbias
