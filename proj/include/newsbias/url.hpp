#pragma once

#include <string>
#include <string_view>

namespace newsbias {

struct url_parts {
    std::string scheme;    // lower-case, no colon
    std::string host;      // lower-case
    std::string port;      // digits, may be empty
    std::string path;      // leading '/', may be empty
    std::string query;     // without '?', may be empty
    std::string fragment;  // without '#', may be empty
    bool valid = false;

    std::string authority() const;
    std::string str() const;  // recomposed, fragment dropped
};

url_parts parse_url(std::string_view url);
bool is_absolute_url(std::string_view url);

/// RFC 3986 reference resolution (section 5); fragments are dropped.
/// Returns the reference unchanged when the base cannot be parsed.
std::string resolve_url(std::string_view base, std::string_view ref);

/// Key identifying one origin for rate limiting: "scheme://host:port".
std::string url_host_key(std::string_view url);

} // namespace newsbias
