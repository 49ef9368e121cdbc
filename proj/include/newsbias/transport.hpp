#pragma once

#include <memory>
#include <string>

namespace newsbias {

struct http_response {
    int status = 0;          // 0 = transport-level failure
    std::string body;
    std::string content_type;
    std::string error;       // transport failure detail
};

/// Minimal HTTP surface so tests can substitute scripted responses.
class http_transport {
public:
    virtual ~http_transport() = default;
    virtual http_response get(const std::string& url) = 0;
    virtual http_response post(const std::string& url, const std::string& body,
                               const std::string& content_type) = 0;
};

/// cpp-httplib-backed transport; follows redirects.
std::shared_ptr<http_transport> make_httplib_transport(int timeout_ms,
                                                       const std::string& user_agent);

} // namespace newsbias
