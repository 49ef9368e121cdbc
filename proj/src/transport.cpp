#include "newsbias/transport.hpp"

#include "newsbias/url.hpp"

#include <httplib.h>

namespace newsbias {

namespace {

class httplib_transport final : public http_transport {
public:
    httplib_transport(int timeout_ms, std::string user_agent)
        : timeout_ms_(timeout_ms), user_agent_(std::move(user_agent)) {}

    http_response get(const std::string& url) override {
        return request(url, nullptr, nullptr);
    }

    http_response post(const std::string& url, const std::string& body,
                       const std::string& content_type) override {
        return request(url, &body, &content_type);
    }

private:
    http_response request(const std::string& url, const std::string* body,
                          const std::string* content_type) {
        url_parts parts = parse_url(url);
        http_response out;
        if (!parts.valid) {
            out.error = "malformed url: " + url;
            return out;
        }
        std::string origin = parts.scheme + "://" + parts.authority();
        httplib::Client client(origin);
        client.set_connection_timeout(timeout_ms_ / 1000, (timeout_ms_ % 1000) * 1000);
        client.set_read_timeout(timeout_ms_ / 1000, (timeout_ms_ % 1000) * 1000);
        client.set_follow_location(true);
        httplib::Headers headers{{"User-Agent", user_agent_}};

        std::string target = parts.path.empty() ? "/" : parts.path;
        if (!parts.query.empty()) target += "?" + parts.query;

        httplib::Result res =
            body ? client.Post(target, headers, *body, *content_type)
                 : client.Get(target, headers);
        if (!res) {
            out.error = httplib::to_string(res.error());
            return out;
        }
        out.status = res->status;
        out.body = res->body;
        if (res->has_header("Content-Type"))
            out.content_type = res->get_header_value("Content-Type");
        return out;
    }

    int timeout_ms_;
    std::string user_agent_;
};

} // namespace

std::shared_ptr<http_transport> make_httplib_transport(int timeout_ms,
                                                       const std::string& user_agent) {
    return std::make_shared<httplib_transport>(timeout_ms, user_agent);
}

} // namespace newsbias
