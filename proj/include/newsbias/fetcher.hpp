#pragma once

#include "newsbias/transport.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace newsbias {

struct fetched_page {
    std::string url;
    int status = 0;
    std::string body;            // raw bytes as received
    std::string content_type;
    std::string encoding;        // declared charset, lower-case; empty if none
    bool encoding_flagged = false;
    std::string fetched_at;      // ISO-8601 UTC
};

enum class fetch_mode { live, record, replay };

struct fetcher_options {
    fetch_mode mode = fetch_mode::live;
    std::filesystem::path fixture_dir;      // record/replay storage
    int max_attempts = 3;
    std::vector<int> backoff_ms = {1000, 2000, 4000};
    int timeout_ms = 15000;
    bool memoize = false;                   // in-run URL -> page cache
    std::string user_agent = "newsbias/0.1 (+archive research crawler)";
};

/// Polite page fetcher. Serializes requests per origin and enforces a
/// minimum gap between them; retries timeouts and 5xx with backoff.
/// Record mode persists every response under fixture_dir so replay mode
/// can serve the same crawl with no network at all.
class page_fetcher {
public:
    explicit page_fetcher(fetcher_options opts,
                          std::shared_ptr<http_transport> transport = nullptr);

    /// Throws error(errc::fetch_error) on 4xx, on 5xx/timeouts after the
    /// retry budget, and error(errc::replay_miss) on replay misses.
    fetched_page fetch(const std::string& url, int rate_limit_ms);

    /// Like fetch() but returns 4xx/5xx pages instead of throwing, for
    /// pagination probes that treat them as end-of-archive.
    fetched_page fetch_allow_error(const std::string& url, int rate_limit_ms);

    int network_requests() const { return network_requests_; }

    /// Pages obtained this run, fresh from the network or from fixtures.
    /// Memoized repeats are not counted.
    int pages_served() const { return pages_served_; }

    fetch_mode mode() const { return opts_.mode; }

    /// Fixture file stem for a URL (FNV-1a 64 of the URL, hex).
    static std::string fixture_stem(const std::string& url);

private:
    fetched_page fetch_live(const std::string& url, int rate_limit_ms);
    fetched_page load_fixture(const std::string& url);
    void store_fixture(const fetched_page& page);
    void rate_limit_wait(const std::string& url, int rate_limit_ms);

    fetcher_options opts_;
    std::shared_ptr<http_transport> transport_;
    std::mutex mutex_;
    std::map<std::string, std::chrono::steady_clock::time_point> last_request_;
    std::map<std::string, fetched_page> memo_;
    int network_requests_ = 0;
    int pages_served_ = 0;
};

/// Charset declared by headers or <meta>, lower-cased ("" when absent).
std::string detect_declared_encoding(const std::string& content_type,
                                     const std::string& body);

/// True when the body carries non-ASCII bytes that cannot be decoded with
/// the declared (or assumed UTF-8) charset.
bool encoding_is_flagged(const std::string& encoding, const std::string& body);

} // namespace newsbias
