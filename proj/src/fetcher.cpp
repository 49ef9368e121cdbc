#include "newsbias/fetcher.hpp"

#include "newsbias/dates.hpp"
#include "newsbias/errors.hpp"
#include "newsbias/strings.hpp"
#include "newsbias/url.hpp"

#include "json.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

namespace newsbias {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_failure, "cannot open " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(errc::io_failure, "cannot write " + path.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

// Pulls charset=... out of a header value or meta tag fragment.
std::string charset_from(std::string_view text) {
    std::string lower = to_lower(std::string(text));
    std::size_t pos = lower.find("charset=");
    if (pos == std::string::npos) return {};
    pos += 8;
    while (pos < lower.size() && (lower[pos] == '"' || lower[pos] == '\'' ||
                                  lower[pos] == ' '))
        ++pos;
    std::size_t end = pos;
    while (end < lower.size() && (std::isalnum(static_cast<unsigned char>(lower[end])) ||
                                  lower[end] == '-' || lower[end] == '_'))
        ++end;
    return lower.substr(pos, end - pos);
}

bool has_non_ascii(const std::string& body) {
    for (unsigned char c : body)
        if (c > 0x7f) return true;
    return false;
}

bool known_encoding(const std::string& enc) {
    return enc == "utf-8" || enc == "utf8" || enc == "us-ascii" ||
           enc == "ascii" || enc == "iso-8859-1" || enc == "latin-1" ||
           enc == "latin1" || enc == "windows-1252" || enc == "cp1252";
}

bool claims_utf8(const std::string& enc) {
    return enc == "utf-8" || enc == "utf8";
}

} // namespace

std::string detect_declared_encoding(const std::string& content_type,
                                     const std::string& body) {
    std::string enc = charset_from(content_type);
    if (!enc.empty()) return enc;
    // Scan the head of the document for <meta charset> declarations.
    std::string head = to_lower(body.substr(0, std::min<std::size_t>(body.size(), 4096)));
    std::size_t pos = 0;
    while ((pos = head.find("<meta", pos)) != std::string::npos) {
        std::size_t end = head.find('>', pos);
        if (end == std::string::npos) break;
        enc = charset_from(std::string_view(head).substr(pos, end - pos));
        if (!enc.empty()) return enc;
        pos = end + 1;
    }
    return {};
}

bool encoding_is_flagged(const std::string& encoding, const std::string& body) {
    if (!has_non_ascii(body)) return false;
    if (encoding.empty()) return true;
    if (!known_encoding(encoding)) return true;
    if (claims_utf8(encoding) && !valid_utf8(body)) return true;
    return false;
}

page_fetcher::page_fetcher(fetcher_options opts,
                           std::shared_ptr<http_transport> transport)
    : opts_(std::move(opts)), transport_(std::move(transport)) {
    if (!transport_ && opts_.mode != fetch_mode::replay)
        transport_ = make_httplib_transport(opts_.timeout_ms, opts_.user_agent);
    if (opts_.mode != fetch_mode::live && opts_.fixture_dir.empty())
        fail(errc::config_error, "record/replay mode needs a fixture directory");
    if (opts_.mode == fetch_mode::record)
        std::filesystem::create_directories(opts_.fixture_dir);
}

std::string page_fetcher::fixture_stem(const std::string& url) {
    return fnv1a64_hex(url);
}

void page_fetcher::rate_limit_wait(const std::string& url, int rate_limit_ms) {
    if (rate_limit_ms <= 0) return;
    std::string key = url_host_key(url);
    auto now = std::chrono::steady_clock::now();
    std::chrono::steady_clock::time_point wake;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = last_request_.find(key);
        if (it == last_request_.end()) {
            last_request_[key] = now;
            return;
        }
        wake = it->second + std::chrono::milliseconds(rate_limit_ms);
        it->second = std::max(wake, now);
    }
    if (wake > now) std::this_thread::sleep_for(wake - now);
}

fetched_page page_fetcher::fetch_live(const std::string& url, int rate_limit_ms) {
    // Transport failures and 5xx are retried with backoff; 4xx is final.
    http_response resp;
    for (int attempt = 1; attempt <= opts_.max_attempts; ++attempt) {
        rate_limit_wait(url, rate_limit_ms);
        ++network_requests_;
        resp = transport_->get(url);
        bool transient = resp.status == 0 || resp.status >= 500;
        if (!transient || attempt == opts_.max_attempts) break;
        std::size_t slot = static_cast<std::size_t>(attempt - 1);
        int delay = slot < opts_.backoff_ms.size() ? opts_.backoff_ms[slot] : 0;
        if (delay > 0) std::this_thread::sleep_for(std::chrono::milliseconds(delay));
    }
    if (resp.status == 0)
        fail(errc::fetch_error, url + ": " + resp.error + " after " +
                                    std::to_string(opts_.max_attempts) +
                                    " attempts");

    fetched_page page;
    page.url = url;
    page.status = resp.status;
    page.body = std::move(resp.body);
    page.content_type = resp.content_type;
    page.encoding = detect_declared_encoding(page.content_type, page.body);
    page.encoding_flagged = encoding_is_flagged(page.encoding, page.body);
    page.fetched_at = utc_timestamp_now();
    return page;
}

fetched_page page_fetcher::load_fixture(const std::string& url) {
    std::string stem = fixture_stem(url);
    std::filesystem::path meta_path = opts_.fixture_dir / (stem + ".json");
    std::filesystem::path body_path = opts_.fixture_dir / (stem + ".body");
    if (!std::filesystem::exists(meta_path))
        fail(errc::replay_miss, "no fixture for " + url + " (" + stem + ".json)");

    json meta = json::parse(read_file(meta_path), nullptr, false);
    if (meta.is_discarded())
        fail(errc::io_failure, "bad fixture metadata " + meta_path.string());
    if (meta.value("url", "") != url)
        fail(errc::replay_miss,
             "fixture " + stem + " records a different url: " +
                 meta.value("url", ""));

    fetched_page page;
    page.url = url;
    page.status = meta.value("status", 200);
    page.content_type = meta.value("content_type", "");
    page.encoding = meta.value("encoding", "");
    page.fetched_at = meta.value("fetched_at", "");
    page.body = std::filesystem::exists(body_path) ? read_file(body_path) : "";
    page.encoding_flagged = encoding_is_flagged(page.encoding, page.body);
    return page;
}

void page_fetcher::store_fixture(const fetched_page& page) {
    std::string stem = fixture_stem(page.url);
    json meta = {{"url", page.url},
                 {"status", page.status},
                 {"content_type", page.content_type},
                 {"encoding", page.encoding},
                 {"fetched_at", page.fetched_at}};
    write_file(opts_.fixture_dir / (stem + ".json"), meta.dump(2) + "\n");
    write_file(opts_.fixture_dir / (stem + ".body"), page.body);
}

fetched_page page_fetcher::fetch_allow_error(const std::string& url, int rate_limit_ms) {
    if (opts_.memoize) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(url);
        if (it != memo_.end()) return it->second;
    }

    fetched_page page;
    if (opts_.mode == fetch_mode::replay) {
        page = load_fixture(url);
    } else {
        page = fetch_live(url, rate_limit_ms);
        // Error statuses are recorded too, so replay reproduces them.
        if (opts_.mode == fetch_mode::record) store_fixture(page);
    }
    ++pages_served_;

    if (opts_.memoize && page.status < 400) {
        std::lock_guard<std::mutex> lock(mutex_);
        memo_[url] = page;
    }
    return page;
}

fetched_page page_fetcher::fetch(const std::string& url, int rate_limit_ms) {
    fetched_page page = fetch_allow_error(url, rate_limit_ms);
    if (page.status >= 400)
        fail(errc::fetch_error, url + ": HTTP " + std::to_string(page.status));
    return page;
}

} // namespace newsbias
