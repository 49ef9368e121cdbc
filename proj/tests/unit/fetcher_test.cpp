#include "newsbias/errors.hpp"
#include "newsbias/fetcher.hpp"
#include "newsbias/strings.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

#include <fstream>
#include <map>
#include <memory>

using namespace newsbias;

namespace {

using testutil::scripted_transport;

http_response ok_page(std::string body, std::string content_type = "text/html") {
    return {200, std::move(body), std::move(content_type), ""};
}

fetcher_options live_opts(int max_attempts = 3, std::vector<int> backoff = {0, 0},
                          bool memoize = false) {
    fetcher_options o;
    o.mode = fetch_mode::live;
    o.max_attempts = max_attempts;
    o.backoff_ms = std::move(backoff);
    o.memoize = memoize;
    return o;
}

fetcher_options fixture_opts(fetch_mode mode, std::filesystem::path dir) {
    fetcher_options o;
    o.mode = mode;
    o.fixture_dir = std::move(dir);
    return o;
}

} // namespace

TEST_SUITE("fetcher") {

TEST_CASE("declared encodings come from headers or meta tags") {
    CHECK(detect_declared_encoding("text/html; charset=UTF-8", "") == "utf-8");
    CHECK(detect_declared_encoding("text/html; charset=\"ISO-8859-1\"", "") ==
          "iso-8859-1");
    CHECK(detect_declared_encoding(
              "text/html", "<html><head><meta charset=\"windows-1252\"></head>") ==
          "windows-1252");
    CHECK(detect_declared_encoding(
              "text/html",
              "<head><meta http-equiv=\"Content-Type\" content=\"text/html; "
              "charset=utf-8\"></head>") == "utf-8");
    // header beats meta
    CHECK(detect_declared_encoding(
              "text/html; charset=latin-1",
              "<meta charset=utf-8>") == "latin-1");
    CHECK(detect_declared_encoding("text/html", "<p>nothing declared</p>") == "");
}

TEST_CASE("flagging needs non-ascii bytes and a doubtful charset") {
    CHECK_FALSE(encoding_is_flagged("", "plain ascii"));
    CHECK(encoding_is_flagged("", "caf\xc3\xa9"));
    CHECK_FALSE(encoding_is_flagged("utf-8", "caf\xc3\xa9"));
    CHECK(encoding_is_flagged("utf-8", "broken \xe9 byte"));
    CHECK_FALSE(encoding_is_flagged("iso-8859-1", "caf\xe9"));
    CHECK(encoding_is_flagged("shift-jis", "caf\xe9"));
}

TEST_CASE("live fetch fills the page from the transport") {
    auto transport = std::make_shared<scripted_transport>();
    transport->script("https://a.test/page",
                      ok_page("<html>hi</html>", "text/html; charset=utf-8"));
    page_fetcher fetcher(live_opts(), transport);
    fetched_page page = fetcher.fetch("https://a.test/page", 0);
    CHECK(page.status == 200);
    CHECK(page.body == "<html>hi</html>");
    CHECK(page.encoding == "utf-8");
    CHECK_FALSE(page.fetched_at.empty());
    CHECK(fetcher.network_requests() == 1);
    CHECK(fetcher.pages_served() == 1);
}

TEST_CASE("4xx raises fetch_error without retrying") {
    auto transport = std::make_shared<scripted_transport>();
    transport->script("https://a.test/gone", {404, "not here", "text/plain", ""});
    page_fetcher fetcher(live_opts(3, {}), transport);
    try {
        fetcher.fetch("https://a.test/gone", 0);
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::fetch_error);
        CHECK(std::string(e.what()).find("HTTP 404") != std::string::npos);
    }
    CHECK(transport->hits["https://a.test/gone"] == 1);

    // the probe variant returns the page instead
    fetched_page probe = fetcher.fetch_allow_error("https://a.test/gone", 0);
    CHECK(probe.status == 404);
}

TEST_CASE("5xx retries until the budget runs out") {
    auto transport = std::make_shared<scripted_transport>();
    transport->script("https://a.test/flaky", {503, "", "", ""});
    transport->script("https://a.test/flaky", ok_page("recovered"));
    page_fetcher fetcher(live_opts(3, {0, 0}), transport);
    fetched_page page = fetcher.fetch("https://a.test/flaky", 0);
    CHECK(page.body == "recovered");
    CHECK(transport->hits["https://a.test/flaky"] == 2);

    transport->script("https://a.test/dead", {500, "", "", ""});
    CHECK_THROWS_AS(fetcher.fetch("https://a.test/dead", 0), error);
    CHECK(transport->hits["https://a.test/dead"] == 3);
}

TEST_CASE("transport failures surface after the retry budget") {
    auto transport = std::make_shared<scripted_transport>();
    transport->script("https://a.test/refused", {0, "", "", "connection refused"});
    page_fetcher fetcher(live_opts(2, {0}), transport);
    try {
        fetcher.fetch("https://a.test/refused", 0);
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::fetch_error);
        CHECK(std::string(e.what()).find("connection refused") != std::string::npos);
        CHECK(std::string(e.what()).find("2 attempts") != std::string::npos);
    }
}

TEST_CASE("memoization serves repeats without new requests") {
    auto transport = std::make_shared<scripted_transport>();
    transport->script("https://a.test/page", ok_page("cached"));
    page_fetcher fetcher(live_opts(3, {0, 0}, true), transport);
    CHECK(fetcher.fetch("https://a.test/page", 0).body == "cached");
    CHECK(fetcher.fetch("https://a.test/page", 0).body == "cached");
    CHECK(transport->hits["https://a.test/page"] == 1);
    CHECK(fetcher.pages_served() == 1);
}

TEST_CASE("record and replay round-trip pages and error statuses") {
    testutil::temp_dir tmp("fixtures");
    std::string page_url = "https://a.test/story";
    std::string missing_url = "https://a.test/404";
    {
        auto transport = std::make_shared<scripted_transport>();
        transport->script(page_url,
                          ok_page("body \xc3\xa9 bytes", "text/html; charset=utf-8"));
        transport->script(missing_url, {404, "gone", "text/plain", ""});
        page_fetcher recorder(fixture_opts(fetch_mode::record, tmp.path()),
                              transport);
        CHECK(recorder.fetch(page_url, 0).body == "body \xc3\xa9 bytes");
        CHECK(recorder.fetch_allow_error(missing_url, 0).status == 404);
    }

    page_fetcher replayer(fixture_opts(fetch_mode::replay, tmp.path()));
    fetched_page page = replayer.fetch(page_url, 0);
    CHECK(page.status == 200);
    CHECK(page.body == "body \xc3\xa9 bytes");
    CHECK(page.content_type == "text/html; charset=utf-8");
    CHECK(page.encoding == "utf-8");
    CHECK_FALSE(page.encoding_flagged);
    CHECK(replayer.network_requests() == 0);
    CHECK(replayer.pages_served() == 1);

    // recorded error statuses replay as errors again
    fetched_page probe = replayer.fetch_allow_error(missing_url, 0);
    CHECK(probe.status == 404);
    CHECK_THROWS_AS(replayer.fetch(missing_url, 0), error);
}

TEST_CASE("replay misses carry their own code") {
    testutil::temp_dir tmp("fixtures");
    page_fetcher replayer(fixture_opts(fetch_mode::replay, tmp.path()));
    try {
        replayer.fetch("https://a.test/never-recorded", 0);
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::replay_miss);
    }
}

TEST_CASE("fixture stems are stable fnv hashes of the url") {
    CHECK(page_fetcher::fixture_stem("https://a.test/x") ==
          fnv1a64_hex("https://a.test/x"));
    testutil::temp_dir tmp("fixtures");
    auto transport = std::make_shared<scripted_transport>();
    transport->script("https://a.test/x", ok_page("content"));
    page_fetcher recorder(fixture_opts(fetch_mode::record, tmp.path()),
                          transport);
    recorder.fetch("https://a.test/x", 0);
    std::string stem = page_fetcher::fixture_stem("https://a.test/x");
    CHECK(std::filesystem::exists(tmp.path() / (stem + ".json")));
    CHECK(std::filesystem::exists(tmp.path() / (stem + ".body")));
}

TEST_CASE("record and replay modes require a fixture directory") {
    try {
        fetcher_options opts;
        opts.mode = fetch_mode::replay;
        page_fetcher bad(opts);
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::config_error);
    }
}

TEST_CASE("rate limiting spaces requests to the same host") {
    auto transport = std::make_shared<scripted_transport>();
    transport->script("https://a.test/1", ok_page("one"));
    transport->script("https://a.test/2", ok_page("two"));
    page_fetcher fetcher(live_opts(), transport);
    auto start = std::chrono::steady_clock::now();
    fetcher.fetch("https://a.test/1", 80);
    fetcher.fetch("https://a.test/2", 80);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    CHECK(elapsed.count() >= 80);
}

} // TEST_SUITE
