#pragma once

#include "newsbias/transport.hpp"

#include "httplib.h"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace testutil {

/// Scripted transport: per-URL queues of canned responses. The last
/// response repeats when the queue runs dry; unscripted URLs 404.
struct scripted_transport : newsbias::http_transport {
    std::map<std::string, std::vector<newsbias::http_response>> scripts;
    std::map<std::string, int> hits;

    void script(const std::string& url, newsbias::http_response resp) {
        scripts[url].push_back(std::move(resp));
    }

    void script_html(const std::string& url, std::string body) {
        script(url, {200, std::move(body), "text/html; charset=utf-8", ""});
    }

    newsbias::http_response get(const std::string& url) override {
        ++hits[url];
        auto it = scripts.find(url);
        if (it == scripts.end() || it->second.empty())
            return {404, "scripted 404", "text/plain", ""};
        std::size_t index = std::min<std::size_t>(
            static_cast<std::size_t>(hits[url]) - 1, it->second.size() - 1);
        return it->second[index];
    }

    newsbias::http_response post(const std::string&, const std::string&,
                                 const std::string&) override {
        return {405, "", "", ""};
    }

    int total_hits() const {
        int n = 0;
        for (const auto& [url, count] : hits) n += count;
        return n;
    }
};

/// Loopback HTTP server for exercising the service clients offline.
class loopback_server {
public:
    loopback_server() = default;

    template <typename Handler>
    void post(const std::string& pattern, Handler handler) {
        server_.Post(pattern, handler);
    }

    template <typename Handler>
    void get(const std::string& pattern, Handler handler) {
        server_.Get(pattern, handler);
    }

    std::string start() {
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
        return "http://127.0.0.1:" + std::to_string(port_);
    }

    ~loopback_server() {
        server_.stop();
        if (thread_.joinable()) thread_.join();
    }

private:
    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
};

/// Fresh scratch directory under the build tree, removed on destruction.
class temp_dir {
public:
    explicit temp_dir(const std::string& label) {
        static std::mt19937_64 rng{std::random_device{}()};
        path_ = std::filesystem::temp_directory_path() /
                ("newsbias_" + label + "_" + std::to_string(rng()));
        std::filesystem::create_directories(path_);
    }

    ~temp_dir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline std::filesystem::path tests_dir() { return TEST_DATA_DIR; }
inline std::filesystem::path repo_dir() { return tests_dir().parent_path(); }
inline std::filesystem::path data_dir() { return repo_dir() / "data"; }

} // namespace testutil
