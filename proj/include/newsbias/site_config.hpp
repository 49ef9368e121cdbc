#pragma once

#include "newsbias/dates.hpp"
#include "newsbias/summarizer.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace newsbias {

enum class pagination_strategy { nav_bar_max, url_template, second_page_probe, backend_api };

std::string to_string(pagination_strategy s);
std::optional<pagination_strategy> strategy_from(std::string_view name);

struct watermark_rule_set {
    std::string school_id;
    std::vector<std::string> header_patterns;  // anchored to the start
    std::vector<std::string> footer_patterns;  // anchored to the end
};

/// Declarative crawl recipe for one archive site.
struct site_descriptor {
    std::string school_id;
    std::string base_url;
    pagination_strategy strategy = pagination_strategy::url_template;
    std::string page_url_template;   // contains {page}
    std::string max_page_selector;   // NavBarMax
    std::string api_endpoint;        // BackendApi
    std::string api_page_param;      // BackendApi
    std::string article_link_selector;
    std::string date_selector;
    std::vector<std::string> date_formats;
    std::string title_selector;      // empty -> <title>
    std::string body_selector;
    std::optional<civil_date> min_date;
    std::optional<civil_date> max_date;
    int rate_limit_ms = 1000;
    bool scraping_permitted = false;
    watermark_rule_set watermarks;
};

/// Validates invariants and per-strategy required fields.
/// Throws error(errc::config_error) naming the offending field.
void validate(const site_descriptor& d);

struct query_config {
    bool case_sensitive = false;
    bool word_boundary = false;
    bool search_titles = true;
};

struct summarizer_config {
    int max_tokens = 500;
    overlong_policy policy = overlong_policy::reject;
    std::string backend = "native";  // native | service
    std::string endpoint;            // NEWSBIAS_SUMMARY_URL overrides
};

struct sentiment_config {
    std::string backend = "native";  // native | service
    std::string endpoint;            // NEWSBIAS_SENTIMENT_URL overrides
};

struct report_config {
    int histogram_bins = 10;
    std::string invalid_conclusion_warning =
        "Warning: these results do not support concluding that a given "
        "school is biased in favor of or against a certain topic.";
};

struct app_config {
    std::vector<site_descriptor> sites;
    std::vector<std::string> keywords;
    std::filesystem::path corpus_dir = "corpus";   // resolved against the CWD
    std::filesystem::path lexicon_path;            // resolved against the config file
    std::filesystem::path stopwords_path;          // resolved against the config file
    query_config query;
    summarizer_config summarizer;
    sentiment_config sentiment;
    report_config report;
    std::string user_agent = "newsbias/0.1 (+archive research crawler)";
    std::string config_hash;                       // FNV-1a 64 of the raw file
};

/// Loads and validates the JSON config file.
/// Data-file paths resolve relative to the config file's directory;
/// corpus_dir resolves relative to the working directory.
app_config load_app_config(const std::filesystem::path& path);

const site_descriptor* find_site(const app_config& cfg, const std::string& school_id);

} // namespace newsbias
