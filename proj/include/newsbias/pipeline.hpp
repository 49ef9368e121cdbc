#pragma once

#include "newsbias/corpus_store.hpp"
#include "newsbias/fetcher.hpp"
#include "newsbias/report.hpp"
#include "newsbias/site_config.hpp"

#include "json.hpp"

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

namespace newsbias {

struct stage_counts {
    int fetched = 0;    // pages served (network or fixture)
    int extracted = 0;  // records persisted
    int rejected = 0;   // bad links, unparseable dates, empty extractions
    int analyzed = 0;   // article-keyword pairs scored
    int excluded = 0;   // article-keyword pairs dropped with a reason
};

/// Reproducibility record for one pipeline execution.
struct run_manifest {
    std::string config_hash;
    std::string corpus_snapshot;
    std::string lexicon_id;
    std::vector<std::string> keywords;
    std::string summarizer_backend;
    std::string summarizer_policy;
    std::string started_at;
    std::string finished_at;
    stage_counts counts;
    int queried = 0;  // analyzed + excluded must equal this

    nlohmann::json to_json() const;
};

struct scrape_options {
    std::string school;  // empty = every configured site
    fetch_mode mode = fetch_mode::live;
    std::filesystem::path fixture_dir;
    std::shared_ptr<http_transport> transport;  // test override
};

struct scrape_outcome {
    stage_counts counts;
    int new_records = 0;
    int skipped = 0;  // already stored (resume)
};

/// enumerate -> extract links -> fetch -> classify -> extract -> store.
/// Refuses up front if any selected site forbids scraping. Appends to the
/// corpus and leaves a _scrape_manifest.json next to it.
scrape_outcome run_scrape(const app_config& cfg, const scrape_options& opts);

struct excluded_article {
    std::string school_id;
    std::string keyword;
    std::string url;
    std::string reason;
};

struct analyze_options {
    std::vector<std::string> keywords;   // empty = config keywords
    std::string summarizer_backend;      // empty = config backend
    std::shared_ptr<http_transport> transport;  // test override for services
};

struct analyze_outcome {
    std::vector<bias_result> results;
    std::vector<std::string> keywords;
    std::map<std::string, int> keyword_counts;
    std::vector<excluded_article> excluded;
    std::vector<std::string> warnings;
    run_manifest manifest;
};

/// query -> granularities -> bias -> aggregate over the stored corpus.
analyze_outcome run_analyze(const app_config& cfg, const analyze_options& opts);

/// Writes results.json and manifest.json under out_dir.
void write_results(const analyze_outcome& outcome, const std::filesystem::path& out_dir);

/// Loads a results.json produced by write_results.
/// Throws error(errc::malformed_results) on parse or shape problems.
analyze_outcome load_results(const std::filesystem::path& results_path);

/// Assembles the report bundle for emit_reports.
report_bundle make_report_bundle(const analyze_outcome& outcome, const app_config& cfg);

} // namespace newsbias
