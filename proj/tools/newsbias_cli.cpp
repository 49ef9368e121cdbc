#include "newsbias/corpus_store.hpp"
#include "newsbias/errors.hpp"
#include "newsbias/pipeline.hpp"
#include "newsbias/report.hpp"
#include "newsbias/site_config.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace newsbias;

int exit_code_for(errc code) {
    switch (code) {
        case errc::config_error:
        case errc::permission_denied:
        case errc::empty_keyword:
        case errc::unknown_school:
            return 1;
        default:
            return 2;
    }
}

struct cli_args {
    std::string config_path;
    std::string out_dir = "out";
    std::vector<std::string> keywords;
    std::string format = "csv";
    std::string summarizer;
    std::string school;
    std::string replay_dir;
    std::string record_dir;
    std::string results_path;
};

fetch_mode mode_from(const cli_args& args) {
    if (!args.replay_dir.empty()) return fetch_mode::replay;
    if (!args.record_dir.empty()) return fetch_mode::record;
    return fetch_mode::live;
}

int cmd_scrape(const cli_args& args) {
    app_config cfg = load_app_config(args.config_path);
    scrape_options opts;
    opts.school = args.school;
    opts.mode = mode_from(args);
    opts.fixture_dir = opts.mode == fetch_mode::replay ? args.replay_dir : args.record_dir;
    scrape_outcome out = run_scrape(cfg, opts);
    std::printf("fetched %d pages; stored %d new records (%d already present, %d rejected)\n",
                out.counts.fetched, out.new_records, out.skipped, out.counts.rejected);
    return 0;
}

int cmd_analyze(const cli_args& args) {
    app_config cfg = load_app_config(args.config_path);
    analyze_options opts;
    opts.keywords = args.keywords;
    opts.summarizer_backend = args.summarizer;
    analyze_outcome out = run_analyze(cfg, opts);
    write_results(out, args.out_dir);
    for (const std::string& w : out.warnings) std::cerr << "warn: " << w << "\n";
    std::printf("analyzed %d article-keyword pairs (%d excluded); wrote %s/results.json\n",
                out.manifest.counts.analyzed, out.manifest.counts.excluded,
                args.out_dir.c_str());
    return 0;
}

int cmd_report(const cli_args& args) {
    app_config cfg = load_app_config(args.config_path);
    std::filesystem::path results = args.results_path.empty()
                                        ? std::filesystem::path(args.out_dir) / "results.json"
                                        : std::filesystem::path(args.results_path);
    analyze_outcome out = load_results(results);
    emit_reports(make_report_bundle(out, cfg), args.out_dir, args.format);
    std::printf("wrote reports to %s\n", args.out_dir.c_str());
    return 0;
}

int cmd_stats(const cli_args& args) {
    app_config cfg = load_app_config(args.config_path);
    corpus_store store(cfg.corpus_dir);
    std::vector<std::string> schools =
        args.school.empty() ? store.schools() : std::vector<std::string>{args.school};
    if (schools.empty()) {
        std::printf("corpus is empty\n");
        return 0;
    }
    std::printf("%-24s %-12s %-12s %6s %9s\n", "school", "earliest", "latest", "days",
                "articles");
    for (const std::string& school : schools) {
        corpus_stats s = store.stats(school);
        std::printf("%-24s %-12s %-12s %6d %9d\n", s.school_id.c_str(),
                    format_iso_date(s.earliest_date).c_str(),
                    format_iso_date(s.latest_date).c_str(), s.day_count, s.article_count);
    }
    return 0;
}

int cmd_export(const cli_args& args) {
    app_config cfg = load_app_config(args.config_path);
    corpus_store store(cfg.corpus_dir);
    store.export_to(args.out_dir);
    std::printf("exported corpus to %s\n", args.out_dir.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"newsbias: newspaper archive scraping and media bias measurement"};
    app.require_subcommand(1);

    cli_args args;

    auto add_common = [&](CLI::App* cmd, bool needs_out) {
        cmd->add_option("--config", args.config_path, "path to the JSON config file")
            ->required();
        if (needs_out)
            cmd->add_option("--out", args.out_dir, "output directory (default: out)");
    };

    CLI::App* scrape = app.add_subcommand("scrape", "crawl configured archives into the corpus");
    add_common(scrape, false);
    scrape->add_option("--school", args.school, "only scrape this school id");
    CLI::Option* replay =
        scrape->add_option("--replay", args.replay_dir, "serve pages from a fixture directory");
    scrape->add_option("--record", args.record_dir, "record fetched pages into a fixture directory")
        ->excludes(replay);

    CLI::App* analyze = app.add_subcommand("analyze", "score stored articles per keyword");
    add_common(analyze, true);
    analyze->add_option("--keyword", args.keywords, "keyword to analyze (repeatable; default: config)");
    analyze->add_option("--summarizer", args.summarizer, "summarizer backend: native or service")
        ->check(CLI::IsMember({"native", "service"}));

    CLI::App* report = app.add_subcommand("report", "render report artifacts from results.json");
    add_common(report, true);
    report->add_option("results", args.results_path,
                       "results.json to render (default: <out>/results.json)");
    report->add_option("--format", args.format, "tabular output format")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* stats = app.add_subcommand("stats", "print per-school corpus statistics");
    add_common(stats, false);
    stats->add_option("--school", args.school, "only this school id");

    CLI::App* exp = app.add_subcommand("export", "write the corpus in canonical form");
    add_common(exp, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(scrape)) return cmd_scrape(args);
        if (app.got_subcommand(analyze)) return cmd_analyze(args);
        if (app.got_subcommand(report)) return cmd_report(args);
        if (app.got_subcommand(stats)) return cmd_stats(args);
        if (app.got_subcommand(exp)) return cmd_export(args);
    } catch (const newsbias::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
