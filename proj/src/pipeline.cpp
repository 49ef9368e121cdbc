#include "newsbias/pipeline.hpp"

#include "newsbias/bias.hpp"
#include "newsbias/dates.hpp"
#include "newsbias/errors.hpp"
#include "newsbias/extractor.hpp"
#include "newsbias/query.hpp"
#include "newsbias/scraper.hpp"
#include "newsbias/sentiment.hpp"
#include "newsbias/strings.hpp"
#include "newsbias/summarizer.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

namespace newsbias {

namespace {

using nlohmann::json;

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_failure, "cannot open " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spill(const std::filesystem::path& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(errc::io_failure, "cannot write " + path.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) fail(errc::io_failure, "short write to " + path.string());
}

std::string env_or(const char* name, const std::string& fallback) {
    const char* value = std::getenv(name);
    return value && *value ? std::string(value) : fallback;
}

json triple_to_json(const sentiment_triple& t) {
    return {{"pos", t.pos}, {"neg", t.neg}, {"neu", t.neu}, {"compound", t.compound}};
}

sentiment_triple triple_from_json(const json& j) {
    sentiment_triple t;
    t.pos = j.at("pos").get<double>();
    t.neg = j.at("neg").get<double>();
    t.neu = j.at("neu").get<double>();
    t.compound = j.value("compound", 0.0);
    return t;
}

json bias_to_json(const bias_triple& b) {
    return {{"pos", b.pos_delta}, {"neg", b.neg_delta}, {"neu", b.neu_delta}};
}

bias_triple bias_from_json(const json& j) {
    bias_triple b;
    b.pos_delta = j.at("pos").get<double>();
    b.neg_delta = j.at("neg").get<double>();
    b.neu_delta = j.at("neu").get<double>();
    return b;
}

void scrape_site(const site_descriptor& desc, page_fetcher& fetcher,
                 corpus_store& store, scrape_outcome& out) {
    std::vector<std::string> pages = enumerate_subpages(desc, fetcher);

    std::vector<article_link> links;
    std::set<std::string> seen;  // across the site's listing pages
    for (const std::string& page_url : pages) {
        fetched_page page = fetcher.fetch(page_url, desc.rate_limit_ms);
        html_document doc = parse_subpage(page);
        int rejected = 0;
        for (article_link& link : extract_article_links(doc, desc, page_url, &rejected)) {
            if (seen.insert(link.url).second) links.push_back(std::move(link));
        }
        out.counts.rejected += rejected;
    }

    for (const article_link& link : links) {
        if (store.contains(desc.school_id, link.url)) {
            ++out.skipped;
            continue;
        }
        fetched_page page;
        try {
            page = fetcher.fetch(link.url, desc.rate_limit_ms);
        } catch (const error& e) {
            if (e.code() != errc::fetch_error) throw;
            std::cerr << "warn: " << e.what() << "\n";
            ++out.counts.rejected;
            continue;
        }

        article_record rec;
        source_kind kind = classify_source(page, desc);
        if (kind == source_kind::text) {
            try {
                rec = extract_text(page, desc);
            } catch (const error& e) {
                if (e.code() != errc::extraction_empty) throw;
                std::cerr << "warn: " << e.what() << "\n";
                ++out.counts.rejected;
                continue;
            }
            if (rec.title.empty()) rec.title = link.text;
        } else {
            // Stored for the record; analysis skips non-text sources.
            rec.school = desc.school_id;
            rec.url = page.url;
            rec.title = link.text;
            rec.kind = kind;
            rec.fetched_at = page.fetched_at;
            rec.encoding_flagged = page.encoding_flagged;
        }
        rec.date = link.date;
        store.put(rec);
        ++out.counts.extracted;
        ++out.new_records;
    }
}

stage_counts read_scrape_counts(const std::filesystem::path& corpus_dir) {
    stage_counts counts;
    std::filesystem::path path = corpus_dir / "_scrape_manifest.json";
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return counts;
    json j = json::parse(slurp(path), nullptr, false);
    if (j.is_discarded()) return counts;
    counts.fetched = j.value("fetched", 0);
    counts.extracted = j.value("extracted", 0);
    counts.rejected = j.value("rejected", 0);
    return counts;
}

} // namespace

json run_manifest::to_json() const {
    return {{"config_hash", config_hash},
            {"corpus_snapshot", corpus_snapshot},
            {"lexicon_id", lexicon_id},
            {"keywords", keywords},
            {"summarizer_backend", summarizer_backend},
            {"summarizer_policy", summarizer_policy},
            {"started_at", started_at},
            {"finished_at", finished_at},
            {"counts",
             {{"fetched", counts.fetched},
              {"extracted", counts.extracted},
              {"rejected", counts.rejected},
              {"analyzed", counts.analyzed},
              {"excluded", counts.excluded}}},
            {"queried", queried}};
}

scrape_outcome run_scrape(const app_config& cfg, const scrape_options& opts) {
    std::vector<const site_descriptor*> sites;
    for (const site_descriptor& site : cfg.sites) {
        if (!opts.school.empty() && site.school_id != opts.school) continue;
        sites.push_back(&site);
    }
    if (sites.empty())
        fail(errc::unknown_school,
             opts.school.empty() ? "no sites configured"
                                 : "no configured site matches '" + opts.school + "'");
    // Refuse everything up front so a forbidden site never costs a request.
    for (const site_descriptor* site : sites)
        if (!site->scraping_permitted)
            fail(errc::permission_denied,
                 site->school_id + ": scraping this site is not permitted");

    fetcher_options fopts;
    fopts.mode = opts.mode;
    fopts.fixture_dir = opts.fixture_dir;
    fopts.memoize = true;
    fopts.user_agent = cfg.user_agent;
    page_fetcher fetcher(fopts, opts.transport);

    corpus_store store(cfg.corpus_dir);
    scrape_outcome out;
    std::string started = utc_timestamp_now();
    for (const site_descriptor* site : sites) scrape_site(*site, fetcher, store, out);
    out.counts.fetched = fetcher.pages_served();

    json manifest = {{"started_at", started},
                     {"finished_at", utc_timestamp_now()},
                     {"config_hash", cfg.config_hash},
                     {"fetched", out.counts.fetched},
                     {"extracted", out.counts.extracted},
                     {"rejected", out.counts.rejected},
                     {"new_records", out.new_records},
                     {"skipped", out.skipped}};
    spill(cfg.corpus_dir / "_scrape_manifest.json", manifest.dump(2) + "\n");
    return out;
}

analyze_outcome run_analyze(const app_config& cfg, const analyze_options& opts) {
    analyze_outcome out;
    out.manifest.started_at = utc_timestamp_now();
    out.manifest.config_hash = cfg.config_hash;
    out.manifest.counts = read_scrape_counts(cfg.corpus_dir);

    out.keywords = opts.keywords.empty() ? cfg.keywords : opts.keywords;
    if (out.keywords.empty()) fail(errc::config_error, "no keywords configured or given");
    out.manifest.keywords = out.keywords;

    std::string sum_backend =
        opts.summarizer_backend.empty() ? cfg.summarizer.backend : opts.summarizer_backend;
    std::unique_ptr<summarizer_port> summarizer;
    if (sum_backend == "service") {
        std::string endpoint = env_or("NEWSBIAS_SUMMARY_URL", cfg.summarizer.endpoint);
        if (endpoint.empty())
            fail(errc::config_error, "summarizer backend 'service' needs an endpoint");
        auto transport = opts.transport
                             ? opts.transport
                             : make_httplib_transport(15000, cfg.user_agent);
        summarizer = std::make_unique<service_summarizer>(endpoint, transport);
    } else if (sum_backend == "native") {
        std::set<std::string> stopwords;
        if (!cfg.stopwords_path.empty()) stopwords = load_stopwords(cfg.stopwords_path);
        summarizer = std::make_unique<extractive_summarizer>(std::move(stopwords));
    } else {
        fail(errc::config_error, "unknown summarizer backend '" + sum_backend + "'");
    }
    out.manifest.summarizer_backend = sum_backend;
    out.manifest.summarizer_policy = to_string(cfg.summarizer.policy);

    std::unique_ptr<sentiment_port> sentiment;
    if (cfg.sentiment.backend == "service") {
        std::string endpoint = env_or("NEWSBIAS_SENTIMENT_URL", cfg.sentiment.endpoint);
        if (endpoint.empty())
            fail(errc::config_error, "sentiment backend 'service' needs an endpoint");
        auto transport = opts.transport
                             ? opts.transport
                             : make_httplib_transport(15000, cfg.user_agent);
        sentiment = std::make_unique<service_sentiment>(endpoint, transport);
        out.manifest.lexicon_id = "external";
    } else if (cfg.sentiment.backend == "native") {
        sentiment_lexicon lexicon = load_lexicon(cfg.lexicon_path);
        out.manifest.lexicon_id = lexicon.id;
        sentiment = std::make_unique<rule_sentiment>(std::move(lexicon));
    } else {
        fail(errc::config_error,
             "unknown sentiment backend '" + cfg.sentiment.backend + "'");
    }

    corpus_store store(cfg.corpus_dir);
    out.manifest.corpus_snapshot = store.snapshot_id();

    std::vector<keyword_query> queries;
    for (const std::string& kw : out.keywords) {
        keyword_query q;
        q.keyword = kw;
        q.case_sensitive = cfg.query.case_sensitive;
        q.mode = cfg.query.word_boundary ? match_mode::word_boundary : match_mode::substring;
        q.search_titles = cfg.query.search_titles;
        queries.push_back(std::move(q));
    }

    std::map<std::string, int> total_matches;
    for (const std::string& kw : out.keywords) {
        total_matches[kw] = 0;
        out.keyword_counts[kw] = 0;
    }

    // Per-article scoring is cached so an article matching several keywords
    // is summarized once.
    struct scored {
        std::optional<granularity_sentiments> g;
        std::string failure;
    };

    for (const std::string& school : store.schools()) {
        const site_descriptor* site = find_site(cfg, school);
        std::vector<article_record> articles;
        for (article_record& rec : store.articles(school)) {
            if (rec.kind != source_kind::text) continue;
            if (site) rec.text = trim_watermarks(rec.text, site->watermarks);
            articles.push_back(std::move(rec));
        }
        if (articles.empty()) continue;

        std::map<std::string, int> counts = keyword_distribution(articles, queries);
        for (const auto& [kw, n] : counts) {
            out.keyword_counts[kw] += n;
            total_matches[kw] += n;
        }

        std::vector<std::optional<scored>> cache(articles.size());
        for (const keyword_query& q : queries) {
            std::vector<article_bias> per_article;
            for (std::size_t idx : query(articles, q)) {
                ++out.manifest.queried;
                if (!cache[idx]) {
                    scored s;
                    try {
                        s.g = article_granularities(articles[idx].text, *summarizer,
                                                    *sentiment, cfg.summarizer.max_tokens,
                                                    cfg.summarizer.policy);
                    } catch (const error& e) {
                        s.failure = e.what();
                    }
                    cache[idx] = std::move(s);
                }
                if (cache[idx]->g) {
                    article_bias ab;
                    ab.url = articles[idx].url;
                    ab.sentiments = *cache[idx]->g;
                    ab.bias = compute_bias(ab.sentiments);
                    per_article.push_back(std::move(ab));
                    ++out.manifest.counts.analyzed;
                } else {
                    out.excluded.push_back(
                        {school, q.keyword, articles[idx].url, cache[idx]->failure});
                    ++out.manifest.counts.excluded;
                }
            }
            if (!per_article.empty())
                out.results.push_back(aggregate_bias(std::move(per_article), school, q.keyword));
        }
    }

    for (const std::string& kw : out.keywords)
        if (total_matches[kw] == 0)
            out.warnings.push_back("keyword '" + kw + "' matched no articles");

    out.manifest.finished_at = utc_timestamp_now();
    return out;
}

void write_results(const analyze_outcome& outcome, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);

    json results = json::array();
    for (const bias_result& r : outcome.results) {
        json articles = json::array();
        for (const article_bias& a : r.articles)
            articles.push_back({{"url", a.url},
                                {"bias", bias_to_json(a.bias)},
                                {"article_level", triple_to_json(a.sentiments.article_level)},
                                {"paragraph_level", triple_to_json(a.sentiments.paragraph_level)},
                                {"sentence_level", triple_to_json(a.sentiments.sentence_level)}});
        results.push_back({{"school", r.school_id},
                           {"keyword", r.keyword},
                           {"article_count", r.article_count},
                           {"mean_bias", bias_to_json(r.mean)},
                           {"articles", std::move(articles)}});
    }

    json excluded = json::array();
    for (const excluded_article& e : outcome.excluded)
        excluded.push_back({{"school", e.school_id},
                            {"keyword", e.keyword},
                            {"url", e.url},
                            {"reason", e.reason}});

    json doc = {{"manifest", outcome.manifest.to_json()},
                {"results", std::move(results)},
                {"keyword_counts", outcome.keyword_counts},
                {"excluded", std::move(excluded)},
                {"warnings", outcome.warnings}};
    spill(out_dir / "results.json", doc.dump(2) + "\n");
    spill(out_dir / "manifest.json", outcome.manifest.to_json().dump(2) + "\n");
}

analyze_outcome load_results(const std::filesystem::path& results_path) {
    std::string raw;
    try {
        raw = slurp(results_path);
    } catch (const error& e) {
        fail(errc::malformed_results, e.what());
    }
    json doc = json::parse(raw, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        fail(errc::malformed_results, results_path.string() + " is not valid JSON");

    analyze_outcome out;
    try {
        const json& manifest = doc.at("manifest");
        out.manifest.config_hash = manifest.value("config_hash", "");
        out.manifest.corpus_snapshot = manifest.value("corpus_snapshot", "");
        out.manifest.lexicon_id = manifest.value("lexicon_id", "");
        out.manifest.summarizer_backend = manifest.value("summarizer_backend", "");
        out.manifest.summarizer_policy = manifest.value("summarizer_policy", "");
        out.manifest.started_at = manifest.value("started_at", "");
        out.manifest.finished_at = manifest.value("finished_at", "");
        out.manifest.queried = manifest.value("queried", 0);
        if (manifest.contains("counts")) {
            const json& c = manifest.at("counts");
            out.manifest.counts.fetched = c.value("fetched", 0);
            out.manifest.counts.extracted = c.value("extracted", 0);
            out.manifest.counts.rejected = c.value("rejected", 0);
            out.manifest.counts.analyzed = c.value("analyzed", 0);
            out.manifest.counts.excluded = c.value("excluded", 0);
        }
        for (const json& kw : manifest.at("keywords"))
            out.keywords.push_back(kw.get<std::string>());
        out.manifest.keywords = out.keywords;

        for (const auto& [kw, n] : doc.at("keyword_counts").items())
            out.keyword_counts[kw] = n.get<int>();

        for (const json& r : doc.at("results")) {
            bias_result result;
            result.school_id = r.at("school").get<std::string>();
            result.keyword = r.at("keyword").get<std::string>();
            result.article_count = r.at("article_count").get<int>();
            result.mean = bias_from_json(r.at("mean_bias"));
            for (const json& a : r.at("articles")) {
                article_bias ab;
                ab.url = a.at("url").get<std::string>();
                ab.bias = bias_from_json(a.at("bias"));
                ab.sentiments.article_level = triple_from_json(a.at("article_level"));
                ab.sentiments.paragraph_level = triple_from_json(a.at("paragraph_level"));
                ab.sentiments.sentence_level = triple_from_json(a.at("sentence_level"));
                result.articles.push_back(std::move(ab));
            }
            out.results.push_back(std::move(result));
        }

        if (doc.contains("excluded"))
            for (const json& e : doc.at("excluded"))
                out.excluded.push_back({e.value("school", ""), e.value("keyword", ""),
                                        e.value("url", ""), e.value("reason", "")});
        if (doc.contains("warnings"))
            for (const json& w : doc.at("warnings"))
                out.warnings.push_back(w.get<std::string>());
    } catch (const json::exception& e) {
        fail(errc::malformed_results,
             results_path.string() + ": " + std::string(e.what()));
    }
    return out;
}

report_bundle make_report_bundle(const analyze_outcome& outcome, const app_config& cfg) {
    report_bundle bundle;
    bundle.results = outcome.results;
    bundle.keywords = outcome.keywords;
    bundle.keyword_counts = outcome.keyword_counts;
    bundle.histogram_bins = cfg.report.histogram_bins;
    bundle.invalid_conclusion_warning = cfg.report.invalid_conclusion_warning;
    return bundle;
}

} // namespace newsbias
