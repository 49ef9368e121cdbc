#include "newsbias/site_config.hpp"

#include "newsbias/errors.hpp"
#include "newsbias/strings.hpp"
#include "newsbias/url.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace newsbias {

namespace {

using nlohmann::json;

[[noreturn]] void bad_config(const std::string& what) {
    fail(errc::config_error, what);
}

std::string need_string(const json& obj, const char* key, const std::string& ctx) {
    if (!obj.contains(key) || !obj[key].is_string() || obj[key].get<std::string>().empty())
        bad_config(ctx + ": missing required string field '" + key + "'");
    return obj[key].get<std::string>();
}

std::optional<civil_date> opt_date(const json& obj, const char* key, const std::string& ctx) {
    if (!obj.contains(key)) return std::nullopt;
    if (!obj[key].is_string()) bad_config(ctx + ": '" + key + "' must be YYYY-MM-DD");
    auto d = parse_iso_date(obj[key].get<std::string>());
    if (!d) bad_config(ctx + ": '" + key + "' must be YYYY-MM-DD");
    return d;
}

std::vector<std::string> string_list(const json& obj, const char* key) {
    std::vector<std::string> out;
    if (!obj.contains(key)) return out;
    for (const auto& v : obj[key])
        if (v.is_string()) out.push_back(v.get<std::string>());
    return out;
}

site_descriptor parse_site(const json& s) {
    site_descriptor d;
    d.school_id = need_string(s, "school_id", "site");
    std::string ctx = "site '" + d.school_id + "'";
    d.base_url = need_string(s, "base_url", ctx);

    std::string strat = need_string(s, "strategy", ctx);
    auto parsed = strategy_from(strat);
    if (!parsed)
        bad_config(ctx + ": unknown strategy '" + strat +
                   "' (expected NavBarMax, UrlTemplate, SecondPageProbe or BackendApi)");
    d.strategy = *parsed;

    d.page_url_template = s.value("page_url_template", "");
    d.max_page_selector = s.value("max_page_selector", "");
    d.api_endpoint = s.value("api_endpoint", "");
    d.api_page_param = s.value("api_page_param", "");
    d.article_link_selector = s.value("article_link_selector", "");
    d.date_selector = s.value("date_selector", "");
    d.date_formats = string_list(s, "date_formats");
    d.title_selector = s.value("title_selector", "");
    d.body_selector = s.value("body_selector", "");
    d.min_date = opt_date(s, "min_date", ctx);
    d.max_date = opt_date(s, "max_date", ctx);
    d.rate_limit_ms = s.value("rate_limit", 1000);
    d.scraping_permitted = s.value("scraping_permitted", false);

    if (s.contains("watermarks")) {
        const json& w = s["watermarks"];
        d.watermarks.school_id = d.school_id;
        d.watermarks.header_patterns = string_list(w, "header_patterns");
        d.watermarks.footer_patterns = string_list(w, "footer_patterns");
    } else {
        d.watermarks.school_id = d.school_id;
    }
    return d;
}

} // namespace

std::string to_string(pagination_strategy s) {
    switch (s) {
    case pagination_strategy::nav_bar_max: return "NavBarMax";
    case pagination_strategy::url_template: return "UrlTemplate";
    case pagination_strategy::second_page_probe: return "SecondPageProbe";
    case pagination_strategy::backend_api: return "BackendApi";
    }
    return "UrlTemplate";
}

std::optional<pagination_strategy> strategy_from(std::string_view name) {
    if (name == "NavBarMax") return pagination_strategy::nav_bar_max;
    if (name == "UrlTemplate") return pagination_strategy::url_template;
    if (name == "SecondPageProbe") return pagination_strategy::second_page_probe;
    if (name == "BackendApi") return pagination_strategy::backend_api;
    return std::nullopt;
}

void validate(const site_descriptor& d) {
    std::string ctx = "site '" + d.school_id + "'";
    if (d.school_id.empty()) bad_config("site: empty school_id");
    if (!is_absolute_url(d.base_url))
        bad_config(ctx + ": base_url must be an absolute URL");
    if (d.rate_limit_ms < 0) bad_config(ctx + ": rate_limit must be >= 0");
    if (d.min_date && d.max_date && *d.max_date < *d.min_date)
        bad_config(ctx + ": min_date is after max_date");
    if (d.article_link_selector.empty())
        bad_config(ctx + ": article_link_selector is required");
    if (d.body_selector.empty())
        bad_config(ctx + ": body_selector is required");
    if (d.date_selector.empty())
        bad_config(ctx + ": date_selector is required");
    if (d.date_formats.empty())
        bad_config(ctx + ": date_formats is required");

    switch (d.strategy) {
    case pagination_strategy::nav_bar_max:
        if (d.max_page_selector.empty())
            bad_config(ctx + ": NavBarMax requires max_page_selector");
        break;
    case pagination_strategy::url_template:
        if (d.page_url_template.find("{page}") == std::string::npos)
            bad_config(ctx + ": UrlTemplate requires page_url_template with {page}");
        break;
    case pagination_strategy::second_page_probe:
        if (!d.page_url_template.empty() &&
            d.page_url_template.find("{page}") == std::string::npos)
            bad_config(ctx + ": page_url_template must contain {page}");
        break;
    case pagination_strategy::backend_api:
        if (d.api_endpoint.empty() || d.api_page_param.empty())
            bad_config(ctx + ": BackendApi requires api_endpoint and api_page_param");
        break;
    }
}

app_config load_app_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad_config("cannot open config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string raw = buf.str();

    json root = json::parse(raw, nullptr, false);
    if (root.is_discarded())
        bad_config("config file " + path.string() + " is not valid JSON");

    app_config cfg;
    cfg.config_hash = fnv1a64_hex(raw);

    std::filesystem::path base = path.parent_path();
    auto data_path = [&](const std::string& rel) {
        std::filesystem::path p(rel);
        return p.is_absolute() ? p : base / p;
    };

    if (root.contains("corpus_dir") && root["corpus_dir"].is_string())
        cfg.corpus_dir = root["corpus_dir"].get<std::string>();
    if (root.contains("lexicon") && root["lexicon"].is_string())
        cfg.lexicon_path = data_path(root["lexicon"].get<std::string>());
    if (root.contains("stopwords") && root["stopwords"].is_string())
        cfg.stopwords_path = data_path(root["stopwords"].get<std::string>());
    cfg.keywords = string_list(root, "keywords");
    if (root.contains("user_agent") && root["user_agent"].is_string())
        cfg.user_agent = root["user_agent"].get<std::string>();

    if (root.contains("query")) {
        const json& q = root["query"];
        cfg.query.case_sensitive = q.value("case_sensitive", false);
        std::string mode = q.value("match_mode", "substring");
        if (mode == "substring") cfg.query.word_boundary = false;
        else if (mode == "word_boundary") cfg.query.word_boundary = true;
        else bad_config("query.match_mode must be substring or word_boundary");
        cfg.query.search_titles = q.value("search_titles", true);
    }

    if (root.contains("summarizer")) {
        const json& s = root["summarizer"];
        cfg.summarizer.max_tokens = s.value("max_tokens", 500);
        if (cfg.summarizer.max_tokens < 1)
            bad_config("summarizer.max_tokens must be >= 1");
        std::string policy = s.value("overlong_policy", "reject");
        auto p = overlong_policy_from(policy);
        if (!p) bad_config("summarizer.overlong_policy must be reject, truncate or chunk");
        cfg.summarizer.policy = *p;
        cfg.summarizer.backend = s.value("backend", "native");
        if (cfg.summarizer.backend != "native" && cfg.summarizer.backend != "service")
            bad_config("summarizer.backend must be native or service");
        cfg.summarizer.endpoint = s.value("endpoint", "");
    }

    if (root.contains("sentiment")) {
        const json& s = root["sentiment"];
        cfg.sentiment.backend = s.value("backend", "native");
        if (cfg.sentiment.backend != "native" && cfg.sentiment.backend != "service")
            bad_config("sentiment.backend must be native or service");
        cfg.sentiment.endpoint = s.value("endpoint", "");
    }

    if (root.contains("report")) {
        const json& r = root["report"];
        cfg.report.histogram_bins = r.value("histogram_bins", 10);
        if (cfg.report.histogram_bins < 2)
            bad_config("report.histogram_bins must be >= 2");
        if (r.contains("invalid_conclusion_warning") &&
            r["invalid_conclusion_warning"].is_string())
            cfg.report.invalid_conclusion_warning =
                r["invalid_conclusion_warning"].get<std::string>();
    }

    if (root.contains("sites")) {
        for (const auto& s : root["sites"]) {
            site_descriptor d = parse_site(s);
            validate(d);
            cfg.sites.push_back(std::move(d));
        }
    }
    for (std::size_t i = 0; i < cfg.sites.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.sites.size(); ++j)
            if (cfg.sites[i].school_id == cfg.sites[j].school_id)
                bad_config("duplicate school_id '" + cfg.sites[i].school_id + "'");
    return cfg;
}

const site_descriptor* find_site(const app_config& cfg, const std::string& school_id) {
    for (const auto& s : cfg.sites)
        if (s.school_id == school_id) return &s;
    return nullptr;
}

} // namespace newsbias
