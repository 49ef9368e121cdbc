#include "newsbias/scraper.hpp"

#include "newsbias/errors.hpp"
#include "newsbias/extractor.hpp"
#include "newsbias/selector.hpp"
#include "newsbias/strings.hpp"
#include "newsbias/url.hpp"

#include "json.hpp"

#include <cctype>
#include <set>

namespace newsbias {

namespace {

constexpr int kMaxPages = 10000;  // runaway-pagination guard

// Largest integer appearing in the text ("Page 3 of 57" -> 57).
long max_int_in(const std::string& text) {
    long best = -1;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) &&
                   v < 100000000L)
                v = v * 10 + (text[i++] - '0');
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            best = std::max(best, v);
        } else {
            ++i;
        }
    }
    return best;
}

// The anchor carrying a node's link: the node itself, a descendant, or an
// enclosing <a>.
int anchor_node(const html_document& doc, int id) {
    if (doc.node(id).tag == "a") return id;
    static const css_selector a_sel = compile_selector("a");
    int inner = select_first(doc, a_sel, id);
    if (inner >= 0) return inner;
    for (int cur = doc.node(id).parent; cur > 0; cur = doc.node(cur).parent)
        if (doc.node(cur).kind == node_kind::element && doc.node(cur).tag == "a")
            return cur;
    return -1;
}

std::optional<civil_date> parse_date_node(const html_document& doc, int id,
                                          std::span<const std::string> formats) {
    if (auto d = parse_date_any(doc.normalized_text(id), formats)) return d;
    if (auto v = doc.attr(id, "datetime"))
        if (auto d = parse_date_any(*v, formats)) return d;
    if (auto v = doc.attr(id, "title"))
        if (auto d = parse_date_any(*v, formats)) return d;
    return std::nullopt;
}

// Date for one link: nearest enclosing container with exactly one
// date-selector match, else positional pairing across the page.
std::optional<civil_date> find_link_date(const html_document& doc, int link_node,
                                         const css_selector& date_sel,
                                         std::span<const std::string> formats,
                                         const std::vector<int>& page_dates,
                                         std::size_t link_index,
                                         std::size_t link_count) {
    for (int cur = doc.node(link_node).parent; cur >= 0; cur = doc.node(cur).parent) {
        std::vector<int> matches = select_all(doc, date_sel, cur);
        if (matches.empty()) {
            if (cur == 0) break;
            continue;
        }
        if (matches.size() == 1)
            if (auto d = parse_date_node(doc, matches[0], formats)) return d;
        break;  // several candidates at this level: ambiguous, go positional
    }
    if (page_dates.size() == link_count && link_index < page_dates.size())
        return parse_date_node(doc, page_dates[link_index], formats);
    return std::nullopt;
}

std::string find_next_href(const html_document& doc, const std::string& page_url) {
    static const std::set<std::string> kNextWords = {
        "next", "next page", "next »", "next ›", "older", "older posts",
        "»", "›", ">", "2"};
    int fallback = -1;
    for (int id : doc.elements()) {
        if (doc.node(id).tag != "a") continue;
        auto href = doc.attr(id, "href");
        if (!href || trim(*href).empty()) continue;
        if (auto rel = doc.attr(id, "rel"))
            if (contains_ci(*rel, "next"))
                return resolve_url(page_url, std::string(trim(*href)));
        if (fallback < 0) {
            std::string text = to_lower(doc.normalized_text(id));
            if (kNextWords.count(text)) fallback = id;
        }
    }
    if (fallback >= 0)
        return resolve_url(page_url, std::string(trim(*doc.attr(fallback, "href"))));
    return {};
}

int count_link_nodes(const html_document& doc, const site_descriptor& desc) {
    css_selector sel = compile_selector(desc.article_link_selector);
    return static_cast<int>(select_all(doc, sel).size());
}

[[noreturn]] void runaway(const site_descriptor& desc) {
    fail(errc::strategy_data_missing,
         desc.school_id + ": pagination did not terminate within " +
             std::to_string(kMaxPages) + " pages");
}

std::vector<std::string> navbar_pages(const site_descriptor& desc, page_fetcher& fetcher) {
    fetched_page first = fetcher.fetch(desc.base_url, desc.rate_limit_ms);
    html_document doc = parse_subpage(first);
    css_selector sel = compile_selector(desc.max_page_selector);
    std::vector<int> nodes = select_all(doc, sel);
    if (nodes.empty())
        fail(errc::strategy_data_missing,
             desc.school_id + ": max_page_selector '" + desc.max_page_selector +
                 "' matched nothing");

    long max_page = 0;
    int max_node = -1;
    for (int id : nodes) {
        long v = max_int_in(doc.normalized_text(id));
        if (v > max_page) {
            max_page = v;
            max_node = id;
        }
    }
    if (max_page < 1)
        fail(errc::strategy_data_missing,
             desc.school_id + ": nav bar shows no page numbers");

    std::string tmpl = desc.page_url_template;
    if (tmpl.empty()) {
        int a = anchor_node(doc, max_node);
        if (a >= 0)
            if (auto href = doc.attr(a, "href"))
                tmpl = infer_page_template(
                    resolve_url(desc.base_url, std::string(trim(*href))),
                    static_cast<int>(max_page));
        if (tmpl.empty())
            fail(errc::strategy_data_missing,
                 desc.school_id + ": cannot infer a page url template from the nav bar");
    }

    std::vector<std::string> pages;
    for (int i = 1; i <= max_page; ++i)
        pages.push_back(expand_page_template(tmpl, i));
    return pages;
}

std::vector<std::string> template_pages(const site_descriptor& desc,
                                        page_fetcher& fetcher,
                                        const std::string& tmpl, int first_page,
                                        std::vector<std::string> pages) {
    for (int i = first_page; i <= kMaxPages; ++i) {
        std::string url = expand_page_template(tmpl, i);
        fetched_page page = fetcher.fetch_allow_error(url, desc.rate_limit_ms);
        if (page.status >= 400) {
            if (i == first_page && pages.empty())
                fail(errc::fetch_error, url + ": HTTP " + std::to_string(page.status));
            return pages;  // past the archive's end
        }
        if (trim(page.body).empty()) return pages;
        if (count_link_nodes(parse_subpage(page), desc) == 0) return pages;
        pages.push_back(url);
    }
    runaway(desc);
}

std::vector<std::string> probe_pages(const site_descriptor& desc, page_fetcher& fetcher) {
    fetched_page first = fetcher.fetch(desc.base_url, desc.rate_limit_ms);
    html_document doc = parse_subpage(first);
    std::vector<std::string> pages = {desc.base_url};

    std::string next = find_next_href(doc, desc.base_url);
    if (next.empty()) return pages;

    std::string tmpl = desc.page_url_template;
    if (tmpl.empty()) tmpl = infer_page_template(next, 2);
    if (!tmpl.empty()) return template_pages(desc, fetcher, tmpl, 2, std::move(pages));

    // No recognizable numbering: walk next links, guarding against cycles.
    std::set<std::string> seen = {desc.base_url};
    std::string cur = next;
    while (!cur.empty()) {
        if (!seen.insert(cur).second) break;
        if (static_cast<int>(pages.size()) >= kMaxPages) runaway(desc);
        fetched_page page = fetcher.fetch_allow_error(cur, desc.rate_limit_ms);
        if (page.status >= 400) break;
        html_document pdoc = parse_subpage(page);
        if (count_link_nodes(pdoc, desc) == 0) break;
        pages.push_back(cur);
        cur = find_next_href(pdoc, cur);
    }
    return pages;
}

std::vector<std::string> api_pages(const site_descriptor& desc, page_fetcher& fetcher) {
    std::string endpoint = is_absolute_url(desc.api_endpoint)
                               ? desc.api_endpoint
                               : resolve_url(desc.base_url, desc.api_endpoint);
    char sep = endpoint.find('?') == std::string::npos ? '?' : '&';
    std::string tmpl = endpoint + sep + desc.api_page_param + "={page}";
    return template_pages(desc, fetcher, tmpl, 1, {});
}

void collect_html_fragments(const nlohmann::json& value, std::string& out) {
    if (value.is_string()) {
        const std::string& s = value.get_ref<const std::string&>();
        if (s.find('<') != std::string::npos) {
            out += s;
            out += '\n';
        }
    } else if (value.is_array() || value.is_object()) {
        for (const auto& item : value) collect_html_fragments(item, out);
    }
}

} // namespace

std::string infer_page_template(const std::string& url, int page_no) {
    std::string needle = std::to_string(page_no);
    std::size_t best = std::string::npos;
    std::size_t i = 0;
    while (i < url.size()) {
        if (std::isdigit(static_cast<unsigned char>(url[i]))) {
            std::size_t start = i;
            while (i < url.size() && std::isdigit(static_cast<unsigned char>(url[i])))
                ++i;
            if (url.substr(start, i - start) == needle) best = start;
        } else {
            ++i;
        }
    }
    if (best == std::string::npos) return {};
    return url.substr(0, best) + "{page}" + url.substr(best + needle.size());
}

std::string expand_page_template(const std::string& tmpl, int page) {
    std::string out = tmpl;
    std::string number = std::to_string(page);
    std::size_t pos = 0;
    while ((pos = out.find("{page}", pos)) != std::string::npos) {
        out.replace(pos, 6, number);
        pos += number.size();
    }
    return out;
}

html_document parse_subpage(const fetched_page& page) {
    std::string body = decode_body(page);
    std::string_view head = trim(body);
    bool looks_json = !head.empty() && (head.front() == '{' || head.front() == '[' ||
                                        head.front() == '"');
    if (contains_ci(page.content_type, "json") || looks_json) {
        nlohmann::json payload = nlohmann::json::parse(body, nullptr, false);
        if (!payload.is_discarded()) {
            std::string html;
            collect_html_fragments(payload, html);
            return html_document::parse(html);
        }
    }
    return html_document::parse(body);
}

std::vector<article_link> extract_article_links(const html_document& doc,
                                                const site_descriptor& desc,
                                                const std::string& page_url,
                                                int* rejected) {
    css_selector link_sel = compile_selector(desc.article_link_selector);
    css_selector date_sel = compile_selector(desc.date_selector);
    std::vector<int> nodes = select_all(doc, link_sel);
    std::vector<int> page_dates = select_all(doc, date_sel);

    int reject_count = 0;
    std::vector<article_link> out;
    std::set<std::string> seen;
    for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
        int id = nodes[idx];
        int a = anchor_node(doc, id);
        std::optional<std::string> href = a >= 0 ? doc.attr(a, "href") : std::nullopt;
        if (!href || trim(*href).empty()) {
            ++reject_count;
            continue;
        }
        std::string url = resolve_url(page_url, std::string(trim(*href)));
        url_parts parts = parse_url(url);
        if (!parts.valid || (parts.scheme != "http" && parts.scheme != "https")) {
            ++reject_count;
            continue;
        }
        url = parts.str();
        if (!seen.insert(url).second) continue;

        auto date = find_link_date(doc, id, date_sel, desc.date_formats, page_dates,
                                   idx, nodes.size());
        if (!date) {
            ++reject_count;
            continue;
        }
        if (desc.min_date && *date < *desc.min_date) continue;
        if (desc.max_date && *desc.max_date < *date) continue;

        out.push_back({url, *date, doc.normalized_text(id)});
    }
    if (rejected) *rejected += reject_count;
    return out;
}

std::vector<std::string> enumerate_subpages(const site_descriptor& desc,
                                            page_fetcher& fetcher) {
    if (!desc.scraping_permitted)
        fail(errc::permission_denied,
             desc.school_id + ": scraping_permitted is false");
    validate(desc);

    switch (desc.strategy) {
    case pagination_strategy::nav_bar_max: return navbar_pages(desc, fetcher);
    case pagination_strategy::url_template:
        return template_pages(desc, fetcher, desc.page_url_template, 1, {});
    case pagination_strategy::second_page_probe: return probe_pages(desc, fetcher);
    case pagination_strategy::backend_api: return api_pages(desc, fetcher);
    }
    fail(errc::config_error, "unknown strategy");
}

} // namespace newsbias
