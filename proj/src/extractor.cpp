#include "newsbias/extractor.hpp"

#include "newsbias/errors.hpp"
#include "newsbias/selector.hpp"
#include "newsbias/strings.hpp"

#include <regex>

namespace newsbias {

namespace {

bool latin1_family(const std::string& enc) {
    return enc == "iso-8859-1" || enc == "latin-1" || enc == "latin1" ||
           enc == "windows-1252" || enc == "cp1252";
}

bool pdf_content(const fetched_page& page) {
    if (contains_ci(page.content_type, "application/pdf")) return true;
    return page.body.rfind("%PDF-", 0) == 0;
}

// Empty mount points used by single-page applications.
bool has_js_root_marker(const html_document& doc) {
    static const char* kRootIds[] = {"root", "app", "__next", "___gatsby"};
    for (int id : doc.elements()) {
        const html_node& n = doc.node(id);
        if (auto v = doc.attr(id, "id")) {
            for (const char* marker : kRootIds)
                if (*v == marker && trim(doc.text_content(id)).empty()) return true;
        }
        if (doc.attr(id, "data-reactroot") || doc.attr(id, "ng-app")) return true;
        if (n.tag == "noscript" &&
            contains_ci(doc.text_content(id), "enable javascript"))
            return true;
    }
    return false;
}

std::string selected_body_text(const html_document& doc, const site_descriptor& desc,
                               std::vector<std::string>* paragraphs_out) {
    css_selector sel = compile_selector(desc.body_selector);
    std::vector<std::string> paragraphs;
    for (int id : select_all(doc, sel))
        for (auto& p : doc.paragraphs(id)) paragraphs.push_back(std::move(p));
    std::string joined = join(paragraphs, "\n\n");
    if (paragraphs_out) *paragraphs_out = std::move(paragraphs);
    return joined;
}

// Strips one leading watermark; returns true when something was removed.
bool strip_header(std::string& body, const std::string& pattern) {
    std::string_view t = trim(body);
    if (pattern.rfind("re:", 0) == 0) {
        std::regex re(pattern.substr(3));
        std::match_results<std::string_view::const_iterator> m;
        if (std::regex_search(t.begin(), t.end(), m, re,
                              std::regex_constants::match_continuous) &&
            m.length(0) > 0) {
            body = std::string(trim(t.substr(static_cast<std::size_t>(m.length(0)))));
            return true;
        }
        return false;
    }
    if (!pattern.empty() && t.substr(0, pattern.size()) == pattern) {
        body = std::string(trim(t.substr(pattern.size())));
        return true;
    }
    return false;
}

bool strip_footer(std::string& body, const std::string& pattern) {
    std::string_view t = trim(body);
    if (pattern.rfind("re:", 0) == 0) {
        std::regex re(pattern.substr(3));
        auto begin = std::regex_iterator<std::string_view::const_iterator>(
            t.begin(), t.end(), re);
        auto end = std::regex_iterator<std::string_view::const_iterator>();
        for (auto it = begin; it != end; ++it) {
            if (it->position(0) + it->length(0) ==
                    static_cast<std::ptrdiff_t>(t.size()) &&
                it->length(0) > 0) {
                body = std::string(
                    trim(t.substr(0, static_cast<std::size_t>(it->position(0)))));
                return true;
            }
        }
        return false;
    }
    if (!pattern.empty() && t.size() >= pattern.size() &&
        t.substr(t.size() - pattern.size()) == pattern) {
        body = std::string(trim(t.substr(0, t.size() - pattern.size())));
        return true;
    }
    return false;
}

} // namespace

std::string decode_body(const fetched_page& page) {
    if (latin1_family(page.encoding)) return latin1_to_utf8(page.body);
    return sanitize_utf8(page.body);
}

source_kind classify_source(const fetched_page& page, const site_descriptor& desc) {
    if (pdf_content(page)) return source_kind::pdf;
    html_document doc = html_document::parse(decode_body(page));
    std::string body;
    try {
        body = selected_body_text(doc, desc, nullptr);
    } catch (const error&) {
        body.clear();  // unsupported selector cannot prove Text
    }
    if (trim(body).empty() && has_js_root_marker(doc)) return source_kind::js_rendered;
    return source_kind::text;
}

article_record extract_text(const fetched_page& page, const site_descriptor& desc) {
    html_document doc = html_document::parse(decode_body(page));

    article_record rec;
    rec.school = desc.school_id;
    rec.url = page.url;
    rec.kind = source_kind::text;
    rec.fetched_at = page.fetched_at;
    rec.encoding_flagged = page.encoding_flagged;

    if (!desc.title_selector.empty()) {
        int node = select_first(doc, compile_selector(desc.title_selector));
        if (node >= 0) rec.title = doc.normalized_text(node);
    } else {
        int node = select_first(doc, compile_selector("title"));
        if (node >= 0) rec.title = doc.normalized_text(node);
    }

    rec.text = selected_body_text(doc, desc, nullptr);
    if (rec.text.empty())
        fail(errc::extraction_empty,
             page.url + ": selector '" + desc.body_selector + "' yielded no text");
    return rec;
}

std::string trim_watermarks(const std::string& body, const watermark_rule_set& rules) {
    std::string out(trim(body));
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : rules.header_patterns)
            while (strip_header(out, p)) changed = true;
        for (const auto& p : rules.footer_patterns)
            while (strip_footer(out, p)) changed = true;
    }
    return out;
}

} // namespace newsbias
