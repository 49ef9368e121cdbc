#pragma once

#include "newsbias/fetcher.hpp"
#include "newsbias/html.hpp"
#include "newsbias/site_config.hpp"

#include <string>
#include <vector>

namespace newsbias {

struct article_link {
    std::string url;  // absolute
    civil_date date{};
    std::string text;  // anchor text, used as a title fallback
};

/// All paginated listing URLs for the site, per its strategy. Fetches
/// whatever pages the strategy needs (nav bar, probes, terminators).
/// Throws PermissionDenied when scraping_permitted is false, before any
/// network activity.
std::vector<std::string> enumerate_subpages(const site_descriptor& desc,
                                            page_fetcher& fetcher);

/// Parses a listing page body; BackendApi JSON payloads are unwrapped by
/// concatenating embedded HTML fragment strings first.
html_document parse_subpage(const fetched_page& page);

/// Dated article links found on one listing page. Links without a
/// parseable date are skipped and counted in *rejected; links dated
/// outside [min_date, max_date] are dropped silently.
std::vector<article_link> extract_article_links(const html_document& doc,
                                                const site_descriptor& desc,
                                                const std::string& page_url,
                                                int* rejected = nullptr);

/// Template inference helper: replaces the digit run equal to `page_no`
/// in `url` (the last standalone occurrence) with {page}. Empty on failure.
std::string infer_page_template(const std::string& url, int page_no);

std::string expand_page_template(const std::string& tmpl, int page);

} // namespace newsbias
