#pragma once

#include "newsbias/article.hpp"
#include "newsbias/fetcher.hpp"
#include "newsbias/site_config.hpp"

#include <string>

namespace newsbias {

/// Pdf on a PDF content type or magic bytes; JsRendered when the body
/// selector finds no text but a script-mounted application root is
/// present; Text otherwise. Never throws.
source_kind classify_source(const fetched_page& page, const site_descriptor& desc);

/// Selector-driven extraction: title and body text with inline markup
/// stripped, entities decoded, lines whitespace-normalized and paragraph
/// boundaries kept as blank lines. Watermarks stay in.
/// The caller fills in the date; school, url and fetched_at come from the
/// inputs. Throws error(errc::extraction_empty) when nothing is found.
article_record extract_text(const fetched_page& page, const site_descriptor& desc);

/// Removes configured header patterns from the start of the body and
/// footer patterns from the end, repeatedly until none match. Patterns
/// are literal; a "re:" prefix switches to anchored ECMAScript regex.
std::string trim_watermarks(const std::string& body, const watermark_rule_set& rules);

/// Decodes page bytes to UTF-8 using the declared charset; latin-1 and
/// windows-1252 are transcoded, anything else is sanitized in place.
std::string decode_body(const fetched_page& page);

} // namespace newsbias
