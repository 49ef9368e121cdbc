#pragma once

#include "newsbias/dates.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace newsbias {

enum class source_kind { text, pdf, js_rendered };

std::string to_string(source_kind kind);
std::optional<source_kind> source_kind_from(std::string_view name);

/// One archived article. `text` keeps the original body, watermarks and
/// all; trimming happens at analysis time.
struct article_record {
    std::string school;
    std::string url;
    civil_date date{};
    std::string title;
    std::string text;   // paragraphs separated by blank lines
    source_kind kind = source_kind::text;
    std::string fetched_at;
    bool encoding_flagged = false;
};

} // namespace newsbias
