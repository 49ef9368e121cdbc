#include "newsbias/article.hpp"

namespace newsbias {

std::string to_string(source_kind kind) {
    switch (kind) {
    case source_kind::text: return "Text";
    case source_kind::pdf: return "Pdf";
    case source_kind::js_rendered: return "JsRendered";
    }
    return "Text";
}

std::optional<source_kind> source_kind_from(std::string_view name) {
    if (name == "Text") return source_kind::text;
    if (name == "Pdf") return source_kind::pdf;
    if (name == "JsRendered") return source_kind::js_rendered;
    return std::nullopt;
}

} // namespace newsbias
