#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace newsbias {

enum class node_kind { document, element, text };

struct html_node {
    node_kind kind = node_kind::text;
    std::string tag;  // elements only, lower-case
    std::vector<std::pair<std::string, std::string>> attrs;
    std::string text;  // text nodes only, entity-decoded
    int parent = -1;
    std::vector<int> children;
};

/// Tolerant HTML parser producing an arena-backed tree. Handles unclosed
/// tags, void elements, attribute quoting variants, comments, CDATA and
/// raw-text elements (script/style). Not a full HTML5 tree builder; it
/// covers the markup found on the archive sites this pipeline targets.
class html_document {
public:
    static html_document parse(std::string_view html);

    int root() const { return 0; }
    const html_node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
    int size() const { return static_cast<int>(nodes_.size()); }

    std::optional<std::string> attr(int id, std::string_view name) const;
    bool has_class(int id, std::string_view cls) const;

    /// Concatenated descendant text (entity-decoded, raw spacing).
    std::string text_content(int id) const;

    /// Text with whitespace collapsed, block boundaries as single spaces.
    std::string normalized_text(int id) const;

    /// Visible text split at block-element boundaries; each paragraph is
    /// whitespace-normalized and non-empty. <br> becomes a line break
    /// inside a paragraph.
    std::vector<std::string> paragraphs(int id) const;

    /// Elements in document order, optionally restricted to descendants
    /// of `scope`.
    std::vector<int> elements(int scope = 0) const;

    /// 1-based position of an element among its element siblings.
    int element_sibling_index(int id) const;
    int element_sibling_count(int id) const;

private:
    std::vector<html_node> nodes_;
    friend class html_builder;
};

std::string decode_entities(std::string_view text);
bool is_block_element(std::string_view tag);
bool is_void_element(std::string_view tag);

} // namespace newsbias
