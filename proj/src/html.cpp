#include "newsbias/html.hpp"

#include "newsbias/strings.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace newsbias {

namespace {

const char* kVoidElements[] = {"area", "base",  "br",    "col",  "embed",
                               "hr",   "img",   "input", "link", "meta",
                               "param", "source", "track", "wbr"};

const char* kBlockElements[] = {
    "address", "article", "aside",  "blockquote", "dd",     "div",
    "dl",      "dt",      "fieldset", "figcaption", "figure", "footer",
    "form",    "h1",      "h2",     "h3",         "h4",     "h5",
    "h6",      "header",  "hr",     "li",         "main",   "nav",
    "ol",      "p",       "pre",    "section",    "table",  "tbody",
    "td",      "tfoot",   "th",     "thead",      "tr",     "ul"};

const char* kRawTextElements[] = {"script", "style"};

bool in_list(std::string_view tag, const char* const* list, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (tag == list[i]) return true;
    return false;
}

bool is_raw_text_element(std::string_view tag) {
    return in_list(tag, kRawTextElements, std::size(kRawTextElements));
}

// <p> implicitly closes when one of these opens inside it.
bool closes_p(std::string_view tag) {
    return is_block_element(tag);
}

const std::unordered_map<std::string_view, std::uint32_t>& named_entities() {
    static const std::unordered_map<std::string_view, std::uint32_t> table = {
        {"amp", '&'},      {"lt", '<'},       {"gt", '>'},      {"quot", '"'},
        {"apos", '\''},    {"nbsp", 0xA0},    {"ndash", 0x2013}, {"mdash", 0x2014},
        {"lsquo", 0x2018}, {"rsquo", 0x2019}, {"ldquo", 0x201C}, {"rdquo", 0x201D},
        {"hellip", 0x2026}, {"copy", 0xA9},   {"reg", 0xAE},     {"trade", 0x2122},
        {"deg", 0xB0},     {"middot", 0xB7},  {"laquo", 0xAB},   {"raquo", 0xBB},
        {"sect", 0xA7},    {"para", 0xB6},    {"bull", 0x2022},  {"dagger", 0x2020},
        {"eacute", 0xE9},  {"egrave", 0xE8},  {"agrave", 0xE0},  {"ccedil", 0xE7},
        {"ouml", 0xF6},    {"uuml", 0xFC},    {"auml", 0xE4},    {"ntilde", 0xF1},
        {"szlig", 0xDF},   {"pound", 0xA3},   {"euro", 0x20AC},  {"cent", 0xA2},
        {"times", 0xD7},   {"divide", 0xF7},  {"frac12", 0xBD},  {"shy", 0xAD},
    };
    return table;
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

} // namespace

bool is_void_element(std::string_view tag) {
    return in_list(tag, kVoidElements, std::size(kVoidElements));
}

bool is_block_element(std::string_view tag) {
    return in_list(tag, kBlockElements, std::size(kBlockElements));
}

std::string decode_entities(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c != '&') {
            out.push_back(c);
            ++i;
            continue;
        }
        std::size_t semi = text.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 12) {
            out.push_back(c);
            ++i;
            continue;
        }
        std::string_view body = text.substr(i + 1, semi - i - 1);
        if (!body.empty() && body[0] == '#') {
            std::uint32_t cp = 0;
            bool ok = body.size() > 1;
            if (body.size() > 2 && (body[1] == 'x' || body[1] == 'X')) {
                for (std::size_t k = 2; k < body.size() && ok; ++k) {
                    char h = ascii_lower(body[k]);
                    if (h >= '0' && h <= '9') cp = cp * 16 + (h - '0');
                    else if (h >= 'a' && h <= 'f') cp = cp * 16 + (h - 'a' + 10);
                    else ok = false;
                }
            } else {
                for (std::size_t k = 1; k < body.size() && ok; ++k) {
                    if (body[k] >= '0' && body[k] <= '9') cp = cp * 10 + (body[k] - '0');
                    else ok = false;
                }
            }
            if (ok) {
                append_utf8(out, cp);
                i = semi + 1;
                continue;
            }
        } else {
            auto it = named_entities().find(body);
            if (it != named_entities().end()) {
                append_utf8(out, it->second);
                i = semi + 1;
                continue;
            }
        }
        out.push_back(c);  // unknown entity left verbatim
        ++i;
    }
    return out;
}

class html_builder {
public:
    explicit html_builder(std::string_view html) : html_(html) {
        doc_.nodes_.push_back(html_node{node_kind::document, "", {}, "", -1, {}});
        open_.push_back(0);
    }

    html_document build() {
        std::size_t i = 0;
        const std::size_t n = html_.size();
        while (i < n) {
            if (html_[i] != '<') {
                std::size_t next = html_.find('<', i);
                if (next == std::string_view::npos) next = n;
                add_text(html_.substr(i, next - i));
                i = next;
                continue;
            }
            if (html_.compare(i, 4, "<!--") == 0) {
                std::size_t end = html_.find("-->", i + 4);
                i = end == std::string_view::npos ? n : end + 3;
                continue;
            }
            if (i + 1 < n && (html_[i + 1] == '!' || html_[i + 1] == '?')) {
                std::size_t end = html_.find('>', i);
                i = end == std::string_view::npos ? n : end + 1;
                continue;
            }
            if (i + 1 < n && html_[i + 1] == '/') {
                std::size_t end = html_.find('>', i);
                if (end == std::string_view::npos) break;
                close_tag(to_lower(trim(html_.substr(i + 2, end - i - 2))));
                i = end + 1;
                continue;
            }
            if (i + 1 >= n || !isalpha_ascii(html_[i + 1])) {
                add_text(html_.substr(i, 1));  // stray '<'
                ++i;
                continue;
            }
            i = open_tag(i);
        }
        return std::move(doc_);
    }

private:
    static bool isalpha_ascii(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    }

    void add_text(std::string_view raw) {
        if (raw.empty()) return;
        int parent = open_.back();
        html_node node;
        node.kind = node_kind::text;
        node.text = decode_entities(raw);
        node.parent = parent;
        int id = static_cast<int>(doc_.nodes_.size());
        doc_.nodes_.push_back(std::move(node));
        doc_.nodes_[static_cast<std::size_t>(parent)].children.push_back(id);
    }

    void add_raw_text(std::string_view raw, int parent) {
        if (raw.empty()) return;
        html_node node;
        node.kind = node_kind::text;
        node.text = std::string(raw);
        node.parent = parent;
        int id = static_cast<int>(doc_.nodes_.size());
        doc_.nodes_.push_back(std::move(node));
        doc_.nodes_[static_cast<std::size_t>(parent)].children.push_back(id);
    }

    // Parses a start tag beginning at `i` (html_[i] == '<'); returns the
    // index just past the tag (and past raw-text content when applicable).
    std::size_t open_tag(std::size_t i) {
        const std::size_t n = html_.size();
        std::size_t p = i + 1;
        std::size_t name_start = p;
        while (p < n && (isalpha_ascii(html_[p]) || (html_[p] >= '0' && html_[p] <= '9')))
            ++p;
        std::string tag = to_lower(html_.substr(name_start, p - name_start));

        std::vector<std::pair<std::string, std::string>> attrs;
        bool self_closing = false;
        while (p < n && html_[p] != '>') {
            if (is_space(html_[p])) { ++p; continue; }
            if (html_[p] == '/') { self_closing = true; ++p; continue; }
            std::size_t as = p;
            while (p < n && html_[p] != '=' && html_[p] != '>' && html_[p] != '/' &&
                   !is_space(html_[p]))
                ++p;
            std::string name = to_lower(html_.substr(as, p - as));
            std::string value;
            while (p < n && is_space(html_[p])) ++p;
            if (p < n && html_[p] == '=') {
                ++p;
                while (p < n && is_space(html_[p])) ++p;
                if (p < n && (html_[p] == '"' || html_[p] == '\'')) {
                    char q = html_[p++];
                    std::size_t vs = p;
                    while (p < n && html_[p] != q) ++p;
                    value = decode_entities(html_.substr(vs, p - vs));
                    if (p < n) ++p;
                } else {
                    std::size_t vs = p;
                    while (p < n && html_[p] != '>' && !is_space(html_[p])) ++p;
                    value = decode_entities(html_.substr(vs, p - vs));
                }
            }
            if (!name.empty()) attrs.emplace_back(std::move(name), std::move(value));
        }
        std::size_t tag_end = p < n ? p + 1 : n;

        if (tag.empty()) return tag_end;

        // Implied end tags for sloppy markup.
        if (tag == "li" && current_tag() == "li") close_tag("li");
        if ((tag == "td" || tag == "th") &&
            (current_tag() == "td" || current_tag() == "th"))
            close_tag(std::string(current_tag()));
        if (tag == "tr" && current_tag() == "tr") close_tag("tr");
        if (closes_p(tag) && current_tag() == "p") close_tag("p");

        html_node node;
        node.kind = node_kind::element;
        node.tag = tag;
        node.attrs = std::move(attrs);
        node.parent = open_.back();
        int id = static_cast<int>(doc_.nodes_.size());
        doc_.nodes_.push_back(std::move(node));
        doc_.nodes_[static_cast<std::size_t>(open_.back())].children.push_back(id);

        if (self_closing || is_void_element(tag)) return tag_end;

        if (is_raw_text_element(tag)) {
            std::string closer = "</" + tag;
            std::size_t close_at = n;
            std::size_t search = tag_end;
            while (search < n) {
                std::size_t hit = html_.find('<', search);
                if (hit == std::string_view::npos) break;
                if (hit + closer.size() <= n &&
                    equals_ci(html_.substr(hit, closer.size()), closer)) {
                    close_at = hit;
                    break;
                }
                search = hit + 1;
            }
            add_raw_text(html_.substr(tag_end, close_at - tag_end), id);
            if (close_at == n) return n;
            std::size_t gt = html_.find('>', close_at);
            return gt == std::string_view::npos ? n : gt + 1;
        }

        open_.push_back(id);
        return tag_end;
    }

    std::string_view current_tag() const {
        int top = open_.back();
        if (top == 0) return {};
        return doc_.nodes_[static_cast<std::size_t>(top)].tag;
    }

    void close_tag(const std::string& tag) {
        if (tag.empty()) return;
        // Find the nearest open element with this tag; pop through it.
        for (std::size_t k = open_.size(); k-- > 1;) {
            if (doc_.nodes_[static_cast<std::size_t>(open_[k])].tag == tag) {
                open_.resize(k);
                return;
            }
        }
        // No matching open element: ignore the stray end tag.
    }

    std::string_view html_;
    html_document doc_;
    std::vector<int> open_;
};

html_document html_document::parse(std::string_view html) {
    return html_builder(html).build();
}

std::optional<std::string> html_document::attr(int id, std::string_view name) const {
    const html_node& n = node(id);
    for (const auto& [k, v] : n.attrs)
        if (k == name) return v;
    return std::nullopt;
}

bool html_document::has_class(int id, std::string_view cls) const {
    auto a = attr(id, "class");
    if (!a) return false;
    for (const std::string& part : split_whitespace(*a))
        if (part == cls) return true;
    return false;
}

std::string html_document::text_content(int id) const {
    std::string out;
    std::vector<int> stack{id};
    // Depth-first, left-to-right.
    std::vector<int> order;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        const html_node& n = node(cur);
        if (n.kind == node_kind::text) {
            order.push_back(cur);
            continue;
        }
        if (n.kind == node_kind::element && is_raw_text_element(n.tag) && cur != id)
            continue;
        for (auto it = n.children.rbegin(); it != n.children.rend(); ++it)
            stack.push_back(*it);
    }
    for (int t : order) out += node(t).text;
    return out;
}

namespace {

struct paragraph_sink {
    std::vector<std::string> paragraphs;
    std::string current;

    void text(std::string_view t) { current.append(t); }

    void line_break() {
        // Keep a marker; normalized later per line.
        current.push_back('\n');
    }

    void block_boundary() {
        flush();
    }

    void flush() {
        std::vector<std::string> lines;
        for (const std::string& line : split(current, '\n')) {
            std::string norm = normalize_whitespace(line);
            if (!norm.empty()) lines.push_back(std::move(norm));
        }
        if (!lines.empty()) paragraphs.push_back(join(lines, "\n"));
        current.clear();
    }
};

void collect_paragraphs(const html_document& doc, int id, paragraph_sink& sink) {
    const html_node& n = doc.node(id);
    if (n.kind == node_kind::text) {
        sink.text(n.text);
        return;
    }
    if (n.kind == node_kind::element) {
        if (is_raw_text_element(n.tag)) return;
        if (n.tag == "br") {
            sink.line_break();
            return;
        }
        if (is_block_element(n.tag)) sink.block_boundary();
    }
    for (int c : n.children) collect_paragraphs(doc, c, sink);
    if (n.kind == node_kind::element && is_block_element(n.tag))
        sink.block_boundary();
}

} // namespace

std::vector<std::string> html_document::paragraphs(int id) const {
    paragraph_sink sink;
    collect_paragraphs(*this, id, sink);
    sink.flush();
    return std::move(sink.paragraphs);
}

std::string html_document::normalized_text(int id) const {
    return normalize_whitespace(join(paragraphs(id), " "));
}

std::vector<int> html_document::elements(int scope) const {
    std::vector<int> out;
    std::vector<int> stack{scope};
    std::vector<int> order;
    while (!stack.empty()) {
        int cur = stack.back();
        stack.pop_back();
        if (cur != scope && node(cur).kind == node_kind::element) order.push_back(cur);
        const auto& children = node(cur).children;
        for (auto it = children.rbegin(); it != children.rend(); ++it)
            stack.push_back(*it);
    }
    return order;
}

int html_document::element_sibling_index(int id) const {
    const html_node& n = node(id);
    if (n.parent < 0) return 1;
    int idx = 0;
    for (int sib : node(n.parent).children) {
        if (node(sib).kind != node_kind::element) continue;
        ++idx;
        if (sib == id) return idx;
    }
    return idx;
}

int html_document::element_sibling_count(int id) const {
    const html_node& n = node(id);
    if (n.parent < 0) return 1;
    int count = 0;
    for (int sib : node(n.parent).children)
        if (node(sib).kind == node_kind::element) ++count;
    return count;
}

} // namespace newsbias
