#include "newsbias/selector.hpp"

#include "newsbias/errors.hpp"
#include "newsbias/strings.hpp"

namespace newsbias {

namespace {

bool is_ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '-' || c == '_';
}

struct selector_parser {
    std::string_view s;
    std::size_t i = 0;

    [[noreturn]] void bail(const std::string& msg) {
        fail(errc::config_error, "selector '" + std::string(s) + "': " + msg);
    }

    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }

    std::string ident() {
        std::size_t start = i;
        while (!done() && is_ident_char(s[i])) ++i;
        if (i == start) bail("expected identifier at offset " + std::to_string(i));
        return std::string(s.substr(start, i - start));
    }

    void parse_attr(css_selector::compound& c) {
        ++i;  // '['
        while (!done() && is_space(peek())) ++i;
        css_selector::attr_test test;
        test.name = to_lower(ident());
        while (!done() && is_space(peek())) ++i;
        if (done()) bail("unterminated attribute selector");
        if (peek() == ']') {
            ++i;
            c.attrs.push_back(std::move(test));
            return;
        }
        char op = peek();
        if (op == '^' || op == '$' || op == '*') {
            test.op = op;
            ++i;
            if (done() || peek() != '=') bail("expected '=' after attribute operator");
            ++i;
        } else if (op == '=') {
            test.op = '=';
            ++i;
        } else {
            bail("unsupported attribute operator");
        }
        while (!done() && is_space(peek())) ++i;
        if (!done() && (peek() == '"' || peek() == '\'')) {
            char q = peek();
            ++i;
            std::size_t start = i;
            while (!done() && peek() != q) ++i;
            if (done()) bail("unterminated quoted attribute value");
            test.value = std::string(s.substr(start, i - start));
            ++i;
        } else {
            std::size_t start = i;
            while (!done() && peek() != ']' && !is_space(peek())) ++i;
            test.value = std::string(s.substr(start, i - start));
        }
        while (!done() && is_space(peek())) ++i;
        if (done() || peek() != ']') bail("expected ']'");
        ++i;
        c.attrs.push_back(std::move(test));
    }

    void parse_pseudo(css_selector::compound& c) {
        ++i;  // ':'
        std::string name = to_lower(ident());
        if (name == "first-child") {
            c.first_child = true;
        } else if (name == "last-child") {
            c.last_child = true;
        } else if (name == "nth-child") {
            if (done() || peek() != '(') bail("nth-child needs an argument");
            ++i;
            std::size_t start = i;
            while (!done() && peek() != ')') ++i;
            if (done()) bail("unterminated nth-child");
            auto arg = trim(s.substr(start, i - start));
            ++i;
            int value = 0;
            for (char ch : arg) {
                if (ch < '0' || ch > '9') bail("only integer nth-child arguments are supported");
                value = value * 10 + (ch - '0');
            }
            if (value <= 0) bail("nth-child argument must be positive");
            c.nth_child = value;
        } else {
            bail("unsupported pseudo-class ':" + name + "'");
        }
    }

    css_selector::compound parse_compound() {
        css_selector::compound c;
        bool any = false;
        if (!done() && (is_ident_char(peek()) || peek() == '*')) {
            if (peek() == '*') {
                ++i;
            } else {
                c.tag = to_lower(ident());
            }
            any = true;
        }
        while (!done()) {
            char ch = peek();
            if (ch == '#') {
                ++i;
                c.id = ident();
                any = true;
            } else if (ch == '.') {
                ++i;
                c.classes.push_back(ident());
                any = true;
            } else if (ch == '[') {
                parse_attr(c);
                any = true;
            } else if (ch == ':') {
                parse_pseudo(c);
                any = true;
            } else {
                break;
            }
        }
        if (!any) bail("empty simple selector at offset " + std::to_string(i));
        return c;
    }

    std::vector<css_selector::complex_part> parse_complex() {
        std::vector<css_selector::complex_part> parts;
        char pending = ' ';
        bool expect_compound = true;
        while (true) {
            while (!done() && is_space(peek())) ++i;
            if (done() || peek() == ',') break;
            if (peek() == '>') {
                if (expect_compound && parts.empty()) bail("selector cannot start with '>'");
                pending = '>';
                ++i;
                expect_compound = true;
                continue;
            }
            css_selector::complex_part part;
            part.combinator = pending;
            part.simple = parse_compound();
            parts.push_back(std::move(part));
            pending = ' ';
            expect_compound = false;
        }
        if (parts.empty()) bail("empty selector");
        if (expect_compound && parts.size() > 0 && pending == '>')
            bail("dangling '>' combinator");
        return parts;
    }
};

bool compound_matches(const html_document& doc, int id,
                      const css_selector::compound& c) {
    const html_node& n = doc.node(id);
    if (n.kind != node_kind::element) return false;
    if (!c.tag.empty() && n.tag != c.tag) return false;
    if (!c.id.empty()) {
        auto idattr = doc.attr(id, "id");
        if (!idattr || *idattr != c.id) return false;
    }
    for (const std::string& cls : c.classes)
        if (!doc.has_class(id, cls)) return false;
    for (const auto& test : c.attrs) {
        auto v = doc.attr(id, test.name);
        if (!v) return false;
        switch (test.op) {
        case 0: break;
        case '=': if (*v != test.value) return false; break;
        case '^':
            if (v->size() < test.value.size() ||
                v->compare(0, test.value.size(), test.value) != 0)
                return false;
            break;
        case '$':
            if (v->size() < test.value.size() ||
                v->compare(v->size() - test.value.size(), test.value.size(),
                           test.value) != 0)
                return false;
            break;
        case '*':
            if (v->find(test.value) == std::string::npos) return false;
            break;
        }
    }
    if (c.first_child && doc.element_sibling_index(id) != 1) return false;
    if (c.last_child &&
        doc.element_sibling_index(id) != doc.element_sibling_count(id))
        return false;
    if (c.nth_child > 0 && doc.element_sibling_index(id) != c.nth_child)
        return false;
    return true;
}

// Matches one complex selector right-to-left from element `id`; ancestors
// must stay inside `scope` (exclusive).
bool complex_matches(const html_document& doc, int id,
                     const std::vector<css_selector::complex_part>& parts,
                     int scope) {
    if (parts.empty()) return false;
    if (!compound_matches(doc, id, parts.back().simple)) return false;
    int cursor = id;
    for (std::size_t k = parts.size(); k-- > 1;) {
        char comb = parts[k].combinator;
        const auto& target = parts[k - 1].simple;
        if (comb == '>') {
            int parent = doc.node(cursor).parent;
            if (parent < 0 || parent == scope) return false;
            if (!compound_matches(doc, parent, target)) return false;
            cursor = parent;
        } else {
            int anc = doc.node(cursor).parent;
            bool found = false;
            while (anc >= 0 && anc != scope) {
                if (compound_matches(doc, anc, target)) {
                    found = true;
                    break;
                }
                anc = doc.node(anc).parent;
            }
            if (!found) return false;
            cursor = anc;
        }
    }
    return true;
}

} // namespace

css_selector compile_selector(std::string_view text) {
    auto trimmed = trim(text);
    if (trimmed.empty()) fail(errc::config_error, "empty selector");
    selector_parser parser{trimmed};
    css_selector out;
    out.source = std::string(trimmed);
    while (true) {
        out.alternatives.push_back(parser.parse_complex());
        while (!parser.done() && is_space(parser.peek())) ++parser.i;
        if (parser.done()) break;
        if (parser.peek() != ',') parser.bail("unexpected character");
        ++parser.i;
    }
    return out;
}

bool matches(const html_document& doc, int id, const css_selector& sel) {
    for (const auto& alt : sel.alternatives)
        if (complex_matches(doc, id, alt, /*scope=*/-1)) return true;
    return false;
}

std::vector<int> select_all(const html_document& doc, const css_selector& sel,
                            int scope) {
    std::vector<int> out;
    for (int el : doc.elements(scope)) {
        for (const auto& alt : sel.alternatives) {
            if (complex_matches(doc, el, alt, scope)) {
                out.push_back(el);
                break;
            }
        }
    }
    return out;
}

int select_first(const html_document& doc, const css_selector& sel, int scope) {
    for (int el : doc.elements(scope)) {
        for (const auto& alt : sel.alternatives)
            if (complex_matches(doc, el, alt, scope)) return el;
    }
    return -1;
}

} // namespace newsbias
