#pragma once

#include "newsbias/html.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace newsbias {

/// Compiled CSS selector. Supported grammar:
///   tag, #id, .class, [attr], [attr=v], [attr^=v], [attr$=v], [attr*=v]
///   :first-child, :last-child, :nth-child(n)
///   descendant (whitespace) and child (>) combinators
///   comma-separated selector lists
struct css_selector {
    struct attr_test {
        std::string name;
        char op = 0;  // 0 presence, '=', '^', '$', '*'
        std::string value;
    };
    struct compound {
        std::string tag;  // empty or "*" matches any
        std::string id;
        std::vector<std::string> classes;
        std::vector<attr_test> attrs;
        bool first_child = false;
        bool last_child = false;
        int nth_child = 0;  // 0 = unset
    };
    struct complex_part {
        char combinator = ' ';  // ' ' descendant, '>' child; first part ignores it
        compound simple;
    };
    std::vector<std::vector<complex_part>> alternatives;

    std::string source;
};

/// Throws error(errc::config_error) on syntax the engine does not support.
css_selector compile_selector(std::string_view text);

/// Matching elements in document order, restricted to descendants of
/// `scope` (the scope element itself is never returned).
std::vector<int> select_all(const html_document& doc, const css_selector& sel,
                            int scope = 0);
int select_first(const html_document& doc, const css_selector& sel, int scope = 0);

bool matches(const html_document& doc, int id, const css_selector& sel);

} // namespace newsbias
