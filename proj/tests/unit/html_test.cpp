#include "newsbias/html.hpp"

#include "doctest.h"

using namespace newsbias;

namespace {

// First element with the given tag, depth-first.
int find_tag(const html_document& doc, const std::string& tag) {
    for (int id : doc.elements())
        if (doc.node(id).tag == tag) return id;
    return -1;
}

} // namespace

TEST_SUITE("html") {

TEST_CASE("parse builds a tree with attributes") {
    auto doc = html_document::parse(
        "<html><body><div id=\"main\" class=\"a b\"><p>Hi</p></div></body></html>");
    int div = find_tag(doc, "div");
    REQUIRE(div >= 0);
    CHECK(doc.attr(div, "id") == std::string("main"));
    CHECK(doc.has_class(div, "a"));
    CHECK(doc.has_class(div, "b"));
    CHECK_FALSE(doc.has_class(div, "ab"));
    int p = find_tag(doc, "p");
    REQUIRE(p >= 0);
    CHECK(doc.node(p).parent == div);
}

TEST_CASE("unquoted and single-quoted attributes parse") {
    auto doc = html_document::parse("<a href=page2.html title='Two'>2</a>");
    int a = find_tag(doc, "a");
    REQUIRE(a >= 0);
    CHECK(doc.attr(a, "href") == std::string("page2.html"));
    CHECK(doc.attr(a, "title") == std::string("Two"));
    CHECK_FALSE(doc.attr(a, "missing").has_value());
}

TEST_CASE("entities decode in text and attributes") {
    auto doc = html_document::parse("<p title=\"A &amp; B\">x &lt; y &#38; z &uuml;</p>");
    int p = find_tag(doc, "p");
    REQUIRE(p >= 0);
    CHECK(doc.attr(p, "title") == std::string("A & B"));
    CHECK(doc.text_content(p) == "x < y & z \xc3\xbc");
}

TEST_CASE("void elements do not swallow siblings") {
    auto doc = html_document::parse("<p>one<br>two<img src=x>three</p>");
    int p = find_tag(doc, "p");
    // br yields a line break; img is inline and contributes nothing
    CHECK(doc.normalized_text(p) == "one twothree");
    // "three" must be a sibling of the img, not its child
    int img = find_tag(doc, "img");
    REQUIRE(img >= 0);
    CHECK(doc.node(img).children.empty());
    CHECK(doc.node(p).children.size() == 5);
}

TEST_CASE("unclosed tags recover") {
    auto doc = html_document::parse("<ul><li>one<li>two<li>three</ul><p>after</p>");
    int ul = find_tag(doc, "ul");
    REQUIRE(ul >= 0);
    int lis = 0;
    for (int id : doc.elements(ul))
        if (doc.node(id).tag == "li") ++lis;
    CHECK(lis == 3);
    int p = find_tag(doc, "p");
    REQUIRE(p >= 0);
    CHECK(doc.node(doc.node(p).parent).tag != "li");
}

TEST_CASE("script and style bodies stay out of text") {
    auto doc = html_document::parse(
        "<body><script>var x = '<p>not text</p>';</script><style>p{}</style>"
        "<p>real</p></body>");
    int body = find_tag(doc, "body");
    CHECK(doc.normalized_text(body) == "real");
}

TEST_CASE("comments and doctype are skipped") {
    auto doc = html_document::parse(
        "<!DOCTYPE html><!-- note --><p>a<!-- inner -->b</p>");
    int p = find_tag(doc, "p");
    CHECK(doc.text_content(p) == "ab");
}

TEST_CASE("paragraphs split at block boundaries") {
    auto doc = html_document::parse(
        "<article><p> First  one </p><div>Second</div>inline tail</article>");
    int art = find_tag(doc, "article");
    auto paras = doc.paragraphs(art);
    REQUIRE(paras.size() == 3);
    CHECK(paras[0] == "First one");
    CHECK(paras[1] == "Second");
    CHECK(paras[2] == "inline tail");
}

TEST_CASE("br keeps text in one paragraph") {
    auto doc = html_document::parse("<p>line one<br>line two</p>");
    int p = find_tag(doc, "p");
    auto paras = doc.paragraphs(p);
    REQUIRE(paras.size() == 1);
    CHECK(paras[0] == "line one\nline two");
}

TEST_CASE("sibling indexes are 1-based over elements") {
    auto doc = html_document::parse("<ul><li>a</li>text<li>b</li><li>c</li></ul>");
    int ul = find_tag(doc, "ul");
    std::vector<int> lis;
    for (int id : doc.elements(ul))
        if (doc.node(id).tag == "li") lis.push_back(id);
    REQUIRE(lis.size() == 3);
    CHECK(doc.element_sibling_index(lis[0]) == 1);
    CHECK(doc.element_sibling_index(lis[1]) == 2);
    CHECK(doc.element_sibling_index(lis[2]) == 3);
    CHECK(doc.element_sibling_count(lis[1]) == 3);
}

TEST_CASE("is_block_element and is_void_element") {
    CHECK(is_block_element("div"));
    CHECK(is_block_element("p"));
    CHECK_FALSE(is_block_element("span"));
    CHECK(is_void_element("br"));
    CHECK(is_void_element("img"));
    CHECK_FALSE(is_void_element("div"));
}

TEST_CASE("decode_entities handles named numeric and hex") {
    CHECK(decode_entities("&amp;&lt;&gt;&quot;&#39;") == "&<>\"'");
    CHECK(decode_entities("&#x20AC;") == "\xe2\x82\xac");
    CHECK(decode_entities("&nbsp;") == "\xc2\xa0");
    CHECK(decode_entities("no entities") == "no entities");
    CHECK(decode_entities("&bogus;") == "&bogus;");
}

} // TEST_SUITE
