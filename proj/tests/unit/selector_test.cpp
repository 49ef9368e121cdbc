#include "newsbias/errors.hpp"
#include "newsbias/selector.hpp"

#include "doctest.h"

using namespace newsbias;

namespace {

const char* kPage = R"(
<html><body>
  <div id="content">
    <article class="post featured" data-id="1">
      <h2><a href="/a1">One</a></h2>
      <span class="date">2020-01-01</span>
    </article>
    <article class="post" data-id="2">
      <h2><a href="/a2">Two</a></h2>
      <span class="date">2020-01-02</span>
    </article>
    <aside><a href="/ignore">sidebar</a></aside>
  </div>
  <ul class="pager">
    <li><a href="?page=1">1</a></li>
    <li><a href="?page=2">2</a></li>
    <li><a href="?page=3">3</a></li>
  </ul>
</body></html>
)";

std::vector<int> run(const html_document& doc, const char* sel, int scope = 0) {
    return select_all(doc, compile_selector(sel), scope);
}

} // namespace

TEST_SUITE("selector") {

TEST_CASE("tag class id and attribute selectors") {
    auto doc = html_document::parse(kPage);
    CHECK(run(doc, "article").size() == 2);
    CHECK(run(doc, ".post").size() == 2);
    CHECK(run(doc, ".post.featured").size() == 1);
    CHECK(run(doc, "#content").size() == 1);
    CHECK(run(doc, "article[data-id]").size() == 2);
    CHECK(run(doc, "article[data-id=2]").size() == 1);
    CHECK(run(doc, "a[href^=\"/a\"]").size() == 2);
    CHECK(run(doc, "a[href$=\"2\"]").size() == 2);  // /a2 and ?page=2
    CHECK(run(doc, "a[href*=page]").size() == 3);
    CHECK(run(doc, "*").size() > 10);
}

TEST_CASE("combinators") {
    auto doc = html_document::parse(kPage);
    CHECK(run(doc, "article a").size() == 2);
    CHECK(run(doc, "article > h2").size() == 2);
    CHECK(run(doc, "article > a").empty());
    CHECK(run(doc, "#content article .date").size() == 2);
}

TEST_CASE("selector lists union in document order") {
    auto doc = html_document::parse(kPage);
    auto ids = run(doc, "h2 a, aside a");
    CHECK(ids.size() == 3);
    // document order means the aside link comes last
    CHECK(ids.back() == run(doc, "aside a").front());
}

TEST_CASE("pseudo classes") {
    auto doc = html_document::parse(kPage);
    CHECK(run(doc, ".pager li:first-child").size() == 1);
    CHECK(run(doc, ".pager li:last-child").size() == 1);
    auto second = run(doc, ".pager li:nth-child(2) a");
    REQUIRE(second.size() == 1);
    CHECK(doc.attr(second[0], "href") == std::string("?page=2"));
}

TEST_CASE("scope restricts matches and excludes the scope node") {
    auto doc = html_document::parse(kPage);
    auto articles = run(doc, "article");
    REQUIRE(articles.size() == 2);
    CHECK(run(doc, "a", articles[0]).size() == 1);
    CHECK(run(doc, "article", articles[0]).empty());
}

TEST_CASE("select_first returns the earliest match or -1") {
    auto doc = html_document::parse(kPage);
    int first = select_first(doc, compile_selector("article"));
    CHECK(first == run(doc, "article").front());
    CHECK(select_first(doc, compile_selector("video")) == -1);
}

TEST_CASE("matches tests one node") {
    auto doc = html_document::parse(kPage);
    int art = run(doc, "article").front();
    CHECK(matches(doc, art, compile_selector(".post")));
    CHECK_FALSE(matches(doc, art, compile_selector(".pager")));
}

TEST_CASE("unsupported syntax raises config errors") {
    CHECK_THROWS_AS(compile_selector("a ~ b"), error);
    CHECK_THROWS_AS(compile_selector("a:hover"), error);
    CHECK_THROWS_AS(compile_selector(""), error);
    try {
        compile_selector("p::before");
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::config_error);
    }
}

} // TEST_SUITE
