#include "newsbias/strings.hpp"

#include "doctest.h"

using namespace newsbias;

TEST_SUITE("strings") {

TEST_CASE("trim strips ascii whitespace from both ends") {
    CHECK(trim("  hello \t\n") == "hello");
    CHECK(trim("") == "");
    CHECK(trim(" \r\n\t ") == "");
    CHECK(trim("x") == "x");
}

TEST_CASE("to_lower touches ascii letters only") {
    CHECK(to_lower("MiXeD 123!") == "mixed 123!");
    CHECK(to_lower("caf\xc3\xa9") == "caf\xc3\xa9");
}

TEST_CASE("normalize_whitespace collapses runs") {
    CHECK(normalize_whitespace("  a \t b\n\nc ") == "a b c");
    CHECK(normalize_whitespace("") == "");
    CHECK(normalize_whitespace("one") == "one");
}

TEST_CASE("split on separator keeps empty fields") {
    CHECK(split("a,b,,c", ',') == std::vector<std::string>{"a", "b", "", "c"});
    CHECK(split("", ',') == std::vector<std::string>{""});
}

TEST_CASE("split_whitespace drops empties") {
    CHECK(split_whitespace("  one\ttwo \n three ") ==
          std::vector<std::string>{"one", "two", "three"});
    CHECK(split_whitespace("   ").empty());
}

TEST_CASE("split_paragraphs breaks on blank lines") {
    auto paras = split_paragraphs("first para\nstill first\n\nsecond\n\n\n third ");
    REQUIRE(paras.size() == 3);
    CHECK(paras[0] == "first para\nstill first");
    CHECK(paras[1] == "second");
    CHECK(paras[2] == "third");
}

TEST_CASE("split_paragraphs trims and drops empty blocks") {
    auto paras = split_paragraphs("\n\n  \n\nonly\n\n");
    REQUIRE(paras.size() == 1);
    CHECK(paras[0] == "only");
}

TEST_CASE("join round-trips split") {
    CHECK(join({"a", "b", "c"}, ", ") == "a, b, c");
    CHECK(join({}, ",") == "");
    CHECK(join({"solo"}, ",") == "solo");
}

TEST_CASE("contains_ci and equals_ci") {
    CHECK(contains_ci("The Quick Fox", "quick"));
    CHECK_FALSE(contains_ci("abc", "abcd"));
    CHECK(equals_ci("NeXt", "next"));
    CHECK_FALSE(equals_ci("next", "nex"));
}

// Published FNV-1a 64 test vectors.
TEST_CASE("fnv1a64 matches known vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("valid_utf8 accepts multibyte and rejects stray continuation") {
    CHECK(valid_utf8("plain ascii"));
    CHECK(valid_utf8("caf\xc3\xa9"));
    CHECK(valid_utf8("\xe2\x82\xac"));  // euro sign
    CHECK_FALSE(valid_utf8("\xe9"));    // latin-1 e-acute on its own
    CHECK_FALSE(valid_utf8("\xc3"));    // truncated sequence
    CHECK_FALSE(valid_utf8("\xc0\xaf"));  // overlong
}

TEST_CASE("sanitize_utf8 replaces bad bytes with U+FFFD") {
    CHECK(sanitize_utf8("fine") == "fine");
    CHECK(sanitize_utf8("caf\xe9 bar") == "caf\xef\xbf\xbd bar");
    CHECK(valid_utf8(sanitize_utf8("\xff\xfe\xc3")));
}

TEST_CASE("latin1_to_utf8 transcodes iso-8859-1 and cp1252 punctuation") {
    CHECK(latin1_to_utf8("caf\xe9") == "caf\xc3\xa9");
    // 0x93/0x94 are cp1252 curly quotes
    CHECK(latin1_to_utf8("\x93hi\x94") == "\xe2\x80\x9chi\xe2\x80\x9d");
    CHECK(latin1_to_utf8("ascii") == "ascii");
}

} // TEST_SUITE
