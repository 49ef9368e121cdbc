#include "newsbias/errors.hpp"
#include "newsbias/sentiment.hpp"

#include "doctest.h"
#include "json.hpp"
#include "test_helpers.hpp"

#include <cmath>
#include <fstream>
#include <random>

using namespace newsbias;
using doctest::Approx;

namespace {

// Minimal lexicon holding exactly the valences the hand traces below use.
sentiment_lexicon trace_lexicon() {
    sentiment_lexicon lex = builtin_rules();
    lex.valences = {
        {"good", 1.9},  {"bad", -2.5}, {"war", -2.9},  {"peace", 2.5},
        {"doubt", -1.5}, {"no", -1.2}, {"die", -2.9},  {"bomb", -2.6},
        {"hurt", -2.2}, {"kind", 2.4},
    };
    return lex;
}

sentiment_triple score(const std::string& s) {
    rule_sentiment engine(trace_lexicon());
    return engine.score(s);
}

void check_triple(const sentiment_triple& t, double pos, double neg, double neu,
                  double compound) {
    CHECK(t.pos == Approx(pos).epsilon(1e-9));
    CHECK(t.neg == Approx(neg).epsilon(1e-9));
    CHECK(t.neu == Approx(neu).epsilon(1e-9));
    CHECK(t.compound == Approx(compound).epsilon(1e-9));
    CHECK(t.pos + t.neg + t.neu == Approx(1.0).epsilon(1e-12));
}

} // namespace

TEST_SUITE("sentiment") {

TEST_CASE("tokens strip edge punctuation and drop empties") {
    CHECK(sentiment_tokens("Hello, world!") ==
          std::vector<std::string>{"Hello", "world"});
    CHECK(sentiment_tokens("it's 'quoted' -- yes...") ==
          std::vector<std::string>{"it's", "quoted", "yes"});
    CHECK(sentiment_tokens("... !!! ??").empty());
    CHECK(sentiment_tokens("").empty());
    CHECK(sentiment_tokens("a  b\t c") == std::vector<std::string>{"a", "b", "c"});
}

// Each expected triple below is a frozen hand trace: token valences from
// trace_lexicon, rule adjustments applied step by step, then the +/-1
// offset proportions. pos+neg+neu must come out at exactly 1.

TEST_CASE("single lexicon word") {
    // good=1.9; pos_sum=2.9, total=2.9; compound=1.9/sqrt(1.9^2+15)
    check_triple(score("good"), 1.0, 0.0, 0.0, 0.440433570760);
}

TEST_CASE("neutral context words dilute") {
    // [0,0,0,1.9]: pos_sum=2.9, neu=3, total=5.9
    check_triple(score("The movie was good"), 0.491525423729, 0.0,
                 0.508474576271, 0.440433570760);
}

TEST_CASE("negation flips and damps") {
    // not good: 1.9 * -0.74 = -1.406; neg_sum=-2.406, neu=1
    check_triple(score("not good"), 0.0, 0.706400469759, 0.293599530241,
                 -0.341237651254);
}

TEST_CASE("contraction negators count") {
    // isn't in the negator set: [0,0,-1.406], neu=2
    check_triple(score("This isn't good"), 0.0, 0.546073536087, 0.453926463913,
                 -0.341237651254);
}

TEST_CASE("booster raises the following word") {
    // very: 1.9+0.293=2.193
    check_triple(score("very good"), 0.761507274028, 0.0, 0.238492725972,
                 0.492725031740);
}

TEST_CASE("all-caps booster gets the emphasis bump") {
    // VERY good, cap_diff: 1.9+(0.293+0.733)=2.926
    check_triple(score("VERY good"), 0.796995533902, 0.0, 0.203004466098,
                 0.602799766197);
}

TEST_CASE("uniform caps is no emphasis") {
    // single-word sentence cannot have a caps differential
    check_triple(score("GOOD"), 1.0, 0.0, 0.0, 0.440433570760);
}

TEST_CASE("all-caps lexicon word under caps differential") {
    // BAD day: -2.5-0.733=-3.233; neg_sum=-4.233, neu=1
    check_triple(score("BAD day"), 0.0, 0.808905025798, 0.191094974202,
                 -0.640829183956);
}

TEST_CASE("booster chain decays with distance") {
    // good +0.293 (very) +0.293*0.95 (really) +0.293*0.9 (extremely)
    check_triple(score("extremely really very good"), 0.554569008396, 0.0,
                 0.445430991604, 0.576849209008);
}

TEST_CASE("negation beyond a booster still lands") {
    // not very good: (1.9+0.293)*-0.74 = -1.62282
    check_triple(score("not very good"), 0.0, 0.567363643836, 0.432636356164,
                 -0.386456431412);
}

TEST_CASE("never so amplifies instead of negating") {
    // (1.9+0.293)*1.25 = 2.74125
    check_triple(score("never so good"), 0.651643805791, 0.0, 0.348356194209,
                 0.577720739569);
}

TEST_CASE("without doubt passes through") {
    // doubt: -1.5*-0.74=1.11 (negated by without); good untouched
    check_triple(score("without doubt good"), 0.833610648918, 0.0,
                 0.166389351082, 0.613645821851);
}

TEST_CASE("at least is exempt from the least flip") {
    check_triple(score("at least good"), 0.591836734694, 0.0, 0.408163265306,
                 0.440433570760);
}

TEST_CASE("preceding least flips valence") {
    // the least good: 1.9*-0.74=-1.406, neu=2
    check_triple(score("the least good"), 0.0, 0.546073536087, 0.453926463913,
                 -0.341237651254);
}

TEST_CASE("exclamation marks amplify the winning side") {
    // good!: sum=1.9+0.292; pos side takes the punctuation bonus
    check_triple(score("good!"), 1.0, 0.0, 0.0, 0.492554870219);
    // bad!!: sum=-2.5-0.584; neg_sum=-3.5-0.584
    check_triple(score("bad!!"), 0.0, 1.0, 0.0, -0.622921553890);
}

TEST_CASE("question marks amplify from the second one") {
    check_triple(score("good???"), 1.0, 0.0, 0.0, 0.533040861061);
    // a single ? adds nothing
    check_triple(score("good?"), 1.0, 0.0, 0.0, 0.440433570760);
}

TEST_CASE("mixed polarity splits proportions") {
    // [1.9,-2.5]: pos_sum=2.9, neg_sum=-3.5
    check_triple(score("good, bad"), 0.453125, 0.546875, 0.0, -0.153093108924);
}

TEST_CASE("but halves before and amplifies after") {
    // [1.9,0,-2.5] -> [0.95,0,-3.75]
    check_triple(score("good but bad"), 0.253246753247, 0.616883116883,
                 0.129870129870, -0.585881765446);
}

TEST_CASE("no zeroes itself before a lexicon word") {
    // no good: no->0, good=1.9*-0.74; same numbers as plain negation
    check_triple(score("no good"), 0.0, 0.706400469759, 0.293599530241,
                 -0.341237651254);
}

TEST_CASE("standalone no keeps its own valence") {
    // no way: way is not in the lexicon, so no scores -1.2
    check_triple(score("no way"), 0.0, 0.6875, 0.3125, -0.295958174200);
}

TEST_CASE("no reaches over or") {
    // no war or peace: war=-2.9*-0.74=2.146, peace=2.5*-0.74=-1.85
    check_triple(score("no war or peace"), 0.393446723362, 0.356428214107,
                 0.250125062531, 0.076204637231);
}

TEST_CASE("idiom overrides the trigger word") {
    // the bomb at i>=3: valence forced to 3.0
    check_triple(score("It was the bomb"), 0.571428571429, 0.0, 0.428571428571,
                 0.612372435696);
    // to die for peace: die=-2.9 scored as-is, peace overridden to 3.0
    check_triple(score("to die for peace"), 0.404040404040, 0.393939393939,
                 0.202020202020, 0.025811286646);
}

TEST_CASE("idiom bigram booster damps") {
    // kind of: -0.293 via the n-gram table; good=1.607
    check_triple(score("it was kind of good"), 0.394581504465, 0.0,
                 0.605418495535, 0.383244731764);
}

TEST_CASE("lexicon-free text is fully neutral") {
    check_triple(score("the and of tomorrow"), 0.0, 0.0, 1.0, 0.0);
    // punctuation-only token list
    check_triple(score("... --"), 0.0, 0.0, 1.0, 0.0);
}

TEST_CASE("blank input raises EmptySentence") {
    rule_sentiment engine(trace_lexicon());
    CHECK_THROWS_AS(engine.score(""), error);
    try {
        engine.score("   \t ");
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::empty_sentence);
    }
}

TEST_CASE("proportions always sum to one") {
    rule_sentiment engine(trace_lexicon());
    std::mt19937 rng(20240115);
    std::vector<std::string> vocab = {"good", "bad",  "very",  "not",  "the",
                                      "war",  "peace", "never", "so",  "but",
                                      "no",   "or",    "BAD",   "kind", "of"};
    std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
    std::uniform_int_distribution<int> len(1, 12);
    for (int round = 0; round < 500; ++round) {
        std::string sentence;
        int n = len(rng);
        for (int i = 0; i < n; ++i) {
            if (i) sentence += ' ';
            sentence += vocab[pick(rng)];
        }
        if (round % 3 == 0) sentence += "!";
        if (round % 5 == 0) sentence += "??";
        sentiment_triple t = engine.score(sentence);
        CAPTURE(sentence);
        CHECK(t.pos + t.neg + t.neu == Approx(1.0).epsilon(1e-9));
        CHECK(t.pos >= 0.0);
        CHECK(t.neg >= 0.0);
        CHECK(t.neu >= 0.0);
        CHECK(t.compound >= -1.0);
        CHECK(t.compound <= 1.0);
    }
}

TEST_CASE("aggregate is the component mean") {
    sentiment_triple a{0.5, 0.3, 0.2, 0.4};
    sentiment_triple b{0.1, 0.1, 0.8, -0.2};
    sentiment_triple m = aggregate({a, b});
    CHECK(m.pos == Approx(0.3));
    CHECK(m.neg == Approx(0.2));
    CHECK(m.neu == Approx(0.5));
    CHECK(m.compound == Approx(0.1));
}

TEST_CASE("aggregate of nothing raises EmptyList") {
    try {
        aggregate({});
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::empty_list);
    }
}

TEST_CASE("bundled lexicon loads with the pinned entries") {
    sentiment_lexicon lex = load_lexicon(testutil::data_dir() / "lexicon.txt");
    CHECK(lex.valences.at("good") == Approx(1.9));
    CHECK(lex.valences.at("great") == Approx(3.1));
    CHECK(lex.valences.at("bad") == Approx(-2.5));
    CHECK(lex.valences.at("hurt") == Approx(-2.2));
    CHECK(lex.valences.at("war") == Approx(-2.9));
    CHECK(lex.valences.at("no") == Approx(-1.2));
    CHECK(lex.valences.size() > 300);
    CHECK(lex.id.size() == 16);  // fnv hex
    CHECK_FALSE(lex.boosters.empty());
    CHECK(lex.negations.count("not") == 1);
    CHECK(lex.idioms.count("the bomb") == 1);
}

TEST_CASE("lexicon loader rejects malformed lines") {
    testutil::temp_dir tmp("lexicon");
    auto path = tmp.path() / "bad.txt";
    {
        std::ofstream out(path);
        out << "good\tnot-a-number\n";
    }
    CHECK_THROWS_AS(load_lexicon(path), error);
    auto missing = tmp.path() / "absent.txt";
    CHECK_THROWS_AS(load_lexicon(missing), error);
}

TEST_CASE("service client round-trips json") {
    testutil::loopback_server server;
    server.post("/score", [](const httplib::Request& req, httplib::Response& res) {
        auto body = nlohmann::json::parse(req.body);
        REQUIRE(body.contains("text"));
        nlohmann::json out = {
            {"pos", 0.25}, {"neg", 0.25}, {"neu", 0.5}, {"compound", 0.1}};
        res.set_content(out.dump(), "application/json");
    });
    std::string base = server.start();

    service_sentiment svc(base + "/score", make_httplib_transport(2000, "test"), 1, {});
    sentiment_triple t = svc.score("whatever text");
    CHECK(t.pos == Approx(0.25));
    CHECK(t.neu == Approx(0.5));
    CHECK(t.compound == Approx(0.1));
}

TEST_CASE("service client reports malformed replies") {
    testutil::loopback_server server;
    server.post("/score", [](const httplib::Request&, httplib::Response& res) {
        res.set_content("{\"pos\": 0.5}", "application/json");
    });
    std::string base = server.start();
    service_sentiment svc(base + "/score", make_httplib_transport(2000, "test"), 1, {});
    try {
        svc.score("text");
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::sentiment_service_error);
    }
}

TEST_CASE("service client retries transient failures") {
    int hits = 0;
    testutil::loopback_server server;
    server.post("/score", [&hits](const httplib::Request&, httplib::Response& res) {
        if (++hits == 1) {
            res.status = 503;
            return;
        }
        res.set_content(
            R"({"pos": 0.0, "neg": 0.0, "neu": 1.0, "compound": 0.0})",
            "application/json");
    });
    std::string base = server.start();
    service_sentiment svc(base + "/score", make_httplib_transport(2000, "test"), 2, {0});
    sentiment_triple t = svc.score("text");
    CHECK(t.neu == Approx(1.0));
    CHECK(hits == 2);
}

TEST_CASE("sentences split on terminators before capitals") {
    auto s = split_sentences("First one. Second two! Third three? Done.");
    REQUIRE(s.size() == 4);
    CHECK(s[0] == "First one.");
    CHECK(s[1] == "Second two!");
    CHECK(s[2] == "Third three?");
    CHECK(s[3] == "Done.");
}

TEST_CASE("abbreviations and initials do not split") {
    auto s = split_sentences("Dr. Smith arrived at St. Mary today. He spoke.");
    REQUIRE(s.size() == 2);
    CHECK(s[0] == "Dr. Smith arrived at St. Mary today.");

    auto initials = split_sentences("J. K. Rowling wrote it. Then she left.");
    REQUIRE(initials.size() == 2);
    CHECK(initials[0] == "J. K. Rowling wrote it.");

    auto etc = split_sentences("We bought apples, pears, etc. Then we left.");
    CHECK(etc.size() == 1);
}

TEST_CASE("decimals and lowercase continuations stay together") {
    CHECK(split_sentences("Version 2.5 shipped today. Next week too.").size() == 2);
    CHECK(split_sentences("it works. mostly. fine at the end.").size() == 1);
}

TEST_CASE("closing quotes ride with the sentence") {
    auto s = split_sentences("He said \"go.\" Then he left.");
    REQUIRE(s.size() == 2);
    CHECK(s[0] == "He said \"go.\"");
}

TEST_CASE("blank lines force a break") {
    auto s = split_sentences("no terminator here\n\nStill a new sentence");
    REQUIRE(s.size() == 2);
    CHECK(s[0] == "no terminator here");
    CHECK(s[1] == "Still a new sentence");
}

TEST_CASE("unterminated tail is kept") {
    auto s = split_sentences("Only a fragment");
    REQUIRE(s.size() == 1);
    CHECK(s[0] == "Only a fragment");
}

TEST_CASE("empty text raises EmptyText") {
    try {
        split_sentences(" \n ");
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::empty_text);
    }
}

} // TEST_SUITE
