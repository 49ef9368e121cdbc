#include "newsbias/report.hpp"

#include "newsbias/errors.hpp"
#include "test_helpers.hpp"

#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace newsbias;
using doctest::Approx;

namespace {

bias_result result(std::string school, std::string keyword, bias_triple mean, int n) {
    bias_result r;
    r.school_id = std::move(school);
    r.keyword = std::move(keyword);
    r.mean = mean;
    r.article_count = n;
    return r;
}

article_bias art(std::string url, sentiment_triple article, sentiment_triple paragraph,
                 sentiment_triple sentence) {
    article_bias a;
    a.url = std::move(url);
    a.sentiments.article_level = article;
    a.sentiments.paragraph_level = paragraph;
    a.sentiments.sentence_level = sentence;
    return a;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

} // namespace

TEST_SUITE("report") {

TEST_CASE("histogram bins floor v*bins and fold the edges into range") {
    CHECK(histogram_bin(0.0, 10) == 0);
    CHECK(histogram_bin(0.05, 10) == 0);
    CHECK(histogram_bin(0.1, 10) == 1);
    CHECK(histogram_bin(0.999, 10) == 9);
    CHECK(histogram_bin(1.0, 10) == 9);
    CHECK(histogram_bin(-0.25, 10) == 0);
    CHECK(histogram_bin(1.75, 10) == 9);
    CHECK(histogram_bin(0.5, 2) == 1);
    CHECK(histogram_bin(0.499, 2) == 0);
}

TEST_CASE("bias table csv sorts schools but keeps the keyword order given") {
    std::vector<bias_result> results;
    results.push_back(result("beta", "India", {1.234, -0.5, -0.734}, 3));
    results.push_back(result("alpha", "China", {-3.699, 0.149, 3.55}, 2));
    std::vector<std::string> keywords = {"India", "China"};

    std::string csv = render_bias_table_csv(results, keywords);
    CHECK(csv ==
          "school,India_pos,India_neg,India_neu,India_n,"
          "China_pos,China_neg,China_neu,China_n\n"
          "alpha,,,,,-3.70,0.15,3.55,2\n"
          "beta,1.23,-0.50,-0.73,3,,,,\n");
}

TEST_CASE("bias table json keeps only present cells and rounds to 2 places") {
    std::vector<bias_result> results;
    results.push_back(result("beta", "India", {1.234, -0.5, -0.734}, 3));
    results.push_back(result("alpha", "China", {-3.699, 0.149, 3.55}, 2));
    std::vector<std::string> keywords = {"India", "China"};

    auto rows = render_bias_table_json(results, keywords);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["school"] == "alpha");
    CHECK(rows[0]["keyword"] == "China");
    CHECK(rows[0]["pos"].get<double>() == Approx(-3.7));
    CHECK(rows[0]["neg"].get<double>() == Approx(0.15));
    CHECK(rows[0]["n"] == 2);
    CHECK(rows[1]["school"] == "beta");
    CHECK(rows[1]["keyword"] == "India");
    CHECK(rows[1]["pos"].get<double>() == Approx(1.23));
    CHECK(rows[1]["neg"].get<double>() == Approx(-0.5));
    CHECK(rows[1]["n"] == 3);
}

TEST_CASE("histograms count every article across results at all levels") {
    std::vector<bias_result> results;
    bias_result r1 = result("alpha", "India", {}, 2);
    r1.articles.push_back(art("https://a.test/1", {0.0, 0.25, 0.75},
                              {0.1, 0.2, 0.7}, {0.99, 0.0, 0.01}));
    r1.articles.push_back(art("https://a.test/2", {1.0, 0.0, 0.0},
                              {0.5, 0.25, 0.25}, {0.33, 0.33, 0.34}));
    bias_result r2 = result("beta", "China", {}, 1);
    r2.articles.push_back(art("https://b.test/1", {0.6, 0.15, 0.25},
                              {0.0, 0.0, 1.0}, {0.5, 0.5, 0.0}));
    results.push_back(r1);
    results.push_back(r2);

    auto out = render_histograms(results, 4);
    CHECK(out["bins"] == 4);
    CHECK(out["article_count"] == 3);
    CHECK(out["article_level"]["pos"] == std::vector<int>{1, 0, 1, 1});
    CHECK(out["article_level"]["neg"] == std::vector<int>{2, 1, 0, 0});
    CHECK(out["article_level"]["neu"] == std::vector<int>{1, 1, 0, 1});
    CHECK(out["paragraph_level"]["pos"] == std::vector<int>{2, 0, 1, 0});
    CHECK(out["paragraph_level"]["neg"] == std::vector<int>{2, 1, 0, 0});
    CHECK(out["paragraph_level"]["neu"] == std::vector<int>{0, 1, 1, 1});
    CHECK(out["sentence_level"]["pos"] == std::vector<int>{0, 1, 1, 1});
    CHECK(out["sentence_level"]["neg"] == std::vector<int>{1, 1, 1, 0});
    CHECK(out["sentence_level"]["neu"] == std::vector<int>{2, 1, 0, 0});
}

TEST_CASE("histograms reject fewer than two bins") {
    try {
        render_histograms({}, 1);
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::config_error);
    }
}

TEST_CASE("scatter emits every series pair per article at six places") {
    std::vector<bias_result> results;
    bias_result r = result("alpha", "India", {}, 1);
    r.articles.push_back(art("https://a.test/x", {0.5, 0.25, 0.25},
                             {0.125, 0.5, 0.375}, {0.2, 0.3, 0.5}));
    results.push_back(r);

    auto rows = lines(render_scatter_csv(results));
    REQUIRE(rows.size() == 37);  // header + C(9,2) pairs
    CHECK(rows[0] == "school,keyword,url,series_a,series_b,value_a,value_b");
    CHECK(rows[1] ==
          "alpha,India,https://a.test/x,article_pos,article_neg,0.500000,0.250000");
    CHECK(rows[8] ==
          "alpha,India,https://a.test/x,article_pos,sentence_neu,0.500000,0.500000");
    CHECK(rows[36] ==
          "alpha,India,https://a.test/x,sentence_neg,sentence_neu,0.300000,0.500000");
}

TEST_CASE("distributions list article-level component values per result") {
    std::vector<bias_result> results;
    bias_result r1 = result("alpha", "India", {}, 2);
    r1.articles.push_back(art("https://a.test/1", {0.1, 0.2, 0.7}, {}, {}));
    r1.articles.push_back(art("https://a.test/2", {0.4, 0.4, 0.2}, {}, {}));
    bias_result r2 = result("beta", "China", {}, 1);
    r2.articles.push_back(art("https://b.test/1", {0.0, 0.0, 1.0}, {}, {}));
    results.push_back(r1);
    results.push_back(r2);

    auto out = render_distributions(results);
    REQUIRE(out.size() == 6);
    CHECK(out[0]["school"] == "alpha");
    CHECK(out[0]["keyword"] == "India");
    CHECK(out[0]["component"] == "pos");
    CHECK(out[0]["values"] == std::vector<double>{0.1, 0.4});
    CHECK(out[1]["component"] == "neg");
    CHECK(out[1]["values"] == std::vector<double>{0.2, 0.4});
    CHECK(out[2]["component"] == "neu");
    CHECK(out[2]["values"] == std::vector<double>{0.7, 0.2});
    CHECK(out[3]["school"] == "beta");
    CHECK(out[3]["values"] == std::vector<double>{0.0});
}

TEST_CASE("keyword counts keep config order and default missing to zero") {
    std::map<std::string, int> counts = {{"India", 4}, {"China", 0}, {"stray", 9}};
    std::vector<std::string> keywords = {"India", "China", "Israel"};

    CHECK(render_keyword_counts_csv(counts, keywords) ==
          "keyword,count\nIndia,4\nChina,0\nIsrael,0\n");

    auto j = render_keyword_counts_json(counts, keywords);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["keyword"] == "India");
    CHECK(j[0]["count"] == 4);
    CHECK(j[1]["count"] == 0);
    CHECK(j[2]["keyword"] == "Israel");
    CHECK(j[2]["count"] == 0);
}

TEST_CASE("csv fields with commas or quotes are quoted with doubled quotes") {
    std::map<std::string, int> counts = {{"a,b", 3}, {"say \"hi\"", 2}};
    std::vector<std::string> keywords = {"a,b", "say \"hi\""};
    CHECK(render_keyword_counts_csv(counts, keywords) ==
          "keyword,count\n\"a,b\",3\n\"say \"\"hi\"\"\",2\n");
}

TEST_CASE("conclusions start with the warning and add comparability notes") {
    std::vector<bias_result> results;
    results.push_back(result("alpha", "India", {}, 1));
    results.push_back(result("alpha", "China", {}, 1));
    results.push_back(result("beta", "India", {}, 1));

    CHECK(render_conclusions(results, "WARN") ==
          "WARN\n"
          "\n"
          "Within alpha, relative bias may be compared across keywords: "
          "India, China.\n"
          "Across all schools, population-level bias may be compared between "
          "keywords: India, China.\n");
}

TEST_CASE("conclusions with nothing comparable are just the warning") {
    std::vector<bias_result> one = {result("alpha", "India", {}, 1)};
    CHECK(render_conclusions(one, "WARN") == "WARN\n");
    CHECK(render_conclusions({}, "WARN") == "WARN\n");
}

TEST_CASE("emit_reports writes the csv artifact set") {
    report_bundle bundle;
    bias_result r = result("alpha", "India", {1.0, -0.4, -0.6}, 1);
    r.articles.push_back(art("https://a.test/1", {0.5, 0.25, 0.25},
                             {0.125, 0.5, 0.375}, {0.2, 0.3, 0.5}));
    bundle.results.push_back(r);
    bundle.keywords = {"India"};
    bundle.keyword_counts = {{"India", 1}};
    bundle.histogram_bins = 4;
    bundle.invalid_conclusion_warning = "WARN";

    testutil::temp_dir dir("report_csv");
    emit_reports(bundle, dir.path(), "csv");

    CHECK(slurp(dir.path() / "bias_table.csv") ==
          render_bias_table_csv(bundle.results, bundle.keywords));
    CHECK(slurp(dir.path() / "keyword_counts.csv") ==
          render_keyword_counts_csv(bundle.keyword_counts, bundle.keywords));
    CHECK(slurp(dir.path() / "histograms.json") ==
          render_histograms(bundle.results, 4).dump(2) + "\n");
    CHECK(slurp(dir.path() / "scatter.csv") == render_scatter_csv(bundle.results));
    CHECK(slurp(dir.path() / "distributions.json") ==
          render_distributions(bundle.results).dump(2) + "\n");
    CHECK(slurp(dir.path() / "conclusions.txt") ==
          render_conclusions(bundle.results, "WARN"));
    CHECK_FALSE(std::filesystem::exists(dir.path() / "bias_table.json"));
}

TEST_CASE("emit_reports in json format swaps the tabular artifacts") {
    report_bundle bundle;
    bundle.results.push_back(result("alpha", "India", {1.0, -0.4, -0.6}, 1));
    bundle.keywords = {"India"};
    bundle.keyword_counts = {{"India", 1}};
    bundle.invalid_conclusion_warning = "WARN";

    testutil::temp_dir dir("report_json");
    emit_reports(bundle, dir.path(), "json");

    CHECK(slurp(dir.path() / "bias_table.json") ==
          render_bias_table_json(bundle.results, bundle.keywords).dump(2) + "\n");
    CHECK(slurp(dir.path() / "keyword_counts.json") ==
          render_keyword_counts_json(bundle.keyword_counts, bundle.keywords).dump(2) +
              "\n");
    CHECK_FALSE(std::filesystem::exists(dir.path() / "bias_table.csv"));
    CHECK(std::filesystem::exists(dir.path() / "conclusions.txt"));
}

TEST_CASE("emit_reports rejects unknown formats") {
    testutil::temp_dir dir("report_bad");
    try {
        emit_reports({}, dir.path(), "xml");
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::config_error);
        CHECK(std::string(e.what()).find("csv or json") != std::string::npos);
    }
}

} // TEST_SUITE
