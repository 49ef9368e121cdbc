#include "newsbias/report.hpp"

#include "newsbias/errors.hpp"
#include "newsbias/strings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

namespace newsbias {

namespace {

std::string fixed(double v, int places) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", places, v);
    return buf;
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> sorted_schools(const std::vector<bias_result>& results) {
    std::set<std::string> schools;
    for (const auto& r : results) schools.insert(r.school_id);
    return {schools.begin(), schools.end()};
}

const bias_result* find_result(const std::vector<bias_result>& results,
                               const std::string& school, const std::string& keyword) {
    for (const auto& r : results)
        if (r.school_id == school && r.keyword == keyword) return &r;
    return nullptr;
}

struct series_def {
    const char* name;
    double (*get)(const granularity_sentiments&);
};

// 3 granularities x 3 components, the full pairwise scatter space.
const series_def kSeries[] = {
    {"article_pos", [](const granularity_sentiments& g) { return g.article_level.pos; }},
    {"article_neg", [](const granularity_sentiments& g) { return g.article_level.neg; }},
    {"article_neu", [](const granularity_sentiments& g) { return g.article_level.neu; }},
    {"paragraph_pos", [](const granularity_sentiments& g) { return g.paragraph_level.pos; }},
    {"paragraph_neg", [](const granularity_sentiments& g) { return g.paragraph_level.neg; }},
    {"paragraph_neu", [](const granularity_sentiments& g) { return g.paragraph_level.neu; }},
    {"sentence_pos", [](const granularity_sentiments& g) { return g.sentence_level.pos; }},
    {"sentence_neg", [](const granularity_sentiments& g) { return g.sentence_level.neg; }},
    {"sentence_neu", [](const granularity_sentiments& g) { return g.sentence_level.neu; }},
};

void write_text(const std::filesystem::path& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(errc::io_failure, "cannot write " + path.string());
    out << data;
    if (!out) fail(errc::io_failure, "short write to " + path.string());
}

} // namespace

int histogram_bin(double value, int bins) {
    int idx = static_cast<int>(std::floor(value * bins));
    if (idx < 0) idx = 0;
    if (idx >= bins) idx = bins - 1;
    return idx;
}

std::string render_bias_table_csv(const std::vector<bias_result>& results,
                                  const std::vector<std::string>& keywords) {
    std::string out = "school";
    for (const auto& kw : keywords) {
        out += "," + csv_escape(kw) + "_pos";
        out += "," + csv_escape(kw) + "_neg";
        out += "," + csv_escape(kw) + "_neu";
        out += "," + csv_escape(kw) + "_n";
    }
    out += "\n";
    for (const auto& school : sorted_schools(results)) {
        out += csv_escape(school);
        for (const auto& kw : keywords) {
            const bias_result* r = find_result(results, school, kw);
            if (r) {
                out += "," + fixed(r->mean.pos_delta, 2);
                out += "," + fixed(r->mean.neg_delta, 2);
                out += "," + fixed(r->mean.neu_delta, 2);
                out += "," + std::to_string(r->article_count);
            } else {
                out += ",,,,";  // missing cell, kept empty
            }
        }
        out += "\n";
    }
    return out;
}

nlohmann::json render_bias_table_json(const std::vector<bias_result>& results,
                                      const std::vector<std::string>& keywords) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& school : sorted_schools(results)) {
        for (const auto& kw : keywords) {
            const bias_result* r = find_result(results, school, kw);
            if (!r) continue;
            rows.push_back({{"school", school},
                            {"keyword", kw},
                            {"pos", round2(r->mean.pos_delta)},
                            {"neg", round2(r->mean.neg_delta)},
                            {"neu", round2(r->mean.neu_delta)},
                            {"n", r->article_count}});
        }
    }
    return rows;
}

nlohmann::json render_histograms(const std::vector<bias_result>& results, int bins) {
    if (bins < 2) fail(errc::config_error, "histogram bins must be >= 2");

    const char* granularities[] = {"article_level", "paragraph_level", "sentence_level"};
    const char* components[] = {"pos", "neg", "neu"};
    nlohmann::json out;
    out["bins"] = bins;
    int counted = 0;

    std::map<std::string, std::vector<int>> counts;
    for (const char* g : granularities)
        for (const char* c : components)
            counts[std::string(g) + "." + c] = std::vector<int>(bins, 0);

    for (const auto& r : results) {
        for (const auto& a : r.articles) {
            ++counted;
            const sentiment_triple* levels[] = {&a.sentiments.article_level,
                                                &a.sentiments.paragraph_level,
                                                &a.sentiments.sentence_level};
            for (int gi = 0; gi < 3; ++gi) {
                const sentiment_triple& t = *levels[gi];
                double values[] = {t.pos, t.neg, t.neu};
                for (int ci = 0; ci < 3; ++ci) {
                    std::string key = std::string(granularities[gi]) + "." + components[ci];
                    ++counts[key][static_cast<std::size_t>(
                        histogram_bin(values[ci], bins))];
                }
            }
        }
    }

    out["article_count"] = counted;
    for (const char* g : granularities) {
        nlohmann::json per;
        for (const char* c : components)
            per[c] = counts[std::string(g) + "." + c];
        out[g] = per;
    }
    return out;
}

std::string render_scatter_csv(const std::vector<bias_result>& results) {
    std::string out = "school,keyword,url,series_a,series_b,value_a,value_b\n";
    constexpr int n = 9;
    for (const auto& r : results) {
        for (const auto& a : r.articles) {
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    out += csv_escape(r.school_id);
                    out += ",";
                    out += csv_escape(r.keyword);
                    out += ",";
                    out += csv_escape(a.url);
                    out += ",";
                    out += kSeries[i].name;
                    out += ",";
                    out += kSeries[j].name;
                    out += ",";
                    out += fixed(kSeries[i].get(a.sentiments), 6);
                    out += ",";
                    out += fixed(kSeries[j].get(a.sentiments), 6);
                    out += "\n";
                }
            }
        }
    }
    return out;
}

nlohmann::json render_distributions(const std::vector<bias_result>& results) {
    nlohmann::json out = nlohmann::json::array();
    const char* components[] = {"pos", "neg", "neu"};
    for (const auto& r : results) {
        for (int ci = 0; ci < 3; ++ci) {
            nlohmann::json values = nlohmann::json::array();
            for (const auto& a : r.articles) {
                const sentiment_triple& t = a.sentiments.article_level;
                double v = ci == 0 ? t.pos : ci == 1 ? t.neg : t.neu;
                values.push_back(v);
            }
            out.push_back({{"school", r.school_id},
                           {"keyword", r.keyword},
                           {"component", components[ci]},
                           {"values", values}});
        }
    }
    return out;
}

std::string render_keyword_counts_csv(const std::map<std::string, int>& counts,
                                      const std::vector<std::string>& keywords) {
    std::string out = "keyword,count\n";
    for (const auto& kw : keywords) {
        auto it = counts.find(kw);
        out += csv_escape(kw) + "," + std::to_string(it == counts.end() ? 0 : it->second) +
               "\n";
    }
    return out;
}

nlohmann::json render_keyword_counts_json(const std::map<std::string, int>& counts,
                                          const std::vector<std::string>& keywords) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& kw : keywords) {
        auto it = counts.find(kw);
        out.push_back({{"keyword", kw},
                       {"count", it == counts.end() ? 0 : it->second}});
    }
    return out;
}

std::string render_conclusions(const std::vector<bias_result>& results,
                               const std::string& warning) {
    std::string out = warning + "\n";

    std::map<std::string, std::vector<std::string>> by_school;
    std::vector<std::string> keyword_order;
    for (const auto& r : results) {
        by_school[r.school_id].push_back(r.keyword);
        if (std::find(keyword_order.begin(), keyword_order.end(), r.keyword) ==
            keyword_order.end())
            keyword_order.push_back(r.keyword);
    }

    std::string notes;
    for (const auto& [school, kws] : by_school) {
        if (kws.size() < 2) continue;
        notes += "Within " + school +
                 ", relative bias may be compared across keywords: " +
                 join(kws, ", ") + ".\n";
    }
    if (keyword_order.size() >= 2)
        notes += "Across all schools, population-level bias may be compared "
                 "between keywords: " +
                 join(keyword_order, ", ") + ".\n";

    if (!notes.empty()) out += "\n" + notes;
    return out;
}

void emit_reports(const report_bundle& bundle, const std::filesystem::path& out_dir,
                  const std::string& format) {
    if (format != "csv" && format != "json")
        fail(errc::config_error, "format must be csv or json");
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) fail(errc::io_failure, "cannot create report dir " + out_dir.string());

    if (format == "json") {
        write_text(out_dir / "bias_table.json",
                   render_bias_table_json(bundle.results, bundle.keywords).dump(2) + "\n");
        write_text(out_dir / "keyword_counts.json",
                   render_keyword_counts_json(bundle.keyword_counts, bundle.keywords)
                           .dump(2) +
                       "\n");
    } else {
        write_text(out_dir / "bias_table.csv",
                   render_bias_table_csv(bundle.results, bundle.keywords));
        write_text(out_dir / "keyword_counts.csv",
                   render_keyword_counts_csv(bundle.keyword_counts, bundle.keywords));
    }
    write_text(out_dir / "histograms.json",
               render_histograms(bundle.results, bundle.histogram_bins).dump(2) + "\n");
    write_text(out_dir / "scatter.csv", render_scatter_csv(bundle.results));
    write_text(out_dir / "distributions.json",
               render_distributions(bundle.results).dump(2) + "\n");
    write_text(out_dir / "conclusions.txt",
               render_conclusions(bundle.results, bundle.invalid_conclusion_warning));
}

} // namespace newsbias
