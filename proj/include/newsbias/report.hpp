#pragma once

#include "newsbias/bias.hpp"

#include "json.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace newsbias {

struct report_bundle {
    std::vector<bias_result> results;
    std::vector<std::string> keywords;  // column order
    std::map<std::string, int> keyword_counts;
    int histogram_bins = 10;
    std::string invalid_conclusion_warning;
};

/// Bin index over [0,1]: floor(v * bins), top edge folded into the last bin.
int histogram_bin(double value, int bins);

// Renderers are pure so tests can diff strings; emit_reports writes
// bias_table, histograms.json, scatter.csv, distributions.json,
// keyword_counts and conclusions.txt under out_dir.
std::string render_bias_table_csv(const std::vector<bias_result>& results,
                                  const std::vector<std::string>& keywords);
nlohmann::json render_bias_table_json(const std::vector<bias_result>& results,
                                      const std::vector<std::string>& keywords);
nlohmann::json render_histograms(const std::vector<bias_result>& results, int bins);
std::string render_scatter_csv(const std::vector<bias_result>& results);
nlohmann::json render_distributions(const std::vector<bias_result>& results);
std::string render_keyword_counts_csv(const std::map<std::string, int>& counts,
                                      const std::vector<std::string>& keywords);
nlohmann::json render_keyword_counts_json(const std::map<std::string, int>& counts,
                                          const std::vector<std::string>& keywords);
std::string render_conclusions(const std::vector<bias_result>& results,
                               const std::string& warning);

/// format is "csv" or "json" (switches the tabular artifacts).
void emit_reports(const report_bundle& bundle, const std::filesystem::path& out_dir,
                  const std::string& format);

} // namespace newsbias
