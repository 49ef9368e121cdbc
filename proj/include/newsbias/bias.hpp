#pragma once

#include "newsbias/sentiment.hpp"
#include "newsbias/summarizer.hpp"

#include <string>
#include <vector>

namespace newsbias {

/// Sentiment of one article at the three text levels.
struct granularity_sentiments {
    sentiment_triple article_level;    // whole-article summary
    sentiment_triple paragraph_level;  // mean over per-paragraph summaries
    sentiment_triple sentence_level;   // mean over original sentences
};

/// Signed percentage points; components sum to zero.
struct bias_triple {
    double pos_delta = 0.0;
    double neg_delta = 0.0;
    double neu_delta = 0.0;
};

struct article_bias {
    std::string url;
    granularity_sentiments sentiments;
    bias_triple bias;
};

struct bias_result {
    std::string school_id;
    std::string keyword;
    bias_triple mean;
    int article_count = 0;
    std::vector<article_bias> articles;  // retained for distribution plots
};

/// Scores an article at every granularity. The summary's sentiment is the
/// mean over its sentences; paragraph level averages the per-paragraph
/// summary sentiments; sentence level averages the original sentences.
/// Summarization failures (OverBudget etc.) propagate to the caller.
granularity_sentiments article_granularities(const std::string& text,
                                             summarizer_port& summarizer,
                                             sentiment_port& sentiment,
                                             int max_tokens,
                                             overlong_policy policy);

/// delta = (article summary - sentence average) x 100 per component.
/// Positive means the summary reads that many percentage points higher.
bias_triple compute_bias(const granularity_sentiments& g);

/// Component-wise mean over per-article triples; the list is retained.
/// Throws error(errc::no_articles) on an empty list.
bias_result aggregate_bias(std::vector<article_bias> per_article,
                           const std::string& school_id, const std::string& keyword);

} // namespace newsbias
