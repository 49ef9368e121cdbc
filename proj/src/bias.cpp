#include "newsbias/bias.hpp"

#include "newsbias/errors.hpp"

namespace newsbias {

namespace {

sentiment_triple text_sentiment(const std::string& text, sentiment_port& sentiment) {
    std::vector<sentiment_triple> triples;
    for (const std::string& s : split_sentences(text))
        triples.push_back(sentiment.score(s));
    return aggregate(triples);
}

} // namespace

granularity_sentiments article_granularities(const std::string& text,
                                             summarizer_port& summarizer,
                                             sentiment_port& sentiment,
                                             int max_tokens,
                                             overlong_policy policy) {
    summary_request req{text, max_tokens, policy};

    granularity_sentiments g;
    g.sentence_level = text_sentiment(text, sentiment);

    summary whole = summarize_article(summarizer, req);
    g.article_level = text_sentiment(whole.text, sentiment);

    std::vector<sentiment_triple> per_paragraph;
    for (const summary& s : summarize_paragraphs(summarizer, req))
        per_paragraph.push_back(text_sentiment(s.text, sentiment));
    g.paragraph_level = aggregate(per_paragraph);
    return g;
}

bias_triple compute_bias(const granularity_sentiments& g) {
    bias_triple b;
    b.pos_delta = (g.article_level.pos - g.sentence_level.pos) * 100.0;
    b.neg_delta = (g.article_level.neg - g.sentence_level.neg) * 100.0;
    b.neu_delta = (g.article_level.neu - g.sentence_level.neu) * 100.0;
    return b;
}

bias_result aggregate_bias(std::vector<article_bias> per_article,
                           const std::string& school_id, const std::string& keyword) {
    if (per_article.empty())
        fail(errc::no_articles,
             school_id + "/" + keyword + ": no analyzable articles");

    bias_result result;
    result.school_id = school_id;
    result.keyword = keyword;
    result.article_count = static_cast<int>(per_article.size());
    for (const article_bias& a : per_article) {
        result.mean.pos_delta += a.bias.pos_delta;
        result.mean.neg_delta += a.bias.neg_delta;
        result.mean.neu_delta += a.bias.neu_delta;
    }
    double n = static_cast<double>(per_article.size());
    result.mean.pos_delta /= n;
    result.mean.neg_delta /= n;
    result.mean.neu_delta /= n;
    result.articles = std::move(per_article);
    return result;
}

} // namespace newsbias
