#include "newsbias/summarizer.hpp"

#include "newsbias/errors.hpp"
#include "newsbias/sentiment.hpp"
#include "newsbias/strings.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <thread>

namespace newsbias {

namespace {

// Byte ranges of whitespace tokens, for budget cuts that keep the
// original spacing.
std::vector<std::pair<std::size_t, std::size_t>> token_spans(std::string_view text) {
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        if (i >= text.size()) break;
        std::size_t b = i;
        while (i < text.size() && !is_space(text[i])) ++i;
        spans.emplace_back(b, i);
    }
    return spans;
}

} // namespace

std::string to_string(overlong_policy p) {
    switch (p) {
    case overlong_policy::reject: return "reject";
    case overlong_policy::truncate: return "truncate";
    case overlong_policy::chunk: return "chunk";
    }
    return "reject";
}

std::optional<overlong_policy> overlong_policy_from(std::string_view name) {
    if (name == "reject") return overlong_policy::reject;
    if (name == "truncate") return overlong_policy::truncate;
    if (name == "chunk") return overlong_policy::chunk;
    return std::nullopt;
}

int count_tokens(std::string_view text) {
    int count = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        if (i >= text.size()) break;
        ++count;
        while (i < text.size() && !is_space(text[i])) ++i;
    }
    return count;
}

extractive_summarizer::extractive_summarizer(std::set<std::string> stopwords)
    : stopwords_(std::move(stopwords)) {}

std::string extractive_summarizer::summarize_within_budget(const std::string& text,
                                                           int /*max_tokens*/) {
    std::vector<std::string> sentences = split_sentences(text);

    // Scoring tokens: lower-cased, outer punctuation stripped, stopwords out.
    std::vector<std::vector<std::string>> terms(sentences.size());
    std::map<std::string, int> tf;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        for (const std::string& tok : sentiment_tokens(sentences[i])) {
            std::string w = to_lower(tok);
            if (stopwords_.count(w)) continue;
            terms[i].push_back(w);
            ++tf[w];
        }
    }
    int max_tf = 1;
    for (const auto& [w, c] : tf) max_tf = std::max(max_tf, c);

    std::vector<double> scores(sentences.size(), 0.0);
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        if (terms[i].empty()) continue;
        double sum = 0.0;
        for (const std::string& w : terms[i])
            sum += static_cast<double>(tf[w]) / max_tf;
        scores[i] = sum / static_cast<double>(terms[i].size());
    }

    std::size_t k = std::max<std::size_t>(1, sentences.size() * 20 / 100);
    std::vector<std::size_t> order(sentences.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] > scores[b];  // stable keeps earlier sentences on ties
    });
    order.resize(std::min(k, order.size()));
    std::sort(order.begin(), order.end());

    std::vector<std::string> picked;
    for (std::size_t i : order) picked.push_back(sentences[i]);
    return join(picked, " ");
}

service_summarizer::service_summarizer(std::string endpoint,
                                       std::shared_ptr<http_transport> transport,
                                       int max_attempts, std::vector<int> backoff_ms)
    : endpoint_(std::move(endpoint)), transport_(std::move(transport)),
      max_attempts_(max_attempts), backoff_ms_(std::move(backoff_ms)) {}

std::string service_summarizer::summarize_within_budget(const std::string& text,
                                                        int max_tokens) {
    nlohmann::json req = {{"text", text}, {"max_tokens", max_tokens}};
    http_response resp;
    for (int attempt = 1; attempt <= max_attempts_; ++attempt) {
        resp = transport_->post(endpoint_, req.dump(), "application/json");
        bool transient = resp.status == 0 || resp.status >= 500;
        if (!transient || attempt == max_attempts_) break;
        std::size_t slot = static_cast<std::size_t>(attempt - 1);
        int delay = slot < backoff_ms_.size() ? backoff_ms_[slot] : 0;
        if (delay > 0) std::this_thread::sleep_for(std::chrono::milliseconds(delay));
    }
    if (resp.status < 200 || resp.status >= 300)
        fail(errc::summary_service_error,
             endpoint_ + ": " + (resp.status == 0 ? resp.error
                                                  : "HTTP " + std::to_string(resp.status)));

    nlohmann::json body = nlohmann::json::parse(resp.body, nullptr, false);
    if (body.is_discarded() || !body.contains("summary") || !body["summary"].is_string())
        fail(errc::summary_service_error, endpoint_ + ": malformed response body");
    std::string summary_text = body["summary"].get<std::string>();
    if (trim(summary_text).empty())
        fail(errc::summary_service_error, endpoint_ + ": empty summary");
    return summary_text;
}

summary summarize_article(summarizer_port& port, const summary_request& req) {
    if (trim(req.text).empty()) fail(errc::empty_text, "nothing to summarize");
    if (req.max_tokens < 1) fail(errc::config_error, "max_tokens must be >= 1");

    auto spans = token_spans(req.text);
    summary out;
    out.method = port.method();
    out.source_token_count = static_cast<int>(spans.size());

    if (out.source_token_count <= req.max_tokens) {
        out.text = port.summarize_within_budget(req.text, req.max_tokens);
        return out;
    }

    std::size_t budget = static_cast<std::size_t>(req.max_tokens);
    switch (req.policy) {
    case overlong_policy::reject:
        fail(errc::over_budget, std::to_string(out.source_token_count) +
                                    " tokens exceed the " +
                                    std::to_string(req.max_tokens) + "-token budget");
    case overlong_policy::truncate: {
        std::string head = req.text.substr(0, spans[budget - 1].second);
        out.text = port.summarize_within_budget(head, req.max_tokens);
        return out;
    }
    case overlong_policy::chunk: {
        std::vector<std::string> parts;
        for (std::size_t b = 0; b < spans.size(); b += budget) {
            std::size_t e = std::min(b + budget, spans.size()) - 1;
            std::string chunk =
                req.text.substr(spans[b].first, spans[e].second - spans[b].first);
            parts.push_back(port.summarize_within_budget(chunk, req.max_tokens));
        }
        out.text = join(parts, " ");
        return out;
    }
    }
    fail(errc::config_error, "unknown overlong policy");
}

std::vector<summary> summarize_paragraphs(summarizer_port& port,
                                          const summary_request& req) {
    if (trim(req.text).empty()) fail(errc::empty_text, "nothing to summarize");

    std::vector<summary> out;
    std::vector<std::string> paragraphs = split_paragraphs(req.text);
    for (std::size_t i = 0; i < paragraphs.size(); ++i) {
        summary_request para{paragraphs[i], req.max_tokens, req.policy};
        try {
            out.push_back(summarize_article(port, para));
        } catch (const error& e) {
            fail(e.code(), "paragraph " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return out;
}

std::set<std::string> load_stopwords(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::config_error, "cannot open stopwords " + path.string());
    std::set<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        out.insert(to_lower(t));
    }
    return out;
}

} // namespace newsbias
