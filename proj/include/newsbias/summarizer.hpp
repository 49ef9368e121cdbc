#pragma once

#include "newsbias/transport.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace newsbias {

enum class overlong_policy { reject, truncate, chunk };
enum class summary_method { extractive, external_service };

std::string to_string(overlong_policy p);
std::optional<overlong_policy> overlong_policy_from(std::string_view name);

struct summary_request {
    std::string text;
    int max_tokens = 500;
    overlong_policy policy = overlong_policy::reject;
};

struct summary {
    std::string text;
    summary_method method = summary_method::extractive;
    int source_token_count = 0;
};

/// Whitespace-delimited token count, the documented approximation of
/// model tokens used for the budget.
int count_tokens(std::string_view text);

/// Backends summarize text that already fits the budget; policy handling
/// (reject/truncate/chunk) lives in summarize_article.
class summarizer_port {
public:
    virtual ~summarizer_port() = default;
    virtual std::string summarize_within_budget(const std::string& text,
                                                int max_tokens) = 0;
    virtual summary_method method() const = 0;
};

/// Term-frequency extractive summarizer. Sentences are scored by the mean
/// normalized frequency of their non-stopword tokens; the top
/// max(1, 20% of sentences) are emitted in source order.
class extractive_summarizer : public summarizer_port {
public:
    explicit extractive_summarizer(std::set<std::string> stopwords);
    std::string summarize_within_budget(const std::string& text,
                                        int max_tokens) override;
    summary_method method() const override { return summary_method::extractive; }

private:
    std::set<std::string> stopwords_;
};

/// HTTP client for an external abstractive service.
/// POST endpoint {"text":..., "max_tokens":...} -> {"summary":...}.
class service_summarizer : public summarizer_port {
public:
    service_summarizer(std::string endpoint, std::shared_ptr<http_transport> transport,
                       int max_attempts = 3, std::vector<int> backoff_ms = {1000, 2000, 4000});
    std::string summarize_within_budget(const std::string& text,
                                        int max_tokens) override;
    summary_method method() const override { return summary_method::external_service; }

private:
    std::string endpoint_;
    std::shared_ptr<http_transport> transport_;
    int max_attempts_;
    std::vector<int> backoff_ms_;
};

/// Applies the overlong policy, delegates pieces to the backend, and joins
/// chunk summaries with a single space. source_token_count always reflects
/// the original text.
summary summarize_article(summarizer_port& port, const summary_request& req);

/// One summary per blank-line paragraph, same budget rules, order kept.
/// A failing paragraph raises with its index in the message.
std::vector<summary> summarize_paragraphs(summarizer_port& port, const summary_request& req);

std::set<std::string> load_stopwords(const std::filesystem::path& path);

} // namespace newsbias
