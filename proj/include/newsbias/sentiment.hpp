#pragma once

#include "newsbias/transport.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace newsbias {

/// Proportions sum to 1. The compound score rides along for callers that
/// want it; bias math never reads it.
struct sentiment_triple {
    double pos = 0.0;
    double neg = 0.0;
    double neu = 1.0;
    double compound = 0.0;
};

struct sentiment_lexicon {
    std::unordered_map<std::string, double> valences;  // token -> mean valence
    std::map<std::string, double> boosters;            // token/bigram -> increment
    std::set<std::string> negations;
    std::map<std::string, double> idioms;              // n-gram -> fixed valence
    std::string id;                                    // FNV-1a 64 of the file
};

/// Reads `token \t valence` lines (# comments allowed); the rule tables
/// (boosters, negations, idioms) are part of the model and built in.
sentiment_lexicon load_lexicon(const std::filesystem::path& path);

/// The built-in rule tables with no word valences, for tests that supply
/// their own entries.
sentiment_lexicon builtin_rules();

/// Splits on . ! ? followed by whitespace and a capital letter (or end of
/// text), with an abbreviation stop list and single-letter initials kept
/// together; blank lines always break. Throws error(errc::empty_text).
std::vector<std::string> split_sentences(const std::string& text);

class sentiment_port {
public:
    virtual ~sentiment_port() = default;
    /// Throws error(errc::empty_sentence) on blank input.
    virtual sentiment_triple score(const std::string& sentence) = 0;
};

/// Rule-based lexicon intensity model: booster scaling with distance
/// decay, all-caps emphasis, negation lookback, idiom overrides, the
/// "but" pivot and punctuation emphasis, then the +/-1-offset proportion
/// formula. Proportions are kept unrounded.
class rule_sentiment : public sentiment_port {
public:
    explicit rule_sentiment(sentiment_lexicon lexicon);
    sentiment_triple score(const std::string& sentence) override;

    const sentiment_lexicon& lexicon() const { return lex_; }

private:
    sentiment_lexicon lex_;
};

/// HTTP client: POST {"text":...} -> {"pos","neg","neu","compound"}.
class service_sentiment : public sentiment_port {
public:
    service_sentiment(std::string endpoint, std::shared_ptr<http_transport> transport,
                      int max_attempts = 3, std::vector<int> backoff_ms = {1000, 2000, 4000});
    sentiment_triple score(const std::string& sentence) override;

private:
    std::string endpoint_;
    std::shared_ptr<http_transport> transport_;
    int max_attempts_;
    std::vector<int> backoff_ms_;
};

/// Component-wise mean. Throws error(errc::empty_list).
sentiment_triple aggregate(const std::vector<sentiment_triple>& triples);

/// Whitespace tokens with leading/trailing ASCII punctuation stripped;
/// tokens that strip to nothing are dropped. Exposed for tests.
std::vector<std::string> sentiment_tokens(std::string_view text);

} // namespace newsbias
