#pragma once

#include <stdexcept>
#include <string>

namespace newsbias {

enum class errc {
    permission_denied,
    strategy_data_missing,
    fetch_error,
    replay_miss,
    encoding_undetectable,
    date_unparseable,
    extraction_empty,
    io_failure,
    unknown_school,
    empty_keyword,
    empty_text,
    empty_sentence,
    empty_list,
    over_budget,
    summary_service_error,
    sentiment_service_error,
    no_articles,
    malformed_results,
    config_error,
};

const char* errc_name(errc code);

/// Exception carrying a stable error code alongside the message.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace newsbias
