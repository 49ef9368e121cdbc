#include "newsbias/errors.hpp"

namespace newsbias {

const char* errc_name(errc code) {
    switch (code) {
    case errc::permission_denied: return "PermissionDenied";
    case errc::strategy_data_missing: return "StrategyDataMissing";
    case errc::fetch_error: return "FetchError";
    case errc::replay_miss: return "ReplayMiss";
    case errc::encoding_undetectable: return "EncodingUndetectable";
    case errc::date_unparseable: return "DateUnparseable";
    case errc::extraction_empty: return "ExtractionEmpty";
    case errc::io_failure: return "IoFailure";
    case errc::unknown_school: return "UnknownSchool";
    case errc::empty_keyword: return "EmptyKeyword";
    case errc::empty_text: return "EmptyText";
    case errc::empty_sentence: return "EmptySentence";
    case errc::empty_list: return "EmptyList";
    case errc::over_budget: return "OverBudget";
    case errc::summary_service_error: return "SummaryServiceError";
    case errc::sentiment_service_error: return "SentimentServiceError";
    case errc::no_articles: return "NoArticles";
    case errc::malformed_results: return "MalformedResults";
    case errc::config_error: return "ConfigError";
    }
    return "UnknownError";
}

} // namespace newsbias
