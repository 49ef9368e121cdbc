#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace newsbias {

using civil_date = std::chrono::year_month_day;

/// Parses `text` against a strftime-like pattern. Supported tokens:
/// %Y four-digit year, %m month (1-2 digits), %d day (1-2 digits),
/// %b abbreviated English month name, %B full English month name,
/// %% a literal percent. All other characters match literally.
/// The whole (trimmed) input must be consumed and the date must be valid.
std::optional<civil_date> parse_date(std::string_view text, std::string_view pattern);

/// Tries each pattern in order; the first that parses wins.
std::optional<civil_date> parse_date_any(std::string_view text,
                                         std::span<const std::string> patterns);

std::string format_iso_date(civil_date d);          // YYYY-MM-DD
std::optional<civil_date> parse_iso_date(std::string_view s);

/// Current time as an ISO-8601 UTC timestamp (YYYY-MM-DDThh:mm:ssZ).
std::string utc_timestamp_now();
std::string utc_timestamp_from_epoch(std::int64_t seconds);

} // namespace newsbias
