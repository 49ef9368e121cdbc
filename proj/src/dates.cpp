#include "newsbias/dates.hpp"

#include "newsbias/strings.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <ctime>

namespace newsbias {

namespace {

const std::array<std::string_view, 12> kMonthNames = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Reads 1..max_digits digits; returns -1 on failure.
int read_int(std::string_view s, std::size_t& i, int min_digits, int max_digits) {
    int value = 0;
    int digits = 0;
    while (i < s.size() && is_digit(s[i]) && digits < max_digits) {
        value = value * 10 + (s[i] - '0');
        ++i;
        ++digits;
    }
    if (digits < min_digits) return -1;
    return value;
}

// Matches a month name (full or abbreviated to >=3 chars when abbrev).
int read_month_name(std::string_view s, std::size_t& i, bool full) {
    for (int m = 0; m < 12; ++m) {
        std::string_view name = kMonthNames[m];
        std::size_t len = full ? name.size() : 3;
        if (i + len > s.size()) continue;
        if (!equals_ci(s.substr(i, len), name.substr(0, len))) continue;
        std::size_t consumed = len;
        if (!full) {
            // Accept "sept" and full names where an abbreviation is asked for.
            while (i + consumed < s.size() && consumed < name.size() &&
                   ascii_lower(s[i + consumed]) == name[consumed]) {
                ++consumed;
            }
            if (m == 8 && i + 4 <= s.size() && equals_ci(s.substr(i, 4), "sept"))
                consumed = std::max<std::size_t>(consumed, 4);
        }
        i += consumed;
        return m + 1;
    }
    return -1;
}

} // namespace

std::optional<civil_date> parse_date(std::string_view text, std::string_view pattern) {
    std::string_view s = trim(text);
    std::size_t i = 0;
    int year = -1, month = -1, day = -1;
    std::size_t p = 0;
    while (p < pattern.size()) {
        char pc = pattern[p];
        if (pc == '%' && p + 1 < pattern.size()) {
            char tok = pattern[p + 1];
            p += 2;
            switch (tok) {
            case 'Y': {
                std::size_t save = i;
                year = read_int(s, i, 4, 4);
                if (year < 0) { i = save; return std::nullopt; }
                break;
            }
            case 'm':
                month = read_int(s, i, 1, 2);
                if (month < 0) return std::nullopt;
                break;
            case 'd':
                day = read_int(s, i, 1, 2);
                if (day < 0) return std::nullopt;
                break;
            case 'b':
                month = read_month_name(s, i, false);
                if (month < 0) return std::nullopt;
                break;
            case 'B':
                month = read_month_name(s, i, true);
                if (month < 0) return std::nullopt;
                break;
            case '%':
                if (i >= s.size() || s[i] != '%') return std::nullopt;
                ++i;
                break;
            default:
                return std::nullopt; // unknown token
            }
        } else {
            if (i >= s.size() || s[i] != pc) return std::nullopt;
            ++i;
            ++p;
        }
    }
    if (i != s.size()) return std::nullopt;
    if (year < 0 || month < 1 || month > 12 || day < 1) return std::nullopt;
    civil_date d = std::chrono::year{year} / month / day;
    if (!d.ok()) return std::nullopt;
    return d;
}

std::optional<civil_date> parse_date_any(std::string_view text,
                                         std::span<const std::string> patterns) {
    for (const std::string& pat : patterns) {
        if (auto d = parse_date(text, pat)) return d;
    }
    return std::nullopt;
}

std::string format_iso_date(civil_date d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(d.year()),
                  unsigned(d.month()), unsigned(d.day()));
    return buf;
}

std::optional<civil_date> parse_iso_date(std::string_view s) {
    return parse_date(s, "%Y-%m-%d");
}

std::string utc_timestamp_from_epoch(std::int64_t seconds) {
    std::time_t t = static_cast<std::time_t>(seconds);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ",
                  tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                  tm.tm_min, tm.tm_sec);
    return buf;
}

std::string utc_timestamp_now() {
    // SOURCE_DATE_EPOCH pins timestamps for reproducible runs.
    if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0') return utc_timestamp_from_epoch(v);
    }
    return utc_timestamp_from_epoch(
        std::chrono::duration_cast<std::chrono::seconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count());
}

} // namespace newsbias
