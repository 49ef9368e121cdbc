#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace newsbias {

bool is_space(char c);

std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);
char ascii_lower(char c);

/// Collapses runs of whitespace to single spaces and trims the ends.
std::string normalize_whitespace(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);
std::vector<std::string> split_whitespace(std::string_view s);

/// Splits text on blank lines (one or more empty/whitespace-only lines).
/// Paragraphs are returned trimmed; empty paragraphs are dropped.
std::vector<std::string> split_paragraphs(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool contains_ci(std::string_view haystack, std::string_view needle);
bool equals_ci(std::string_view a, std::string_view b);

// FNV-1a, used for fixture file names and run manifest ids.
std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

bool valid_utf8(std::string_view s);

/// Replaces invalid UTF-8 byte sequences with U+FFFD.
std::string sanitize_utf8(std::string_view s);

/// Decodes ISO-8859-1 / windows-1252 bytes into UTF-8.
std::string latin1_to_utf8(std::string_view s);

} // namespace newsbias
