#include "newsbias/query.hpp"

#include "newsbias/errors.hpp"
#include "newsbias/strings.hpp"

#include <cctype>

namespace newsbias {

namespace {

bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool contains_keyword(const std::string& text, const std::string& needle,
                      match_mode mode) {
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        if (mode == match_mode::substring) return true;
        bool left_ok = pos == 0 || !word_char(text[pos - 1]);
        std::size_t end = pos + needle.size();
        bool right_ok = end >= text.size() || !word_char(text[end]);
        if (left_ok && right_ok) return true;
        ++pos;
    }
    return false;
}

} // namespace

bool matches(const article_record& article, const keyword_query& q) {
    std::string keyword(trim(q.keyword));
    if (keyword.empty()) fail(errc::empty_keyword, "keyword is empty");

    std::string haystack = q.search_titles ? article.title + "\n" + article.text
                                           : article.text;
    if (!q.case_sensitive) {
        haystack = to_lower(haystack);
        keyword = to_lower(keyword);
    }
    return contains_keyword(haystack, keyword, q.mode);
}

std::vector<std::size_t> query(const std::vector<article_record>& corpus,
                               const keyword_query& q) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        if (matches(corpus[i], q)) out.push_back(i);
    return out;
}

std::map<std::string, int> keyword_distribution(const std::vector<article_record>& corpus,
                                                const std::vector<keyword_query>& queries) {
    std::map<std::string, int> counts;
    for (const auto& q : queries)
        counts[q.keyword] = static_cast<int>(query(corpus, q).size());
    return counts;
}

} // namespace newsbias
