#pragma once

#include "newsbias/article.hpp"

#include <map>
#include <string>
#include <vector>

namespace newsbias {

enum class match_mode { substring, word_boundary };

struct keyword_query {
    std::string keyword;
    bool case_sensitive = false;
    match_mode mode = match_mode::substring;
    bool search_titles = true;
};

/// True when title+body contain the keyword under the query's rules.
/// Throws error(errc::empty_keyword) when the keyword trims to nothing.
bool matches(const article_record& article, const keyword_query& q);

/// Indices of matching articles, in corpus order.
std::vector<std::size_t> query(const std::vector<article_record>& corpus,
                               const keyword_query& q);

/// Per-keyword match counts; an article matching several keywords counts
/// once in each.
std::map<std::string, int> keyword_distribution(const std::vector<article_record>& corpus,
                                                const std::vector<keyword_query>& queries);

} // namespace newsbias
