#pragma once

#include "newsbias/article.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace newsbias {

struct day_record {
    std::string school_id;
    civil_date date{};
    std::vector<article_record> articles;  // insertion order, urls unique
};

struct corpus_stats {
    std::string school_id;
    civil_date earliest_date{};
    civil_date latest_date{};
    int day_count = 0;      // distinct days, the Count column convention
    int article_count = 0;  // after per-url dedupe
};

/// Newline-delimited JSON store, one file per school. Appends are cheap;
/// readers see last-write-wins per URL. Export rewrites files in the
/// canonical (deduped, day-ordered) form, which round-trips bit-identically.
class corpus_store {
public:
    explicit corpus_store(std::filesystem::path dir);

    void put(const article_record& rec);
    bool contains(const std::string& school_id, const std::string& url);

    /// Day groups in ascending date order; unknown school yields empty.
    std::vector<day_record> iterate(const std::string& school_id,
                                    std::optional<civil_date> from = std::nullopt,
                                    std::optional<civil_date> to = std::nullopt) const;

    /// Deduped records in canonical order (day ascending, then the order
    /// the winning lines appear in the file).
    std::vector<article_record> articles(const std::string& school_id) const;

    corpus_stats stats(const std::string& school_id) const;  // UnknownSchool
    std::vector<std::string> schools() const;                // sorted

    void export_to(const std::filesystem::path& out_dir) const;

    /// FNV-1a 64 over the canonical export bytes of every school file.
    std::string snapshot_id() const;

    const std::filesystem::path& dir() const { return dir_; }

    static std::string to_json_line(const article_record& rec);
    static article_record from_json_line(const std::string& line);

private:
    std::filesystem::path school_file(const std::string& school_id) const;
    void load_url_cache(const std::string& school_id);
    std::string canonical_bytes(const std::string& school_id) const;

    std::filesystem::path dir_;
    std::map<std::string, std::set<std::string>> urls_;  // per-school cache
};

} // namespace newsbias
