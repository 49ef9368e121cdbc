#include "newsbias/corpus_store.hpp"

#include "newsbias/errors.hpp"
#include "newsbias/strings.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

namespace newsbias {

namespace {

using nlohmann::json;

bool valid_school_id(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_')
            return false;
    return true;
}

std::vector<article_record> read_lines(const std::filesystem::path& file) {
    std::vector<article_record> out;
    std::ifstream in(file, std::ios::binary);
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        out.push_back(corpus_store::from_json_line(line));
    }
    return out;
}

// Last write wins per URL; survivors keep the position of their winning line.
std::vector<article_record> dedupe(std::vector<article_record> lines) {
    std::map<std::string, std::size_t> last;
    for (std::size_t i = 0; i < lines.size(); ++i) last[lines[i].url] = i;
    std::vector<article_record> out;
    out.reserve(last.size());
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (last[lines[i].url] == i) out.push_back(std::move(lines[i]));
    return out;
}

std::vector<article_record> canonical_order(std::vector<article_record> records) {
    std::stable_sort(records.begin(), records.end(),
                     [](const article_record& a, const article_record& b) {
                         return a.date < b.date;
                     });
    return records;
}

} // namespace

corpus_store::corpus_store(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) fail(errc::io_failure, "cannot create corpus dir " + dir_.string());
}

std::filesystem::path corpus_store::school_file(const std::string& school_id) const {
    return dir_ / (school_id + ".jsonl");
}

std::string corpus_store::to_json_line(const article_record& rec) {
    json j;
    j["school"] = rec.school;
    j["url"] = rec.url;
    j["date"] = format_iso_date(rec.date);
    j["title"] = sanitize_utf8(rec.title);
    j["text"] = sanitize_utf8(rec.text);
    j["source_kind"] = to_string(rec.kind);
    j["fetched_at"] = rec.fetched_at;
    if (rec.encoding_flagged) j["encoding_flagged"] = true;
    return j.dump();
}

article_record corpus_store::from_json_line(const std::string& line) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        fail(errc::io_failure, "corrupt corpus line: " + line.substr(0, 80));
    article_record rec;
    rec.school = j.value("school", "");
    rec.url = j.value("url", "");
    auto date = parse_iso_date(j.value("date", ""));
    if (!date || rec.school.empty() || rec.url.empty())
        fail(errc::io_failure, "corrupt corpus line: " + line.substr(0, 80));
    rec.date = *date;
    rec.title = j.value("title", "");
    rec.text = j.value("text", "");
    rec.kind = source_kind_from(j.value("source_kind", "Text")).value_or(source_kind::text);
    rec.fetched_at = j.value("fetched_at", "");
    rec.encoding_flagged = j.value("encoding_flagged", false);
    return rec;
}

void corpus_store::load_url_cache(const std::string& school_id) {
    if (urls_.count(school_id)) return;
    std::set<std::string>& cache = urls_[school_id];
    for (const auto& rec : read_lines(school_file(school_id))) cache.insert(rec.url);
}

void corpus_store::put(const article_record& rec) {
    if (!valid_school_id(rec.school))
        fail(errc::io_failure, "invalid school id '" + rec.school + "'");
    load_url_cache(rec.school);
    std::ofstream out(school_file(rec.school), std::ios::binary | std::ios::app);
    if (!out) fail(errc::io_failure, "cannot append to " + school_file(rec.school).string());
    out << to_json_line(rec) << '\n';
    if (!out) fail(errc::io_failure, "short write to " + school_file(rec.school).string());
    urls_[rec.school].insert(rec.url);
}

bool corpus_store::contains(const std::string& school_id, const std::string& url) {
    if (!valid_school_id(school_id)) return false;
    load_url_cache(school_id);
    return urls_[school_id].count(url) > 0;
}

std::vector<article_record> corpus_store::articles(const std::string& school_id) const {
    return canonical_order(dedupe(read_lines(school_file(school_id))));
}

std::vector<day_record> corpus_store::iterate(const std::string& school_id,
                                              std::optional<civil_date> from,
                                              std::optional<civil_date> to) const {
    std::vector<day_record> days;
    for (const auto& rec : articles(school_id)) {
        if (from && rec.date < *from) continue;
        if (to && *to < rec.date) continue;
        if (days.empty() || days.back().date != rec.date)
            days.push_back({school_id, rec.date, {}});
        days.back().articles.push_back(rec);
    }
    return days;
}

corpus_stats corpus_store::stats(const std::string& school_id) const {
    std::vector<article_record> records = articles(school_id);
    if (records.empty())
        fail(errc::unknown_school, "no corpus for school '" + school_id + "'");
    corpus_stats s;
    s.school_id = school_id;
    s.earliest_date = records.front().date;
    s.latest_date = records.back().date;
    s.article_count = static_cast<int>(records.size());
    civil_date prev{};
    for (const auto& rec : records) {
        if (s.day_count == 0 || rec.date != prev) ++s.day_count;
        prev = rec.date;
    }
    return s;
}

std::vector<std::string> corpus_store::schools() const {
    std::vector<std::string> out;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir_, ec)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() != ".jsonl") continue;
        out.push_back(entry.path().stem().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string corpus_store::canonical_bytes(const std::string& school_id) const {
    std::string out;
    for (const auto& rec : articles(school_id)) {
        out += to_json_line(rec);
        out += '\n';
    }
    return out;
}

void corpus_store::export_to(const std::filesystem::path& out_dir) const {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) fail(errc::io_failure, "cannot create export dir " + out_dir.string());
    for (const auto& school : schools()) {
        std::ofstream out(out_dir / (school + ".jsonl"), std::ios::binary | std::ios::trunc);
        if (!out) fail(errc::io_failure, "cannot write export for " + school);
        out << canonical_bytes(school);
    }
}

std::string corpus_store::snapshot_id() const {
    std::string all;
    for (const auto& school : schools()) {
        all += school;
        all += '\n';
        all += canonical_bytes(school);
    }
    return fnv1a64_hex(all);
}

} // namespace newsbias
