#include "newsbias/sentiment.hpp"

#include "newsbias/errors.hpp"
#include "newsbias/strings.hpp"

#include "json.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace newsbias {

namespace {

constexpr double kBIncr = 0.293;
constexpr double kBDecr = -0.293;
constexpr double kCIncr = 0.733;
constexpr double kNScalar = -0.74;
constexpr double kNormAlpha = 15.0;

const std::set<std::string>& negate_words() {
    static const std::set<std::string> words = {
        "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt",
        "doesnt", "ain't", "aren't", "can't", "couldn't", "daren't", "didn't",
        "doesn't", "dont", "hadnt", "hasnt", "havent", "isnt", "mightnt",
        "mustnt", "neither", "don't", "hadn't", "hasn't", "haven't", "isn't",
        "mightn't", "mustn't", "neednt", "needn't", "never", "none", "nope",
        "nor", "not", "nothing", "nowhere", "oughtnt", "shant", "shouldnt",
        "uhuh", "wasnt", "werent", "oughtn't", "shan't", "shouldn't", "uh-uh",
        "wasn't", "weren't", "without", "wont", "wouldnt", "won't", "wouldn't",
        "rarely", "seldom", "despite"};
    return words;
}

const std::map<std::string, double>& booster_dict() {
    static const std::map<std::string, double> dict = {
        {"absolutely", kBIncr}, {"amazingly", kBIncr}, {"awfully", kBIncr},
        {"completely", kBIncr}, {"considerable", kBIncr}, {"considerably", kBIncr},
        {"decidedly", kBIncr}, {"deeply", kBIncr}, {"effing", kBIncr},
        {"enormous", kBIncr}, {"enormously", kBIncr}, {"entirely", kBIncr},
        {"especially", kBIncr}, {"exceptional", kBIncr}, {"exceptionally", kBIncr},
        {"extreme", kBIncr}, {"extremely", kBIncr}, {"fabulously", kBIncr},
        {"flipping", kBIncr}, {"flippin", kBIncr}, {"frackin", kBIncr},
        {"fracking", kBIncr}, {"fricking", kBIncr}, {"frickin", kBIncr},
        {"frigging", kBIncr}, {"friggin", kBIncr}, {"fully", kBIncr},
        {"fuckin", kBIncr}, {"fucking", kBIncr}, {"fuggin", kBIncr},
        {"fugging", kBIncr}, {"greatly", kBIncr}, {"hella", kBIncr},
        {"highly", kBIncr}, {"hugely", kBIncr}, {"incredible", kBIncr},
        {"incredibly", kBIncr}, {"intensely", kBIncr}, {"major", kBIncr},
        {"majorly", kBIncr}, {"more", kBIncr}, {"most", kBIncr},
        {"particularly", kBIncr}, {"purely", kBIncr}, {"quite", kBIncr},
        {"really", kBIncr}, {"remarkably", kBIncr}, {"so", kBIncr},
        {"substantially", kBIncr}, {"thoroughly", kBIncr}, {"total", kBIncr},
        {"totally", kBIncr}, {"tremendous", kBIncr}, {"tremendously", kBIncr},
        {"uber", kBIncr}, {"unbelievably", kBIncr}, {"unusually", kBIncr},
        {"utter", kBIncr}, {"utterly", kBIncr}, {"very", kBIncr},
        {"almost", kBDecr}, {"barely", kBDecr}, {"hardly", kBDecr},
        {"just enough", kBDecr}, {"kind of", kBDecr}, {"kinda", kBDecr},
        {"kindof", kBDecr}, {"kind-of", kBDecr}, {"less", kBDecr},
        {"little", kBDecr}, {"marginal", kBDecr}, {"marginally", kBDecr},
        {"occasional", kBDecr}, {"occasionally", kBDecr}, {"partly", kBDecr},
        {"scarce", kBDecr}, {"scarcely", kBDecr}, {"slight", kBDecr},
        {"slightly", kBDecr}, {"somewhat", kBDecr}, {"sort of", kBDecr},
        {"sorta", kBDecr}, {"sortof", kBDecr}, {"sort-of", kBDecr}};
    return dict;
}

const std::map<std::string, double>& special_cases() {
    static const std::map<std::string, double> cases = {
        {"the shit", 3.0},       {"the bomb", 3.0},   {"bad ass", 1.5},
        {"badass", 1.5},         {"bus stop", 0.0},   {"yeah right", -2.0},
        {"kiss of death", -1.5}, {"to die for", 3.0}, {"beating heart", 3.1},
        {"broken heart", -2.9}};
    return cases;
}

bool ascii_punct(char c) {
    static const std::string punct = "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";
    return punct.find(c) != std::string::npos;
}

bool token_all_caps(const std::string& w) {
    bool has_alpha = false;
    for (char c : w) {
        if (c >= 'a' && c <= 'z') return false;
        if (c >= 'A' && c <= 'Z') has_alpha = true;
    }
    return has_alpha;
}

bool is_negator(const std::string& lower_word) {
    if (negate_words().count(lower_word)) return true;
    return lower_word.find("n't") != std::string::npos;
}

double normalize_score(double score) {
    double norm = score / std::sqrt(score * score + kNormAlpha);
    if (norm < -1.0) return -1.0;
    if (norm > 1.0) return 1.0;
    return norm;
}

// Scoring context for one sentence.
struct scorer {
    const sentiment_lexicon& lex;
    std::vector<std::string> words;
    std::vector<std::string> lower;
    bool cap_diff = false;

    bool in_lexicon(const std::string& w) const { return lex.valences.count(w) > 0; }

    double scalar_inc_dec(std::size_t idx, double valence) const {
        auto it = lex.boosters.find(lower[idx]);
        if (it == lex.boosters.end()) return 0.0;
        double scalar = it->second;
        if (valence < 0) scalar = -scalar;
        if (token_all_caps(words[idx]) && cap_diff)
            scalar += valence > 0 ? kCIncr : -kCIncr;
        return scalar;
    }

    double negation_check(double valence, int start, std::size_t i) const {
        if (start == 0) {
            if (is_negator(lower[i - 1])) valence *= kNScalar;
        } else if (start == 1) {
            if (lower[i - 2] == "never" &&
                (lower[i - 1] == "so" || lower[i - 1] == "this")) {
                valence *= 1.25;
            } else if (lower[i - 2] == "without" && lower[i - 1] == "doubt") {
                // explicit pass
            } else if (is_negator(lower[i - 2])) {
                valence *= kNScalar;
            }
        } else if (start == 2) {
            // Grouping mirrors the reference scorer: the trailing so/this
            // test applies on its own.
            bool never_clause = (lower[i - 3] == "never" &&
                                 (lower[i - 2] == "so" || lower[i - 2] == "this")) ||
                                (lower[i - 1] == "so" || lower[i - 1] == "this");
            if (never_clause) {
                valence *= 1.25;
            } else if (lower[i - 3] == "without" &&
                       (lower[i - 2] == "doubt" || lower[i - 1] == "doubt")) {
                // explicit pass
            } else if (is_negator(lower[i - 3])) {
                valence *= kNScalar;
            }
        }
        return valence;
    }

    double special_idioms_check(double valence, std::size_t i) const {
        std::string onezero = lower[i - 1] + " " + lower[i];
        std::string twoonezero = lower[i - 2] + " " + lower[i - 1] + " " + lower[i];
        std::string twoone = lower[i - 2] + " " + lower[i - 1];
        std::string threetwoone =
            lower[i - 3] + " " + lower[i - 2] + " " + lower[i - 1];
        std::string threetwo = lower[i - 3] + " " + lower[i - 2];
        for (const std::string* seq :
             {&onezero, &twoonezero, &twoone, &threetwoone, &threetwo}) {
            auto it = lex.idioms.find(*seq);
            if (it != lex.idioms.end()) {
                valence = it->second;
                break;
            }
        }
        if (words.size() - 1 > i) {
            std::string zeroone = lower[i] + " " + lower[i + 1];
            auto it = lex.idioms.find(zeroone);
            if (it != lex.idioms.end()) valence = it->second;
        }
        if (words.size() - 1 > i + 1) {
            std::string zeroonetwo =
                lower[i] + " " + lower[i + 1] + " " + lower[i + 2];
            auto it = lex.idioms.find(zeroonetwo);
            if (it != lex.idioms.end()) valence = it->second;
        }
        for (const std::string* gram : {&threetwoone, &threetwo, &twoone}) {
            auto it = lex.boosters.find(*gram);
            if (it != lex.boosters.end()) valence += it->second;
        }
        return valence;
    }

    double least_check(double valence, std::size_t i) const {
        if (i > 1 && !in_lexicon(lower[i - 1]) && lower[i - 1] == "least") {
            if (lower[i - 2] != "at" && lower[i - 2] != "very") valence *= kNScalar;
        } else if (i > 0 && !in_lexicon(lower[i - 1]) && lower[i - 1] == "least") {
            valence *= kNScalar;
        }
        return valence;
    }

    double word_valence(std::size_t i) const {
        auto it = lex.valences.find(lower[i]);
        if (it == lex.valences.end()) return 0.0;
        double valence = it->second;

        // "no" negates a following lexicon word instead of scoring itself.
        if (lower[i] == "no" && i + 1 < words.size() && in_lexicon(lower[i + 1]))
            valence = 0.0;
        if ((i >= 1 && lower[i - 1] == "no") || (i >= 2 && lower[i - 2] == "no") ||
            (i >= 3 && lower[i - 3] == "no" &&
             (lower[i - 1] == "or" || lower[i - 1] == "nor")))
            valence = it->second * kNScalar;

        if (token_all_caps(words[i]) && cap_diff)
            valence += valence > 0 ? kCIncr : -kCIncr;

        for (int start = 0; start < 3; ++start) {
            if (static_cast<int>(i) <= start) break;
            std::size_t back = i - static_cast<std::size_t>(start + 1);
            if (in_lexicon(lower[back])) continue;
            double s = scalar_inc_dec(back, valence);
            if (start == 1 && s != 0.0) s *= 0.95;
            if (start == 2 && s != 0.0) s *= 0.9;
            valence += s;
            valence = negation_check(valence, start, i);
            if (start == 2) valence = special_idioms_check(valence, i);
        }
        return least_check(valence, i);
    }
};

// Mirrors the reference scorer's first-index-by-value update order, which
// matters when several tokens share a valence.
void but_check(const std::vector<std::string>& lower, std::vector<double>& sentiments) {
    std::size_t but_index = lower.size();
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (lower[i] == "but") {
            but_index = i;
            break;
        }
    }
    if (but_index == lower.size()) return;
    for (std::size_t i = 0; i < sentiments.size(); ++i) {
        double value = sentiments[i];
        std::size_t si = 0;
        while (si < sentiments.size() && sentiments[si] != value) ++si;
        if (si >= sentiments.size()) continue;
        if (si < but_index)
            sentiments[si] = value * 0.5;
        else if (si > but_index)
            sentiments[si] = value * 1.5;
    }
}

double punctuation_emphasis(const std::string& text) {
    int ep = 0, qm = 0;
    for (char c : text) {
        if (c == '!') ++ep;
        if (c == '?') ++qm;
    }
    if (ep > 4) ep = 4;
    double amp = ep * 0.292;
    if (qm > 1) amp += qm <= 3 ? qm * 0.18 : 0.96;
    return amp;
}

sentiment_triple score_valence(const std::vector<double>& sentiments,
                               const std::string& text) {
    sentiment_triple t;
    if (sentiments.empty()) return t;  // no scorable tokens: fully neutral

    double sum_s = 0.0;
    for (double v : sentiments) sum_s += v;
    double punct = punctuation_emphasis(text);
    if (sum_s > 0)
        sum_s += punct;
    else if (sum_s < 0)
        sum_s -= punct;
    t.compound = normalize_score(sum_s);

    double pos_sum = 0.0, neg_sum = 0.0;
    int neu_count = 0;
    for (double v : sentiments) {
        if (v > 0) pos_sum += v + 1.0;
        if (v < 0) neg_sum += v - 1.0;
        if (v == 0) ++neu_count;
    }
    if (pos_sum > std::fabs(neg_sum))
        pos_sum += punct;
    else if (pos_sum < std::fabs(neg_sum))
        neg_sum -= punct;

    double total = pos_sum + std::fabs(neg_sum) + neu_count;
    t.pos = std::fabs(pos_sum / total);
    t.neg = std::fabs(neg_sum / total);
    t.neu = std::fabs(neu_count / total);
    return t;
}

} // namespace

std::vector<std::string> sentiment_tokens(std::string_view text) {
    std::vector<std::string> out;
    for (const std::string& raw : split_whitespace(text)) {
        std::size_t b = 0, e = raw.size();
        while (b < e && ascii_punct(raw[b])) ++b;
        while (e > b && ascii_punct(raw[e - 1])) --e;
        if (e > b) out.push_back(raw.substr(b, e - b));
    }
    return out;
}

sentiment_lexicon builtin_rules() {
    sentiment_lexicon lex;
    lex.boosters = booster_dict();
    lex.negations = negate_words();
    lex.idioms = special_cases();
    return lex;
}

sentiment_lexicon load_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::config_error, "cannot open lexicon " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string raw = buf.str();

    sentiment_lexicon lex = builtin_rules();
    lex.id = fnv1a64_hex(raw);
    std::istringstream lines(raw);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        std::size_t tab = t.find('\t');
        if (tab == std::string_view::npos)
            fail(errc::config_error, path.string() + ":" + std::to_string(lineno) +
                                         ": expected token<TAB>valence");
        std::string token = to_lower(trim(t.substr(0, tab)));
        std::string_view rest = trim(t.substr(tab + 1));
        std::size_t tab2 = rest.find('\t');  // extra columns tolerated
        if (tab2 != std::string_view::npos) rest = trim(rest.substr(0, tab2));
        char* end = nullptr;
        std::string value(rest);
        double valence = std::strtod(value.c_str(), &end);
        if (token.empty() || end == value.c_str() || !std::isfinite(valence))
            fail(errc::config_error, path.string() + ":" + std::to_string(lineno) +
                                         ": bad valence '" + value + "'");
        lex.valences[token] = valence;
    }
    if (lex.valences.empty())
        fail(errc::config_error, "lexicon " + path.string() + " has no entries");
    return lex;
}

rule_sentiment::rule_sentiment(sentiment_lexicon lexicon) : lex_(std::move(lexicon)) {
    if (lex_.boosters.empty()) {
        sentiment_lexicon rules = builtin_rules();
        lex_.boosters = std::move(rules.boosters);
        lex_.negations = std::move(rules.negations);
        lex_.idioms = std::move(rules.idioms);
    }
}

sentiment_triple rule_sentiment::score(const std::string& sentence) {
    if (trim(sentence).empty()) fail(errc::empty_sentence, "sentence is empty");

    scorer ctx{lex_, sentiment_tokens(sentence), {}, false};
    ctx.lower.reserve(ctx.words.size());
    for (const auto& w : ctx.words) ctx.lower.push_back(to_lower(w));

    int caps = 0;
    for (const auto& w : ctx.words) caps += token_all_caps(w) ? 1 : 0;
    ctx.cap_diff = caps > 0 && caps < static_cast<int>(ctx.words.size());

    std::vector<double> sentiments;
    sentiments.reserve(ctx.words.size());
    for (std::size_t i = 0; i < ctx.words.size(); ++i) {
        // Boosters and "kind of" contribute through neighbors only.
        if (ctx.lex.boosters.count(ctx.lower[i]) ||
            (i + 1 < ctx.words.size() && ctx.lower[i] == "kind" &&
             ctx.lower[i + 1] == "of")) {
            sentiments.push_back(0.0);
            continue;
        }
        sentiments.push_back(ctx.word_valence(i));
    }
    but_check(ctx.lower, sentiments);
    return score_valence(sentiments, sentence);
}

service_sentiment::service_sentiment(std::string endpoint,
                                     std::shared_ptr<http_transport> transport,
                                     int max_attempts, std::vector<int> backoff_ms)
    : endpoint_(std::move(endpoint)), transport_(std::move(transport)),
      max_attempts_(max_attempts), backoff_ms_(std::move(backoff_ms)) {}

sentiment_triple service_sentiment::score(const std::string& sentence) {
    if (trim(sentence).empty()) fail(errc::empty_sentence, "sentence is empty");

    nlohmann::json req = {{"text", sentence}};
    http_response resp;
    for (int attempt = 1; attempt <= max_attempts_; ++attempt) {
        resp = transport_->post(endpoint_, req.dump(), "application/json");
        bool transient = resp.status == 0 || resp.status >= 500;
        if (!transient || attempt == max_attempts_) break;
        std::size_t slot = static_cast<std::size_t>(attempt - 1);
        int delay = slot < backoff_ms_.size() ? backoff_ms_[slot] : 0;
        if (delay > 0) std::this_thread::sleep_for(std::chrono::milliseconds(delay));
    }
    if (resp.status < 200 || resp.status >= 300)
        fail(errc::sentiment_service_error,
             endpoint_ + ": " + (resp.status == 0 ? resp.error
                                                  : "HTTP " + std::to_string(resp.status)));

    nlohmann::json body = nlohmann::json::parse(resp.body, nullptr, false);
    if (body.is_discarded() || !body.contains("pos") || !body.contains("neg") ||
        !body.contains("neu"))
        fail(errc::sentiment_service_error, endpoint_ + ": malformed response body");

    sentiment_triple t;
    t.pos = body["pos"].get<double>();
    t.neg = body["neg"].get<double>();
    t.neu = body["neu"].get<double>();
    t.compound = body.value("compound", 0.0);
    return t;
}

sentiment_triple aggregate(const std::vector<sentiment_triple>& triples) {
    if (triples.empty()) fail(errc::empty_list, "no sentiment triples to aggregate");
    sentiment_triple mean;
    mean.pos = mean.neg = mean.neu = mean.compound = 0.0;
    for (const auto& t : triples) {
        mean.pos += t.pos;
        mean.neg += t.neg;
        mean.neu += t.neu;
        mean.compound += t.compound;
    }
    double n = static_cast<double>(triples.size());
    mean.pos /= n;
    mean.neg /= n;
    mean.neu /= n;
    mean.compound /= n;
    return mean;
}

std::vector<std::string> split_sentences(const std::string& text) {
    if (trim(text).empty()) fail(errc::empty_text, "text is empty");

    static const std::set<std::string> kAbbrev = {
        "mr",   "mrs",  "ms",   "dr",   "prof", "sr",   "jr",   "st",
        "vs",   "etc",  "inc",  "ltd",  "co",   "corp", "gov",  "sen",
        "rep",  "gen",  "col",  "capt", "lt",   "sgt",  "maj",  "rev",
        "hon",  "pres", "supt", "det",  "insp", "adm",  "fig",  "no",
        "vol",  "pp",   "op",   "cf",   "al",   "jan",  "feb",  "mar",
        "apr",  "jun",  "jul",  "aug",  "sep",  "sept", "oct",  "nov",
        "dec",  "mon",  "tue",  "wed",  "thu",  "fri",  "sat",  "sun",
        "dept", "univ", "assn", "approx", "est", "min",  "max"};

    std::vector<std::string> out;
    auto flush = [&](std::size_t begin, std::size_t end) {
        if (end <= begin) return;
        std::string_view s = trim(std::string_view(text).substr(begin, end - begin));
        if (!s.empty()) out.emplace_back(s);
    };

    const std::size_t n = text.size();
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i) {
        char c = text[i];
        if (c == '\n') {
            // A blank line always ends the sentence.
            std::size_t j = i + 1;
            while (j < n && (text[j] == ' ' || text[j] == '\t' || text[j] == '\r')) ++j;
            if (j < n && text[j] == '\n') {
                flush(start, i);
                start = j + 1;
                i = j;
            }
            continue;
        }
        if (c != '.' && c != '!' && c != '?') continue;

        std::size_t j = i + 1;
        while (j < n && (text[j] == '.' || text[j] == '!' || text[j] == '?')) ++j;
        while (j < n && (text[j] == '"' || text[j] == '\'' || text[j] == ')' ||
                         text[j] == ']'))
            ++j;
        std::size_t k = j;
        while (k < n && is_space(text[k])) ++k;

        bool at_end = k >= n;
        bool capital_next = k > j && k < n && text[k] >= 'A' && text[k] <= 'Z';
        if (!at_end && !capital_next) {
            i = j - 1;
            continue;
        }
        if (c == '.') {
            std::size_t e = i, b = i;
            while (b > start && std::isalpha(static_cast<unsigned char>(text[b - 1])))
                --b;
            std::string word = to_lower(std::string_view(text).substr(b, e - b));
            bool initial = word.size() == 1;
            if (initial || kAbbrev.count(word)) {
                i = j - 1;
                continue;
            }
        }
        flush(start, j);
        start = k;
        i = k == 0 ? 0 : k - 1;
    }
    flush(start, n);
    return out;
}

} // namespace newsbias
