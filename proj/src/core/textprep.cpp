#include "core/textprep.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

#include "core/error.hpp"

namespace fusionlens {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_upper_or_digit(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return std::isupper(u) != 0 || std::isdigit(u) != 0;
}
bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

const std::unordered_set<std::string>& abbreviations() {
    static const std::unordered_set<std::string> guard = {
        "mr", "mrs", "ms", "dr", "prof", "rev", "fr", "sr", "jr", "st", "mt",
        "etc", "vs", "e.g", "i.e", "cf", "al", "fig", "eq", "ca", "approx",
        "inc", "ltd", "co", "corp", "dept", "univ", "est",
    };
    return guard;
}

// Word immediately before position `pos`, scanning letters and internal
// periods ("e.g" for "e.g.").
std::string preceding_word(std::string_view text, std::size_t pos) {
    std::size_t end = pos;
    std::size_t begin = end;
    while (begin > 0) {
        char c = text[begin - 1];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '.') {
            --begin;
        } else {
            break;
        }
    }
    std::string word;
    for (std::size_t i = begin; i < end; ++i) {
        word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[i]))));
    }
    while (!word.empty() && word.front() == '.') word.erase(word.begin());
    return word;
}

std::string_view trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

}  // namespace

std::vector<std::string> split_words(std::string_view text) {
    std::vector<std::string> words;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        std::size_t begin = i;
        while (i < text.size() && !is_space(text[i])) ++i;
        if (i > begin) words.emplace_back(text.substr(begin, i - begin));
    }
    return words;
}

std::string normalize_token(std::string_view token) {
    std::size_t b = 0;
    std::size_t e = token.size();
    while (b < e && std::ispunct(static_cast<unsigned char>(token[b]))) ++b;
    while (e > b && std::ispunct(static_cast<unsigned char>(token[e - 1]))) --e;
    std::string out;
    out.reserve(e - b);
    for (std::size_t i = b; i < e; ++i) {
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(token[i]))));
    }
    return out;
}

SegmentedDocument segment(const Document& doc) {
    std::string_view text = doc.text;
    if (trim(text).empty()) {
        raise(ErrorCode::invalid_argument,
              "document '" + doc.id + "' is empty or whitespace-only");
    }

    std::vector<std::string> sentences;
    std::size_t sentence_begin = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!is_terminator(text[i])) {
            ++i;
            continue;
        }
        std::size_t run_begin = i;
        while (i < text.size() && is_terminator(text[i])) ++i;

        bool at_end = true;
        for (std::size_t j = i; j < text.size(); ++j) {
            if (!is_space(text[j])) {
                at_end = false;
                break;
            }
        }
        bool boundary = at_end;
        if (!boundary && is_space(text[i])) {
            std::size_t j = i;
            while (j < text.size() && is_space(text[j])) ++j;
            boundary = j < text.size() && is_upper_or_digit(text[j]);
        }
        bool single_period = (i - run_begin == 1) && text[run_begin] == '.';
        if (boundary && single_period && !at_end &&
            abbreviations().count(preceding_word(text, run_begin)) != 0) {
            boundary = false;
        }
        if (boundary) {
            std::string_view slice = trim(text.substr(sentence_begin, i - sentence_begin));
            if (!slice.empty()) sentences.emplace_back(slice);
            sentence_begin = i;
        }
    }
    std::string_view tail = trim(text.substr(sentence_begin));
    if (!tail.empty()) sentences.emplace_back(tail);

    SegmentedDocument out;
    out.document = doc;
    out.sentences = std::move(sentences);
    out.sentence_count = out.sentences.size();
    out.word_count = 0;
    for (const auto& sentence : out.sentences) {
        out.word_count += split_words(sentence).size();
    }
    return out;
}

FilterResult filter_corpus(const std::vector<SegmentedDocument>& docs,
                           std::optional<int> min_words,
                           std::optional<int> min_sentences) {
    if (min_words && *min_words <= 0) {
        raise(ErrorCode::invalid_argument, "min_words must be positive");
    }
    if (min_sentences && *min_sentences <= 0) {
        raise(ErrorCode::invalid_argument, "min_sentences must be positive");
    }

    FilterResult result;
    result.non_replication = min_words.has_value() && min_sentences.has_value();
    for (const auto& doc : docs) {
        bool keep = true;
        if (min_words && doc.word_count < static_cast<std::size_t>(*min_words)) keep = false;
        if (min_sentences && doc.sentence_count < static_cast<std::size_t>(*min_sentences)) {
            keep = false;
        }
        if (keep) {
            result.retained.push_back(doc);
        } else {
            ++result.dropped;
        }
    }
    return result;
}

ChunkResult chunk(const SegmentedDocument& doc, int max_words) {
    if (max_words <= 0) {
        raise(ErrorCode::invalid_argument, "max_words must be positive");
    }

    ChunkResult result;
    std::vector<std::string> current;
    std::size_t current_words = 0;

    auto flush = [&](bool oversized) {
        if (current.empty()) return;
        Document chunk_doc;
        chunk_doc.id = doc.document.id + "#" + std::to_string(result.chunks.size());
        std::string text;
        for (std::size_t k = 0; k < current.size(); ++k) {
            if (k > 0) text += ' ';
            text += current[k];
        }
        chunk_doc.text = std::move(text);
        chunk_doc.group = doc.document.group;
        chunk_doc.truth_score = doc.document.truth_score;
        chunk_doc.parent_id = doc.document.id;
        if (oversized) result.oversized.push_back(chunk_doc.id);
        result.chunks.push_back(std::move(chunk_doc));
        current.clear();
        current_words = 0;
    };

    for (const auto& sentence : doc.sentences) {
        std::size_t words = split_words(sentence).size();
        if (words > static_cast<std::size_t>(max_words)) {
            // never split mid-sentence; emit as its own flagged chunk
            flush(false);
            current.push_back(sentence);
            current_words = words;
            flush(true);
            continue;
        }
        if (current_words + words > static_cast<std::size_t>(max_words)) {
            flush(false);
        }
        current.push_back(sentence);
        current_words += words;
    }
    flush(false);
    return result;
}

}  // namespace fusionlens
