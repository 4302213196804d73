#ifndef FUSIONLENS_CORE_TEXTPREP_HPP
#define FUSIONLENS_CORE_TEXTPREP_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fusionlens {

// One identified unit of text plus optional evaluation metadata.
struct Document {
    std::string id;
    std::string text;
    std::optional<std::string> group;
    std::optional<double> truth_score;  // ground truth on the 1-7 scale
    std::optional<std::string> parent_id;  // set on chunks
};

struct SegmentedDocument {
    Document document;
    std::vector<std::string> sentences;
    std::size_t word_count = 0;
    std::size_t sentence_count = 0;
};

// Whitespace-delimited tokens, punctuation attached. This is the word
// definition used for all counting and thresholds.
std::vector<std::string> split_words(std::string_view text);

// Lowercases and strips leading/trailing ASCII punctuation; the form used
// for lexicon matching. May come back empty for punctuation-only tokens.
std::string normalize_token(std::string_view token);

// Deterministic rule-based sentence split: a run of . ! ? ends a sentence
// when followed by whitespace and an uppercase letter or digit (or the end
// of the text), unless the preceding word is a known abbreviation and the
// run is a single period. Errors on empty or whitespace-only text.
SegmentedDocument segment(const Document& doc);

struct FilterResult {
    std::vector<SegmentedDocument> retained;
    std::size_t dropped = 0;
    // Applying word and sentence thresholds together departs from the
    // separate evaluations the protocol prescribes; flagged, not refused.
    bool non_replication = false;
};

// Keeps documents meeting the thresholds, preserving input order. Thresholds
// are optional; a non-positive value is an error.
FilterResult filter_corpus(const std::vector<SegmentedDocument>& docs,
                           std::optional<int> min_words,
                           std::optional<int> min_sentences);

struct ChunkResult {
    std::vector<Document> chunks;
    // ids of chunks holding a single sentence longer than max_words
    std::vector<std::string> oversized;
};

// Greedy sentence-preserving packing: whole sentences are appended while the
// running word count stays within max_words. A single sentence longer than
// max_words becomes its own oversized chunk; sentences are never split or
// reordered. Chunk ids are parent_id + "#k" with k zero-based, and chunks
// inherit group and truth_score.
ChunkResult chunk(const SegmentedDocument& doc, int max_words = 300);

}  // namespace fusionlens

#endif
