#ifndef FUSIONLENS_CORE_CORPUS_HPP
#define FUSIONLENS_CORE_CORPUS_HPP

#include <string>
#include <vector>

#include "core/textprep.hpp"

namespace fusionlens {

// JSONL is the canonical interchange: one object per line with required
// "id" and "text", optional "group", "truth_score" (1-7) and "parent_id".
// CSV (header row, RFC-4180 quoting) is accepted for ingestion only.
// Document ids must be unique within a corpus.

std::vector<Document> corpus_from_jsonl(const std::string& content);
std::vector<Document> corpus_from_csv(const std::string& content);

// Dispatches on the file extension: .csv parses as CSV, everything else as
// JSONL. Errors with ErrorCode::io when unreadable.
std::vector<Document> load_corpus(const std::string& path);

std::string document_json(const Document& doc);
// Canonical JSONL rendering, one line per document.
std::string corpus_to_jsonl(const std::vector<Document>& docs);

}  // namespace fusionlens

#endif
