#include "core/corpus.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "core/error.hpp"
#include "core/jsonio.hpp"

namespace fusionlens {

namespace {

void check_unique_ids(const std::vector<Document>& docs) {
    std::unordered_set<std::string> seen;
    for (const auto& doc : docs) {
        if (!seen.insert(doc.id).second) {
            raise(ErrorCode::data, "duplicate document id '" + doc.id + "'");
        }
    }
}

void validate_truth(const Document& doc) {
    if (doc.truth_score && (*doc.truth_score < 1.0 || *doc.truth_score > 7.0)) {
        raise(ErrorCode::data,
              "truth_score out of [1,7] for document '" + doc.id + "'");
    }
}

Document document_from_json(const json& record, std::size_t line_number) {
    auto context = [line_number] { return " (line " + std::to_string(line_number) + ")"; };
    if (!record.is_object()) {
        raise(ErrorCode::parse, "corpus record is not an object" + context());
    }
    Document doc;
    if (!record.contains("id") || !record["id"].is_string()) {
        raise(ErrorCode::parse, "corpus record missing string 'id'" + context());
    }
    if (!record.contains("text") || !record["text"].is_string()) {
        raise(ErrorCode::parse, "corpus record missing string 'text'" + context());
    }
    doc.id = record["id"].get<std::string>();
    doc.text = record["text"].get<std::string>();
    if (record.contains("group") && !record["group"].is_null()) {
        if (!record["group"].is_string()) {
            raise(ErrorCode::parse, "'group' must be a string" + context());
        }
        doc.group = record["group"].get<std::string>();
    }
    if (record.contains("truth_score") && !record["truth_score"].is_null()) {
        if (!record["truth_score"].is_number()) {
            raise(ErrorCode::parse, "'truth_score' must be a number" + context());
        }
        doc.truth_score = record["truth_score"].get<double>();
    }
    if (record.contains("parent_id") && !record["parent_id"].is_null()) {
        if (!record["parent_id"].is_string()) {
            raise(ErrorCode::parse, "'parent_id' must be a string" + context());
        }
        doc.parent_id = record["parent_id"].get<std::string>();
    }
    validate_truth(doc);
    return doc;
}

// RFC-4180 style fields: quoted fields may hold commas, newlines and
// doubled quotes.
std::vector<std::vector<std::string>> parse_csv(const std::string& content) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool row_has_data = false;

    auto end_field = [&] {
        row.push_back(field);
        field.clear();
    };
    auto end_row = [&] {
        if (row_has_data || !row.empty() || !field.empty()) {
            end_field();
            rows.push_back(row);
            row.clear();
        }
        row_has_data = false;
    };

    std::size_t i = 0;
    while (i < content.size()) {
        char c = content[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < content.size() && content[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            in_quotes = true;
            row_has_data = true;
        } else if (c == ',') {
            end_field();
            row_has_data = true;
        } else if (c == '\n') {
            end_row();
        } else if (c == '\r') {
            // swallow; \r\n handled by the \n branch
        } else {
            field.push_back(c);
            row_has_data = true;
        }
        ++i;
    }
    if (in_quotes) {
        raise(ErrorCode::parse, "unterminated quote in CSV input");
    }
    end_row();
    return rows;
}

}  // namespace

std::vector<Document> corpus_from_jsonl(const std::string& content) {
    std::vector<Document> docs;
    std::istringstream in(content);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json record = json::parse(line, nullptr, false);
        if (record.is_discarded()) {
            raise(ErrorCode::parse,
                  "invalid JSON at line " + std::to_string(line_number));
        }
        docs.push_back(document_from_json(record, line_number));
    }
    check_unique_ids(docs);
    return docs;
}

std::vector<Document> corpus_from_csv(const std::string& content) {
    auto rows = parse_csv(content);
    if (rows.empty()) return {};

    const auto& header = rows.front();
    int id_col = -1, text_col = -1, group_col = -1, truth_col = -1;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == "id") id_col = static_cast<int>(c);
        else if (header[c] == "text") text_col = static_cast<int>(c);
        else if (header[c] == "group") group_col = static_cast<int>(c);
        else if (header[c] == "truth_score") truth_col = static_cast<int>(c);
    }
    if (id_col < 0 || text_col < 0) {
        raise(ErrorCode::parse, "CSV header must contain 'id' and 'text' columns");
    }

    std::vector<Document> docs;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        auto cell = [&](int col) -> std::string {
            return col >= 0 && static_cast<std::size_t>(col) < row.size()
                       ? row[static_cast<std::size_t>(col)]
                       : std::string();
        };
        Document doc;
        doc.id = cell(id_col);
        doc.text = cell(text_col);
        if (doc.id.empty()) {
            raise(ErrorCode::parse, "empty id in CSV row " + std::to_string(r + 1));
        }
        std::string group = cell(group_col);
        if (!group.empty()) doc.group = group;
        std::string truth = cell(truth_col);
        if (!truth.empty()) {
            try {
                std::size_t used = 0;
                doc.truth_score = std::stod(truth, &used);
                if (used != truth.size()) throw std::invalid_argument(truth);
            } catch (const std::exception&) {
                raise(ErrorCode::parse,
                      "invalid truth_score '" + truth + "' in CSV row " + std::to_string(r + 1));
            }
        }
        validate_truth(doc);
        docs.push_back(std::move(doc));
    }
    check_unique_ids(docs);
    return docs;
}

std::vector<Document> load_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        raise(ErrorCode::io, "cannot open corpus file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
        return corpus_from_csv(buffer.str());
    }
    return corpus_from_jsonl(buffer.str());
}

std::string document_json(const Document& doc) {
    json record;
    record["id"] = doc.id;
    record["text"] = doc.text;
    if (doc.group) record["group"] = *doc.group;
    if (doc.truth_score) record["truth_score"] = *doc.truth_score;
    if (doc.parent_id) record["parent_id"] = *doc.parent_id;
    return dump_canonical(record);
}

std::string corpus_to_jsonl(const std::vector<Document>& docs) {
    std::string out;
    for (const auto& doc : docs) {
        out += document_json(doc);
        out += '\n';
    }
    return out;
}

}  // namespace fusionlens
