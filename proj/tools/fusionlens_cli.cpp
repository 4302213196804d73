// fusionlens command-line interface. All domain work goes through the C API
// in fusionlens.h; this file only handles arguments, files, and exit codes.
//
// Exit codes: 0 success, 1 I/O or backend failure, 2 partial per-document
// failures, 64 usage error, 65 data error.

#include <fusionlens.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitPartial = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct CliError {
    int code;
    std::string message;
};

int exit_code_for(fl_status status) {
    switch (status) {
        case FL_OK: return kExitOk;
        case FL_ERR_IO: return kExitIo;
        case FL_ERR_INVALID_ARGUMENT: return kExitUsage;
        case FL_ERR_PARSE:
        case FL_ERR_DATA:
        case FL_ERR_SINGLE_SAMPLE:
        case FL_ERR_UNDEFINED_STAT: return kExitData;
        case FL_ERR_BACKEND:
        case FL_ERR_TRANSPORT:
        case FL_ERR_INTERNAL: return kExitIo;
    }
    return kExitIo;
}

void check(fl_status status) {
    if (status != FL_OK) {
        throw CliError{exit_code_for(status), fl_last_error()};
    }
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { fl_free_string(ptr); }
    OwnedString() = default;
    OwnedString(const OwnedString&) = delete;
    OwnedString& operator=(const OwnedString&) = delete;
    std::string str() const { return ptr ? ptr : ""; }
};

template <typename T, void (*FreeFn)(T*)>
struct Handle {
    T* ptr = nullptr;
    Handle() = default;
    explicit Handle(T* p) : ptr(p) {}
    ~Handle() { FreeFn(ptr); }
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    Handle(Handle&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
    Handle& operator=(Handle&& other) noexcept {
        if (this != &other) {
            FreeFn(ptr);
            ptr = other.ptr;
            other.ptr = nullptr;
        }
        return *this;
    }
    T* get() const { return ptr; }
    T** out() { return &ptr; }
    explicit operator bool() const { return ptr != nullptr; }
};

using LexiconHandle = Handle<fl_lexicon, fl_lexicon_free>;
using BackendHandle = Handle<fl_backend, fl_backend_free>;
using ScorerHandle = Handle<fl_scorer, fl_scorer_free>;
using CorpusHandle = Handle<fl_corpus, fl_corpus_free>;
using DictionaryHandle = Handle<fl_dictionary, fl_dictionary_free>;

struct CommonOpts {
    std::string backend = "uniform";
    std::string backend_url;
    std::uint32_t vocab_size = 100;
    double alpha = 0.25;
    std::uint64_t seed = 0;
    std::string targets;
    std::string out;
};

void add_backend_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--backend", opts.backend, "Masked-LM backend")
        ->check(CLI::IsMember({"uniform", "hash", "remote"}))
        ->capture_default_str();
    cmd->add_option("--backend-url", opts.backend_url,
                    "Remote backend URL (default: FUSIONLENS_BACKEND_URL)");
    cmd->add_option("--vocab-size", opts.vocab_size,
                    "Model vocabulary size for the uniform backend")
        ->capture_default_str();
}

BackendHandle make_backend(const CommonOpts& opts) {
    BackendHandle backend;
    if (opts.backend == "uniform") {
        check(fl_backend_uniform(opts.vocab_size, backend.out()));
    } else if (opts.backend == "hash") {
        check(fl_backend_hash(opts.seed, backend.out()));
    } else {
        check(fl_backend_remote(opts.backend_url.empty() ? nullptr : opts.backend_url.c_str(),
                                backend.out()));
    }
    return backend;
}

// --targets accepts a lexicon file path or an inline comma-separated list.
// Anything that looks like a file path must actually exist; a typoed
// filename must not silently turn into a one-word lexicon.
LexiconHandle load_lexicon_spec(const std::string& spec, const char* role) {
    LexiconHandle lex;
    if (fs::exists(spec)) {
        check(fl_lexicon_load_file(role, spec.c_str(), lex.out()));
    } else if (spec.find('/') != std::string::npos ||
               spec.find(".txt") != std::string::npos) {
        throw CliError{kExitIo, "lexicon file not found: " + spec};
    } else {
        check(fl_lexicon_parse_list(role, spec.c_str(), lex.out()));
    }
    return lex;
}

// User targets are always united with the builtin base set.
LexiconHandle make_targets(const CommonOpts& opts, const fl_backend* backend) {
    if (opts.targets.empty()) return LexiconHandle{};
    LexiconHandle user = load_lexicon_spec(opts.targets, "target");
    LexiconHandle merged;
    check(fl_lexicon_expand(user.get(), nullptr, backend, 10, 0.6, merged.out()));
    return merged;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliError{kExitIo, "cannot open file: " + path};
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    fs::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) {
        throw CliError{kExitIo, "cannot write file: " + path};
    }
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_file(out_path, content);
    }
}

std::vector<json> read_jsonl_records(const std::string& path) {
    std::string content = read_file(path);
    std::vector<json> records;
    std::istringstream in(content);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json record = json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.is_object()) {
            throw CliError{kExitData,
                           path + ": invalid JSON at line " + std::to_string(line_number)};
        }
        records.push_back(std::move(record));
    }
    return records;
}

std::string quote(const std::string& s) { return json(s).dump(); }

std::string sanitize_filename(const std::string& name) {
    std::string out;
    for (char c : name) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '-' || c == '_';
        out.push_back(ok ? c : '_');
    }
    return out.empty() ? "group" : out;
}

// ---- score ---------------------------------------------------------------

int cmd_score(const CommonOpts& opts, const std::string& in_path, double s_norm) {
    BackendHandle backend = make_backend(opts);
    LexiconHandle targets = make_targets(opts, backend.get());

    CorpusHandle corpus;
    check(fl_corpus_open(in_path.c_str(), corpus.out()));

    ScorerHandle scorer;
    check(fl_scorer_new(backend.get(), nullptr, nullptr, targets.get(), opts.alpha,
                        scorer.out()));
    if (s_norm > 0.0) {
        check(fl_scorer_set_fine_heuristic(scorer.get(), 1.0, 1.0, 1.0, 1.0, s_norm));
    }

    std::string lines;
    std::vector<std::string> failures;
    const std::size_t n = fl_corpus_size(corpus.get());
    for (std::size_t i = 0; i < n; ++i) {
        OwnedString doc_json;
        check(fl_corpus_doc_json(corpus.get(), i, &doc_json.ptr));
        OwnedString record;
        fl_status status = fl_scorer_predict_json(scorer.get(), doc_json.ptr, &record.ptr);
        if (status == FL_OK) {
            lines += record.str();
            lines += '\n';
        } else {
            json doc = json::parse(doc_json.str());
            json failure;
            failure["id"] = doc["id"];
            failure["error"] = fl_last_error();
            failures.push_back(failure.dump());
        }
    }

    emit(opts.out, lines);
    for (const auto& failure : failures) {
        std::cerr << failure << "\n";
    }
    return failures.empty() ? kExitOk : kExitPartial;
}

// ---- prepare ---------------------------------------------------------------

int cmd_prepare(const CommonOpts& opts, const std::string& in_path, bool chunk_mode,
                int max_words, int min_words, int min_sentences) {
    const bool words_mode = min_words > 0;
    const bool sentences_mode = min_sentences > 0;
    // Allowed modes: filter-words | filter-sentences | chunk | chunk+filter-sentences.
    if (words_mode && (chunk_mode || sentences_mode)) {
        throw CliError{kExitUsage, "--min-words cannot be combined with other modes"};
    }
    if (!words_mode && !sentences_mode && !chunk_mode) {
        throw CliError{kExitUsage,
                       "choose a mode: --min-words, --min-sentences, or --chunk"};
    }
    if (opts.out.empty()) {
        throw CliError{kExitUsage, "prepare requires --out"};
    }

    CorpusHandle corpus;
    check(fl_corpus_open(in_path.c_str(), corpus.out()));
    const std::size_t input_n = fl_corpus_size(corpus.get());

    std::string mode;
    json params = json::object();
    json stage_info = json::object();
    CorpusHandle derived;

    if (chunk_mode) {
        OwnedString chunk_manifest;
        CorpusHandle chunked;
        check(fl_corpus_chunk(corpus.get(), max_words, chunked.out(), &chunk_manifest.ptr));
        params["max_words"] = max_words;
        json cm = json::parse(chunk_manifest.str());
        stage_info["chunks"] = cm["output_n"];
        stage_info["oversized"] = cm["oversized"];
        if (sentences_mode) {
            mode = "chunk+filter-sentences";
            params["min_sentences"] = min_sentences;
            OwnedString filter_manifest;
            check(fl_corpus_filter(chunked.get(), 0, min_sentences, derived.out(),
                                   &filter_manifest.ptr));
            stage_info["dropped"] = json::parse(filter_manifest.str())["dropped_n"];
        } else {
            mode = "chunk";
            derived = std::move(chunked);
        }
    } else if (words_mode) {
        mode = "filter-words";
        params["min_words"] = min_words;
        OwnedString manifest;
        check(fl_corpus_filter(corpus.get(), min_words, 0, derived.out(), &manifest.ptr));
        stage_info["dropped"] = json::parse(manifest.str())["dropped_n"];
    } else {
        mode = "filter-sentences";
        params["min_sentences"] = min_sentences;
        OwnedString manifest;
        check(fl_corpus_filter(corpus.get(), 0, min_sentences, derived.out(), &manifest.ptr));
        stage_info["dropped"] = json::parse(manifest.str())["dropped_n"];
    }

    OwnedString jsonl;
    check(fl_corpus_to_jsonl(derived.get(), &jsonl.ptr));
    write_file(opts.out, jsonl.str());

    json manifest;
    manifest["input_n"] = input_n;
    manifest["output_n"] = fl_corpus_size(derived.get());
    manifest["mode"] = mode;
    manifest["params"] = params;
    manifest["stages"] = stage_info;
    write_file(opts.out + ".manifest.json", manifest.dump() + "\n");
    return kExitOk;
}

// ---- evaluate ---------------------------------------------------------------

int cmd_evaluate(const CommonOpts& opts, const std::string& in_path,
                 const std::string& field) {
    std::vector<json> records = read_jsonl_records(in_path);
    std::vector<double> preds;
    std::vector<double> truths;
    for (const auto& record : records) {
        if (!record.contains(field) || !record[field].is_number()) {
            throw CliError{kExitData, "record " + record.value("id", std::string("?")) +
                                          " missing numeric field '" + field + "'"};
        }
        if (!record.contains("truth_score") || !record["truth_score"].is_number()) {
            throw CliError{kExitData, "record " + record.value("id", std::string("?")) +
                                          " missing numeric 'truth_score'"};
        }
        preds.push_back(record[field].get<double>());
        truths.push_back(record["truth_score"].get<double>());
    }
    OwnedString report;
    check(fl_stats_evaluate_json(preds.data(), truths.data(), preds.size(), &report.ptr));
    emit(opts.out, report.str() + "\n");
    return kExitOk;
}

// ---- compare ---------------------------------------------------------------

int cmd_compare(const CommonOpts& opts, const std::string& in_path, bool high_fusion_only,
                const std::string& group_order) {
    if (opts.out.empty()) {
        throw CliError{kExitUsage, "compare requires --out <directory>"};
    }
    std::vector<json> records = read_jsonl_records(in_path);
    if (high_fusion_only) {
        std::vector<json> kept;
        for (auto& record : records) {
            if (record.value("coarse", std::string()) == "high") {
                kept.push_back(std::move(record));
            }
        }
        records = std::move(kept);
    }

    std::set<std::string> labels;
    for (const auto& record : records) {
        if (record.contains("group") && record["group"].is_string()) {
            labels.insert(record["group"].get<std::string>());
        } else {
            throw CliError{kExitData, "record " + record.value("id", std::string("?")) +
                                          " has no group label"};
        }
    }
    if (labels.size() != 2) {
        throw CliError{kExitData, "compare needs exactly 2 distinct groups, found " +
                                      std::to_string(labels.size())};
    }

    std::string name_a = *labels.begin();
    std::string name_b = *std::next(labels.begin());
    if (!group_order.empty()) {
        auto comma = group_order.find(',');
        if (comma == std::string::npos) {
            throw CliError{kExitUsage, "--groups expects 'first,second'"};
        }
        std::string first = group_order.substr(0, comma);
        std::string second = group_order.substr(comma + 1);
        if (labels != std::set<std::string>{first, second}) {
            throw CliError{kExitData, "--groups does not match labels in the file"};
        }
        name_a = first;
        name_b = second;
    }

    const std::vector<std::string> known_features = {"fine", "k_f", "proximity",
                                                     "s_i_to_t", "s_t_to_i"};
    std::vector<std::string> features;
    for (const auto& name : known_features) {
        bool everywhere = !records.empty();
        for (const auto& record : records) {
            if (!record.contains(name) || !record[name].is_number()) {
                everywhere = false;
                break;
            }
        }
        if (everywhere) features.push_back(name);
    }
    if (features.empty()) {
        throw CliError{kExitData, "no comparable numeric feature fields found"};
    }

    fs::create_directories(opts.out);

    std::string features_json = "{";
    bool first_feature = true;
    for (const auto& feature : features) {
        std::vector<double> a;
        std::vector<double> b;
        for (const auto& record : records) {
            double value = record[feature].get<double>();
            if (record["group"].get<std::string>() == name_a) {
                a.push_back(value);
            } else {
                b.push_back(value);
            }
        }
        OwnedString report;
        check(fl_stats_compare_json(name_a.c_str(), a.data(), a.size(), name_b.c_str(),
                                    b.data(), b.size(), opts.seed, &report.ptr));
        if (!first_feature) features_json += ',';
        first_feature = false;
        features_json += quote(feature) + ":" + report.str();

        // plot data per group and feature
        const std::pair<const std::string*, std::vector<double>*> groups[] = {{&name_a, &a},
                                                                              {&name_b, &b}};
        for (const auto& [gname, values] : groups) {
            std::string base = feature + "_" + sanitize_filename(*gname);
            OwnedString hist, kde, ecdf;
            int kde_fallback = 0;
            check(fl_plot_histogram_csv(values->data(), values->size(), 0, &hist.ptr));
            check(fl_plot_kde_csv(values->data(), values->size(), 0.0, &kde.ptr,
                                  &kde_fallback));
            if (kde_fallback) {
                std::cerr << "warning: zero-spread sample for " << base
                          << "; KDE bandwidth fell back to 1.0\n";
            }
            check(fl_plot_ecdf_csv(values->data(), values->size(), &ecdf.ptr));
            write_file((fs::path(opts.out) / (base + "_hist.csv")).string(), hist.str());
            write_file((fs::path(opts.out) / (base + "_kde.csv")).string(), kde.str());
            write_file((fs::path(opts.out) / (base + "_ecdf.csv")).string(), ecdf.str());
        }
    }
    features_json += "}";

    std::string comparison = "{\"features\":" + features_json + ",\"groups\":[" +
                             quote(name_a) + "," + quote(name_b) + "],\"high_fusion_only\":" +
                             (high_fusion_only ? "true" : "false") + "}";
    write_file((fs::path(opts.out) / "comparison.json").string(), comparison + "\n");
    return kExitOk;
}

// ---- baseline ---------------------------------------------------------------

int cmd_baseline(const CommonOpts& opts, const std::string& in_path,
                 const std::string& method, const std::string& dict_path,
                 const std::string& kinship_spec) {
    DictionaryHandle dict;
    if (method == "nuai" || method == "uai") {
        if (dict_path.empty()) {
            throw CliError{kExitUsage, "--dict is required for method '" + method + "'"};
        }
        check(fl_dictionary_load(dict_path.c_str(), dict.out()));
    }
    LexiconHandle kinship;
    if (!kinship_spec.empty()) {
        kinship = load_lexicon_spec(kinship_spec, "kinship");
    }

    CorpusHandle corpus;
    check(fl_corpus_open(in_path.c_str(), corpus.out()));

    if (method == "uai") {
        OwnedString records, warnings;
        check(fl_baseline_uai(corpus.get(), dict.get(), &records.ptr, &warnings.ptr));
        emit(opts.out, records.str());
        if (warnings.str() != "[]") {
            std::cerr << warnings.str() << "\n";
        }
        return kExitOk;
    }

    const char* capi_method = method == "vri" ? "vri" : "nuai";
    std::string lines;
    std::vector<std::string> failures;
    const std::size_t n = fl_corpus_size(corpus.get());
    for (std::size_t i = 0; i < n; ++i) {
        OwnedString doc_json;
        check(fl_corpus_doc_json(corpus.get(), i, &doc_json.ptr));
        OwnedString record;
        fl_status status = fl_baseline_score_doc(doc_json.ptr, capi_method, dict.get(),
                                                 kinship.get(), &record.ptr);
        if (status == FL_OK) {
            lines += record.str();
            lines += '\n';
        } else {
            json doc = json::parse(doc_json.str());
            json failure;
            failure["id"] = doc["id"];
            failure["error"] = fl_last_error();
            failures.push_back(failure.dump());
        }
    }
    emit(opts.out, lines);
    for (const auto& failure : failures) {
        std::cerr << failure << "\n";
    }
    return failures.empty() ? kExitOk : kExitPartial;
}

// ---- vocab-expand -------------------------------------------------------------

int cmd_vocab_expand(const CommonOpts& opts, const std::string& pool_path, int top_k,
                     double threshold) {
    if (opts.targets.empty()) {
        throw CliError{kExitUsage, "vocab-expand requires --targets"};
    }
    BackendHandle backend = make_backend(opts);
    LexiconHandle user = load_lexicon_spec(opts.targets, "target");
    LexiconHandle pool;
    if (!pool_path.empty()) {
        check(fl_lexicon_load_file("category", pool_path.c_str(), pool.out()));
    }
    LexiconHandle expanded;
    check(fl_lexicon_expand(user.get(), pool.get(), backend.get(), top_k, threshold,
                            expanded.out()));

    std::string lines;
    const std::size_t n = fl_lexicon_size(expanded.get());
    for (std::size_t i = 0; i < n; ++i) {
        lines += fl_lexicon_word(expanded.get(), i);
        lines += '\n';
    }
    emit(opts.out, lines);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fusionlens - identity-fusion linguistic features from text"};
    app.require_subcommand(1);
    app.set_version_flag("--version", []() { return std::string(fl_version()); });

    CommonOpts opts;
    std::string in_path;
    std::string field = "fine";
    std::string method;
    std::string dict_path;
    std::string kinship_spec;
    std::string pool_path;
    std::string group_order;
    bool chunk_mode = false;
    bool high_fusion_only = false;
    int max_words = 300;
    int min_words = 0;
    int min_sentences = 0;
    int top_k = 10;
    double threshold = 0.6;
    double s_norm = 0.0;

    auto* score = app.add_subcommand("score", "Score fusion features and predictions");
    score->add_option("--in,-i", in_path, "Input corpus (.jsonl or .csv)")->required();
    score->add_option("--out,-o", opts.out, "Output JSONL (default stdout)");
    score->add_option("--alpha", opts.alpha, "Smoothing exponent in (0,1]")
        ->capture_default_str();
    score->add_option("--targets", opts.targets, "Target lexicon file or comma list");
    score->add_option("--seed", opts.seed, "Seed for the hash backend");
    score->add_option("--s-norm", s_norm, "Fine-score normalizer (default 0.02)");
    add_backend_options(score, opts);

    auto* prepare = app.add_subcommand("prepare", "Filter or chunk a corpus");
    prepare->add_option("--in,-i", in_path, "Input corpus")->required();
    prepare->add_option("--out,-o", opts.out, "Output corpus file")->required();
    prepare->add_flag("--chunk", chunk_mode, "Sentence-preserving chunking");
    prepare->add_option("--max-words", max_words, "Chunk budget in words")
        ->capture_default_str();
    prepare->add_option("--min-words", min_words, "Keep documents with at least N words");
    prepare->add_option("--min-sentences", min_sentences,
                        "Keep documents with at least N sentences");

    auto* evaluate = app.add_subcommand("evaluate", "Spearman/MAE report against truth");
    evaluate->add_option("--in,-i", in_path, "Predictions JSONL")->required();
    evaluate->add_option("--out,-o", opts.out, "Report path (default stdout)");
    evaluate->add_option("--field", field, "Prediction field to evaluate")
        ->capture_default_str();

    auto* compare = app.add_subcommand("compare", "Two-group distribution comparison");
    compare->add_option("--in,-i", in_path, "Predictions JSONL with group labels")
        ->required();
    compare->add_option("--out,-o", opts.out, "Output directory")->required();
    auto* seed_opt =
        compare->add_option("--seed", opts.seed, "Bootstrap seed (required)");
    compare->add_flag("--high-fusion-only", high_fusion_only,
                      "Keep only records classed high before comparing");
    compare->add_option("--groups", group_order,
                        "Comparison order as 'first,second' (default alphabetical)");

    auto* baseline = app.add_subcommand("baseline", "Dictionary baseline scores");
    baseline->add_option("--in,-i", in_path, "Input corpus")->required();
    baseline->add_option("--out,-o", opts.out, "Output JSONL (default stdout)");
    baseline->add_option("--method", method, "vri | nuai | uai")
        ->required()
        ->check(CLI::IsMember({"vri", "nuai", "uai"}));
    baseline->add_option("--dict", dict_path, "Category dictionary JSON (nuai/uai)");
    baseline->add_option("--kinship", kinship_spec, "Kinship lexicon override (vri)");

    auto* vocab = app.add_subcommand("vocab-expand", "Expand a target word list");
    vocab->add_option("--targets", opts.targets, "Target lexicon file or comma list")
        ->required();
    vocab->add_option("--out,-o", opts.out, "Output word list (default stdout)");
    vocab->add_option("--pool", pool_path, "Candidate pool lexicon file");
    vocab->add_option("--top-k", top_k, "Neighbors per word")->capture_default_str();
    vocab->add_option("--threshold", threshold, "Similarity threshold")
        ->capture_default_str();
    vocab->add_option("--seed", opts.seed, "Seed for the hash backend");
    add_backend_options(vocab, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (!(opts.alpha > 0.0 && opts.alpha <= 1.0)) {
            throw CliError{kExitUsage, "--alpha must be in (0,1]"};
        }
        if (score->parsed()) return cmd_score(opts, in_path, s_norm);
        if (prepare->parsed()) {
            return cmd_prepare(opts, in_path, chunk_mode, max_words, min_words,
                               min_sentences);
        }
        if (evaluate->parsed()) return cmd_evaluate(opts, in_path, field);
        if (compare->parsed()) {
            if (seed_opt->count() == 0) {
                throw CliError{kExitUsage, "compare requires --seed"};
            }
            return cmd_compare(opts, in_path, high_fusion_only, group_order);
        }
        if (baseline->parsed()) {
            return cmd_baseline(opts, in_path, method, dict_path, kinship_spec);
        }
        if (vocab->parsed()) return cmd_vocab_expand(opts, pool_path, top_k, threshold);
        std::cerr << "no command\n";
        return kExitUsage;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
