#include "fusionlens.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "core/backend.hpp"
#include "core/baselines.hpp"
#include "core/corpus.hpp"
#include "core/error.hpp"
#include "core/facade.hpp"
#include "core/jsonio.hpp"
#include "core/lexicon.hpp"
#include "core/remote_backend.hpp"
#include "core/scoring.hpp"
#include "core/stats.hpp"
#include "core/textprep.hpp"

using namespace fusionlens;

struct fl_lexicon {
    Lexicon value;
};

struct fl_backend {
    std::unique_ptr<MlmBackend> value;
};

struct fl_scorer {
    const MlmBackend* backend = nullptr;
    Lexicon identity;
    Lexicon kinship;
    Lexicon targets;
    double alpha = 0.25;
    std::unique_ptr<FineProvider> fine;
    std::unique_ptr<CoarseProvider> coarse;

    ScoringParams params() const {
        ScoringParams p;
        p.alpha = alpha;
        p.identity = &identity;
        p.kinship = &kinship;
        p.targets = &targets;
        return p;
    }
};

struct fl_corpus {
    std::vector<Document> docs;
};

struct fl_dictionary {
    CategoryDictionary value;
};

namespace {

thread_local std::string g_last_error;

fl_status to_status(const Error& e) {
    switch (e.code()) {
        case ErrorCode::invalid_argument: return FL_ERR_INVALID_ARGUMENT;
        case ErrorCode::parse: return FL_ERR_PARSE;
        case ErrorCode::io: return FL_ERR_IO;
        case ErrorCode::backend: return FL_ERR_BACKEND;
        case ErrorCode::transport: return FL_ERR_TRANSPORT;
        case ErrorCode::data: return FL_ERR_DATA;
        case ErrorCode::single_sample: return FL_ERR_SINGLE_SAMPLE;
        case ErrorCode::undefined_stat: return FL_ERR_UNDEFINED_STAT;
    }
    return FL_ERR_INTERNAL;
}

fl_status fail(fl_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
fl_status guarded(Fn&& fn) {
    try {
        fn();
        return FL_OK;
    } catch (const Error& e) {
        return fail(to_status(e), e.what());
    } catch (const std::exception& e) {
        return fail(FL_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(FL_ERR_INTERNAL, "unknown error");
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool condition, const char* message) {
    if (!condition) {
        raise(ErrorCode::invalid_argument, message);
    }
}

Document document_from_json_text(const std::string& text) {
    json record = parse_json(text, "document record");
    require(record.is_object(), "document record must be a JSON object");
    require(record.contains("id") && record["id"].is_string(), "document needs string 'id'");
    require(record.contains("text") && record["text"].is_string(),
            "document needs string 'text'");
    Document doc;
    doc.id = record["id"].get<std::string>();
    doc.text = record["text"].get<std::string>();
    if (record.contains("group") && record["group"].is_string()) {
        doc.group = record["group"].get<std::string>();
    }
    if (record.contains("truth_score") && record["truth_score"].is_number()) {
        doc.truth_score = record["truth_score"].get<double>();
    }
    if (record.contains("parent_id") && record["parent_id"].is_string()) {
        doc.parent_id = record["parent_id"].get<std::string>();
    }
    return doc;
}

std::string baseline_record_json(const Document& doc, const BaselineScore& score) {
    json record;
    record["id"] = doc.id;
    record["method"] = baseline_method_name(score.method);
    record["value"] = score.value;
    record["per_category"] = score.per_category;
    if (doc.group) record["group"] = *doc.group;
    if (doc.truth_score) record["truth_score"] = *doc.truth_score;
    return dump_canonical(record);
}

// Segmentation failures inside corpus-level calls are data problems with
// the file, not caller mistakes.
std::vector<SegmentedDocument> segment_corpus(const std::vector<Document>& docs) {
    std::vector<SegmentedDocument> segmented;
    segmented.reserve(docs.size());
    for (const auto& doc : docs) {
        try {
            segmented.push_back(segment(doc));
        } catch (const Error& e) {
            raise(ErrorCode::data, e.what());
        }
    }
    return segmented;
}

}  // namespace

extern "C" {

const char* fl_version(void) { return "0.1.0"; }

const char* fl_last_error(void) { return g_last_error.c_str(); }

void fl_free_string(char* s) { std::free(s); }

/* ---- lexicons ------------------------------------------------------- */

fl_status fl_lexicon_builtin(const char* role, fl_lexicon** out) {
    return guarded([&] {
        require(role && out, "role and out must be non-null");
        *out = new fl_lexicon{builtin_lexicon(role_from_name(role))};
    });
}

fl_status fl_lexicon_create(const char* role, const char* const* words, size_t count,
                            fl_lexicon** out) {
    return guarded([&] {
        require(role && out, "role and out must be non-null");
        require(words != nullptr || count == 0, "words must be non-null");
        std::vector<std::string> list;
        list.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            require(words[i] != nullptr, "null word in list");
            list.emplace_back(words[i]);
        }
        *out = new fl_lexicon{Lexicon("user", role_from_name(role), list)};
    });
}

fl_status fl_lexicon_load_file(const char* role, const char* path, fl_lexicon** out) {
    return guarded([&] {
        require(role && path && out, "role, path and out must be non-null");
        *out = new fl_lexicon{lexicon_from_file(path, role_from_name(role), path)};
    });
}

fl_status fl_lexicon_parse_list(const char* role, const char* comma_list, fl_lexicon** out) {
    return guarded([&] {
        require(role && comma_list && out, "role, list and out must be non-null");
        *out = new fl_lexicon{
            lexicon_from_comma_list(comma_list, role_from_name(role), "user")};
    });
}

size_t fl_lexicon_size(const fl_lexicon* lex) { return lex ? lex->value.size() : 0; }

const char* fl_lexicon_word(const fl_lexicon* lex, size_t index) {
    if (!lex || index >= lex->value.size()) return nullptr;
    return lex->value.words()[index].c_str();
}

int fl_lexicon_contains(const fl_lexicon* lex, const char* word) {
    return lex && word && lex->value.contains(word) ? 1 : 0;
}

fl_status fl_lexicon_expand(const fl_lexicon* user_targets, const fl_lexicon* pool,
                            const fl_backend* similarity, int top_k, double threshold,
                            fl_lexicon** out) {
    return guarded([&] {
        require(user_targets && similarity && out,
                "user_targets, similarity backend and out must be non-null");
        ExpansionConfig config;
        config.top_k = top_k;
        config.similarity_threshold = threshold;
        config.candidate_pool = pool ? &pool->value : nullptr;
        *out = new fl_lexicon{expand_targets(user_targets->value, config, *similarity->value)};
    });
}

void fl_lexicon_free(fl_lexicon* lex) { delete lex; }

/* ---- backends -------------------------------------------------------- */

fl_status fl_backend_uniform(uint32_t vocab_size, fl_backend** out) {
    return guarded([&] {
        require(out != nullptr, "out must be non-null");
        *out = new fl_backend{std::make_unique<UniformBackend>(vocab_size)};
    });
}

fl_status fl_backend_hash(uint64_t seed, fl_backend** out) {
    return guarded([&] {
        require(out != nullptr, "out must be non-null");
        *out = new fl_backend{std::make_unique<HashBackend>(seed)};
    });
}

fl_status fl_backend_remote(const char* base_url, fl_backend** out) {
    return guarded([&] {
        require(out != nullptr, "out must be non-null");
        *out = new fl_backend{
            std::make_unique<RemoteBackend>(base_url ? base_url : std::string())};
    });
}

fl_status fl_backend_similarity(const fl_backend* backend, const char* w1, const char* w2,
                                double* out) {
    return guarded([&] {
        require(backend && w1 && w2 && out, "backend, words and out must be non-null");
        *out = backend->value->similarity(w1, w2);
    });
}

void fl_backend_free(fl_backend* backend) { delete backend; }

/* ---- scoring ---------------------------------------------------------- */

fl_status fl_scorer_new(const fl_backend* backend, const fl_lexicon* identity,
                        const fl_lexicon* kinship, const fl_lexicon* targets, double alpha,
                        fl_scorer** out) {
    return guarded([&] {
        require(backend && out, "backend and out must be non-null");
        auto scorer = std::make_unique<fl_scorer>(fl_scorer{
            backend->value.get(),
            identity ? identity->value : builtin_lexicon(LexiconRole::identity),
            kinship ? kinship->value : builtin_lexicon(LexiconRole::kinship),
            targets ? targets->value : builtin_lexicon(LexiconRole::target),
            alpha,
            std::make_unique<HeuristicFineProvider>(),
            std::make_unique<ThresholdCoarseProvider>(),
        });
        scorer->params().validate();
        *out = scorer.release();
    });
}

fl_status fl_scorer_set_fine_heuristic(fl_scorer* scorer, double w_proximity,
                                       double w_kinship, double w_i_to_t, double w_t_to_i,
                                       double s_norm) {
    return guarded([&] {
        require(scorer != nullptr, "scorer must be non-null");
        scorer->fine = std::make_unique<HeuristicFineProvider>(w_proximity, w_kinship,
                                                               w_i_to_t, w_t_to_i, s_norm);
    });
}

fl_status fl_scorer_set_fine_remote(fl_scorer* scorer, const char* base_url) {
    return guarded([&] {
        require(scorer && base_url, "scorer and base_url must be non-null");
        scorer->fine = std::make_unique<RemoteFineProvider>(base_url);
    });
}

fl_status fl_scorer_set_coarse_thresholds(fl_scorer* scorer, double medium_threshold,
                                          double high_threshold) {
    return guarded([&] {
        require(scorer != nullptr, "scorer must be non-null");
        scorer->coarse =
            std::make_unique<ThresholdCoarseProvider>(medium_threshold, high_threshold);
    });
}

fl_status fl_scorer_score(const fl_scorer* scorer, const char* text, fl_features* out) {
    return guarded([&] {
        require(scorer && text && out, "scorer, text and out must be non-null");
        Document doc;
        doc.id = "inline";
        doc.text = text;
        FusionFeatures features = score_features(doc, scorer->params(), *scorer->backend);
        out->s_i_to_t = features.s_i_to_t.value;
        out->s_t_to_i = features.s_t_to_i.value;
        out->k_f = features.k_f.value;
        out->proximity = features.proximity;
        out->identity_anchors = features.identity_anchors;
        out->target_anchors = features.target_anchors;
        out->dropped_candidates = features.s_i_to_t.dropped_candidates +
                                  features.s_t_to_i.dropped_candidates +
                                  features.k_f.dropped_candidates;
        out->alpha = features.alpha;
    });
}

fl_status fl_scorer_predict_json(const fl_scorer* scorer, const char* doc_json,
                                 char** record_json) {
    return guarded([&] {
        require(scorer && doc_json && record_json,
                "scorer, doc_json and record_json must be non-null");
        Document doc = document_from_json_text(doc_json);
        FusionPrediction pred =
            predict(doc, scorer->params(), *scorer->backend, *scorer->fine, *scorer->coarse);
        *record_json = copy_string(prediction_record_json(pred));
    });
}

void fl_scorer_free(fl_scorer* scorer) { delete scorer; }

/* ---- text preparation -------------------------------------------------- */

fl_status fl_text_segment_json(const char* text, char** json_out) {
    return guarded([&] {
        require(text && json_out, "text and json_out must be non-null");
        Document doc;
        doc.id = "inline";
        doc.text = text;
        SegmentedDocument seg = segment(doc);
        json j;
        j["sentences"] = seg.sentences;
        j["word_count"] = seg.word_count;
        j["sentence_count"] = seg.sentence_count;
        *json_out = copy_string(dump_canonical(j));
    });
}

fl_status fl_corpus_open(const char* path, fl_corpus** out) {
    return guarded([&] {
        require(path && out, "path and out must be non-null");
        *out = new fl_corpus{load_corpus(path)};
    });
}

fl_status fl_corpus_from_jsonl(const char* jsonl, fl_corpus** out) {
    return guarded([&] {
        require(jsonl && out, "jsonl and out must be non-null");
        *out = new fl_corpus{corpus_from_jsonl(jsonl)};
    });
}

size_t fl_corpus_size(const fl_corpus* corpus) { return corpus ? corpus->docs.size() : 0; }

fl_status fl_corpus_doc_json(const fl_corpus* corpus, size_t index, char** doc_json) {
    return guarded([&] {
        require(corpus && doc_json, "corpus and doc_json must be non-null");
        require(index < corpus->docs.size(), "document index out of range");
        *doc_json = copy_string(document_json(corpus->docs[index]));
    });
}

fl_status fl_corpus_filter(const fl_corpus* corpus, int min_words, int min_sentences,
                           fl_corpus** out, char** manifest_json) {
    return guarded([&] {
        require(corpus && out, "corpus and out must be non-null");
        require(min_words > 0 || min_sentences > 0, "at least one threshold must be set");
        std::vector<SegmentedDocument> segmented = segment_corpus(corpus->docs);
        FilterResult filtered = filter_corpus(
            segmented,
            min_words > 0 ? std::optional<int>(min_words) : std::nullopt,
            min_sentences > 0 ? std::optional<int>(min_sentences) : std::nullopt);
        auto result = std::make_unique<fl_corpus>();
        for (const auto& seg : filtered.retained) {
            result->docs.push_back(seg.document);
        }
        if (manifest_json) {
            json manifest;
            manifest["input_n"] = corpus->docs.size();
            manifest["output_n"] = result->docs.size();
            manifest["dropped_n"] = filtered.dropped;
            manifest["non_replication"] = filtered.non_replication;
            *manifest_json = copy_string(dump_canonical(manifest));
        }
        *out = result.release();
    });
}

fl_status fl_corpus_chunk(const fl_corpus* corpus, int max_words, fl_corpus** out,
                          char** manifest_json) {
    return guarded([&] {
        require(corpus && out, "corpus and out must be non-null");
        auto result = std::make_unique<fl_corpus>();
        std::vector<std::string> oversized;
        for (const auto& seg : segment_corpus(corpus->docs)) {
            ChunkResult chunks = chunk(seg, max_words);
            for (auto& c : chunks.chunks) {
                result->docs.push_back(std::move(c));
            }
            oversized.insert(oversized.end(), chunks.oversized.begin(),
                             chunks.oversized.end());
        }
        if (manifest_json) {
            json manifest;
            manifest["input_n"] = corpus->docs.size();
            manifest["output_n"] = result->docs.size();
            manifest["oversized"] = oversized;
            *manifest_json = copy_string(dump_canonical(manifest));
        }
        *out = result.release();
    });
}

fl_status fl_corpus_to_jsonl(const fl_corpus* corpus, char** jsonl_out) {
    return guarded([&] {
        require(corpus && jsonl_out, "corpus and jsonl_out must be non-null");
        *jsonl_out = copy_string(corpus_to_jsonl(corpus->docs));
    });
}

void fl_corpus_free(fl_corpus* corpus) { delete corpus; }

/* ---- baselines ---------------------------------------------------------- */

fl_status fl_dictionary_load(const char* path, fl_dictionary** out) {
    return guarded([&] {
        require(path && out, "path and out must be non-null");
        *out = new fl_dictionary{CategoryDictionary::from_file(path)};
    });
}

fl_status fl_dictionary_from_json(const char* json_text, fl_dictionary** out) {
    return guarded([&] {
        require(json_text && out, "json_text and out must be non-null");
        *out = new fl_dictionary{CategoryDictionary::from_json_text(json_text)};
    });
}

void fl_dictionary_free(fl_dictionary* dict) { delete dict; }

fl_status fl_baseline_score_doc(const char* doc_json, const char* method,
                                const fl_dictionary* dict, const fl_lexicon* kinship,
                                char** record_json) {
    return guarded([&] {
        require(doc_json && method && record_json,
                "doc_json, method and record_json must be non-null");
        Document doc = document_from_json_text(doc_json);
        BaselineScore score;
        if (std::strcmp(method, "vri") == 0) {
            const Lexicon& lex =
                kinship ? kinship->value : builtin_lexicon(LexiconRole::kinship);
            score = vri_fusion(segment(doc), lex);
        } else if (std::strcmp(method, "nuai") == 0) {
            require(dict != nullptr, "nuai needs a category dictionary");
            score = nuai(segment(doc), dict->value);
        } else {
            raise(ErrorCode::invalid_argument,
                  "method must be 'vri' or 'nuai' (uai is corpus-level)");
        }
        *record_json = copy_string(baseline_record_json(doc, score));
    });
}

fl_status fl_baseline_uai(const fl_corpus* corpus, const fl_dictionary* dict,
                          char** records_jsonl, char** warnings_json) {
    return guarded([&] {
        require(corpus && dict && records_jsonl,
                "corpus, dict and records_jsonl must be non-null");
        UaiResult result = uai(segment_corpus(corpus->docs), dict->value);
        std::string lines;
        for (std::size_t i = 0; i < result.scores.size(); ++i) {
            json record;
            const Document& doc = corpus->docs[i];
            record["id"] = doc.id;
            record["method"] = baseline_method_name(result.scores[i].method);
            record["value"] = result.scores[i].value;
            record["per_category"] = result.scores[i].per_category;
            if (doc.group) record["group"] = *doc.group;
            if (doc.truth_score) record["truth_score"] = *doc.truth_score;
            lines += dump_canonical(record);
            lines += '\n';
        }
        *records_jsonl = copy_string(lines);
        if (warnings_json) {
            *warnings_json = copy_string(dump_canonical(json(result.warnings)));
        }
    });
}

/* ---- statistics ----------------------------------------------------------- */

fl_status fl_stats_spearman(const double* x, const double* y, size_t n, double* r_s,
                            double* p_value) {
    return guarded([&] {
        require(x && y && r_s && p_value, "arrays and outputs must be non-null");
        PairedSample sample(std::vector<double>(x, x + n), std::vector<double>(y, y + n));
        SpearmanResult result = spearman(sample);
        *r_s = result.r_s;
        *p_value = result.p_value;
    });
}

fl_status fl_stats_mae(const double* pred, const double* truth, size_t n, double* out) {
    return guarded([&] {
        require(pred && truth && out, "arrays and out must be non-null");
        *out = mae({pred, n}, {truth, n});
    });
}

fl_status fl_stats_cohens_d(const double* a, size_t n_a, const double* b, size_t n_b,
                            double* out) {
    return guarded([&] {
        require(a && b && out, "arrays and out must be non-null");
        *out = cohens_d({a, n_a}, {b, n_b});
    });
}

fl_status fl_stats_cliffs_delta(const double* a, size_t n_a, const double* b, size_t n_b,
                                double* out) {
    return guarded([&] {
        require(a && b && out, "arrays and out must be non-null");
        *out = cliffs_delta({a, n_a}, {b, n_b});
    });
}

fl_status fl_stats_wasserstein(const double* a, size_t n_a, const double* b, size_t n_b,
                               double* out) {
    return guarded([&] {
        require(a && b && out, "arrays and out must be non-null");
        *out = wasserstein1d({a, n_a}, {b, n_b});
    });
}

fl_status fl_stats_bootstrap_ci(const double* a, size_t n_a, const double* b, size_t n_b,
                                const char* stat, int resamples, double level, uint64_t seed,
                                double* point, double* lo, double* hi) {
    return guarded([&] {
        require(a && b && stat && point && lo && hi,
                "arrays, stat and outputs must be non-null");
        BootstrapStat which;
        if (std::strcmp(stat, "mean_diff") == 0) {
            which = BootstrapStat::mean_diff;
        } else if (std::strcmp(stat, "median_diff") == 0) {
            which = BootstrapStat::median_diff;
        } else {
            raise(ErrorCode::invalid_argument,
                  "stat must be 'mean_diff' or 'median_diff'");
        }
        BootstrapCi ci = bootstrap_ci({a, n_a}, {b, n_b}, which, resamples, level, seed);
        *point = ci.point;
        *lo = ci.lo;
        *hi = ci.hi;
    });
}

fl_status fl_stats_evaluate_json(const double* pred, const double* truth, size_t n,
                                 char** report_json) {
    return guarded([&] {
        require(pred && truth && report_json, "arrays and report_json must be non-null");
        PairedSample sample(std::vector<double>(pred, pred + n),
                            std::vector<double>(truth, truth + n));
        *report_json = copy_string(eval_report_json(evaluate(sample)));
    });
}

fl_status fl_stats_compare_json(const char* name_a, const double* a, size_t n_a,
                                const char* name_b, const double* b, size_t n_b,
                                uint64_t seed, char** report_json) {
    return guarded([&] {
        require(name_a && a && name_b && b && report_json,
                "names, arrays and report_json must be non-null");
        GroupComparison cmp = compare_groups(name_a, {a, n_a}, name_b, {b, n_b}, seed);
        *report_json = copy_string(comparison_json(cmp));
    });
}

fl_status fl_plot_ecdf_csv(const double* values, size_t n, char** csv_out) {
    return guarded([&] {
        require(values && csv_out, "values and csv_out must be non-null");
        *csv_out = copy_string(ecdf_csv({values, n}));
    });
}

fl_status fl_plot_kde_csv(const double* values, size_t n, double bandwidth, char** csv_out,
                          int* bandwidth_fallback) {
    return guarded([&] {
        require(values && csv_out, "values and csv_out must be non-null");
        bool fallback = false;
        *csv_out = copy_string(kde_csv({values, n}, bandwidth, &fallback));
        if (bandwidth_fallback) *bandwidth_fallback = fallback ? 1 : 0;
    });
}

fl_status fl_plot_histogram_csv(const double* values, size_t n, int bins, char** csv_out) {
    return guarded([&] {
        require(values && csv_out, "values and csv_out must be non-null");
        *csv_out = copy_string(histogram_csv({values, n}, bins));
    });
}

}  // extern "C"
