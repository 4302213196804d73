/*
 * fusionlens — identity-fusion linguistic features from text.
 *
 * C API over the C++ core. All objects are opaque handles created and
 * destroyed through these functions; every fallible call returns an
 * fl_status and leaves a human-readable message in fl_last_error() (stored
 * per thread) when it fails. Strings returned through char** out-parameters
 * are heap-allocated and must be released with fl_free_string().
 *
 * Handles are immutable once created unless noted, and may be shared across
 * threads for concurrent reads.
 */

#ifndef FUSIONLENS_H
#define FUSIONLENS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FL_API __declspec(dllexport)
#else
#define FL_API __attribute__((visibility("default")))
#endif

typedef enum fl_status {
    FL_OK = 0,
    FL_ERR_INVALID_ARGUMENT = 1, /* malformed input or configuration */
    FL_ERR_PARSE = 2,            /* unparseable file contents */
    FL_ERR_IO = 3,               /* filesystem failure */
    FL_ERR_BACKEND = 4,          /* backend rejected the request */
    FL_ERR_TRANSPORT = 5,        /* remote backend unreachable; retriable */
    FL_ERR_DATA = 6,             /* statistical precondition violated */
    FL_ERR_SINGLE_SAMPLE = 7,    /* corpus-level statistic on < 2 documents */
    FL_ERR_UNDEFINED_STAT = 8,   /* zero-variance correlation or effect */
    FL_ERR_INTERNAL = 9
} fl_status;

typedef struct fl_lexicon fl_lexicon;
typedef struct fl_backend fl_backend;
typedef struct fl_scorer fl_scorer;
typedef struct fl_corpus fl_corpus;
typedef struct fl_dictionary fl_dictionary;

/* The four implicit-metaphor features for one document. */
typedef struct fl_features {
    double s_i_to_t;   /* identity words replacing target tokens */
    double s_t_to_i;   /* target words replacing identity tokens */
    double k_f;        /* kinship words replacing target tokens */
    double proximity;  /* harmonic mean of the two directional scores */
    uint32_t identity_anchors;
    uint32_t target_anchors;
    uint32_t dropped_candidates;
    double alpha;
} fl_features;

FL_API const char* fl_version(void);

/* Message for the most recent failing call on this thread. */
FL_API const char* fl_last_error(void);

FL_API void fl_free_string(char* s);

/* ---- lexicons ------------------------------------------------------- */

/* role is one of "identity", "kinship", "target", "category". */
FL_API fl_status fl_lexicon_builtin(const char* role, fl_lexicon** out);
FL_API fl_status fl_lexicon_create(const char* role, const char* const* words,
                                   size_t count, fl_lexicon** out);
/* One word per line; '#' starts a comment. */
FL_API fl_status fl_lexicon_load_file(const char* role, const char* path, fl_lexicon** out);
FL_API fl_status fl_lexicon_parse_list(const char* role, const char* comma_list,
                                       fl_lexicon** out);
FL_API size_t fl_lexicon_size(const fl_lexicon* lex);
/* Borrowed pointer, valid while the lexicon lives; NULL when out of range. */
FL_API const char* fl_lexicon_word(const fl_lexicon* lex, size_t index);
FL_API int fl_lexicon_contains(const fl_lexicon* lex, const char* word);
/* Union of user targets, the builtin base set, and pool words within the
 * per-word top_k at or above threshold, iterated to a fixpoint. pool may be
 * NULL. similarity comes from the given backend. */
FL_API fl_status fl_lexicon_expand(const fl_lexicon* user_targets, const fl_lexicon* pool,
                                   const fl_backend* similarity, int top_k,
                                   double threshold, fl_lexicon** out);
FL_API void fl_lexicon_free(fl_lexicon* lex);

/* ---- masked-LM backends --------------------------------------------- */

/* Every candidate scores 1/vocab_size regardless of context. */
FL_API fl_status fl_backend_uniform(uint32_t vocab_size, fl_backend** out);
/* Deterministic pseudo-probabilities from a stable 64-bit FNV-1a hash of
 * (seed, masked context, candidate): p = (hash mod 1000)/1000. */
FL_API fl_status fl_backend_hash(uint64_t seed, fl_backend** out);
/* HTTP backend: POST base_url/v1/masked_fill. base_url NULL or empty reads
 * FUSIONLENS_BACKEND_URL. */
FL_API fl_status fl_backend_remote(const char* base_url, fl_backend** out);
/* Symmetric word similarity in [0,1]; identical words score 1. */
FL_API fl_status fl_backend_similarity(const fl_backend* backend, const char* w1,
                                       const char* w2, double* out);
FL_API void fl_backend_free(fl_backend* backend);

/* ---- scoring --------------------------------------------------------- */

/* Bundles backend + lexicons + alpha. The backend handle must outlive the
 * scorer; lexicon contents are copied. Passing NULL for a lexicon selects
 * the builtin. */
FL_API fl_status fl_scorer_new(const fl_backend* backend, const fl_lexicon* identity,
                               const fl_lexicon* kinship, const fl_lexicon* targets,
                               double alpha, fl_scorer** out);
/* Heuristic fine-score map: clamp(1 + 6*min(1, weighted/s_norm), 1, 7). */
FL_API fl_status fl_scorer_set_fine_heuristic(fl_scorer* scorer, double w_proximity,
                                              double w_kinship, double w_i_to_t,
                                              double w_t_to_i, double s_norm);
/* Delegate the fine score to POST url/v1/fine_score. */
FL_API fl_status fl_scorer_set_fine_remote(fl_scorer* scorer, const char* base_url);
/* Coarse classes cut on the fine score: low < medium_threshold <= medium
 * < high_threshold <= high. */
FL_API fl_status fl_scorer_set_coarse_thresholds(fl_scorer* scorer, double medium_threshold,
                                                 double high_threshold);
FL_API fl_status fl_scorer_score(const fl_scorer* scorer, const char* text,
                                 fl_features* out);
/* doc_json: {"id","text","group"?,"truth_score"?}. record_json gets the full
 * prediction record (features + fine + coarse + provider, metadata passed
 * through) in canonical formatting. */
FL_API fl_status fl_scorer_predict_json(const fl_scorer* scorer, const char* doc_json,
                                        char** record_json);
FL_API void fl_scorer_free(fl_scorer* scorer);

/* ---- text preparation ------------------------------------------------ */

/* {"sentences":[...],"word_count":n,"sentence_count":m} */
FL_API fl_status fl_text_segment_json(const char* text, char** json_out);

/* Reads .jsonl (or .csv by extension). */
FL_API fl_status fl_corpus_open(const char* path, fl_corpus** out);
FL_API fl_status fl_corpus_from_jsonl(const char* jsonl, fl_corpus** out);
FL_API size_t fl_corpus_size(const fl_corpus* corpus);
FL_API fl_status fl_corpus_doc_json(const fl_corpus* corpus, size_t index, char** doc_json);
/* Thresholds <= 0 mean "unset"; at least one must be set. manifest_json gets
 * {"input_n","output_n","dropped_n","non_replication"}. */
FL_API fl_status fl_corpus_filter(const fl_corpus* corpus, int min_words, int min_sentences,
                                  fl_corpus** out, char** manifest_json);
/* Sentence-preserving chunks of up to max_words words. manifest_json gets
 * {"input_n","output_n","oversized":[chunk ids]}. */
FL_API fl_status fl_corpus_chunk(const fl_corpus* corpus, int max_words, fl_corpus** out,
                                 char** manifest_json);
FL_API fl_status fl_corpus_to_jsonl(const fl_corpus* corpus, char** jsonl_out);
FL_API void fl_corpus_free(fl_corpus* corpus);

/* ---- baselines -------------------------------------------------------- */

/* JSON {"categories":{name:[words...]},"weights":{name:w}}; weights default
 * to +1 per category. */
FL_API fl_status fl_dictionary_load(const char* path, fl_dictionary** out);
FL_API fl_status fl_dictionary_from_json(const char* json_text, fl_dictionary** out);
FL_API void fl_dictionary_free(fl_dictionary* dict);

/* Per-document baseline score. method is "vri" (proportion of sentences
 * containing a kinship word; kinship NULL selects the builtin lexicon) or
 * "nuai" (weighted per-category token rates, no z-scores; needs dict).
 * record: {"id","method","value","per_category",...} with group and
 * truth_score passed through from doc_json. */
FL_API fl_status fl_baseline_score_doc(const char* doc_json, const char* method,
                                       const fl_dictionary* dict, const fl_lexicon* kinship,
                                       char** record_json);
/* Corpus-level z-scored variant; fails with FL_ERR_SINGLE_SAMPLE on a corpus
 * of one. records_jsonl gets one score record per document (corpus order,
 * newline-delimited); warnings_json (optional) gets a JSON array of strings
 * naming zero-variance categories. */
FL_API fl_status fl_baseline_uai(const fl_corpus* corpus, const fl_dictionary* dict,
                                 char** records_jsonl, char** warnings_json);

/* ---- statistics -------------------------------------------------------- */

FL_API fl_status fl_stats_spearman(const double* x, const double* y, size_t n,
                                   double* r_s, double* p_value);
FL_API fl_status fl_stats_mae(const double* pred, const double* truth, size_t n, double* out);
FL_API fl_status fl_stats_cohens_d(const double* a, size_t n_a, const double* b, size_t n_b,
                                   double* out);
FL_API fl_status fl_stats_cliffs_delta(const double* a, size_t n_a, const double* b,
                                       size_t n_b, double* out);
FL_API fl_status fl_stats_wasserstein(const double* a, size_t n_a, const double* b,
                                      size_t n_b, double* out);
/* stat is "mean_diff" or "median_diff". Percentile interval of
 * stat(a*) - stat(b*) over seeded resamples; deterministic per seed. */
FL_API fl_status fl_stats_bootstrap_ci(const double* a, size_t n_a, const double* b,
                                       size_t n_b, const char* stat, int resamples,
                                       double level, uint64_t seed, double* point,
                                       double* lo, double* hi);
/* {"r_s","p_value","mae","n","stars"} with "*" p<0.05, "**" p<0.01. */
FL_API fl_status fl_stats_evaluate_json(const double* pred, const double* truth, size_t n,
                                        char** report_json);
/* Full comparison bundle: delta_mean/delta_median with bootstrap CIs,
 * cohens_d, cliffs_delta, wasserstein, per-group median/IQR. */
FL_API fl_status fl_stats_compare_json(const char* name_a, const double* a, size_t n_a,
                                       const char* name_b, const double* b, size_t n_b,
                                       uint64_t seed, char** report_json);

/* Plot-data exports (CSV text with a header row). */
FL_API fl_status fl_plot_ecdf_csv(const double* values, size_t n, char** csv_out);
/* bandwidth <= 0 selects Scott's rule. A zero-spread sample falls back to
 * bandwidth 1.0 and sets *bandwidth_fallback (may be NULL) to 1. */
FL_API fl_status fl_plot_kde_csv(const double* values, size_t n, double bandwidth,
                                 char** csv_out, int* bandwidth_fallback);
/* bins <= 0 selects ceil(sqrt(n)). */
FL_API fl_status fl_plot_histogram_csv(const double* values, size_t n, int bins,
                                       char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* FUSIONLENS_H */
