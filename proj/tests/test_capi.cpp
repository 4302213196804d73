#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include <fusionlens.h>

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { fl_free_string(p); }
    std::string str() const { return p ? p : ""; }
};

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("version and error reporting") {
    CHECK(std::string(fl_version()) == "0.1.0");
    fl_lexicon* lex = nullptr;
    CHECK(fl_lexicon_builtin("bogus", &lex) == FL_ERR_INVALID_ARGUMENT);
    CHECK(std::string(fl_last_error()).find("bogus") != std::string::npos);
}

TEST_CASE("lexicon lifecycle") {
    fl_lexicon* identity = nullptr;
    REQUIRE(fl_lexicon_builtin("identity", &identity) == FL_OK);
    CHECK(fl_lexicon_size(identity) >= 5);
    CHECK(fl_lexicon_contains(identity, "ME") == 1);
    CHECK(fl_lexicon_contains(identity, "church") == 0);
    CHECK(fl_lexicon_word(identity, 0) != nullptr);
    CHECK(fl_lexicon_word(identity, 100000) == nullptr);
    fl_lexicon_free(identity);

    const char* words[] = {"Church", "god", "church"};
    fl_lexicon* user = nullptr;
    REQUIRE(fl_lexicon_create("target", words, 3, &user) == FL_OK);
    CHECK(fl_lexicon_size(user) == 2);  // deduplicated, lowercased
    fl_lexicon_free(user);

    fl_lexicon* list = nullptr;
    REQUIRE(fl_lexicon_parse_list("target", "religion, church ,god", &list) == FL_OK);
    CHECK(fl_lexicon_size(list) == 3);
    fl_lexicon_free(list);

    fl_lexicon* multiword = nullptr;
    const char* bad[] = {"white nation"};
    CHECK(fl_lexicon_create("target", bad, 1, &multiword) == FL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("expansion produces a superset through the C surface") {
    fl_lexicon* user = nullptr;
    REQUIRE(fl_lexicon_parse_list("target", "nation", &user) == FL_OK);
    fl_backend* backend = nullptr;
    REQUIRE(fl_backend_hash(3, &backend) == FL_OK);

    fl_lexicon* expanded = nullptr;
    REQUIRE(fl_lexicon_expand(user, nullptr, backend, 10, 0.6, &expanded) == FL_OK);
    CHECK(fl_lexicon_contains(expanded, "nation") == 1);
    CHECK(fl_lexicon_contains(expanded, "group") == 1);  // base set merged in
    CHECK(fl_lexicon_size(expanded) > fl_lexicon_size(user));

    fl_lexicon_free(expanded);
    fl_backend_free(backend);
    fl_lexicon_free(user);
}

TEST_CASE("backends and similarity") {
    fl_backend* uniform = nullptr;
    REQUIRE(fl_backend_uniform(100, &uniform) == FL_OK);
    double sim = -1;
    CHECK(fl_backend_similarity(uniform, "word", "word", &sim) == FL_OK);
    CHECK(sim == 1.0);
    CHECK(fl_backend_similarity(uniform, "", "x", &sim) == FL_ERR_INVALID_ARGUMENT);
    fl_backend_free(uniform);

    CHECK(fl_backend_uniform(0, &uniform) == FL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("scoring through the C API hits the uniform closed form") {
    fl_backend* backend = nullptr;
    REQUIRE(fl_backend_uniform(100, &backend) == FL_OK);
    fl_scorer* scorer = nullptr;
    REQUIRE(fl_scorer_new(backend, nullptr, nullptr, nullptr, 0.25, &scorer) == FL_OK);

    fl_features features{};
    REQUIRE(fl_scorer_score(scorer, "I love my group", &features) == FL_OK);
    CHECK(features.target_anchors == 1);
    CHECK(features.identity_anchors == 2);
    double unit = std::pow(0.01, 0.25);
    CHECK(features.s_i_to_t == doctest::Approx(5.0 * unit).epsilon(1e-12));
    CHECK(features.alpha == 0.25);
    CHECK(features.proximity > 0.0);

    CHECK(fl_scorer_score(scorer, "   ", &features) == FL_ERR_INVALID_ARGUMENT);

    CHECK(fl_scorer_new(backend, nullptr, nullptr, nullptr, 0.0, &scorer) ==
          FL_ERR_INVALID_ARGUMENT);

    fl_scorer_free(scorer);
    fl_backend_free(backend);
}

TEST_CASE("prediction records pass through document metadata") {
    fl_backend* backend = nullptr;
    REQUIRE(fl_backend_hash(11, &backend) == FL_OK);
    fl_scorer* scorer = nullptr;
    REQUIRE(fl_scorer_new(backend, nullptr, nullptr, nullptr, 0.25, &scorer) == FL_OK);

    Str record;
    REQUIRE(fl_scorer_predict_json(
                scorer,
                R"({"id":"d1","text":"I love my group and my family","group":"g","truth_score":6})",
                &record.p) == FL_OK);
    std::string r = record.str();
    CHECK(r.find("\"id\":\"d1\"") != std::string::npos);
    CHECK(r.find("\"group\":\"g\"") != std::string::npos);
    CHECK(r.find("\"truth_score\":6") != std::string::npos);
    CHECK(r.find("\"provider\":\"heuristic\"") != std::string::npos);
    CHECK(r.find("\"coarse\":") != std::string::npos);

    Str again;
    REQUIRE(fl_scorer_predict_json(
                scorer,
                R"({"id":"d1","text":"I love my group and my family","group":"g","truth_score":6})",
                &again.p) == FL_OK);
    CHECK(record.str() == again.str());

    CHECK(fl_scorer_predict_json(scorer, "{bad", &record.p) == FL_ERR_PARSE);

    fl_scorer_free(scorer);
    fl_backend_free(backend);
}

TEST_CASE("custom providers adjust predictions") {
    fl_backend* backend = nullptr;
    REQUIRE(fl_backend_uniform(100, &backend) == FL_OK);
    fl_scorer* scorer = nullptr;
    REQUIRE(fl_scorer_new(backend, nullptr, nullptr, nullptr, 0.25, &scorer) == FL_OK);
    CHECK(fl_scorer_set_fine_heuristic(scorer, 1, 1, 1, 1, 1000.0) == FL_OK);
    CHECK(fl_scorer_set_coarse_thresholds(scorer, 1.0001, 1.001) == FL_OK);
    CHECK(fl_scorer_set_coarse_thresholds(scorer, 5.0, 3.0) == FL_ERR_INVALID_ARGUMENT);
    CHECK(fl_scorer_set_fine_heuristic(scorer, -1, 1, 1, 1, 0.02) ==
          FL_ERR_INVALID_ARGUMENT);
    fl_scorer_free(scorer);
    fl_backend_free(backend);
}

TEST_CASE("text segmentation json") {
    Str out;
    REQUIRE(fl_text_segment_json("One here. Two here.", &out.p) == FL_OK);
    CHECK(out.str() ==
          R"({"sentence_count":2,"sentences":["One here.","Two here."],"word_count":4})");
    CHECK(fl_text_segment_json("   ", &out.p) == FL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("corpus handling, filtering and chunking") {
    std::string jsonl =
        R"({"id":"a","text":"One two three four five. Six seven."})"
        "\n"
        R"({"id":"b","text":"Short."})"
        "\n";
    fl_corpus* corpus = nullptr;
    REQUIRE(fl_corpus_from_jsonl(jsonl.c_str(), &corpus) == FL_OK);
    CHECK(fl_corpus_size(corpus) == 2);

    Str doc0;
    REQUIRE(fl_corpus_doc_json(corpus, 0, &doc0.p) == FL_OK);
    CHECK(doc0.str().find("\"id\":\"a\"") != std::string::npos);
    CHECK(fl_corpus_doc_json(corpus, 5, &doc0.p) == FL_ERR_INVALID_ARGUMENT);

    fl_corpus* filtered = nullptr;
    Str manifest;
    REQUIRE(fl_corpus_filter(corpus, 3, 0, &filtered, &manifest.p) == FL_OK);
    CHECK(fl_corpus_size(filtered) == 1);
    CHECK(manifest.str() ==
          R"({"dropped_n":1,"input_n":2,"non_replication":false,"output_n":1})");
    fl_corpus_free(filtered);

    CHECK(fl_corpus_filter(corpus, 0, 0, &filtered, nullptr) == FL_ERR_INVALID_ARGUMENT);

    fl_corpus* chunked = nullptr;
    Str chunk_manifest;
    REQUIRE(fl_corpus_chunk(corpus, 5, &chunked, &chunk_manifest.p) == FL_OK);
    CHECK(fl_corpus_size(chunked) == 3);  // a splits, b stays
    Str chunk0;
    REQUIRE(fl_corpus_doc_json(chunked, 0, &chunk0.p) == FL_OK);
    CHECK(chunk0.str().find("\"parent_id\":\"a\"") != std::string::npos);
    fl_corpus_free(chunked);

    Str round_trip;
    REQUIRE(fl_corpus_to_jsonl(corpus, &round_trip.p) == FL_OK);
    CHECK(round_trip.str() == jsonl);

    fl_corpus_free(corpus);
    CHECK(fl_corpus_open("/no/such/file.jsonl", &corpus) == FL_ERR_IO);
}

TEST_CASE("baselines through the C API") {
    fl_dictionary* dict = nullptr;
    REQUIRE(fl_dictionary_from_json(
                R"({"categories":{"aff":["we","us"]},"weights":{"aff":1.0}})", &dict) ==
            FL_OK);

    Str vri;
    REQUIRE(fl_baseline_score_doc(
                R"({"id":"x","text":"My brother is here. The sky is blue."})", "vri",
                nullptr, nullptr, &vri.p) == FL_OK);
    CHECK(vri.str().find("\"method\":\"vri_fusion\"") != std::string::npos);
    CHECK(vri.str().find("\"value\":0.5") != std::string::npos);

    Str nuai;
    REQUIRE(fl_baseline_score_doc(R"({"id":"x","text":"we met them all"})", "nuai", dict,
                                  nullptr, &nuai.p) == FL_OK);
    CHECK(nuai.str().find("\"value\":0.25") != std::string::npos);

    CHECK(fl_baseline_score_doc(R"({"id":"x","text":"t"})", "uai", dict, nullptr, &nuai.p) ==
          FL_ERR_INVALID_ARGUMENT);

    fl_corpus* corpus = nullptr;
    REQUIRE(fl_corpus_from_jsonl(
                "{\"id\":\"a\",\"text\":\"we and us\"}\n{\"id\":\"b\",\"text\":\"none here at all\"}\n",
                &corpus) == FL_OK);
    Str records, warnings;
    REQUIRE(fl_baseline_uai(corpus, dict, &records.p, &warnings.p) == FL_OK);
    CHECK(records.str().find("\"method\":\"uai\"") != std::string::npos);
    CHECK(warnings.str() == "[]");

    fl_corpus* single = nullptr;
    REQUIRE(fl_corpus_from_jsonl("{\"id\":\"a\",\"text\":\"we\"}\n", &single) == FL_OK);
    CHECK(fl_baseline_uai(single, dict, &records.p, nullptr) == FL_ERR_SINGLE_SAMPLE);

    fl_corpus_free(single);
    fl_corpus_free(corpus);
    fl_dictionary_free(dict);
}

TEST_CASE("statistics functions") {
    const double x[] = {1, 2, 3, 4, 5};
    const double y[] = {1, 2, 3, 5, 4};
    double r = 0, p = 0;
    REQUIRE(fl_stats_spearman(x, y, 5, &r, &p) == FL_OK);
    CHECK(r == doctest::Approx(0.9).epsilon(1e-12));

    double m = -1;
    REQUIRE(fl_stats_mae(x, y, 5, &m) == FL_OK);
    CHECK(m == doctest::Approx(0.4).epsilon(1e-12));

    const double a[] = {0, 1};
    const double b[] = {1, 2};
    double d = 0;
    REQUIRE(fl_stats_cohens_d(a, 2, b, 2, &d) == FL_OK);
    CHECK(d == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));

    double delta = 0;
    REQUIRE(fl_stats_cliffs_delta(a, 2, b, 2, &delta) == FL_OK);
    CHECK(delta == doctest::Approx(-0.75).epsilon(1e-12));

    double w = 0;
    REQUIRE(fl_stats_wasserstein(a, 2, b, 2, &w) == FL_OK);
    CHECK(w == doctest::Approx(1.0).epsilon(1e-12));

    double point = 0, lo = 0, hi = 0;
    REQUIRE(fl_stats_bootstrap_ci(a, 2, b, 2, "mean_diff", 1000, 0.95, 9, &point, &lo,
                                  &hi) == FL_OK);
    CHECK(point == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(fl_stats_bootstrap_ci(a, 2, b, 2, "mode_diff", 1000, 0.95, 9, &point, &lo, &hi) ==
          FL_ERR_INVALID_ARGUMENT);

    Str report;
    REQUIRE(fl_stats_evaluate_json(x, y, 5, &report.p) == FL_OK);
    CHECK(report.str() == R"({"mae":0.4,"n":5,"p_value":0.0833333,"r_s":0.9,"stars":""})");

    const double g1[] = {1, 2, 3, 4};
    const double g2[] = {2, 3, 4, 5};
    Str cmp;
    REQUIRE(fl_stats_compare_json("alpha", g1, 4, "beta", g2, 4, 33, &cmp.p) == FL_OK);
    CHECK(cmp.str().find("\"cliffs_delta\":") != std::string::npos);
    CHECK(cmp.str().find("\"alpha\":{") != std::string::npos);
    Str cmp2;
    REQUIRE(fl_stats_compare_json("alpha", g1, 4, "beta", g2, 4, 33, &cmp2.p) == FL_OK);
    CHECK(cmp.str() == cmp2.str());

    Str csv;
    REQUIRE(fl_plot_ecdf_csv(x, 5, &csv.p) == FL_OK);
    CHECK(csv.str().substr(0, 4) == "x,f\n");
    int kde_fallback = -1;
    REQUIRE(fl_plot_kde_csv(x, 5, 0.0, &csv.p, &kde_fallback) == FL_OK);
    CHECK(csv.str().substr(0, 10) == "x,density\n");
    CHECK(kde_fallback == 0);
    const double flat_sample[] = {2, 2, 2};
    REQUIRE(fl_plot_kde_csv(flat_sample, 3, 0.0, &csv.p, &kde_fallback) == FL_OK);
    CHECK(kde_fallback == 1);
    REQUIRE(fl_plot_histogram_csv(x, 5, 0, &csv.p) == FL_OK);
    CHECK(csv.str().substr(0, 9) == "bin_left,");

    CHECK(fl_stats_spearman(x, y, 2, &r, &p) == FL_ERR_DATA);
    const double flat[] = {1, 1, 1};
    CHECK(fl_stats_spearman(flat, y, 3, &r, &p) == FL_ERR_UNDEFINED_STAT);
}

TEST_CASE("null handles are survivable") {
    fl_lexicon_free(nullptr);
    fl_backend_free(nullptr);
    fl_scorer_free(nullptr);
    fl_corpus_free(nullptr);
    fl_dictionary_free(nullptr);
    fl_free_string(nullptr);
    CHECK(fl_lexicon_size(nullptr) == 0);
    CHECK(fl_corpus_size(nullptr) == 0);
    CHECK(fl_lexicon_contains(nullptr, "x") == 0);
}

}  // TEST_SUITE
