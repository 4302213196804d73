#include <doctest.h>

#include <random>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "core/backend.hpp"
#include "core/error.hpp"
#include "core/facade.hpp"

using namespace fusionlens;

namespace {

FusionFeatures features_of(double s_it, double s_ti, double k_f, double proximity) {
    FusionFeatures f;
    f.s_i_to_t.value = s_it;
    f.s_t_to_i.value = s_ti;
    f.k_f.value = k_f;
    f.proximity = proximity;
    f.alpha = 0.25;
    return f;
}

FusionPrediction prediction_with(CoarseClass c, const std::string& id) {
    FusionPrediction p;
    p.id = id;
    p.coarse_class = c;
    return p;
}

}  // namespace

TEST_SUITE("facade") {

TEST_CASE("zero features land on the heuristic floor") {
    HeuristicFineProvider fine;
    ThresholdCoarseProvider coarse;
    double score = fine.fine_score(features_of(0, 0, 0, 0));
    CHECK(score == 1.0);
    CHECK(coarse.coarse_class(score) == CoarseClass::low);
}

TEST_CASE("saturated features clamp at 7") {
    HeuristicFineProvider fine;
    CHECK(fine.fine_score(features_of(1, 1, 1, 1)) == 7.0);
    CHECK(fine.fine_score(features_of(100, 100, 100, 100)) == 7.0);
}

TEST_CASE("default normalizer maps the documented midpoint") {
    HeuristicFineProvider fine;
    // weighted sum 0.01 against s_norm 0.02 -> 1 + 6*0.5 = 4
    CHECK(fine.fine_score(features_of(0.01, 0, 0, 0)) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("heuristic is monotone in every feature") {
    HeuristicFineProvider fine;
    std::mt19937_64 gen(13);
    std::uniform_real_distribution<double> unif(0.0, 0.01);
    for (int round = 0; round < 500; ++round) {
        double base[4] = {unif(gen), unif(gen), unif(gen), unif(gen)};
        double before = fine.fine_score(features_of(base[0], base[1], base[2], base[3]));
        int which = static_cast<int>(gen() % 4);
        base[which] += unif(gen);
        double after = fine.fine_score(features_of(base[0], base[1], base[2], base[3]));
        CHECK(after >= before);
        CHECK(before >= 1.0);
        CHECK(after <= 7.0);
    }
}

TEST_CASE("provider parameter validation") {
    CHECK_THROWS_AS(HeuristicFineProvider(-1, 1, 1, 1, 0.02), Error);
    CHECK_THROWS_AS(HeuristicFineProvider(1, 1, 1, 1, 0.0), Error);
    CHECK_THROWS_AS(ThresholdCoarseProvider(5.0, 3.0), Error);
}

TEST_CASE("coarse thresholds cut at 3 and 5") {
    ThresholdCoarseProvider coarse;
    CHECK(coarse.coarse_class(1.0) == CoarseClass::low);
    CHECK(coarse.coarse_class(2.999) == CoarseClass::low);
    CHECK(coarse.coarse_class(3.0) == CoarseClass::medium);
    CHECK(coarse.coarse_class(4.999) == CoarseClass::medium);
    CHECK(coarse.coarse_class(5.0) == CoarseClass::high);
    CHECK(coarse.coarse_class(7.0) == CoarseClass::high);
}

TEST_CASE("predict wires features through providers") {
    Lexicon identity("i", LexiconRole::identity, {"i", "me", "my", "mine", "myself"});
    Lexicon kinship("k", LexiconRole::kinship, {"family", "brother"});
    Lexicon targets("t", LexiconRole::target, {"church", "god"});
    ScoringParams params;
    params.identity = &identity;
    params.kinship = &kinship;
    params.targets = &targets;

    UniformBackend backend(100);
    HeuristicFineProvider fine;
    ThresholdCoarseProvider coarse;

    Document doc;
    doc.id = "p1";
    doc.text = "I love my church";
    doc.group = "grp";
    doc.truth_score = 5.5;

    auto pred = predict(doc, params, backend, fine, coarse);
    CHECK(pred.id == "p1");
    CHECK(pred.provider == "heuristic");
    CHECK(pred.fine_score >= 1.0);
    CHECK(pred.fine_score <= 7.0);
    CHECK(pred.group == doc.group);
    CHECK(pred.truth_score == doc.truth_score);

    std::string record = prediction_record_json(pred);
    CHECK(record.find("\"coarse\":") != std::string::npos);
    CHECK(record.find("\"fine\":") != std::string::npos);
    CHECK(record.find("\"provider\":\"heuristic\"") != std::string::npos);
    CHECK(record.find("\"group\":\"grp\"") != std::string::npos);
    CHECK(record.find("\"truth_score\":5.5") != std::string::npos);
}

TEST_CASE("filter_high_fusion keeps only high, in order") {
    CHECK(filter_high_fusion({}).empty());

    std::vector<FusionPrediction> preds;
    preds.push_back(prediction_with(CoarseClass::low, "a"));
    preds.push_back(prediction_with(CoarseClass::high, "b"));
    preds.push_back(prediction_with(CoarseClass::medium, "c"));
    preds.push_back(prediction_with(CoarseClass::high, "d"));

    auto high = filter_high_fusion(preds);
    REQUIRE(high.size() == 2);
    CHECK(high[0].id == "b");
    CHECK(high[1].id == "d");

    std::size_t expected = 0;
    for (const auto& p : preds) {
        if (p.coarse_class == CoarseClass::high) ++expected;
    }
    CHECK(high.size() == expected);
}

TEST_CASE("high filter agrees with the fine-score threshold") {
    HeuristicFineProvider fine;
    ThresholdCoarseProvider coarse;
    std::mt19937_64 gen(14);
    std::uniform_real_distribution<double> unif(0.0, 0.02);
    std::vector<FusionPrediction> preds;
    for (int i = 0; i < 200; ++i) {
        FusionPrediction p;
        p.id = std::to_string(i);
        p.features = features_of(unif(gen), unif(gen), unif(gen), unif(gen));
        p.fine_score = fine.fine_score(p.features);
        p.coarse_class = coarse.coarse_class(p.fine_score);
        preds.push_back(p);
    }
    auto high = filter_high_fusion(preds);
    for (const auto& p : high) {
        CHECK(p.fine_score >= coarse.high_threshold());
    }
    std::size_t by_threshold = 0;
    for (const auto& p : preds) {
        if (p.fine_score >= coarse.high_threshold()) ++by_threshold;
    }
    CHECK(high.size() == by_threshold);
}

TEST_CASE("remote fine provider speaks the documented protocol") {
    httplib::Server server;
    server.Post("/v1/fine_score", [](const httplib::Request& req, httplib::Response& res) {
        auto body = nlohmann::json::parse(req.body);
        double fine = 1.0 + 600.0 * body["proximity"].get<double>();
        res.set_content(nlohmann::json{{"fine", fine}}.dump(), "application/json");
    });
    int port = server.bind_to_any_port("127.0.0.1");
    std::thread thread([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    RemoteFineProvider provider("http://127.0.0.1:" + std::to_string(port));
    CHECK(provider.name() == "remote");
    CHECK(provider.fine_score(features_of(0, 0, 0, 0.005)) ==
          doctest::Approx(4.0).epsilon(1e-12));
    CHECK(provider.fine_score(features_of(0, 0, 0, 1.0)) == 7.0);  // clamped

    server.stop();
    thread.join();

    try {
        provider.fine_score(features_of(0, 0, 0, 0));
        FAIL("expected transport error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::transport);
    }
}

}  // TEST_SUITE
