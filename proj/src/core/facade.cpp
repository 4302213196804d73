#include "core/facade.hpp"

#include <algorithm>
#include <cmath>

#include <httplib.h>

#include "core/error.hpp"
#include "core/jsonio.hpp"

namespace fusionlens {

const char* coarse_class_name(CoarseClass c) {
    switch (c) {
        case CoarseClass::low: return "low";
        case CoarseClass::medium: return "medium";
        case CoarseClass::high: return "high";
    }
    return "?";
}

HeuristicFineProvider::HeuristicFineProvider(double w_proximity, double w_kinship,
                                             double w_i_to_t, double w_t_to_i, double s_norm)
    : w_proximity_(w_proximity),
      w_kinship_(w_kinship),
      w_i_to_t_(w_i_to_t),
      w_t_to_i_(w_t_to_i),
      s_norm_(s_norm) {
    if (w_proximity_ < 0.0 || w_kinship_ < 0.0 || w_i_to_t_ < 0.0 || w_t_to_i_ < 0.0) {
        raise(ErrorCode::invalid_argument, "fine-provider weights must be nonnegative");
    }
    if (s_norm_ <= 0.0) {
        raise(ErrorCode::invalid_argument, "fine-provider normalizer must be positive");
    }
}

double HeuristicFineProvider::fine_score(const FusionFeatures& features) const {
    double weighted = w_proximity_ * features.proximity + w_kinship_ * features.k_f.value +
                      w_i_to_t_ * features.s_i_to_t.value +
                      w_t_to_i_ * features.s_t_to_i.value;
    double scaled = std::min(1.0, weighted / s_norm_);
    return std::clamp(1.0 + 6.0 * scaled, 1.0, 7.0);
}

RemoteFineProvider::RemoteFineProvider(std::string base_url) : base_url_(std::move(base_url)) {
    if (base_url_.empty()) {
        raise(ErrorCode::invalid_argument, "remote fine provider needs a URL");
    }
}

double RemoteFineProvider::fine_score(const FusionFeatures& features) const {
    json body;
    body["s_i_to_t"] = features.s_i_to_t.value;
    body["s_t_to_i"] = features.s_t_to_i.value;
    body["k_f"] = features.k_f.value;
    body["proximity"] = features.proximity;

    httplib::Client client(base_url_);
    client.set_connection_timeout(10, 0);
    auto res = client.Post("/v1/fine_score", body.dump(), "application/json");
    if (!res) {
        raise(ErrorCode::transport, "fine-score provider unreachable; retriable");
    }
    if (res->status != 200) {
        raise(ErrorCode::backend,
              "fine-score provider returned status " + std::to_string(res->status));
    }
    json reply = parse_json(res->body, "fine_score response");
    if (!reply.is_object() || !reply.contains("fine") || !reply["fine"].is_number()) {
        raise(ErrorCode::backend, "fine_score response missing 'fine'");
    }
    return std::clamp(reply["fine"].get<double>(), 1.0, 7.0);
}

ThresholdCoarseProvider::ThresholdCoarseProvider(double medium_threshold, double high_threshold)
    : medium_threshold_(medium_threshold), high_threshold_(high_threshold) {
    if (!(medium_threshold_ < high_threshold_)) {
        raise(ErrorCode::invalid_argument, "coarse thresholds must be increasing");
    }
}

CoarseClass ThresholdCoarseProvider::coarse_class(double fine_score) const {
    if (fine_score >= high_threshold_) return CoarseClass::high;
    if (fine_score >= medium_threshold_) return CoarseClass::medium;
    return CoarseClass::low;
}

FusionPrediction predict(const Document& doc, const ScoringParams& params,
                         const MlmBackend& backend, const FineProvider& fine,
                         const CoarseProvider& coarse) {
    FusionPrediction pred;
    pred.id = doc.id;
    pred.group = doc.group;
    pred.truth_score = doc.truth_score;
    pred.features = score_features(doc, params, backend);
    pred.fine_score = std::clamp(fine.fine_score(pred.features), 1.0, 7.0);
    pred.coarse_class = coarse.coarse_class(pred.fine_score);
    pred.provider = fine.name();
    return pred;
}

std::vector<FusionPrediction> filter_high_fusion(const std::vector<FusionPrediction>& preds) {
    std::vector<FusionPrediction> out;
    std::copy_if(preds.begin(), preds.end(), std::back_inserter(out),
                 [](const FusionPrediction& p) { return p.coarse_class == CoarseClass::high; });
    return out;
}

std::string prediction_record_json(const FusionPrediction& pred) {
    json record;
    record["id"] = pred.id;
    record["fine"] = pred.fine_score;
    record["coarse"] = coarse_class_name(pred.coarse_class);
    record["s_i_to_t"] = pred.features.s_i_to_t.value;
    record["s_t_to_i"] = pred.features.s_t_to_i.value;
    record["k_f"] = pred.features.k_f.value;
    record["proximity"] = pred.features.proximity;
    record["anchors"] = {{"identity", pred.features.identity_anchors},
                         {"target", pred.features.target_anchors}};
    record["alpha"] = pred.features.alpha;
    record["provider"] = pred.provider;
    if (pred.group) record["group"] = *pred.group;
    if (pred.truth_score) record["truth_score"] = *pred.truth_score;
    return dump_canonical(record);
}

}  // namespace fusionlens
