#ifndef FUSIONLENS_CORE_FACADE_HPP
#define FUSIONLENS_CORE_FACADE_HPP

#include <memory>
#include <string>
#include <vector>

#include "core/scoring.hpp"

namespace fusionlens {

enum class CoarseClass { low, medium, high };

const char* coarse_class_name(CoarseClass c);

struct FusionPrediction {
    std::string id;
    double fine_score = 1.0;  // always within [1,7]
    CoarseClass coarse_class = CoarseClass::low;
    FusionFeatures features;
    std::string provider;
    std::optional<std::string> group;
    std::optional<double> truth_score;
};

// Maps the four metaphor features to a continuous 1-7 score. The trained
// regressor behind the original system is not distributable, so the default
// is a documented heuristic; external predictors plug in through the same
// interface.
class FineProvider {
public:
    virtual ~FineProvider() = default;
    virtual double fine_score(const FusionFeatures& features) const = 0;
    virtual std::string name() const = 0;
};

// fine = clamp(1 + 6 * min(1, weighted_sum / s_norm), 1, 7). Weights must be
// nonnegative so the map stays monotone in every feature; s_norm defaults to
// 0.02, near the upper end of the observed feature scale.
class HeuristicFineProvider : public FineProvider {
public:
    HeuristicFineProvider(double w_proximity = 1.0, double w_kinship = 1.0,
                          double w_i_to_t = 1.0, double w_t_to_i = 1.0,
                          double s_norm = 0.02);

    double fine_score(const FusionFeatures& features) const override;
    std::string name() const override { return "heuristic"; }

private:
    double w_proximity_;
    double w_kinship_;
    double w_i_to_t_;
    double w_t_to_i_;
    double s_norm_;
};

// Delegates to an HTTP service: POST {base}/v1/fine_score with the feature
// record, response {"fine": x}. Same protocol style as the remote backend.
class RemoteFineProvider : public FineProvider {
public:
    explicit RemoteFineProvider(std::string base_url);

    double fine_score(const FusionFeatures& features) const override;
    std::string name() const override { return "remote"; }

private:
    std::string base_url_;
};

class CoarseProvider {
public:
    virtual ~CoarseProvider() = default;
    virtual CoarseClass coarse_class(double fine_score) const = 0;
    virtual std::string name() const = 0;
};

// Even tercile cut of the 1-7 scale: low < 3 <= medium < 5 <= high.
class ThresholdCoarseProvider : public CoarseProvider {
public:
    ThresholdCoarseProvider(double medium_threshold = 3.0, double high_threshold = 5.0);

    CoarseClass coarse_class(double fine_score) const override;
    std::string name() const override { return "threshold"; }
    double high_threshold() const { return high_threshold_; }

private:
    double medium_threshold_;
    double high_threshold_;
};

FusionPrediction predict(const Document& doc, const ScoringParams& params,
                         const MlmBackend& backend, const FineProvider& fine,
                         const CoarseProvider& coarse);

// Sublist with coarse_class == high, order preserved.
std::vector<FusionPrediction> filter_high_fusion(const std::vector<FusionPrediction>& preds);

// Prediction record: feature record fields plus fine/coarse/provider and any
// group / truth_score carried by the document.
std::string prediction_record_json(const FusionPrediction& pred);

}  // namespace fusionlens

#endif
