#include "core/scoring.hpp"

#include <cmath>

#include "core/error.hpp"
#include "core/jsonio.hpp"

namespace fusionlens {

namespace {

std::vector<std::size_t> anchor_positions(const std::vector<std::string>& tokens,
                                          const Lexicon& vocab) {
    std::vector<std::size_t> anchors;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        std::string normalized = normalize_token(tokens[i]);
        if (!normalized.empty() && vocab.contains(normalized)) {
            anchors.push_back(i);
        }
    }
    return anchors;
}

}  // namespace

void ScoringParams::validate() const {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        raise(ErrorCode::invalid_argument, "alpha must be in (0,1]");
    }
    if (identity == nullptr || kinship == nullptr || targets == nullptr) {
        raise(ErrorCode::invalid_argument, "scoring params need all three lexicons");
    }
    if (identity->role() == kinship->role() || identity->role() == targets->role() ||
        kinship->role() == targets->role()) {
        raise(ErrorCode::invalid_argument, "scoring lexicons must have distinct roles");
    }
}

const char* direction_name(Direction d) {
    switch (d) {
        case Direction::identity_to_target: return "I->T";
        case Direction::target_to_identity: return "T->I";
        case Direction::kinship_to_target: return "K->T";
    }
    return "?";
}

DirectionalScore directional_score(const Document& doc, const Lexicon& from_vocab,
                                   const Lexicon& to_vocab, Direction direction,
                                   double alpha, const MlmBackend& backend) {
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        raise(ErrorCode::invalid_argument, "alpha must be in (0,1]");
    }
    if (from_vocab.empty() || to_vocab.empty()) {
        raise(ErrorCode::invalid_argument, "directional score needs non-empty vocabularies");
    }

    DirectionalScore score;
    score.direction = direction;

    std::vector<std::string> tokens = split_words(doc.text);
    std::vector<std::size_t> anchors = anchor_positions(tokens, to_vocab);
    score.anchor_count = static_cast<std::uint32_t>(anchors.size());
    if (anchors.empty()) {
        return score;
    }

    double total = 0.0;
    for (std::size_t position : anchors) {
        MaskedQuery query{tokens, position, &from_vocab};
        TokenDistribution dist = backend.query(query);
        // Candidates are visited in sorted order so the sum is independent
        // of lexicon insertion order; dropped candidates contribute 0.
        double position_sum = 0.0;
        for (const auto& candidate : from_vocab.sorted_words()) {
            auto it = dist.probabilities.find(candidate);
            if (it == dist.probabilities.end()) {
                ++score.dropped_candidates;
                continue;
            }
            double p = it->second;
            if (p < 0.0 || p > 1.0) {
                raise(ErrorCode::backend,
                      "backend probability out of [0,1] for '" + candidate + "'");
            }
            if (p > 0.0) {
                position_sum += std::pow(p, alpha);
            }
        }
        total += position_sum;
    }
    score.value = total / static_cast<double>(anchors.size());
    return score;
}

double fusion_proximity(double s_i_to_t, double s_t_to_i) {
    if (s_i_to_t < 0.0 || s_t_to_i < 0.0) {
        raise(ErrorCode::invalid_argument, "directional scores must be nonnegative");
    }
    double denom = s_i_to_t + s_t_to_i;
    if (denom == 0.0) {
        return 0.0;
    }
    return 2.0 * s_i_to_t * s_t_to_i / denom;
}

FusionFeatures score_features(const Document& doc, const ScoringParams& params,
                              const MlmBackend& backend) {
    params.validate();
    if (split_words(doc.text).empty()) {
        raise(ErrorCode::invalid_argument, "document '" + doc.id + "' has no tokens");
    }

    FusionFeatures features;
    features.alpha = params.alpha;
    features.s_i_to_t = directional_score(doc, *params.identity, *params.targets,
                                          Direction::identity_to_target, params.alpha, backend);
    features.s_t_to_i = directional_score(doc, *params.targets, *params.identity,
                                          Direction::target_to_identity, params.alpha, backend);
    features.k_f = directional_score(doc, *params.kinship, *params.targets,
                                     Direction::kinship_to_target, params.alpha, backend);
    features.proximity = fusion_proximity(features.s_i_to_t.value, features.s_t_to_i.value);
    features.identity_anchors = features.s_t_to_i.anchor_count;
    features.target_anchors = features.s_i_to_t.anchor_count;
    return features;
}

std::string features_record_json(const Document& doc, const FusionFeatures& features) {
    json record;
    record["id"] = doc.id;
    record["s_i_to_t"] = features.s_i_to_t.value;
    record["s_t_to_i"] = features.s_t_to_i.value;
    record["k_f"] = features.k_f.value;
    record["proximity"] = features.proximity;
    record["anchors"] = {{"identity", features.identity_anchors},
                         {"target", features.target_anchors}};
    record["alpha"] = features.alpha;
    return dump_canonical(record);
}

}  // namespace fusionlens
