#ifndef FUSIONLENS_CORE_SCORING_HPP
#define FUSIONLENS_CORE_SCORING_HPP

#include <cstdint>
#include <string>

#include "core/backend.hpp"
#include "core/lexicon.hpp"
#include "core/textprep.hpp"

namespace fusionlens {

// Parameters for the implicit-metaphor features. alpha is the smoothing
// exponent applied to every substitution probability; targets is the
// post-expansion target lexicon.
struct ScoringParams {
    double alpha = 0.25;
    const Lexicon* identity = nullptr;
    const Lexicon* kinship = nullptr;
    const Lexicon* targets = nullptr;

    void validate() const;
};

enum class Direction {
    identity_to_target,  // identity words replacing masked target tokens
    target_to_identity,  // target words replacing masked identity tokens
    kinship_to_target,   // kinship words replacing masked target tokens
};

const char* direction_name(Direction d);

// Average over anchors of the summed, alpha-smoothed substitution
// probabilities. anchor_count is the number of masked positions; a zero
// anchor count forces a zero value.
struct DirectionalScore {
    double value = 0.0;
    std::uint32_t anchor_count = 0;
    Direction direction = Direction::identity_to_target;
    std::uint32_t dropped_candidates = 0;  // candidate drops summed over anchors
};

// The four implicit-metaphor features plus the anchor counts and parameters
// they were computed with.
struct FusionFeatures {
    DirectionalScore s_i_to_t;
    DirectionalScore s_t_to_i;
    DirectionalScore k_f;
    double proximity = 0.0;
    std::uint32_t identity_anchors = 0;
    std::uint32_t target_anchors = 0;
    double alpha = 0.25;
};

// value = (1/M) * sum over masked positions of sum over candidates of
// p^alpha, where the M positions are the token occurrences matching to_vocab
// (case-insensitive, punctuation stripped), each masked one at a time with
// every other token intact. Backend failures propagate; they are never
// replaced by zeros.
DirectionalScore directional_score(const Document& doc, const Lexicon& from_vocab,
                                   const Lexicon& to_vocab, Direction direction,
                                   double alpha, const MlmBackend& backend);

// Harmonic mean of the two directional values; 0/0 is defined as 0, so one
// missing directional signal yields no fusion evidence.
double fusion_proximity(double s_i_to_t, double s_t_to_i);

FusionFeatures score_features(const Document& doc, const ScoringParams& params,
                              const MlmBackend& backend);

// Feature record serialized with the canonical JSON formatting; includes the
// document id, the four scores, anchor counts, and alpha.
std::string features_record_json(const Document& doc, const FusionFeatures& features);

}  // namespace fusionlens

#endif
