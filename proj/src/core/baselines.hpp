#ifndef FUSIONLENS_CORE_BASELINES_HPP
#define FUSIONLENS_CORE_BASELINES_HPP

#include <map>
#include <string>
#include <vector>

#include "core/lexicon.hpp"
#include "core/textprep.hpp"

namespace fusionlens {

// Named word categories with signed combination weights; the configurable
// stand-in for the proprietary dictionary behind the affiliation indices.
// Weights default to +1 for categories without an explicit entry.
class CategoryDictionary {
public:
    CategoryDictionary(std::map<std::string, Lexicon> categories,
                       std::map<std::string, double> weights);

    static CategoryDictionary from_json_text(const std::string& text);
    static CategoryDictionary from_file(const std::string& path);

    const std::map<std::string, Lexicon>& categories() const { return categories_; }
    double weight(const std::string& category) const;

private:
    std::map<std::string, Lexicon> categories_;
    std::map<std::string, double> weights_;
};

enum class BaselineMethod { vri_fusion, nuai, uai };

const char* baseline_method_name(BaselineMethod method);

struct BaselineScore {
    BaselineMethod method = BaselineMethod::vri_fusion;
    double value = 0.0;
    std::map<std::string, double> per_category;
};

// Proportion of sentences containing at least one kinship token,
// case-insensitive. The manual-review step of the original method is
// deliberately absent; scores are raw.
BaselineScore vri_fusion(const SegmentedDocument& doc, const Lexicon& kinship);

// Per-category token rates combined with weights, no z-scoring.
BaselineScore nuai(const SegmentedDocument& doc, const CategoryDictionary& dict);

struct UaiResult {
    std::vector<BaselineScore> scores;  // one per document, input order
    std::vector<std::string> warnings;  // zero-variance categories
};

// Corpus-level variant: per-document rates z-scored across the corpus per
// category (population SD), then combined with weights. Cannot operate on a
// single sample; a zero-variance category contributes 0 with a warning.
UaiResult uai(const std::vector<SegmentedDocument>& corpus, const CategoryDictionary& dict);

}  // namespace fusionlens

#endif
