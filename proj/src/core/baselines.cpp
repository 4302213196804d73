#include "core/baselines.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "core/error.hpp"
#include "core/jsonio.hpp"

namespace fusionlens {

namespace {

std::size_t count_matches(const std::vector<std::string>& tokens, const Lexicon& words) {
    std::size_t matches = 0;
    for (const auto& token : tokens) {
        std::string normalized = normalize_token(token);
        if (!normalized.empty() && words.contains(normalized)) {
            ++matches;
        }
    }
    return matches;
}

std::map<std::string, double> category_rates(const SegmentedDocument& doc,
                                             const CategoryDictionary& dict) {
    std::vector<std::string> tokens = split_words(doc.document.text);
    if (tokens.empty()) {
        raise(ErrorCode::invalid_argument,
              "document '" + doc.document.id + "' has no tokens");
    }
    std::map<std::string, double> rates;
    const double total = static_cast<double>(tokens.size());
    for (const auto& [name, lexicon] : dict.categories()) {
        rates[name] = static_cast<double>(count_matches(tokens, lexicon)) / total;
    }
    return rates;
}

}  // namespace

CategoryDictionary::CategoryDictionary(std::map<std::string, Lexicon> categories,
                                       std::map<std::string, double> weights)
    : categories_(std::move(categories)), weights_(std::move(weights)) {
    if (categories_.empty()) {
        raise(ErrorCode::invalid_argument, "category dictionary needs at least one category");
    }
    for (const auto& [name, weight] : weights_) {
        if (categories_.find(name) == categories_.end()) {
            raise(ErrorCode::invalid_argument,
                  "weight for unknown category '" + name + "'");
        }
    }
}

CategoryDictionary CategoryDictionary::from_json_text(const std::string& text) {
    json parsed = parse_json(text, "category dictionary");
    if (!parsed.is_object() || !parsed.contains("categories") ||
        !parsed["categories"].is_object()) {
        raise(ErrorCode::parse, "category dictionary needs a 'categories' object");
    }
    std::map<std::string, Lexicon> categories;
    for (auto it = parsed["categories"].begin(); it != parsed["categories"].end(); ++it) {
        if (!it.value().is_array()) {
            raise(ErrorCode::parse, "category '" + it.key() + "' must be a word array");
        }
        std::vector<std::string> words;
        for (const auto& w : it.value()) {
            if (!w.is_string()) {
                raise(ErrorCode::parse, "non-string word in category '" + it.key() + "'");
            }
            words.push_back(w.get<std::string>());
        }
        categories.emplace(it.key(), Lexicon(it.key(), LexiconRole::category, words));
    }
    std::map<std::string, double> weights;
    if (parsed.contains("weights")) {
        for (auto it = parsed["weights"].begin(); it != parsed["weights"].end(); ++it) {
            if (!it.value().is_number()) {
                raise(ErrorCode::parse, "non-numeric weight for '" + it.key() + "'");
            }
            weights[it.key()] = it.value().get<double>();
        }
    }
    return CategoryDictionary(std::move(categories), std::move(weights));
}

CategoryDictionary CategoryDictionary::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        raise(ErrorCode::io, "cannot open dictionary file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

double CategoryDictionary::weight(const std::string& category) const {
    auto it = weights_.find(category);
    return it == weights_.end() ? 1.0 : it->second;
}

const char* baseline_method_name(BaselineMethod method) {
    switch (method) {
        case BaselineMethod::vri_fusion: return "vri_fusion";
        case BaselineMethod::nuai: return "nuai";
        case BaselineMethod::uai: return "uai";
    }
    return "unknown";
}

BaselineScore vri_fusion(const SegmentedDocument& doc, const Lexicon& kinship) {
    if (doc.sentences.empty()) {
        raise(ErrorCode::invalid_argument,
              "document '" + doc.document.id + "' has no sentences");
    }
    if (kinship.empty()) {
        raise(ErrorCode::invalid_argument, "kinship lexicon may not be empty");
    }
    std::size_t hits = 0;
    for (const auto& sentence : doc.sentences) {
        if (count_matches(split_words(sentence), kinship) > 0) {
            ++hits;
        }
    }
    BaselineScore score;
    score.method = BaselineMethod::vri_fusion;
    score.value = static_cast<double>(hits) / static_cast<double>(doc.sentences.size());
    score.per_category["kinship_sentences"] = static_cast<double>(hits);
    return score;
}

BaselineScore nuai(const SegmentedDocument& doc, const CategoryDictionary& dict) {
    BaselineScore score;
    score.method = BaselineMethod::nuai;
    score.per_category = category_rates(doc, dict);
    for (const auto& [name, rate] : score.per_category) {
        score.value += dict.weight(name) * rate;
    }
    return score;
}

UaiResult uai(const std::vector<SegmentedDocument>& corpus, const CategoryDictionary& dict) {
    if (corpus.size() < 2) {
        raise(ErrorCode::single_sample,
              "uai cannot operate on a single sample; need a corpus of >= 2 documents");
    }

    std::vector<std::map<std::string, double>> rates;
    rates.reserve(corpus.size());
    for (const auto& doc : corpus) {
        rates.push_back(category_rates(doc, dict));
    }

    const double n = static_cast<double>(corpus.size());
    UaiResult result;
    result.scores.resize(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        result.scores[i].method = BaselineMethod::uai;
    }

    for (const auto& [name, lexicon] : dict.categories()) {
        (void)lexicon;
        double mu = 0.0;
        for (const auto& r : rates) mu += r.at(name);
        mu /= n;
        double var = 0.0;
        for (const auto& r : rates) {
            double d = r.at(name) - mu;
            var += d * d;
        }
        var /= n;  // population variance
        double sd = std::sqrt(var);
        // Relative tolerance: rates differing only by accumulated rounding
        // are degenerate, not informative.
        bool degenerate = sd <= 1e-12 * std::max(1.0, std::fabs(mu));
        if (degenerate) {
            result.warnings.push_back("category '" + name +
                                      "' has zero variance across the corpus; contributes 0");
        }
        double weight = dict.weight(name);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            double z = degenerate ? 0.0 : (rates[i].at(name) - mu) / sd;
            result.scores[i].per_category[name] = z;
            result.scores[i].value += weight * z;
        }
    }
    return result;
}

}  // namespace fusionlens
