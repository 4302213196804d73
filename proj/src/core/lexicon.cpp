#include "core/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "core/backend.hpp"
#include "core/error.hpp"
#include "generated/builtin_words.hpp"

namespace fusionlens {

namespace {

std::string to_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        out.push_back(static_cast<char>(std::tolower(c)));
    }
    return out;
}

bool has_whitespace(std::string_view s) {
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

std::vector<std::string> parse_word_lines(std::istream& in) {
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string word;
        if (fields >> word) {
            words.push_back(word);
            std::string extra;
            if (fields >> extra) {
                raise(ErrorCode::parse,
                      "lexicon line holds more than one word: '" + line + "'");
            }
        }
    }
    return words;
}

Lexicon parse_builtin(const char* text, LexiconRole role, const std::string& name) {
    std::istringstream in(text);
    return Lexicon(name, role, parse_word_lines(in));
}

}  // namespace

const char* role_name(LexiconRole role) {
    switch (role) {
        case LexiconRole::identity: return "identity";
        case LexiconRole::kinship: return "kinship";
        case LexiconRole::target: return "target";
        case LexiconRole::category: return "category";
    }
    return "unknown";
}

LexiconRole role_from_name(std::string_view name) {
    if (name == "identity") return LexiconRole::identity;
    if (name == "kinship") return LexiconRole::kinship;
    if (name == "target") return LexiconRole::target;
    if (name == "category") return LexiconRole::category;
    raise(ErrorCode::invalid_argument, "unknown lexicon role: " + std::string(name));
}

Lexicon::Lexicon(std::string name, LexiconRole role, const std::vector<std::string>& words)
    : name_(std::move(name)), role_(role) {
    words_.reserve(words.size());
    for (const auto& raw : words) {
        if (raw.empty()) {
            raise(ErrorCode::invalid_argument, "empty word in lexicon '" + name_ + "'");
        }
        if (has_whitespace(raw)) {
            raise(ErrorCode::invalid_argument,
                  "multi-word entry '" + raw + "' in lexicon '" + name_ +
                      "'; single tokens only");
        }
        std::string word = to_lower(raw);
        if (index_.insert(word).second) {
            words_.push_back(std::move(word));
        }
    }
    if (words_.empty() &&
        (role_ == LexiconRole::identity || role_ == LexiconRole::kinship)) {
        raise(ErrorCode::invalid_argument,
              std::string(role_name(role_)) + " lexicon '" + name_ + "' may not be empty");
    }
    sorted_ = words_;
    std::sort(sorted_.begin(), sorted_.end());
}

bool Lexicon::contains(std::string_view word) const {
    return index_.count(to_lower(word)) != 0;
}

const Lexicon& builtin_lexicon(LexiconRole role) {
    static const Lexicon identity =
        parse_builtin(builtin::kIdentityWords, LexiconRole::identity, "builtin-identity");
    static const Lexicon kinship =
        parse_builtin(builtin::kKinshipWords, LexiconRole::kinship, "builtin-kinship");
    static const Lexicon target =
        parse_builtin(builtin::kTargetBaseWords, LexiconRole::target, "builtin-target-base");
    switch (role) {
        case LexiconRole::identity: return identity;
        case LexiconRole::kinship: return kinship;
        case LexiconRole::target: return target;
        default:
            raise(ErrorCode::invalid_argument,
                  std::string("no builtin lexicon for role ") + role_name(role));
    }
}

Lexicon lexicon_from_file(const std::string& path, LexiconRole role, const std::string& name) {
    std::ifstream in(path);
    if (!in) {
        raise(ErrorCode::io, "cannot open lexicon file: " + path);
    }
    return Lexicon(name, role, parse_word_lines(in));
}

Lexicon lexicon_from_comma_list(const std::string& list, LexiconRole role,
                                const std::string& name) {
    std::vector<std::string> words;
    std::string item;
    std::istringstream in(list);
    while (std::getline(in, item, ',')) {
        // trim surrounding whitespace, keep internal (rejected later)
        auto begin = item.find_first_not_of(" \t");
        auto end = item.find_last_not_of(" \t");
        if (begin == std::string::npos) continue;
        words.push_back(item.substr(begin, end - begin + 1));
    }
    return Lexicon(name, role, words);
}

Lexicon expand_targets(const Lexicon& user_targets, const ExpansionConfig& config,
                       const MlmBackend& similarity_provider) {
    if (user_targets.role() != LexiconRole::target) {
        raise(ErrorCode::invalid_argument, "expand_targets requires a target lexicon");
    }
    if (config.top_k < 1) {
        raise(ErrorCode::invalid_argument, "expansion top_k must be >= 1");
    }
    if (config.similarity_threshold < 0.0) {
        raise(ErrorCode::invalid_argument, "expansion threshold must be >= 0");
    }

    std::vector<std::string> result = user_targets.words();
    std::unordered_set<std::string> seen(result.begin(), result.end());
    for (const auto& word : builtin_lexicon(LexiconRole::target).words()) {
        if (seen.insert(word).second) result.push_back(word);
    }

    const std::vector<std::string>* pool =
        config.candidate_pool ? &config.candidate_pool->sorted_words() : nullptr;
    if (pool && !pool->empty()) {
        // Fixpoint iteration: newly added words are expanded too, so running
        // the expansion on its own output is a no-op.
        std::vector<std::string> frontier = result;
        while (!frontier.empty()) {
            std::vector<std::string> added;
            for (const auto& word : frontier) {
                std::vector<std::pair<double, const std::string*>> ranked;
                for (const auto& cand : *pool) {
                    double sim = similarity_provider.similarity(word, cand);
                    if (sim >= config.similarity_threshold) {
                        ranked.emplace_back(sim, &cand);
                    }
                }
                std::sort(ranked.begin(), ranked.end(),
                          [](const auto& a, const auto& b) {
                              if (a.first != b.first) return a.first > b.first;
                              return *a.second < *b.second;
                          });
                std::size_t take = std::min<std::size_t>(ranked.size(),
                                                         static_cast<std::size_t>(config.top_k));
                for (std::size_t i = 0; i < take; ++i) {
                    if (seen.insert(*ranked[i].second).second) {
                        result.push_back(*ranked[i].second);
                        added.push_back(*ranked[i].second);
                    }
                }
            }
            frontier = std::move(added);
        }
    }

    return Lexicon(user_targets.name().empty() ? "expanded-targets"
                                               : user_targets.name() + "+expanded",
                   LexiconRole::target, result);
}

}  // namespace fusionlens
