#ifndef FUSIONLENS_CORE_LEXICON_HPP
#define FUSIONLENS_CORE_LEXICON_HPP

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace fusionlens {

enum class LexiconRole { identity, kinship, target, category };

const char* role_name(LexiconRole role);
LexiconRole role_from_name(std::string_view name);

// Named, ordered word set. Entries are lowercased on construction,
// deduplicated (first occurrence wins), and must be single tokens with no
// internal whitespace. Identity and kinship lexicons must be non-empty;
// target and category lexicons may start empty. Immutable once built, so
// instances can be shared across threads.
class Lexicon {
public:
    Lexicon(std::string name, LexiconRole role, const std::vector<std::string>& words);

    const std::string& name() const { return name_; }
    LexiconRole role() const { return role_; }
    const std::vector<std::string>& words() const { return words_; }
    // words() sorted ascending; scoring iterates this so that candidate
    // insertion order never affects a result.
    const std::vector<std::string>& sorted_words() const { return sorted_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }

    // Case-insensitive membership.
    bool contains(std::string_view word) const;

private:
    std::string name_;
    LexiconRole role_;
    std::vector<std::string> words_;
    std::vector<std::string> sorted_;
    std::unordered_set<std::string> index_;
};

// Shipped default lexicons, embedded at build time from data/*.txt.
// Only identity, kinship and target have builtins.
const Lexicon& builtin_lexicon(LexiconRole role);

// Lexicon file format: UTF-8, one word per line, '#' starts a comment.
Lexicon lexicon_from_file(const std::string& path, LexiconRole role, const std::string& name);
Lexicon lexicon_from_comma_list(const std::string& list, LexiconRole role, const std::string& name);

class MlmBackend;

struct ExpansionConfig {
    int top_k = 10;
    double similarity_threshold = 0.6;  // >= 0; values above 1 disable expansion
    const Lexicon* candidate_pool = nullptr;  // may be null or empty
};

// Returns user_targets united with the builtin base set and, transitively, every
// pool word that ranks within the per-word top_k by similarity and meets the
// threshold. Runs to a fixpoint so that expanding the result again adds
// nothing. Deterministic given the provider: candidates are ranked by
// (similarity desc, word asc).
Lexicon expand_targets(const Lexicon& user_targets, const ExpansionConfig& config,
                       const MlmBackend& similarity_provider);

}  // namespace fusionlens

#endif
