#ifndef FUSIONLENS_CORE_BACKEND_HPP
#define FUSIONLENS_CORE_BACKEND_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "core/lexicon.hpp"

namespace fusionlens {

// One masked position inside a tokenized text, plus the candidate words
// whose substitution probabilities are wanted.
struct MaskedQuery {
    std::vector<std::string> tokens;
    std::size_t mask_index = 0;
    const Lexicon* candidates = nullptr;
};

// Substitution probabilities for the candidates of one query. Values are the
// backend's softmax mass for each candidate, not renormalized over the
// candidate set, so they need not sum to 1. Candidates the backend tokenizer
// would split into several subtokens are listed in `dropped` and absent from
// `probabilities`; callers treat them as probability 0.
struct TokenDistribution {
    std::map<std::string, double> probabilities;
    std::vector<std::string> dropped;
};

// Masked-language-model abstraction. Implementations must tolerate
// concurrent query() calls; all methods are const.
class MlmBackend {
public:
    virtual ~MlmBackend() = default;

    // Validates the query, applies context windowing when the token count
    // exceeds max_context_tokens(), then dispatches to the implementation.
    TokenDistribution query(const MaskedQuery& query) const;

    // Word-pair similarity in [0,1]; symmetric, similarity(w,w) = 1,
    // out-of-vocabulary words score 0 rather than failing.
    virtual double similarity(std::string_view w1, std::string_view w2) const = 0;

    virtual std::size_t max_context_tokens() const {
        return std::numeric_limits<std::size_t>::max();
    }

    virtual std::string name() const = 0;

protected:
    virtual TokenDistribution run_query(const MaskedQuery& query) const = 0;
};

// Every candidate gets probability 1/vocab_size regardless of context.
class UniformBackend : public MlmBackend {
public:
    explicit UniformBackend(std::uint32_t vocab_size = 100);

    double similarity(std::string_view w1, std::string_view w2) const override;
    std::string name() const override { return "uniform"; }
    std::uint32_t vocab_size() const { return vocab_size_; }

protected:
    TokenDistribution run_query(const MaskedQuery& query) const override;

private:
    std::uint32_t vocab_size_;
};

// Deterministic pseudo-random probabilities derived from a stable hash of
// (seed, masked context, candidate). probability = (h mod 1000) / 1000.
//
// Hash recipe (so results can be recomputed independently): FNV-1a 64-bit
// over: seed as 8 little-endian bytes, then each context token terminated
// by byte 0x1f with the token at mask_index replaced by the literal
// "[MASK]", then mask_index as 8 little-endian bytes, then the candidate
// word's bytes. similarity(w1,w2) hashes min(w1,w2), 0x1f, max(w1,w2) the
// same way and returns 1.0 for identical words.
class HashBackend : public MlmBackend {
public:
    explicit HashBackend(std::uint64_t seed = 0);

    double similarity(std::string_view w1, std::string_view w2) const override;
    std::string name() const override { return "hash"; }
    std::uint64_t seed() const { return seed_; }

protected:
    TokenDistribution run_query(const MaskedQuery& query) const override;

private:
    std::uint64_t seed_;
};

// FNV-1a 64-bit, the stable hash used by HashBackend.
std::uint64_t fnv1a64(std::uint64_t state, const void* data, std::size_t size);
inline constexpr std::uint64_t kFnv1a64Offset = 14695981039346656037ull;

}  // namespace fusionlens

#endif
