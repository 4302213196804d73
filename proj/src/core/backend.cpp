#include "core/backend.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace fusionlens {

namespace {

void append_u64_le(std::uint64_t value, std::uint64_t& state) {
    unsigned char bytes[8];
    for (int i = 0; i < 8; ++i) {
        bytes[i] = static_cast<unsigned char>((value >> (8 * i)) & 0xff);
    }
    state = fnv1a64(state, bytes, sizeof(bytes));
}

constexpr unsigned char kSeparator = 0x1f;

}  // namespace

std::uint64_t fnv1a64(std::uint64_t state, const void* data, std::size_t size) {
    constexpr std::uint64_t prime = 1099511628211ull;
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        state ^= bytes[i];
        state *= prime;
    }
    return state;
}

TokenDistribution MlmBackend::query(const MaskedQuery& query) const {
    if (query.tokens.empty()) {
        raise(ErrorCode::invalid_argument, "masked query has no tokens");
    }
    if (query.mask_index >= query.tokens.size()) {
        raise(ErrorCode::invalid_argument, "mask_index out of range");
    }
    if (query.candidates == nullptr || query.candidates->empty()) {
        raise(ErrorCode::invalid_argument, "masked query has no candidates");
    }

    const std::size_t limit = max_context_tokens();
    if (query.tokens.size() <= limit) {
        return run_query(query);
    }

    // Symmetric window centered on the mask, clamped to the text bounds.
    std::size_t start = query.mask_index > limit / 2 ? query.mask_index - limit / 2 : 0;
    start = std::min(start, query.tokens.size() - limit);
    MaskedQuery windowed;
    windowed.tokens.assign(query.tokens.begin() + static_cast<std::ptrdiff_t>(start),
                           query.tokens.begin() + static_cast<std::ptrdiff_t>(start + limit));
    windowed.mask_index = query.mask_index - start;
    windowed.candidates = query.candidates;
    return run_query(windowed);
}

UniformBackend::UniformBackend(std::uint32_t vocab_size) : vocab_size_(vocab_size) {
    if (vocab_size_ == 0) {
        raise(ErrorCode::invalid_argument, "uniform backend vocab_size must be positive");
    }
}

TokenDistribution UniformBackend::run_query(const MaskedQuery& query) const {
    TokenDistribution dist;
    const double p = 1.0 / static_cast<double>(vocab_size_);
    for (const auto& word : query.candidates->words()) {
        dist.probabilities[word] = p;
    }
    return dist;
}

double UniformBackend::similarity(std::string_view w1, std::string_view w2) const {
    if (w1.empty() || w2.empty()) {
        raise(ErrorCode::invalid_argument, "similarity requires non-empty words");
    }
    return w1 == w2 ? 1.0 : 0.0;
}

HashBackend::HashBackend(std::uint64_t seed) : seed_(seed) {}

TokenDistribution HashBackend::run_query(const MaskedQuery& query) const {
    std::uint64_t context = kFnv1a64Offset;
    append_u64_le(seed_, context);
    for (std::size_t i = 0; i < query.tokens.size(); ++i) {
        if (i == query.mask_index) {
            static constexpr char mask[] = "[MASK]";
            context = fnv1a64(context, mask, sizeof(mask) - 1);
        } else {
            context = fnv1a64(context, query.tokens[i].data(), query.tokens[i].size());
        }
        context = fnv1a64(context, &kSeparator, 1);
    }
    append_u64_le(query.mask_index, context);

    TokenDistribution dist;
    for (const auto& word : query.candidates->words()) {
        std::uint64_t h = fnv1a64(context, word.data(), word.size());
        dist.probabilities[word] = static_cast<double>(h % 1000) / 1000.0;
    }
    return dist;
}

double HashBackend::similarity(std::string_view w1, std::string_view w2) const {
    if (w1.empty() || w2.empty()) {
        raise(ErrorCode::invalid_argument, "similarity requires non-empty words");
    }
    if (w1 == w2) return 1.0;
    std::string_view lo = std::min(w1, w2);
    std::string_view hi = std::max(w1, w2);
    std::uint64_t h = kFnv1a64Offset;
    append_u64_le(seed_, h);
    h = fnv1a64(h, lo.data(), lo.size());
    h = fnv1a64(h, &kSeparator, 1);
    h = fnv1a64(h, hi.data(), hi.size());
    return static_cast<double>(h % 1000) / 1000.0;
}

}  // namespace fusionlens
