#ifndef FUSIONLENS_CORE_REMOTE_BACKEND_HPP
#define FUSIONLENS_CORE_REMOTE_BACKEND_HPP

#include <string>

#include "core/backend.hpp"

namespace fusionlens {

// HTTP backend speaking a minimal JSON protocol:
//
//   POST /v1/masked_fill
//     {"tokens":[...],"mask_index":k,"candidates":[...]}
//     -> {"probabilities":{word:p,...},"dropped":[...]}
//   POST /v1/similarity
//     {"w1":...,"w2":...} -> {"similarity":p}
//
// Errors come back as non-200 responses with {"error":"..."}. A 4xx status
// maps to ErrorCode::backend (the request was malformed); connection
// failures and 5xx statuses map to ErrorCode::transport and are retriable.
class RemoteBackend : public MlmBackend {
public:
    // base_url like "http://host:port". Empty uses FUSIONLENS_BACKEND_URL.
    explicit RemoteBackend(std::string base_url = {},
                           std::size_t max_context_tokens = 512);

    double similarity(std::string_view w1, std::string_view w2) const override;
    std::size_t max_context_tokens() const override { return max_context_; }
    std::string name() const override { return "remote"; }
    const std::string& base_url() const { return base_url_; }

protected:
    TokenDistribution run_query(const MaskedQuery& query) const override;

private:
    std::string post_json(const std::string& path, const std::string& body) const;

    std::string base_url_;
    std::size_t max_context_;
};

}  // namespace fusionlens

#endif
