#include "core/remote_backend.hpp"

#include <cstdlib>

#include <httplib.h>

#include "core/error.hpp"
#include "core/jsonio.hpp"

namespace fusionlens {

RemoteBackend::RemoteBackend(std::string base_url, std::size_t max_context_tokens)
    : base_url_(std::move(base_url)), max_context_(max_context_tokens) {
    if (base_url_.empty()) {
        if (const char* env = std::getenv("FUSIONLENS_BACKEND_URL")) {
            base_url_ = env;
        }
    }
    if (base_url_.empty()) {
        raise(ErrorCode::invalid_argument,
              "remote backend needs a URL (flag or FUSIONLENS_BACKEND_URL)");
    }
    if (max_context_ < 2) {
        raise(ErrorCode::invalid_argument, "remote max context must be >= 2 tokens");
    }
}

std::string RemoteBackend::post_json(const std::string& path, const std::string& body) const {
    // One client per call keeps the backend safe under concurrent query().
    httplib::Client client(base_url_);
    client.set_connection_timeout(10, 0);
    client.set_read_timeout(60, 0);
    auto res = client.Post(path, body, "application/json");
    if (!res) {
        raise(ErrorCode::transport,
              "backend unreachable at " + base_url_ + path + " (" +
                  httplib::to_string(res.error()) + "); retriable");
    }
    if (res->status != 200) {
        std::string detail = "status " + std::to_string(res->status);
        json err = json::parse(res->body, nullptr, false);
        if (err.is_object() && err.contains("error") && err["error"].is_string()) {
            detail += ": " + err["error"].get<std::string>();
        }
        if (res->status >= 500) {
            raise(ErrorCode::transport, "backend failure (" + detail + "); retriable");
        }
        raise(ErrorCode::backend, "backend rejected request (" + detail + ")");
    }
    return res->body;
}

TokenDistribution RemoteBackend::run_query(const MaskedQuery& query) const {
    json body;
    body["tokens"] = query.tokens;
    body["mask_index"] = query.mask_index;
    body["candidates"] = query.candidates->words();

    json reply = parse_json(post_json("/v1/masked_fill", body.dump()), "masked_fill response");
    if (!reply.is_object() || !reply.contains("probabilities") ||
        !reply["probabilities"].is_object()) {
        raise(ErrorCode::backend, "masked_fill response missing probabilities");
    }

    TokenDistribution dist;
    for (auto it = reply["probabilities"].begin(); it != reply["probabilities"].end(); ++it) {
        if (!it.value().is_number()) {
            raise(ErrorCode::backend, "non-numeric probability for '" + it.key() + "'");
        }
        double p = it.value().get<double>();
        if (p < 0.0 || p > 1.0) {
            raise(ErrorCode::backend, "probability out of [0,1] for '" + it.key() + "'");
        }
        if (!query.candidates->contains(it.key())) {
            raise(ErrorCode::backend, "probability for non-candidate '" + it.key() + "'");
        }
        dist.probabilities[it.key()] = p;
    }
    if (reply.contains("dropped")) {
        for (const auto& item : reply["dropped"]) {
            dist.dropped.push_back(item.get<std::string>());
        }
    }
    return dist;
}

double RemoteBackend::similarity(std::string_view w1, std::string_view w2) const {
    if (w1.empty() || w2.empty()) {
        raise(ErrorCode::invalid_argument, "similarity requires non-empty words");
    }
    json body;
    body["w1"] = std::string(w1);
    body["w2"] = std::string(w2);
    json reply = parse_json(post_json("/v1/similarity", body.dump()), "similarity response");
    if (!reply.is_object() || !reply.contains("similarity") || !reply["similarity"].is_number()) {
        raise(ErrorCode::backend, "similarity response missing value");
    }
    double sim = reply["similarity"].get<double>();
    if (sim < 0.0 || sim > 1.0) {
        raise(ErrorCode::backend, "similarity out of [0,1]");
    }
    return sim;
}

}  // namespace fusionlens
