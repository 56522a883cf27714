#pragma once

// JSON-over-HTTP counterfactual service under /api/v1.
//
//   GET  /api/v1/samples?page=&page_size=&split=   paged gallery with thumbnails
//   GET  /api/v1/samples/{id}                       one sample, full resolution
//   POST /api/v1/counterfactual                     CounterfactualRequest -> CounterfactualResponse
//   GET  /api/v1/model/info                         graph, feasible ranges, diff color scale
//
// Every body carries the config hash. Errors are problem documents
// (application/problem+json). Requests only read an immutable snapshot;
// reload() swaps the snapshot atomically.

#include "dscm/pipeline.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <mutex>
#include <optional>
#include <string>

namespace httplib {
class Server;
}

namespace dscm {

struct ServiceOptions {
    CftRegime regime = CftRegime::seg;
    std::string split = "test";  ///< listed samples; any id can still be fetched
    int default_page_size = 24;
    int max_page_size = 200;
    bool area_overlay = true;  ///< load the evaluation segmentor for area readouts
};

struct ServiceResponse {
    int status = 200;
    nlohmann::json body;
    bool problem() const { return status >= 400; }
};

class CounterfactualService {
public:
    CounterfactualService(Pipeline& pipeline, ServiceOptions options);

    /// Loads flows, HVAE and (optionally) the evaluation segmentor, then swaps them in.
    void reload();
    void unload();
    bool loaded() const;

    ServiceResponse list_samples(std::optional<int> page, std::optional<int> page_size,
                                 const std::optional<std::string>& split) const;
    ServiceResponse get_sample(const std::string& id) const;
    ServiceResponse post_counterfactual(const std::string& body) const;
    ServiceResponse model_info() const;

    /// Registers the routes (and permissive CORS headers) on `server`.
    void mount(httplib::Server& server) const;

    struct Snapshot;

private:
    std::shared_ptr<const Snapshot> snapshot() const;
    ServiceResponse problem(int status, const std::string& title, const std::string& detail,
                            nlohmann::json errors = nullptr) const;

    Pipeline& pipeline_;
    ServiceOptions options_;
    std::string config_hash_;
    mutable std::mutex mutex_;
    std::shared_ptr<const Snapshot> snapshot_;
};

}  // namespace dscm
