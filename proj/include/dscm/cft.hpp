#pragma once

// Counterfactual fine-tuning of the HVAE parameters under three regimes:
// none (baseline), reg (frozen regressor guidance) and seg (frozen
// segmentor soft-area guidance). The loss is squared error on standardized
// structure attributes plus an ELBO anchor weighted by lambda.

#include "dscm/aux_models.hpp"
#include "dscm/scm.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace dscm {

class Dataset;

enum class CftRegime { none, reg, seg };
std::string to_string(CftRegime regime);
CftRegime cft_regime_from_string(const std::string& text);

struct CftConfig {
    CftRegime regime = CftRegime::none;
    std::vector<std::string> eligible;  ///< intervention variables; empty = all image parents
    real anchor_weight = 1;             ///< lambda
    int steps = 300;
    int batch = 16;
    real learning_rate = 5e-4;
    real clip_norm = 50;
    int snapshot_every = 100;
    int snapshot_images = 32;
    AbductionMode abduction = AbductionMode::location;
    std::uint64_t seed = 0;

    void validate() const;
    nlohmann::json to_json() const;
    static CftConfig from_json(const nlohmann::json& j);
};

/// Sorted training values per variable.
struct EmpiricalMarginals {
    std::map<std::string, std::vector<real>> values;
};
EmpiricalMarginals training_marginals(const Dataset& data, const std::vector<std::string>& names);

/// One uniformly chosen eligible variable per element, target drawn from its
/// empirical training marginal.
std::vector<Intervention> sample_intervention(int batch, const std::vector<std::string>& eligible,
                                              const EmpiricalMarginals& marginals, std::mt19937_64& rng);

struct CftBatch {
    Tensor images;  ///< {N, 1, H, W}
    std::vector<AttributeVector> factual;
    std::vector<Intervention> interventions;
};

struct CftLoss {
    real attribute = 0;
    real anchor = 0;  ///< ELBO in nats per pixel
    real total = 0;
};

/// Builds the loss for one batch and back-propagates it into the HVAE
/// parameters; the optimiser step is left to the caller.
CftLoss cft_step_reg(const CausalModel& model, const Regressor& regressor, const CftBatch& batch,
                     const CftConfig& config, std::mt19937_64& rng);
CftLoss cft_step_seg(const CausalModel& model, const Segmentor& segmentor, const CftBatch& batch,
                     const CftConfig& config, std::mt19937_64& rng);

struct FinetuneResult {
    Hvae hvae;
    std::vector<nlohmann::json> log;
    nlohmann::json optimizer;
};

/// regime none returns a clone of the input HVAE. Auxiliary models must be
/// frozen and are checked to be bitwise unchanged afterwards.
FinetuneResult finetune(const CausalModel& model, const Regressor* regressor, const Segmentor* segmentor,
                        const Dataset& data, const CftConfig& config, std::ostream* log_sink = nullptr);

}  // namespace dscm
