#pragma once

// Parent-conditioned hierarchical VAE. Latent level l lives at resolution
// H / 2^l; every encoder and decoder level sees a learned embedding of the
// normalized image parents broadcast to its resolution. Levels have
// independent standard-normal priors and the likelihood is Gaussian with a
// fixed scale.

#include "dscm/autograd.hpp"
#include "dscm/graph.hpp"
#include "dscm/nn.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace dscm {

class Dataset;

struct HvaeConfig {
    int height = 32;
    int width = 32;
    int levels = 3;
    std::vector<int> channels{16, 16, 16};  ///< feature width per level
    int latent_channels = 4;
    int condition_width = 8;
    real sigma_x = 0.1;
    std::uint64_t seed = 0;

    void validate() const;
    nlohmann::json to_json() const;
    static HvaeConfig from_json(const nlohmann::json& j);
};

struct LatentLevel {
    Tensor loc;
    Tensor scale;
    Tensor z;
};

/// Posterior parameters and the abducted value per level, finest first.
using LatentHierarchy = std::vector<LatentLevel>;

struct ElboBreakdown {
    real reconstruction = 0;
    std::vector<real> kl;
    real total = 0;
};

class Hvae {
public:
    Hvae() = default;
    Hvae(HvaeConfig config, int parent_count);

    const HvaeConfig& config() const { return config_; }
    int parent_count() const { return parent_count_; }
    nn::ParameterSet& params() { return params_; }
    const nn::ParameterSet& params() const { return params_; }
    /// Copies share parameter storage; clone() does not.
    Hvae clone() const;

    struct Posterior {
        std::vector<ag::Var> loc;
        std::vector<ag::Var> scale;
    };
    struct ElboVars {
        ag::Var reconstruction;      ///< [N,1,1,1]
        std::vector<ag::Var> kl;     ///< per level, [N,1,1,1]
        ag::Var total;               ///< [N,1,1,1]
    };

    /// `pa` is the normalized parent batch {N, P, 1, 1}.
    Posterior encode_vars(const ag::Var& x, const ag::Var& pa) const;
    /// Likelihood mean before clamping.
    ag::Var decode_mean(const std::vector<ag::Var>& z, const ag::Var& pa) const;
    /// Posterior location, or a reparameterised sample when `rng` is given.
    static std::vector<ag::Var> latent_vars(const Posterior& q, std::mt19937_64* rng);
    ElboVars elbo_vars(const Tensor& x, const ag::Var& pa, std::mt19937_64& rng) const;

    std::vector<Shape> latent_shapes(int batch) const;

    LatentHierarchy encode(const Tensor& x, const Tensor& pa, std::optional<std::uint64_t> sample_seed = {}) const;
    /// Likelihood mean clamped to [0, 1].
    Tensor decode(const std::vector<Tensor>& z, const Tensor& pa) const;
    Tensor decode(const LatentHierarchy& z, const Tensor& pa) const;
    /// Per-image ELBO terms in nats, averaged over the batch.
    ElboBreakdown elbo(const Tensor& x, const Tensor& pa, std::uint64_t seed) const;

    nlohmann::json to_json() const;
    static Hvae from_json(const nlohmann::json& j);

private:
    void check_image(const Shape& s) const;
    ag::Var condition(const ag::Var& pa) const;
    ag::Var condition_at(const ag::Var& c, int level) const;

    HvaeConfig config_;
    int parent_count_ = 0;
    nn::ParameterSet params_;
};

/// Normalized image-parent rows stacked as {N, P, 1, 1}.
Tensor parent_batch(const CausalGraph& graph, std::span<const AttributeVector> rows);

struct HvaeTrainConfig {
    int steps = 1500;
    int batch = 32;
    real learning_rate = 2e-3;
    real clip_norm = 50;
    int eval_every = 250;
    int eval_images = 128;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const;
    static HvaeTrainConfig from_json(const nlohmann::json& j);
};

struct HvaeTrainRecord {
    int step = 0;
    real train_loss = 0;  ///< nats per pixel
    real val_elbo = 0;    ///< nats per image; NaN when not evaluated
};

struct HvaeTrainResult {
    Hvae model;
    nlohmann::json optimizer;
    std::vector<HvaeTrainRecord> history;
    real initial_val_elbo = 0;
    real final_val_elbo = 0;
};

/// `graph` must carry fitted normalization stats (the flow set's graph).
HvaeTrainResult train_hvae(const Dataset& data, const CausalGraph& graph, const HvaeConfig& config,
                           const HvaeTrainConfig& train);

/// Mean held-out ELBO (nats per image) over the first `limit` images of `split`.
real heldout_elbo(const Hvae& model, const Dataset& data, const CausalGraph& graph, const std::string& split,
                  int limit, std::uint64_t seed);

}  // namespace dscm
