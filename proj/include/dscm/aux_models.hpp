#pragma once

// Weight-frozen auxiliary predictors: a small U-Net segmentor with one
// independent sigmoid map per structure, a residual CNN regressor that
// reads structure areas directly, and the soft-area readout.

#include "dscm/autograd.hpp"
#include "dscm/graph.hpp"
#include "dscm/nn.hpp"
#include "dscm/observation.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dscm {

class Dataset;

inline constexpr real kDiceEpsilon = 1e-6;

enum class AuxRole { finetune, eval };
std::string to_string(AuxRole role);
AuxRole aux_role_from_string(const std::string& text);

struct PredictedAttributes {
    enum class Source { regressor, segmentor_area };
    std::map<std::string, real> values;
    Source source = Source::regressor;
};

/// Mean over structures (and batch) of 1 - (2 sum(p t) + eps) / (sum p + sum t + eps).
real dice_loss(const SoftMask& pred, const SoftMask& target);
ag::Var dice_loss_var(const ag::Var& probabilities, const Tensor& target);

/// pixel_area * sum of the structure's probabilities (first batch element).
real soft_area(const SoftMask& mask, const std::string& structure);
/// pixel_area * count of probabilities >= threshold.
real thresholded_area(const SoftMask& mask, const std::string& structure, real threshold = 0.5);
/// {N, S, H, W} probabilities -> {N, S, 1, 1} soft areas.
ag::Var soft_areas_var(const ag::Var& probabilities, real pixel_area);

struct SegmentorConfig {
    int base_channels = 8;
    int steps = 600;
    int batch = 16;
    real learning_rate = 3e-3;
    real dice_gate = 0.9;  ///< minimum held-out Dice (1 - dice loss)
    int eval_images = 200;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const;
    static SegmentorConfig from_json(const nlohmann::json& j);
};

class Segmentor {
public:
    Segmentor() = default;
    Segmentor(std::vector<std::string> structures, int height, int width, real pixel_area, int base_channels,
              std::uint64_t seed);

    const std::vector<std::string>& structures() const { return structures_; }
    real pixel_area() const { return pixel_area_; }
    int height() const { return height_; }
    int width() const { return width_; }
    nn::ParameterSet& params() { return params_; }
    const nn::ParameterSet& params() const { return params_; }

    ag::Var logits(const ag::Var& x) const;
    ag::Var probabilities(const ag::Var& x) const;
    /// Soft masks for a {N, 1, H, W} batch.
    SoftMask predict_masks(const Tensor& x) const;
    PredictedAttributes predict_areas(const Tensor& x) const;

    nlohmann::json to_json() const;
    static Segmentor from_json(const nlohmann::json& j);

private:
    std::vector<std::string> structures_;
    int height_ = 0;
    int width_ = 0;
    real pixel_area_ = 1;
    int base_ = 0;
    nn::ParameterSet params_;
};

struct RegressorConfig {
    int base_channels = 8;
    int hidden = 32;
    int steps = 600;
    int batch = 32;
    real learning_rate = 2e-3;
    int eval_images = 200;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const;
    static RegressorConfig from_json(const nlohmann::json& j);
};

class Regressor {
public:
    Regressor() = default;
    /// Outputs are standardized with the structures' graph normalization.
    Regressor(const CausalGraph& graph, std::vector<std::string> structures, int height, int width,
              int base_channels, int hidden, std::uint64_t seed);

    const std::vector<std::string>& structures() const { return structures_; }
    nn::ParameterSet& params() { return params_; }
    const nn::ParameterSet& params() const { return params_; }

    /// {N, S, 1, 1} standardized predictions.
    ag::Var standardized(const ag::Var& x) const;
    /// {N, S, 1, 1} predictions in original units.
    ag::Var predict_var(const ag::Var& x) const;
    /// Single image {1, 1, H, W}.
    PredictedAttributes predict_attributes(const Tensor& x) const;
    const std::vector<Normalization>& normalization() const { return norms_; }

    nlohmann::json to_json() const;
    static Regressor from_json(const nlohmann::json& j);

private:
    std::vector<std::string> structures_;
    std::vector<Normalization> norms_;
    int height_ = 0;
    int width_ = 0;
    int base_ = 0;
    int hidden_ = 0;
    nn::ParameterSet params_;
};

struct SegmentorTrainResult {
    Segmentor model;
    real heldout_dice = 0;
    std::vector<std::string> warnings;
};

struct RegressorTrainResult {
    Regressor model;
    std::map<std::string, real> heldout_mape;
    std::map<std::string, real> baseline_mape;  ///< constant training-mean predictor
};

/// Trains on the train split, scores on val, and returns the model frozen.
/// Throws TrainingError on divergence or when held-out Dice misses the gate.
SegmentorTrainResult train_segmentor(const Dataset& data, const SegmentorConfig& config);
RegressorTrainResult train_regressor(const Dataset& data, const CausalGraph& graph, const RegressorConfig& config);

/// Data-quality warnings for ground-truth masks (structures never present).
std::vector<std::string> mask_warnings(const Dataset& data, const std::vector<std::size_t>& indices);

}  // namespace dscm
