#pragma once

#include "dscm/graph.hpp"
#include "dscm/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dscm {

/// Per-structure pixel probabilities in [0, 1], stored as {1, S, H, W}
/// (or {N, S, H, W} for a batch).
struct SoftMask {
    std::vector<std::string> structures;
    Tensor probabilities;
    real pixel_area = 1;

    int index_of(const std::string& structure) const;
    void validate() const;
};

struct Observation {
    std::string id;
    Tensor image;  ///< {1, 1, H, W}, intensities in [0, 1]
    AttributeVector attributes;
    std::optional<SoftMask> masks;
};

struct ExogenousState {
    std::map<std::string, real> attribute_noise;
    std::vector<Tensor> image_latent;  ///< one {1, C_l, H_l, W_l} grid per level
};

struct CounterfactualResult {
    Tensor image_cf;
    AttributeVector parents_cf;
    Tensor diff;  ///< image_cf - image
    ExogenousState exogenous;
    std::vector<std::string> warnings;
};

}  // namespace dscm
