#pragma once

// Invertible conditional mechanisms a_k = f_k(u_k; pa_k) for scalar
// attributes. Each mechanism is one parent-conditioned affine step in
// standardized space followed by a fixed range map (identity for real
// attributes, a softplus for positive ones):
//
//   v = shift(pa) + exp(log_scale(pa)) * u
//   y = mean + std * v
//   a = y                      (continuous-real)
//   a = std * softplus(y/std)  (continuous-positive)
//
// The conditioner is a linear skip on standardized parents plus one tanh
// hidden layer. Parentless mechanisms reduce to two learned constants.

#include "dscm/graph.hpp"
#include "dscm/nn.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dscm {

class FlowDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class TrainingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr real kLogScaleLimit = 7;

struct AffineStep {
    real shift = 0;
    real log_scale = 0;
};

class FlowMechanism {
public:
    FlowMechanism() = default;
    /// Identity-initialised mechanism; hidden weights drawn from `seed`.
    FlowMechanism(const CausalGraph& graph, const std::string& attribute, int hidden, std::uint64_t seed);

    const std::string& attribute() const { return attribute_; }
    const std::vector<std::string>& parents() const { return parents_; }
    AttributeKind kind() const { return kind_; }
    const Normalization& normalization() const { return norm_; }

    AffineStep conditioner(std::span<const real> parents) const;

    /// Standardized-space affine step only (no range map).
    real affine_forward(real u, std::span<const real> parents) const;
    real forward(real u, std::span<const real> parents) const;
    real inverse(real a, std::span<const real> parents) const;
    real log_prob(real a, std::span<const real> parents) const;

    /// Adds d log_prob / d theta (times `weight`) into the parameter gradient buffers.
    real accumulate_log_prob_gradient(real a, std::span<const real> parents, real weight);

    /// Overrides the conditioner with constants (parentless) or a pure linear skip.
    void set_affine(real shift, real log_scale, std::vector<real> shift_slope = {},
                    std::vector<real> log_scale_slope = {});

    nn::ParameterSet& params() { return params_; }
    const nn::ParameterSet& params() const { return params_; }

    /// Gather this mechanism's parent values from a full attribute vector.
    std::vector<real> parent_values(const AttributeVector& values) const;

    nlohmann::json to_json() const;
    static FlowMechanism from_json(const CausalGraph& graph, const nlohmann::json& j);

private:
    struct Hidden {
        std::vector<real> standardized;
        std::vector<real> activation;
        real raw_log_scale = 0;
    };
    Hidden evaluate_hidden(std::span<const real> parents) const;
    AffineStep step_from(const Hidden& h) const;
    real range_inverse(real a) const;
    real log_range_derivative(real y) const;

    std::string attribute_;
    std::vector<std::string> parents_;
    AttributeKind kind_ = AttributeKind::continuous_real;
    Normalization norm_;
    std::vector<Normalization> parent_norms_;
    int hidden_ = 0;
    nn::ParameterSet params_;
};

struct FlowTrainConfig {
    int steps = 400;
    int hidden = 8;
    real learning_rate = 0.02;
    real validation_fraction = 0.1;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const;
    static FlowTrainConfig from_json(const nlohmann::json& j);
};

struct FlowTrainReport {
    std::map<std::string, real> initial_heldout_nll;
    std::map<std::string, real> final_heldout_nll;
};

/// One mechanism per graph attribute plus the graph carrying fitted stats.
class FlowSet {
public:
    FlowSet() = default;
    explicit FlowSet(CausalGraph graph) : graph_(std::move(graph)) {}

    const CausalGraph& graph() const { return graph_; }
    const FlowMechanism& mechanism(const std::string& attribute) const;
    FlowMechanism& mechanism(const std::string& attribute);
    void set(FlowMechanism m);
    std::string parameter_hash() const;

    nlohmann::json to_json() const;
    static FlowSet from_json(const nlohmann::json& j);

private:
    CausalGraph graph_;
    std::map<std::string, FlowMechanism> mechanisms_;
};

/// Fits normalisation stats and feasible ranges onto a copy of `graph` (from
/// the training rows), then trains each mechanism by maximum likelihood.
FlowSet train_flows(const CausalGraph& graph, std::span<const AttributeVector> rows, const FlowTrainConfig& config,
                    FlowTrainReport* report = nullptr);

/// Mean negative log-likelihood of `rows` under `flows`.
real mean_nll(const FlowSet& flows, const std::string& attribute, std::span<const AttributeVector> rows);

}  // namespace dscm
