#pragma once

// Named parameter storage, initialisers and the Adam optimiser shared by
// every trainable network.

#include "dscm/autograd.hpp"

#include <nlohmann/json.hpp>

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace dscm::nn {

class ParameterSet {
public:
    ag::Var add(const std::string& name, Tensor init);
    const ag::Var& get(const std::string& name) const;
    const std::vector<std::pair<std::string, ag::Var>>& entries() const { return params_; }
    std::size_t count() const;

    void zero_grad();
    /// Frozen parameters never receive gradients.
    void set_frozen(bool frozen);
    bool frozen() const { return frozen_; }
    /// True when every gradient buffer is absent or identically zero.
    bool gradients_all_zero() const;

    /// Deep copy; the result shares no storage with this set.
    ParameterSet clone() const;

    std::string hash() const;
    nlohmann::json to_json() const;
    /// Overwrites values of existing parameters; names and shapes must match.
    void load_json(const nlohmann::json& j);

private:
    std::vector<std::pair<std::string, ag::Var>> params_;
    bool frozen_ = false;
};

/// He-style normal initialisation for a conv weight {out, in, k, k}.
Tensor conv_weight(std::mt19937_64& rng, int out_channels, int in_channels, int kernel, real gain = 1);
Tensor linear_weight(std::mt19937_64& rng, int out_features, int in_features, real gain = 1);
Tensor bias(int count, real value = 0);

/// conv2d with the weight/bias pair `prefix.w`, `prefix.b`.
ag::Var conv(const ParameterSet& ps, const std::string& prefix, const ag::Var& x);
ag::Var dense(const ParameterSet& ps, const std::string& prefix, const ag::Var& x);

struct AdamConfig {
    real learning_rate = 1e-3;
    real beta1 = 0.9;
    real beta2 = 0.999;
    real epsilon = 1e-8;
    real clip_norm = 0;  ///< global gradient-norm clip; 0 disables
};

class Adam {
public:
    Adam(ParameterSet& params, AdamConfig config);
    /// Applies one update; returns the pre-clip global gradient norm.
    real step();
    long steps() const { return step_; }
    nlohmann::json state_json() const;
    void load_state_json(const nlohmann::json& j);

private:
    ParameterSet& params_;
    AdamConfig config_;
    std::vector<Tensor> m_;
    std::vector<Tensor> v_;
    long step_ = 0;
};

}  // namespace dscm::nn
