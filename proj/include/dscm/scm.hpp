#pragma once

// Abduction -> action -> prediction over a trained flow set and HVAE.

#include "dscm/autograd.hpp"
#include "dscm/flow.hpp"
#include "dscm/hvae.hpp"
#include "dscm/observation.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace dscm {

/// Posterior location (deterministic) or a seeded posterior sample.
enum class AbductionMode { location, sample };
std::string to_string(AbductionMode mode);
AbductionMode abduction_mode_from_string(const std::string& text);

struct AbductionOptions {
    AbductionMode mode = AbductionMode::location;
    std::uint64_t seed = 0;
};

class InterventionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CausalModel {
    FlowSet flows;
    Hvae hvae;

    const CausalGraph& graph() const { return flows.graph(); }
};

/// Rejects unknown variables, the image node and non-finite targets; clamps
/// targets to the feasible range, appending one warning per clamp.
Intervention checked_intervention(const CausalGraph& graph, const Intervention& iv,
                                  std::vector<std::string>* warnings = nullptr);

std::map<std::string, real> abduct_attributes(const FlowSet& flows, const AttributeVector& values);
ExogenousState abduct(const CausalModel& model, const Observation& obs, const AbductionOptions& options = {});

/// Intervened attributes take their targets verbatim; their descendants are
/// recomputed from abducted noise; everything else keeps the factual value.
AttributeVector predict_parents(const FlowSet& flows, const AttributeVector& factual, const ExogenousState& exo,
                                const Intervention& iv, std::vector<std::string>* warnings = nullptr);

/// Differentiable counterfactual batch: abduct z from (x, pa), decode with
/// pa_cf, clamp to [0, 1]. Inference and fine-tuning share this path.
ag::Var counterfactual_image_var(const Hvae& hvae, const Tensor& x, const Tensor& pa, const Tensor& pa_cf,
                                 const AbductionOptions& options);

CounterfactualResult counterfactual(const CausalModel& model, const Observation& obs, const Intervention& iv,
                                    const AbductionOptions& options = {});

/// Plain reconstruction decode(encode(x, pa), pa).
Tensor reconstruct(const CausalModel& model, const Observation& obs, const AbductionOptions& options = {});

}  // namespace dscm
