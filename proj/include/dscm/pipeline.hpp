#pragma once

// Experiment configuration and the staged pipeline behind the CLI:
// data -> flows -> HVAE -> auxiliaries -> fine-tuning -> evaluation.
// Every stage writes a checkpoint stamped with the experiment config hash
// and the hashes of its inputs; a stage whose key is unchanged is skipped.

#include "dscm/aux_models.hpp"
#include "dscm/cft.hpp"
#include "dscm/checkpoint.hpp"
#include "dscm/dataset.hpp"
#include "dscm/eval.hpp"
#include "dscm/flow.hpp"
#include "dscm/hvae.hpp"
#include "dscm/scm.hpp"
#include "dscm/synth.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dscm {

/// Invalid configuration or unsatisfied stage dependency (exit code 1).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DataConfig {
    nlohmann::json scene = "default";  ///< "default", "plaque_lumen" or a full scene object
    int canvas = 32;
    std::size_t images = 2000;
    std::uint64_t seed = 7;
    std::string path;  ///< existing dataset root; empty = generate under the output root
};

struct ExperimentConfig {
    std::string name = "experiment";
    std::uint64_t seed = 1;
    DataConfig data;
    FlowTrainConfig flows;
    HvaeConfig hvae;
    HvaeTrainConfig hvae_train;
    SegmentorConfig finetune_segmentor;
    SegmentorConfig eval_segmentor;
    RegressorConfig regressor;
    CftConfig reg_cft;
    CftConfig seg_cft;
    EvalProtocol eval;
    std::string eval_split = "test";
    std::vector<CftRegime> regimes{CftRegime::none, CftRegime::reg, CftRegime::seg};
    std::string out = "runs/experiment";

    synth::SceneSpec scene_spec() const;
    CftConfig cft(CftRegime regime) const;
    void validate() const;
    /// Fully resolved document; stage seeds are explicit.
    nlohmann::json to_json() const;
    /// Stage seeds missing from `j` are derived from the experiment seed.
    static ExperimentConfig from_json(const nlohmann::json& j);
    /// Hash of the resolved document without the output root.
    std::string hash() const;
};

std::uint64_t derive_seed(std::uint64_t seed, const std::string& stage);

/// Sets a dotted leaf (e.g. "hvae_train.steps") in a resolved config document.
/// The value is parsed as JSON when possible, otherwise taken as a string.
void apply_override(nlohmann::json& doc, const std::string& key, const std::string& value);

struct ConfigOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::vector<std::pair<std::string, std::string>> set;  ///< dotted key, value
};

/// Reads a config file (or defaults when `path` is empty) and applies overrides.
ExperimentConfig load_experiment(const std::filesystem::path& path, const ConfigOverrides& overrides,
                                 nlohmann::json* record = nullptr);

/// Exclusive advisory lock on `<root>/.lock`, released on destruction or process exit.
class RootLock {
public:
    explicit RootLock(const std::filesystem::path& root);
    ~RootLock();
    RootLock(const RootLock&) = delete;
    RootLock& operator=(const RootLock&) = delete;

private:
    int fd_ = -1;
};

class Pipeline {
public:
    Pipeline(ExperimentConfig config, std::ostream& log, nlohmann::json config_record = {});

    const ExperimentConfig& config() const { return config_; }
    const std::filesystem::path& root() const { return root_; }
    std::filesystem::path dataset_root() const;
    std::filesystem::path checkpoint_path(const std::string& name) const;
    std::filesystem::path eval_dir() const { return root_ / "eval"; }

    void generate_data();
    void train_flows();
    void train_hvae();
    void train_aux(AuxRole role);
    void finetune(CftRegime regime);
    EffectivenessReport evaluate(const std::vector<CftRegime>& regimes);
    nlohmann::json counterfactual(const std::string& sample_id, const Intervention& iv, CftRegime regime,
                                  const AbductionOptions& abduction, const std::filesystem::path& out);
    /// Every stage in order, then evaluation of the configured regimes.
    EffectivenessReport run_all();

    const Dataset& dataset();
    FlowSet load_flows();
    /// Flows plus the HVAE fine-tuned under `regime`.
    CausalModel load_model(CftRegime regime);
    Segmentor load_segmentor(AuxRole role);
    Regressor load_regressor();

private:
    std::string dataset_id();
    bool up_to_date(const std::filesystem::path& ckpt, const std::string& kind, const std::string& key) const;
    nlohmann::json provenance(const std::string& key, const nlohmann::json& inputs) const;
    Checkpoint require(const std::string& name, const std::string& kind, const std::string& stage);
    void write_manifest();

    ExperimentConfig config_;
    std::ostream& log_;
    nlohmann::json record_;
    std::filesystem::path root_;
    std::string config_hash_;
    std::optional<Dataset> dataset_;
};

std::string checkpoint_name(CftRegime regime);

}  // namespace dscm
