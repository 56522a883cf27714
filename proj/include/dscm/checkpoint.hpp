#pragma once

// Versioned JSON container shared by every trained artifact.

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace dscm {

inline constexpr const char* kCheckpointFormat = "dscm-checkpoint";
inline constexpr int kCheckpointVersion = 1;

class CheckpointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Checkpoint {
    std::string kind;  ///< flows | hvae | segmentor | regressor
    std::string role;  ///< e.g. base, none, reg, seg, finetune, eval
    std::string graph_hash;
    std::string parameter_hash;
    nlohmann::json config = nlohmann::json::object();
    nlohmann::json payload = nlohmann::json::object();
    nlohmann::json provenance = nlohmann::json::object();  ///< config hash, stage key, input hashes
    nlohmann::json optimizer = nullptr;
    nlohmann::json metrics = nlohmann::json::object();

    nlohmann::json to_json() const;
    static Checkpoint from_json(const nlohmann::json& j);
};

/// Writes through a temporary file and renames, so readers never see a partial file.
void write_json_atomic(const std::filesystem::path& path, const nlohmann::json& j, int indent = -1);
nlohmann::json read_json(const std::filesystem::path& path);

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
/// Rejects unknown formats and versions, a different kind, and (when given) a different graph hash.
Checkpoint load_checkpoint(const std::filesystem::path& path, const std::string& kind,
                           const std::optional<std::string>& graph_hash = std::nullopt);

}  // namespace dscm
