#pragma once

// Counterfactual effectiveness and locality, plus the report writers.

#include "dscm/aux_models.hpp"
#include "dscm/image_io.hpp"
#include "dscm/metrics.hpp"
#include "dscm/scm.hpp"
#include "dscm/synth.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace dscm {

class Dataset;

inline constexpr const char* kTableSchema = "dscm-effectiveness/1";

enum class MetricKind { mape, mae };
std::string to_string(MetricKind m);
MetricKind metric_kind_from_string(const std::string& text);

/// Pixels within Euclidean distance `radius` of a set pixel.
synth::BinaryMask dilate(const synth::BinaryMask& mask, int radius);

/// Change mass outside the dilated target mask over total change mass; 0 when nothing changed.
real locality(const Tensor& x, const Tensor& x_cf, const synth::BinaryMask& target, int dilation_radius);

struct EvalProtocol {
    std::vector<real> relative_shifts{-0.25, 0.25};  ///< target = factual * (1 + shift)
    std::vector<std::string> variables;              ///< empty = all image parents
    int max_images = 200;
    int dilation_radius = 2;
    MetricKind metric = MetricKind::mape;
    bool propagated_reference = true;  ///< unintervened columns vs propagated (else factual) values
    AbductionOptions abduction;
    int panel_examples = 4;

    nlohmann::json to_json() const;
    static EvalProtocol from_json(const nlohmann::json& j);
};

struct EffectivenessCell {
    real error = 0;
    bool intervened = false;
};

struct EffectivenessRow {
    std::string regime;
    std::string variable;  ///< intervened variable
    std::vector<EffectivenessCell> cells;
    real locality_median = 0;
    std::size_t n = 0;
    real locality_recon_median = 0;  ///< against the identity counterfactual instead of x
};

struct EffectivenessReport {
    MetricKind metric = MetricKind::mape;
    std::vector<std::string> columns;
    std::vector<EffectivenessRow> rows;
    nlohmann::json metadata = nlohmann::json::object();
};

/// One example for the panel figure.
struct PanelExample {
    std::string sample_id;
    std::string regime;
    std::string variable;
    Tensor image;
    Tensor image_cf;
    SoftMask masks;     ///< evaluation-segmentor masks on the factual image
    SoftMask masks_cf;  ///< and on the counterfactual
    std::map<std::string, real> areas;
    std::map<std::string, real> areas_cf;
};

struct EvalAuxiliaries {
    const Segmentor* segmentor = nullptr;  ///< evaluation instance
    std::string segmentor_id;
    std::vector<std::string> finetune_ids;  ///< must not contain segmentor_id
};

class EvaluatorIndependenceError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Appends one row per intervened variable for `regime` to `report`.
void effectiveness(const CausalModel& model, const std::string& regime, const EvalAuxiliaries& aux,
                   const Dataset& data, const std::string& split, const EvalProtocol& protocol,
                   EffectivenessReport& report, std::vector<PanelExample>* panels = nullptr);

/// Identity intervention do(V := factual V): mean intervened error and mean
/// plain-reconstruction readout error over the split, per variable.
struct IdentityCheck {
    std::string variable;
    real identity_error = 0;
    real reconstruction_error = 0;
    real image_mae_identity = 0;
    real image_mae_reconstruction = 0;
    bool parents_exact = true;
};
std::vector<IdentityCheck> identity_fidelity(const CausalModel& model, const Segmentor& segmentor,
                                             const Dataset& data, const std::string& split,
                                             const EvalProtocol& protocol);

/// Tab-separated table with a schema header line; fixed column order.
std::string format_table(const EffectivenessReport& report);
/// Colour mapping for signed difference maps: blue (-scale) .. white .. red (+scale).
struct DiffColorScale {
    real scale = 0.25;
    std::array<std::uint8_t, 3> rgb(real v) const;
    nlohmann::json to_json() const;
};

/// Grid of k rows x 3 columns (x with contours, x_cf with contours, signed
/// diff), each cell upscaled by `zoom` with predicted areas printed beneath.
io::Rgb8 render_panels(const std::vector<PanelExample>& examples, const DiffColorScale& colors, int zoom = 4);

/// Writes table.tsv, report.json and (if any examples) panels.png under `dir`.
void render_report(const EffectivenessReport& report, const std::vector<PanelExample>& examples,
                   const std::filesystem::path& dir);

/// Single image {1, 1, H, W} as 16-bit grayscale.
io::Gray16 to_gray16(const Tensor& image);

/// 3x5 pixel font; unsupported characters render as blanks.
void draw_text(io::Rgb8& image, int x, int y, const std::string& text, std::array<std::uint8_t, 3> color,
               int scale = 1);

}  // namespace dscm
