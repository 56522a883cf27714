#pragma once

// Synthetic scenes: labelled structures with controllable areas, exact
// ground-truth masks, and a known attribute SCM. A global size factor
// drives every area (optionally a chain edge links two areas) and a
// brightness nuisance correlated with the size factor gives image-level
// regressors a shortcut that does not involve the structures themselves.

#include "dscm/graph.hpp"
#include "dscm/observation.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace dscm::synth {

enum class ShapeFamily { disk, ellipse, capsule };

std::string to_string(ShapeFamily f);
ShapeFamily shape_family_from_string(const std::string& s);

class SceneError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pixel (row, col) has centre (col + 0.5, row + 0.5); the canvas spans [0, W] x [0, H].
struct ShapeParams {
    ShapeFamily family = ShapeFamily::disk;
    real cx = 0;
    real cy = 0;
    real radius = 0;  ///< disk radius, ellipse x semi-axis, capsule half-width
    real aspect = 1;  ///< ellipse y/x axis ratio; capsule segment length / radius
};

struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    std::size_t area() const;
    bool test(int row, int col) const { return bits[static_cast<std::size_t>(row) * width + col] != 0; }
};

/// Minkowski gauge of the unit (radius 1) shape at offset (dx, dy): the
/// smallest radius whose shape contains the offset.
real shape_gauge(ShapeFamily family, real aspect, real dx, real dy);

/// Half extents of the shape's bounding box.
std::pair<real, real> shape_half_extent(const ShapeParams& shape);

/// Continuous area of a shape with the given radius.
real shape_area(ShapeFamily family, real aspect, real radius);

/// Geometric rasterisation {pixel centre inside the shape}; throws SceneError if the shape leaves the canvas.
BinaryMask rasterize_structure(const ShapeParams& shape, int width, int height);

/// The `pixels` pixels with the smallest gauge around (cx, cy) (ties by raster index),
/// so the mask area equals `pixels` exactly.
BinaryMask rasterize_to_area(ShapeFamily family, real aspect, real cx, real cy, int pixels, int width, int height);

struct StructureSpec {
    std::string name;
    ShapeFamily family = ShapeFamily::disk;
    real anchor_x = 0.5;  ///< fraction of width
    real anchor_y = 0.5;  ///< fraction of height
    real jitter = 0.02;   ///< uniform +- fraction of the canvas
    real aspect = 1;
    real intensity_lo = 0.6;
    real intensity_hi = 0.7;
    real texture_noise = 0.02;
    real area_mean = 0.05;  ///< fraction of the canvas area
    real area_sd = 0.01;    ///< fraction of the canvas area
    real size_loading = 0;  ///< correlation with the size factor, in [0, 1)
};

struct ChainEdge {
    std::string from;
    std::string to;
    real slope = 0;
};

struct SceneSpec {
    int height = 32;
    int width = 32;
    real background = 0.1;
    real background_noise = 0.02;
    real brightness_coupling = 0.04;  ///< brightness offset per unit of size factor
    real brightness_sd = 0.02;
    real min_area = 26;               ///< pixels; structures never smaller
    real max_area_sd = 4;             ///< reject draws beyond this many sd above the mean
    real pixel_area = 1;
    std::string pixel_unit = "px^2";
    int max_rejections = 200;
    std::vector<StructureSpec> structures;
    std::optional<ChainEdge> chain;

    real mean_pixels(const StructureSpec& s) const { return s.area_mean * height * width; }
    real sd_pixels(const StructureSpec& s) const { return s.area_sd * height * width; }
    /// Largest area a structure can be drawn with.
    real max_pixels(const StructureSpec& s) const;
    std::vector<std::string> structure_names() const;

    /// Checks bounds, intensities, minimum areas, and that structures stay on canvas and apart at maximum area.
    void validate() const;
    /// size -> every loaded area, optional chain edge, image parents = all structures.
    CausalGraph graph() const;
    std::string hash() const;
    nlohmann::json to_json() const;
    static SceneSpec from_json(const nlohmann::json& j);
};

/// Three structures, "left", "right" and "center", sharing a size-factor parent.
SceneSpec default_scene(int canvas);
/// Two adjacent independent structures, a "lumen" band and a "plaque" disk.
SceneSpec plaque_lumen_scene(int canvas);

struct Scene {
    Observation observation;
    real brightness = 0;
    std::vector<ShapeParams> shapes;
};

Scene sample_scene(std::mt19937_64& rng, const SceneSpec& spec, const std::string& id);

/// Per-record seed derived from a dataset seed, independent of generation order.
std::uint64_t record_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace dscm::synth
