#pragma once

// On-disk dataset: versioned manifest, 16-bit PNG images, mask PNGs
// (bit k set = structure k), and one attribute table. Records are held
// compactly in memory and expanded to tensors on demand.

#include "dscm/graph.hpp"
#include "dscm/observation.hpp"
#include "dscm/synth.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dscm {

class DatasetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DatasetRecord {
    std::string id;
    std::string split;  ///< train | val | test
    AttributeVector attributes;
    std::vector<std::uint16_t> image;
    std::vector<std::uint8_t> mask_bits;  ///< empty when no ground truth
};

struct SplitSizes {
    std::size_t train = 0;
    std::size_t val = 0;
    std::size_t test = 0;
};

/// 70 / 10 / 20, remainder to test.
SplitSizes split_sizes(std::size_t n);

class Dataset {
public:
    Dataset() = default;
    Dataset(int height, int width, std::vector<std::string> structures, real pixel_area, CausalGraph graph);

    int height() const { return height_; }
    int width() const { return width_; }
    const std::vector<std::string>& structures() const { return structures_; }
    real pixel_area() const { return pixel_area_; }
    const CausalGraph& graph() const { return graph_; }
    std::size_t size() const { return records_.size(); }
    const DatasetRecord& record(std::size_t i) const { return records_.at(i); }
    void add(DatasetRecord r);

    /// Content hash over attribute table, images and masks.
    const std::string& id() const { return id_; }
    void set_id(std::string id) { id_ = std::move(id); }

    std::vector<std::size_t> split_indices(const std::string& split) const;
    std::vector<AttributeVector> attributes(const std::string& split) const;
    Observation observation(std::size_t i) const;
    Tensor images(std::span<const std::size_t> indices) const;  ///< {N, 1, H, W}
    Tensor masks(std::span<const std::size_t> indices) const;   ///< {N, S, H, W}

    std::string attribute_table() const;
    std::string compute_content_hash() const;

private:
    int height_ = 0;
    int width_ = 0;
    std::vector<std::string> structures_;
    real pixel_area_ = 1;
    CausalGraph graph_;
    std::vector<DatasetRecord> records_;
    std::string id_;
};

DatasetRecord record_from_observation(const Observation& obs, const std::string& split);

/// Samples `n` scenes from `spec` with per-record seeds derived from `seed`.
Dataset generate_in_memory(std::size_t n, std::uint64_t seed, const synth::SceneSpec& spec);

struct DatasetManifest {
    nlohmann::json json;
    std::string content_hash;
};

DatasetManifest generate_dataset(std::size_t n, std::uint64_t seed, const synth::SceneSpec& spec,
                                 const std::filesystem::path& out);
Dataset load_dataset(const std::filesystem::path& root);

}  // namespace dscm
