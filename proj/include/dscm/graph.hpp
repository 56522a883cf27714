#pragma once

// Structural causal model over scalar attributes plus the image node.

#include "dscm/tensor.hpp"

#include <nlohmann/json.hpp>

#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dscm {

enum class AttributeKind { continuous_positive, continuous_real, binary };

std::string to_string(AttributeKind kind);
AttributeKind attribute_kind_from_string(const std::string& text);

struct Normalization {
    real mean = 0;
    real std = 1;
};

struct Range {
    real lo = -std::numeric_limits<real>::infinity();
    real hi = std::numeric_limits<real>::infinity();
    bool contains(real v) const { return v >= lo && v <= hi; }
};

struct AttributeSpec {
    std::string name;
    AttributeKind kind = AttributeKind::continuous_real;
    std::string unit;
    std::vector<std::string> parents;
    Normalization normalization;
    /// Interventions outside this range are clamped.
    Range feasible;
};

/// Attribute values in original units, keyed by name.
using AttributeVector = std::map<std::string, real>;

struct Intervention {
    std::map<std::string, real> assignments;
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ValidationResult {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

class CausalGraph {
public:
    CausalGraph() = default;
    CausalGraph(std::vector<AttributeSpec> attributes, std::vector<std::string> image_parents);

    const std::vector<AttributeSpec>& attributes() const { return attributes_; }
    std::vector<AttributeSpec>& attributes() { return attributes_; }
    const std::vector<std::string>& image_parents() const { return image_parents_; }

    const AttributeSpec& attribute(const std::string& name) const;
    AttributeSpec& attribute(const std::string& name);
    bool has_attribute(const std::string& name) const;
    std::vector<std::string> names() const;

    /// Attributes reachable from `roots` along directed edges (roots excluded).
    std::vector<std::string> descendants(const std::vector<std::string>& roots) const;

    /// Structural id: names, kinds, edges and image parents; excludes learned stats.
    std::string hash() const;

    nlohmann::json to_json() const;
    static CausalGraph from_json(const nlohmann::json& j);

private:
    std::vector<AttributeSpec> attributes_;
    std::vector<std::string> image_parents_;
};

ValidationResult validate_graph(const CausalGraph& graph);

/// Parents before children; ties resolved by declaration order. Throws GraphError on a cycle.
std::vector<std::string> topological_order(const CausalGraph& graph);

/// Keys must equal the graph's attribute names and honour kind constraints.
void check_attributes(const CausalGraph& graph, const AttributeVector& values);

/// Normalized image-parent vector in `graph.image_parents()` order.
std::vector<real> normalized_image_parents(const CausalGraph& graph, const AttributeVector& values);

}  // namespace dscm
