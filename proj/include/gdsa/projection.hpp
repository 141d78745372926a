#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "gdsa/property_graph.hpp"

namespace gdsa {

enum class Orientation { Directed, Undirected };
enum class Coercion { None, ToFloat };

struct NodePropertyProjection {
    std::string source_key;
    std::string projected_key;
    Coercion coercion = Coercion::None;
};

/// Declarative description of an in-memory projection: label/type filters,
/// numeric property selection with optional int->float coercion, and
/// orientation. String-valued source keys are rejected.
struct ProjectionSpec {
    std::string name;
    std::optional<std::vector<std::string>> node_labels;
    std::optional<std::vector<std::string>> relationship_types;
    std::vector<NodePropertyProjection> node_properties;
    std::vector<std::string> relationship_properties;
    Orientation orientation = Orientation::Directed;

    /// All nodes, all relationships, every numeric property (ints coerced
    /// to float), no filters.
    static ProjectionSpec default_spec(const PropertyGraph& g, Orientation orientation);
    static ProjectionSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

/// Sentinel for a numeric property missing on a node/relationship.
/// Algorithms that are asked to use such a column fail loudly.
inline constexpr double kAbsent = std::numeric_limits<double>::quiet_NaN();
inline bool is_absent(double v) { return std::isnan(v); }

/// Immutable CSR graph with numeric-only property columns. Node ids are
/// dense 0..n-1 ordered by ascending original id. Undirected orientation
/// stores each projected relationship as two arcs (one per direction);
/// parallel relationships are preserved. Arcs per node are sorted by
/// (target, relationship index). mutate_node_property returns a new
/// logical version sharing all existing columns.
class ProjectedGraph {
public:
    struct Rel {
        std::int64_t source = 0;      // projected ids
        std::int64_t target = 0;
        std::int32_t type_id = 0;
        RelId original_id = 0;
    };

    /// Scalar column (one double per node) or array column.
    struct NodeColumn {
        std::shared_ptr<const std::vector<double>> scalar;
        std::shared_ptr<const std::vector<std::vector<double>>> array;
        bool is_array() const { return array != nullptr; }
    };

    std::int64_t node_count() const { return n_; }
    std::int64_t relationship_count() const { return static_cast<std::int64_t>(rels_.size()); }
    std::int64_t arc_count() const { return static_cast<std::int64_t>(arc_targets_.size()); }
    Orientation orientation() const { return orientation_; }
    const std::string& name() const { return name_; }

    /// Out-adjacency. Arc i points to arc_target(i) and belongs to
    /// relationship arc_rel(i).
    std::span<const std::int64_t> out_arc_range(std::int64_t v) const {
        return {arc_ids_.data() + out_offsets_[static_cast<std::size_t>(v)],
                arc_ids_.data() + out_offsets_[static_cast<std::size_t>(v) + 1]};
    }
    std::span<const std::int64_t> in_arc_range(std::int64_t v) const {
        return {in_arc_ids_.data() + in_offsets_[static_cast<std::size_t>(v)],
                in_arc_ids_.data() + in_offsets_[static_cast<std::size_t>(v) + 1]};
    }
    std::int64_t arc_target(std::int64_t arc) const {
        return arc_targets_[static_cast<std::size_t>(arc)];
    }
    std::int64_t arc_source(std::int64_t arc) const {
        return arc_sources_[static_cast<std::size_t>(arc)];
    }
    std::int64_t arc_rel(std::int64_t arc) const {
        return arc_rels_[static_cast<std::size_t>(arc)];
    }
    std::int64_t out_degree(std::int64_t v) const {
        return out_offsets_[static_cast<std::size_t>(v) + 1] -
               out_offsets_[static_cast<std::size_t>(v)];
    }
    std::int64_t in_degree(std::int64_t v) const {
        return in_offsets_[static_cast<std::size_t>(v) + 1] -
               in_offsets_[static_cast<std::size_t>(v)];
    }

    const std::vector<Rel>& rels() const { return rels_; }
    const std::string& rel_type_name(std::int32_t type_id) const {
        return rel_type_names_[static_cast<std::size_t>(type_id)];
    }

    NodeId original_id(std::int64_t v) const { return orig_ids_[static_cast<std::size_t>(v)]; }
    /// -1 when the original node was filtered out.
    std::int64_t projected_id(NodeId original) const;

    std::vector<std::pair<std::string, bool>> node_property_catalog() const;  // (key, is_array)
    std::vector<std::string> relationship_property_catalog() const;
    bool has_node_property(const std::string& key) const {
        return node_columns_.count(key) > 0;
    }
    const NodeColumn& node_column(const std::string& key) const;
    const std::vector<double>& node_scalar_column(const std::string& key) const;
    /// Per-relationship weights, indexed by arc_rel().
    const std::vector<double>& relationship_column(const std::string& key) const;

    /// Copy-on-write addition of one scalar column. Errors on duplicate key
    /// and on length mismatch.
    ProjectedGraph mutate_node_property(const std::string& key,
                                        std::vector<double> values) const;

    friend ProjectedGraph project(const PropertyGraph& g, const ProjectionSpec& spec);

private:
    std::int64_t n_ = 0;
    Orientation orientation_ = Orientation::Directed;
    std::string name_;
    std::vector<std::int64_t> out_offsets_, in_offsets_;
    std::vector<std::int64_t> arc_ids_, in_arc_ids_;        // CSR -> arc index
    std::vector<std::int64_t> arc_targets_, arc_sources_, arc_rels_;
    std::vector<Rel> rels_;
    std::vector<std::string> rel_type_names_;
    std::vector<NodeId> orig_ids_;
    std::vector<std::int64_t> orig_to_proj_;
    std::map<std::string, NodeColumn> node_columns_;
    std::map<std::string, std::shared_ptr<const std::vector<double>>> rel_columns_;
};

/// Builds the projection. Deterministic: same inputs produce an identical
/// graph. Errors on unknown labels/types/keys and on string-valued keys.
ProjectedGraph project(const PropertyGraph& g, const ProjectionSpec& spec);

}  // namespace gdsa
