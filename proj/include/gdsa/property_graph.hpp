#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gdsa/value.hpp"

namespace gdsa {

using NodeId = std::int64_t;
using RelId = std::int64_t;

struct Node {
    NodeId internal_id = 0;
    std::vector<std::string> labels;
    std::map<std::string, PropertyValue> properties;
};

struct Relationship {
    RelId internal_id = 0;
    NodeId source = 0;
    NodeId target = 0;
    std::string rel_type;
    std::map<std::string, PropertyValue> properties;
};

/// Heterogeneous attributed graph, immutable once loaded. Internal node ids
/// are dense 0..n-1 in insertion (file) order. Safe for concurrent readers.
class PropertyGraph {
public:
    /// Programmatic construction; the CSV loader funnels through these, so
    /// the same invariants (dense ids, one type per key) hold either way.
    NodeId add_node(std::vector<std::string> labels,
                    std::map<std::string, PropertyValue> properties);
    RelId add_relationship(NodeId source, NodeId target, std::string rel_type,
                           std::map<std::string, PropertyValue> properties);

    std::int64_t node_count() const { return static_cast<std::int64_t>(nodes_.size()); }
    std::int64_t relationship_count() const {
        return static_cast<std::int64_t>(relationships_.size());
    }
    const Node& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Relationship>& relationships() const { return relationships_; }

    const std::set<NodeId>* nodes_with_label(const std::string& label) const;
    bool has_label(const std::string& label) const;
    std::set<std::string> relationship_types() const;

    /// Sorted, duplicate-free (key, type) catalogs.
    std::vector<std::pair<std::string, ValueType>> node_property_keys() const;
    std::vector<std::pair<std::string, ValueType>> relationship_property_keys() const;
    std::optional<ValueType> node_property_type(const std::string& key) const;
    std::optional<ValueType> relationship_property_type(const std::string& key) const;

    /// Maps human-readable identifier values to internal ids. Matching is
    /// exact and case-sensitive after whitespace trim. Errors on unknown
    /// key, on zero matches, and on ambiguous matches (all candidates named).
    std::vector<NodeId> resolve_nodes(const std::string& identifier_property,
                                      const std::vector<std::string>& values) const;

private:
    void register_property(const std::string& key, const PropertyValue& v, bool on_node);

    std::vector<Node> nodes_;
    std::vector<Relationship> relationships_;
    std::map<std::string, std::set<NodeId>> label_index_;
    std::map<std::string, ValueType> node_prop_types_;
    std::map<std::string, ValueType> rel_prop_types_;
};

struct LoadOptions {
    /// Sidecar JSON manifest {key: "string"|"int"|"float"|"float_array"}
    /// pinning column types; untyped all-numeric columns infer as float,
    /// everything else as string.
    std::string manifest_path;
};

/// Loads nodes and relationships from CSV files.
/// Nodes: header `id,labels,<prop>,...`, labels `;`-separated.
/// Relationships: header `source,target,type,<prop>,...`, endpoints given
/// as node file ids. Internal ids are assigned in file order.
PropertyGraph load_graph(const std::string& nodes_path, const std::string& rels_path,
                         const LoadOptions& opts = {});

std::string trim(const std::string& s);

}  // namespace gdsa
