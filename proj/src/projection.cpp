#include "gdsa/projection.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "gdsa/error.hpp"

namespace gdsa {

ProjectionSpec ProjectionSpec::default_spec(const PropertyGraph& g, Orientation orientation) {
    ProjectionSpec spec;
    spec.name = "default";
    spec.orientation = orientation;
    for (const auto& [key, type] : g.node_property_keys()) {
        switch (type) {
            case ValueType::Integer:
                spec.node_properties.push_back({key, key, Coercion::ToFloat});
                break;
            case ValueType::Float:
            case ValueType::FloatArray:
                spec.node_properties.push_back({key, key, Coercion::None});
                break;
            case ValueType::String:
                break;  // string properties are never projected
        }
    }
    for (const auto& [key, type] : g.relationship_property_keys()) {
        if (type == ValueType::Integer || type == ValueType::Float) {
            spec.relationship_properties.push_back(key);
        }
    }
    return spec;
}

ProjectionSpec ProjectionSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error("projection must be a JSON object");
    ProjectionSpec spec;
    spec.name = j.value("name", std::string("projection"));
    if (j.contains("node_labels") && !j.at("node_labels").is_null()) {
        spec.node_labels = j.at("node_labels").get<std::vector<std::string>>();
    }
    if (j.contains("relationship_types") && !j.at("relationship_types").is_null()) {
        spec.relationship_types = j.at("relationship_types").get<std::vector<std::string>>();
    }
    if (j.contains("node_properties")) {
        for (const auto& entry : j.at("node_properties")) {
            NodePropertyProjection p;
            if (entry.is_string()) {
                p.source_key = entry.get<std::string>();
                p.projected_key = p.source_key;
            } else if (entry.is_object()) {
                p.source_key = entry.at("source_key").get<std::string>();
                p.projected_key = entry.value("projected_key", p.source_key);
                const std::string c = entry.value("coercion", std::string("none"));
                if (c == "none") p.coercion = Coercion::None;
                else if (c == "to_float") p.coercion = Coercion::ToFloat;
                else throw Error("projection coercion must be none|to_float");
            } else {
                throw Error("node_properties entries must be strings or objects");
            }
            spec.node_properties.push_back(std::move(p));
        }
    }
    if (j.contains("relationship_properties")) {
        spec.relationship_properties =
            j.at("relationship_properties").get<std::vector<std::string>>();
    }
    if (j.contains("orientation")) {
        const std::string o = j.at("orientation").get<std::string>();
        if (o == "directed") spec.orientation = Orientation::Directed;
        else if (o == "undirected") spec.orientation = Orientation::Undirected;
        else throw Error("projection orientation must be directed|undirected");
    }
    return spec;
}

nlohmann::json ProjectionSpec::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    if (node_labels) j["node_labels"] = *node_labels;
    if (relationship_types) j["relationship_types"] = *relationship_types;
    auto props = nlohmann::json::array();
    for (const auto& p : node_properties) {
        props.push_back({{"source_key", p.source_key},
                         {"projected_key", p.projected_key},
                         {"coercion", p.coercion == Coercion::ToFloat ? "to_float" : "none"}});
    }
    j["node_properties"] = std::move(props);
    j["relationship_properties"] = relationship_properties;
    j["orientation"] = orientation == Orientation::Directed ? "directed" : "undirected";
    return j;
}

std::int64_t ProjectedGraph::projected_id(NodeId original) const {
    if (original < 0 || original >= static_cast<NodeId>(orig_to_proj_.size())) return -1;
    return orig_to_proj_[static_cast<std::size_t>(original)];
}

std::vector<std::pair<std::string, bool>> ProjectedGraph::node_property_catalog() const {
    std::vector<std::pair<std::string, bool>> out;
    out.reserve(node_columns_.size());
    for (const auto& [key, col] : node_columns_) out.emplace_back(key, col.is_array());
    return out;
}

std::vector<std::string> ProjectedGraph::relationship_property_catalog() const {
    std::vector<std::string> out;
    out.reserve(rel_columns_.size());
    for (const auto& [key, col] : rel_columns_) out.push_back(key);
    return out;
}

const ProjectedGraph::NodeColumn& ProjectedGraph::node_column(const std::string& key) const {
    auto it = node_columns_.find(key);
    if (it == node_columns_.end()) throw Error("unknown projected node property: " + key);
    return it->second;
}

const std::vector<double>& ProjectedGraph::node_scalar_column(const std::string& key) const {
    const NodeColumn& col = node_column(key);
    if (col.is_array()) throw Error("node property '" + key + "' is an array, expected a scalar");
    return *col.scalar;
}

const std::vector<double>& ProjectedGraph::relationship_column(const std::string& key) const {
    auto it = rel_columns_.find(key);
    if (it == rel_columns_.end()) throw Error("unknown projected relationship property: " + key);
    return *it->second;
}

ProjectedGraph ProjectedGraph::mutate_node_property(const std::string& key,
                                                    std::vector<double> values) const {
    if (node_columns_.count(key)) throw Error("node property already exists: " + key);
    if (static_cast<std::int64_t>(values.size()) != n_) {
        throw Error("mutate " + key + ": expected " + std::to_string(n_) + " values, got " +
                    std::to_string(values.size()));
    }
    ProjectedGraph out = *this;
    NodeColumn col;
    col.scalar = std::make_shared<const std::vector<double>>(std::move(values));
    out.node_columns_.emplace(key, std::move(col));
    return out;
}

namespace {

double coerce_numeric(const PropertyValue& v) {
    if (std::holds_alternative<std::int64_t>(v)) {
        return static_cast<double>(std::get<std::int64_t>(v));
    }
    return std::get<double>(v);
}

}  // namespace

ProjectedGraph project(const PropertyGraph& g, const ProjectionSpec& spec) {
    // Validate filters and property keys against the catalogs.
    if (spec.node_labels) {
        for (const auto& label : *spec.node_labels) {
            if (!g.has_label(label)) throw Error("unknown node label: " + label);
        }
    }
    if (spec.relationship_types) {
        const auto types = g.relationship_types();
        for (const auto& t : *spec.relationship_types) {
            if (!types.count(t)) throw Error("unknown relationship type: " + t);
        }
    }
    std::set<std::string> seen_keys;
    for (const auto& p : spec.node_properties) {
        if (!seen_keys.insert(p.projected_key).second) {
            throw Error("duplicate projected property key: " + p.projected_key);
        }
        auto type = g.node_property_type(p.source_key);
        if (!type) throw Error("unknown node property key: " + p.source_key);
        if (*type == ValueType::String) {
            throw Error("string property '" + p.source_key + "' cannot be projected");
        }
        if (*type == ValueType::FloatArray && p.coercion == Coercion::ToFloat) {
            throw Error("array property '" + p.source_key + "' cannot be coerced to float");
        }
    }
    for (const auto& key : spec.relationship_properties) {
        auto type = g.relationship_property_type(key);
        if (!type) throw Error("unknown relationship property key: " + key);
        if (*type == ValueType::String) {
            throw Error("string property '" + key + "' cannot be projected");
        }
        if (*type == ValueType::FloatArray) {
            throw Error("array relationship property '" + key + "' is not supported");
        }
    }

    ProjectedGraph pg;
    pg.orientation_ = spec.orientation;
    pg.name_ = spec.name;

    // Node selection: ascending original id.
    pg.orig_to_proj_.assign(static_cast<std::size_t>(g.node_count()), -1);
    for (const auto& node : g.nodes()) {
        if (spec.node_labels) {
            bool keep = false;
            for (const auto& label : node.labels) {
                if (std::find(spec.node_labels->begin(), spec.node_labels->end(), label) !=
                    spec.node_labels->end()) {
                    keep = true;
                    break;
                }
            }
            if (!keep) continue;
        }
        pg.orig_to_proj_[static_cast<std::size_t>(node.internal_id)] =
            static_cast<std::int64_t>(pg.orig_ids_.size());
        pg.orig_ids_.push_back(node.internal_id);
    }
    pg.n_ = static_cast<std::int64_t>(pg.orig_ids_.size());

    // Relationship selection: file order.
    std::map<std::string, std::int32_t> type_ids;
    for (const auto& rel : g.relationships()) {
        if (spec.relationship_types &&
            std::find(spec.relationship_types->begin(), spec.relationship_types->end(),
                      rel.rel_type) == spec.relationship_types->end()) {
            continue;
        }
        const std::int64_t s = pg.orig_to_proj_[static_cast<std::size_t>(rel.source)];
        const std::int64_t t = pg.orig_to_proj_[static_cast<std::size_t>(rel.target)];
        if (s < 0 || t < 0) continue;
        auto [it, inserted] =
            type_ids.emplace(rel.rel_type, static_cast<std::int32_t>(pg.rel_type_names_.size()));
        if (inserted) pg.rel_type_names_.push_back(rel.rel_type);
        pg.rels_.push_back({s, t, it->second, rel.internal_id});
    }

    // Relationship property columns, NaN for absent values.
    for (const auto& key : spec.relationship_properties) {
        auto column = std::make_shared<std::vector<double>>(pg.rels_.size(), kAbsent);
        for (std::size_t i = 0; i < pg.rels_.size(); ++i) {
            const auto& rel = g.relationships()[static_cast<std::size_t>(pg.rels_[i].original_id)];
            auto it = rel.properties.find(key);
            if (it != rel.properties.end()) (*column)[i] = coerce_numeric(it->second);
        }
        pg.rel_columns_.emplace(key, std::move(column));
    }

    // Node property columns.
    for (const auto& p : spec.node_properties) {
        const ValueType type = *g.node_property_type(p.source_key);
        ProjectedGraph::NodeColumn col;
        if (type == ValueType::FloatArray) {
            auto column = std::make_shared<std::vector<std::vector<double>>>(
                static_cast<std::size_t>(pg.n_));
            for (std::int64_t v = 0; v < pg.n_; ++v) {
                const auto& node = g.node(pg.orig_ids_[static_cast<std::size_t>(v)]);
                auto it = node.properties.find(p.source_key);
                if (it != node.properties.end()) {
                    (*column)[static_cast<std::size_t>(v)] =
                        std::get<std::vector<double>>(it->second);
                }
            }
            col.array = std::move(column);
        } else {
            auto column = std::make_shared<std::vector<double>>(
                static_cast<std::size_t>(pg.n_), kAbsent);
            for (std::int64_t v = 0; v < pg.n_; ++v) {
                const auto& node = g.node(pg.orig_ids_[static_cast<std::size_t>(v)]);
                auto it = node.properties.find(p.source_key);
                if (it != node.properties.end()) {
                    (*column)[static_cast<std::size_t>(v)] = coerce_numeric(it->second);
                }
            }
            col.scalar = std::move(column);
        }
        pg.node_columns_.emplace(p.projected_key, std::move(col));
    }

    // Arcs: one per relationship when directed, two when undirected.
    const std::int64_t arc_total = spec.orientation == Orientation::Undirected
                                       ? 2 * static_cast<std::int64_t>(pg.rels_.size())
                                       : static_cast<std::int64_t>(pg.rels_.size());
    pg.arc_sources_.reserve(static_cast<std::size_t>(arc_total));
    pg.arc_targets_.reserve(static_cast<std::size_t>(arc_total));
    pg.arc_rels_.reserve(static_cast<std::size_t>(arc_total));
    for (std::size_t i = 0; i < pg.rels_.size(); ++i) {
        pg.arc_sources_.push_back(pg.rels_[i].source);
        pg.arc_targets_.push_back(pg.rels_[i].target);
        pg.arc_rels_.push_back(static_cast<std::int64_t>(i));
        if (spec.orientation == Orientation::Undirected) {
            pg.arc_sources_.push_back(pg.rels_[i].target);
            pg.arc_targets_.push_back(pg.rels_[i].source);
            pg.arc_rels_.push_back(static_cast<std::int64_t>(i));
        }
    }

    auto build_csr = [&](const std::vector<std::int64_t>& keys,
                         const std::vector<std::int64_t>& order_by,
                         std::vector<std::int64_t>& offsets, std::vector<std::int64_t>& ids) {
        offsets.assign(static_cast<std::size_t>(pg.n_) + 1, 0);
        ids.resize(pg.arc_sources_.size());
        for (std::int64_t k : keys) ++offsets[static_cast<std::size_t>(k) + 1];
        for (std::size_t v = 1; v < offsets.size(); ++v) offsets[v] += offsets[v - 1];
        std::iota(ids.begin(), ids.end(), 0);
        std::sort(ids.begin(), ids.end(), [&](std::int64_t a, std::int64_t b) {
            if (keys[static_cast<std::size_t>(a)] != keys[static_cast<std::size_t>(b)])
                return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
            if (order_by[static_cast<std::size_t>(a)] != order_by[static_cast<std::size_t>(b)])
                return order_by[static_cast<std::size_t>(a)] < order_by[static_cast<std::size_t>(b)];
            return pg.arc_rels_[static_cast<std::size_t>(a)] < pg.arc_rels_[static_cast<std::size_t>(b)];
        });
    };

    build_csr(pg.arc_sources_, pg.arc_targets_, pg.out_offsets_, pg.arc_ids_);
    build_csr(pg.arc_targets_, pg.arc_sources_, pg.in_offsets_, pg.in_arc_ids_);

    // Structural sanity: offsets monotone, endpoints in range.
    assert(pg.out_offsets_.back() == static_cast<std::int64_t>(pg.arc_sources_.size()));
    for (std::int64_t t : pg.arc_targets_) assert(t >= 0 && t < pg.n_);

    return pg;
}

}  // namespace gdsa
