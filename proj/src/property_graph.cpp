#include "gdsa/property_graph.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "gdsa/error.hpp"

namespace gdsa {

ValueType type_of(const PropertyValue& v) {
    switch (v.index()) {
        case 0: return ValueType::String;
        case 1: return ValueType::Integer;
        case 2: return ValueType::Float;
        default: return ValueType::FloatArray;
    }
}

const char* type_name(ValueType t) {
    switch (t) {
        case ValueType::String: return "string";
        case ValueType::Integer: return "integer";
        case ValueType::Float: return "float";
        default: return "float_array";
    }
}

std::string value_to_string(const PropertyValue& v) {
    switch (v.index()) {
        case 0: return std::get<std::string>(v);
        case 1: return std::to_string(std::get<std::int64_t>(v));
        case 2: {
            std::ostringstream os;
            os << std::get<double>(v);
            return os.str();
        }
        default: {
            const auto& xs = std::get<std::vector<double>>(v);
            std::ostringstream os;
            os << '[';
            for (std::size_t i = 0; i < xs.size(); ++i) {
                if (i) os << ", ";
                os << xs[i];
            }
            os << ']';
            return os.str();
        }
    }
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

void PropertyGraph::register_property(const std::string& key, const PropertyValue& v,
                                      bool on_node) {
    const ValueType t = type_of(v);
    auto& catalog = on_node ? node_prop_types_ : rel_prop_types_;
    auto it = catalog.find(key);
    if (it == catalog.end()) {
        // One type per key across the whole graph, node and relationship
        // catalogs included.
        const auto& other = on_node ? rel_prop_types_ : node_prop_types_;
        auto ot = other.find(key);
        if (ot != other.end() && ot->second != t) {
            throw Error("mixed-type property key '" + key + "': " +
                        type_name(ot->second) + " vs " + type_name(t));
        }
        catalog.emplace(key, t);
    } else if (it->second != t) {
        throw Error("mixed-type property key '" + key + "': " + type_name(it->second) +
                    " vs " + type_name(t));
    }
}

NodeId PropertyGraph::add_node(std::vector<std::string> labels,
                               std::map<std::string, PropertyValue> properties) {
    const NodeId id = static_cast<NodeId>(nodes_.size());
    for (const auto& [key, value] : properties) register_property(key, value, true);
    for (const auto& label : labels) label_index_[label].insert(id);
    nodes_.push_back(Node{id, std::move(labels), std::move(properties)});
    return id;
}

RelId PropertyGraph::add_relationship(NodeId source, NodeId target, std::string rel_type,
                                      std::map<std::string, PropertyValue> properties) {
    if (source < 0 || source >= node_count()) {
        throw Error("relationship source id out of range: " + std::to_string(source));
    }
    if (target < 0 || target >= node_count()) {
        throw Error("relationship target id out of range: " + std::to_string(target));
    }
    if (rel_type.empty()) throw Error("relationship type must be non-empty");
    for (const auto& [key, value] : properties) register_property(key, value, false);
    const RelId id = static_cast<RelId>(relationships_.size());
    relationships_.push_back(
        Relationship{id, source, target, std::move(rel_type), std::move(properties)});
    return id;
}

const std::set<NodeId>* PropertyGraph::nodes_with_label(const std::string& label) const {
    auto it = label_index_.find(label);
    return it == label_index_.end() ? nullptr : &it->second;
}

bool PropertyGraph::has_label(const std::string& label) const {
    return label_index_.count(label) > 0;
}

std::set<std::string> PropertyGraph::relationship_types() const {
    std::set<std::string> types;
    for (const auto& r : relationships_) types.insert(r.rel_type);
    return types;
}

std::vector<std::pair<std::string, ValueType>> PropertyGraph::node_property_keys() const {
    return {node_prop_types_.begin(), node_prop_types_.end()};
}

std::vector<std::pair<std::string, ValueType>> PropertyGraph::relationship_property_keys()
    const {
    return {rel_prop_types_.begin(), rel_prop_types_.end()};
}

std::optional<ValueType> PropertyGraph::node_property_type(const std::string& key) const {
    auto it = node_prop_types_.find(key);
    if (it == node_prop_types_.end()) return std::nullopt;
    return it->second;
}

std::optional<ValueType> PropertyGraph::relationship_property_type(
    const std::string& key) const {
    auto it = rel_prop_types_.find(key);
    if (it == rel_prop_types_.end()) return std::nullopt;
    return it->second;
}

namespace {

bool parse_int64(const std::string& s, std::int64_t& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    errno = 0;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return errno == 0 && end == s.c_str() + s.size() && std::isfinite(out);
}

}  // namespace

std::vector<NodeId> PropertyGraph::resolve_nodes(const std::string& identifier_property,
                                                 const std::vector<std::string>& values) const {
    auto type_it = node_prop_types_.find(identifier_property);
    if (type_it == node_prop_types_.end()) {
        throw Error("unknown node property key: " + identifier_property);
    }
    if (type_it->second == ValueType::FloatArray) {
        throw Error("property '" + identifier_property + "' is an array and cannot identify nodes");
    }

    std::vector<NodeId> out;
    out.reserve(values.size());
    for (const auto& raw : values) {
        const std::string wanted = trim(raw);
        std::vector<NodeId> matches;
        for (const auto& n : nodes_) {
            auto it = n.properties.find(identifier_property);
            if (it == n.properties.end()) continue;
            bool hit = false;
            switch (type_it->second) {
                case ValueType::String:
                    hit = trim(std::get<std::string>(it->second)) == wanted;
                    break;
                case ValueType::Integer: {
                    std::int64_t v;
                    hit = parse_int64(wanted, v) && v == std::get<std::int64_t>(it->second);
                    break;
                }
                case ValueType::Float: {
                    double v;
                    hit = parse_double(wanted, v) && v == std::get<double>(it->second);
                    break;
                }
                default: break;
            }
            if (hit) matches.push_back(n.internal_id);
        }
        if (matches.empty()) {
            throw Error("no node with " + identifier_property + "=" + wanted);
        }
        if (matches.size() > 1) {
            std::string ids;
            for (std::size_t i = 0; i < matches.size(); ++i) {
                if (i) ids += ", ";
                ids += std::to_string(matches[i]);
            }
            throw Error("ambiguous identifier " + identifier_property + "=" + wanted +
                        ": matches nodes [" + ids + "]");
        }
        out.push_back(matches[0]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// CSV loading

namespace {

// RFC-4180 style records: quoted fields may contain commas, doubled quotes
// and newlines.
class CsvReader {
public:
    explicit CsvReader(const std::string& path) : in_(path) {
        if (!in_) throw Error("cannot open file: " + path);
    }

    bool next_record(std::vector<std::string>& fields) {
        fields.clear();
        std::string field;
        bool in_quotes = false;
        bool any = false;
        int ch;
        while ((ch = in_.get()) != EOF) {
            any = true;
            char c = static_cast<char>(ch);
            if (in_quotes) {
                if (c == '"') {
                    if (in_.peek() == '"') {
                        field += '"';
                        in_.get();
                    } else {
                        in_quotes = false;
                    }
                } else {
                    field += c;
                }
            } else if (c == '"') {
                in_quotes = true;
            } else if (c == ',') {
                fields.push_back(std::move(field));
                field.clear();
            } else if (c == '\n') {
                fields.push_back(std::move(field));
                return true;
            } else if (c != '\r') {
                field += c;
            }
        }
        if (!any) return false;
        fields.push_back(std::move(field));
        return true;
    }

private:
    std::ifstream in_;
};

enum class ColumnType { String, Int, Float, FloatArray };

std::vector<double> parse_float_array(const std::string& cell, const std::string& key) {
    std::vector<double> xs;
    std::size_t begin = 0;
    while (begin <= cell.size()) {
        std::size_t end = cell.find(';', begin);
        std::string part = trim(end == std::string::npos ? cell.substr(begin)
                                                         : cell.substr(begin, end - begin));
        double v;
        if (!parse_double(part, v)) {
            throw Error("column '" + key + "': cannot parse '" + part + "' as float");
        }
        xs.push_back(v);
        if (end == std::string::npos) break;
        begin = end + 1;
    }
    return xs;
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;  // trimmed cells
};

CsvTable read_csv(const std::string& path) {
    CsvReader reader(path);
    CsvTable table;
    std::vector<std::string> record;
    if (!reader.next_record(record)) return table;  // empty file: no header, no rows
    for (auto& h : record) table.header.push_back(trim(h));
    while (reader.next_record(record)) {
        bool all_empty = true;
        for (auto& cell : record) {
            cell = trim(cell);
            if (!cell.empty()) all_empty = false;
        }
        if (all_empty) continue;
        if (record.size() != table.header.size()) {
            throw Error(path + ": row " + std::to_string(table.rows.size() + 2) + " has " +
                        std::to_string(record.size()) + " fields, expected " +
                        std::to_string(table.header.size()));
        }
        table.rows.push_back(record);
    }
    return table;
}

std::map<std::string, ColumnType> load_manifest(const std::string& path) {
    std::map<std::string, ColumnType> out;
    if (path.empty()) return out;
    std::ifstream in(path);
    if (!in) throw Error("cannot open manifest: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("manifest parse error: " + std::string(e.what()));
    }
    if (!j.is_object()) throw Error("manifest must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_string()) throw Error("manifest values must be strings");
        const std::string t = it.value().get<std::string>();
        if (t == "string") out[it.key()] = ColumnType::String;
        else if (t == "int") out[it.key()] = ColumnType::Int;
        else if (t == "float") out[it.key()] = ColumnType::Float;
        else if (t == "float_array") out[it.key()] = ColumnType::FloatArray;
        else throw Error("manifest type for '" + it.key() + "' must be string|int|float|float_array");
    }
    return out;
}

/// Column type: manifest wins; otherwise all-numeric columns infer as float,
/// anything else as string.
ColumnType column_type(const CsvTable& table, std::size_t col, const std::string& key,
                       const std::map<std::string, ColumnType>& manifest) {
    auto it = manifest.find(key);
    if (it != manifest.end()) return it->second;
    for (const auto& row : table.rows) {
        const std::string& cell = row[col];
        if (cell.empty()) continue;
        double v;
        if (!parse_double(cell, v)) return ColumnType::String;
    }
    return ColumnType::Float;
}

PropertyValue parse_cell(const std::string& cell, ColumnType t, const std::string& key) {
    switch (t) {
        case ColumnType::String: return cell;
        case ColumnType::Int: {
            std::int64_t v;
            if (!parse_int64(cell, v)) {
                throw Error("column '" + key + "': cannot parse '" + cell + "' as int");
            }
            return v;
        }
        case ColumnType::Float: {
            double v;
            if (!parse_double(cell, v)) {
                throw Error("column '" + key + "': cannot parse '" + cell + "' as float");
            }
            return v;
        }
        default: return parse_float_array(cell, key);
    }
}

std::vector<std::string> split_labels(const std::string& cell) {
    std::vector<std::string> labels;
    std::size_t begin = 0;
    while (begin <= cell.size()) {
        std::size_t end = cell.find(';', begin);
        std::string part = trim(end == std::string::npos ? cell.substr(begin)
                                                         : cell.substr(begin, end - begin));
        if (!part.empty()) labels.push_back(part);
        if (end == std::string::npos) break;
        begin = end + 1;
    }
    return labels;
}

}  // namespace

PropertyGraph load_graph(const std::string& nodes_path, const std::string& rels_path,
                         const LoadOptions& opts) {
    const auto manifest = load_manifest(opts.manifest_path);
    PropertyGraph g;

    CsvTable nodes = read_csv(nodes_path);
    std::unordered_map<std::string, NodeId> id_map;
    if (!nodes.header.empty()) {
        if (nodes.header.size() < 2 || nodes.header[0] != "id" || nodes.header[1] != "labels") {
            throw Error(nodes_path + ": node header must start with 'id,labels'");
        }
        std::vector<ColumnType> types(nodes.header.size(), ColumnType::String);
        for (std::size_t c = 2; c < nodes.header.size(); ++c) {
            types[c] = column_type(nodes, c, nodes.header[c], manifest);
        }
        for (const auto& row : nodes.rows) {
            const std::string& file_id = row[0];
            if (file_id.empty()) throw Error(nodes_path + ": empty node id");
            if (id_map.count(file_id)) throw Error("duplicate node id: " + file_id);
            std::map<std::string, PropertyValue> props;
            props.emplace("id", file_id);
            for (std::size_t c = 2; c < nodes.header.size(); ++c) {
                if (row[c].empty()) continue;  // absent property
                props.emplace(nodes.header[c], parse_cell(row[c], types[c], nodes.header[c]));
            }
            id_map.emplace(file_id, g.add_node(split_labels(row[1]), std::move(props)));
        }
    }

    CsvTable rels = read_csv(rels_path);
    if (!rels.header.empty()) {
        if (rels.header.size() < 3 || rels.header[0] != "source" || rels.header[1] != "target" ||
            rels.header[2] != "type") {
            throw Error(rels_path + ": relationship header must start with 'source,target,type'");
        }
        std::vector<ColumnType> types(rels.header.size(), ColumnType::String);
        for (std::size_t c = 3; c < rels.header.size(); ++c) {
            types[c] = column_type(rels, c, rels.header[c], manifest);
        }
        for (const auto& row : rels.rows) {
            auto src = id_map.find(row[0]);
            if (src == id_map.end()) {
                throw Error("relationship references unknown node id: " + row[0]);
            }
            auto dst = id_map.find(row[1]);
            if (dst == id_map.end()) {
                throw Error("relationship references unknown node id: " + row[1]);
            }
            if (row[2].empty()) throw Error(rels_path + ": empty relationship type");
            std::map<std::string, PropertyValue> props;
            for (std::size_t c = 3; c < rels.header.size(); ++c) {
                if (row[c].empty()) continue;
                props.emplace(rels.header[c], parse_cell(row[c], types[c], rels.header[c]));
            }
            g.add_relationship(src->second, dst->second, row[2], std::move(props));
        }
    }
    return g;
}

}  // namespace gdsa
