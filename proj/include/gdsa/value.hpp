#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace gdsa {

enum class ValueType { String, Integer, Float, FloatArray };

/// One typed property value. A property key maps to exactly one ValueType
/// across the whole graph; the loader rejects mixed-type columns.
using PropertyValue =
    std::variant<std::string, std::int64_t, double, std::vector<double>>;

ValueType type_of(const PropertyValue& v);

/// "string" | "integer" | "float" | "float_array"
const char* type_name(ValueType t);

/// Canonical text form, used for identifier matching and display.
std::string value_to_string(const PropertyValue& v);

}  // namespace gdsa
