#pragma once

#include <string>

#include "splab/holomap.hpp"

namespace splab {

class MapFormatError : public Error {
 public:
  using Error::Error;
};

/// Map file schema: an object with "kind" in {"polynomial", "rational",
/// "moebius", "projection"}, integer "n" and "m", and per kind:
///   polynomial: "terms": [{"alpha": [int,...], "coeff": [c, ...]}, ...]
///   rational:   "numerator", "denominator": nested polynomial objects
///   moebius:    "base": nested map object, "p": [c, ...]
///   projection: "base": nested map object, "u": [c, ...]
/// where each complex entry c is a plain number or an [re, im] pair.
/// Unknown fields are rejected by name.
MapHandle parse_map(const std::string& json_text);
MapHandle load_map_file(const std::string& path);

/// Serializes with [re, im] pairs throughout; parse_map(map_to_json(h))
/// reproduces the map.
std::string map_to_json(const MapHandle& map);
void save_map_file(const MapHandle& map, const std::string& path);

}  // namespace splab
