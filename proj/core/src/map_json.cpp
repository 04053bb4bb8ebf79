#include "splab/map_json.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace splab {

namespace {

using nlohmann::ordered_json;

void reject_unknown_fields(const ordered_json& j, const char* where,
                           std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw MapFormatError("unknown field \"" + item.key() + "\" in " +
                           where + " object");
    }
  }
}

const ordered_json& require_field(const ordered_json& j, const char* field,
                                  const char* where) {
  auto it = j.find(field);
  if (it == j.end()) {
    throw MapFormatError(std::string("missing field \"") + field + "\" in " +
                         where + " object");
  }
  return *it;
}

int require_positive_int(const ordered_json& j, const char* field,
                         const char* where) {
  const ordered_json& v = require_field(j, field, where);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw MapFormatError(std::string("field \"") + field + "\" in " + where +
                         " object must be a positive integer");
  }
  return v.get<int>();
}

Complex parse_complex(const ordered_json& v, const char* where) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return Complex(v[0].get<double>(), v[1].get<double>());
  }
  throw MapFormatError(std::string("complex entry in ") + where +
                       " must be a number or an [re, im] pair");
}

CVector parse_complex_array(const ordered_json& v, const char* where) {
  if (!v.is_array()) {
    throw MapFormatError(std::string(where) + " must be an array");
  }
  CVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (const auto& entry : v) out[i++] = parse_complex(entry, where);
  return out;
}

PolyMap parse_polymap_object(const ordered_json& j) {
  if (!j.is_object()) {
    throw MapFormatError("polynomial map must be a JSON object");
  }
  reject_unknown_fields(j, "polynomial", {"kind", "n", "m", "terms"});
  const ordered_json& kind = require_field(j, "kind", "polynomial");
  if (kind != "polynomial") {
    throw MapFormatError("expected kind \"polynomial\", got " + kind.dump());
  }
  const int n = require_positive_int(j, "n", "polynomial");
  const int m = require_positive_int(j, "m", "polynomial");
  const ordered_json& terms = require_field(j, "terms", "polynomial");
  if (!terms.is_array()) {
    throw MapFormatError("field \"terms\" must be an array");
  }
  std::vector<std::pair<MultiIndex, CVector>> parsed;
  for (const auto& t : terms) {
    if (!t.is_object()) {
      throw MapFormatError("term entries must be objects");
    }
    reject_unknown_fields(t, "term", {"alpha", "coeff"});
    const ordered_json& alpha = require_field(t, "alpha", "term");
    if (!alpha.is_array()) {
      throw MapFormatError("field \"alpha\" must be an array of integers");
    }
    std::vector<int> exps;
    for (const auto& e : alpha) {
      if (!e.is_number_integer() || e.get<long long>() < 0) {
        throw MapFormatError("field \"alpha\" must hold nonnegative integers");
      }
      exps.push_back(e.get<int>());
    }
    const CVector coeff =
        parse_complex_array(require_field(t, "coeff", "term"), "\"coeff\"");
    parsed.emplace_back(MultiIndex(std::move(exps)), coeff);
  }
  try {
    return make_polymap(n, m, std::move(parsed));
  } catch (const Error& e) {
    throw MapFormatError(e.what());
  }
}

MapHandle parse_node(const ordered_json& j);

MapHandle parse_rational(const ordered_json& j) {
  reject_unknown_fields(j, "rational",
                        {"kind", "n", "m", "numerator", "denominator"});
  const int n = require_positive_int(j, "n", "rational");
  const int m = require_positive_int(j, "m", "rational");
  PolyMap num =
      parse_polymap_object(require_field(j, "numerator", "rational"));
  PolyMap den =
      parse_polymap_object(require_field(j, "denominator", "rational"));
  if (num.n != n || num.m != m) {
    throw MapFormatError("rational numerator dimensions disagree with n/m");
  }
  if (den.n != n || den.m != 1) {
    throw MapFormatError(
        "rational denominator must be scalar-valued on the same domain");
  }
  try {
    return make_map(RationalMap{std::move(num), std::move(den)});
  } catch (const Error& e) {
    throw MapFormatError(e.what());
  }
}

MapHandle parse_moebius(const ordered_json& j) {
  reject_unknown_fields(j, "moebius", {"kind", "n", "m", "base", "p"});
  const int n = require_positive_int(j, "n", "moebius");
  const int m = require_positive_int(j, "m", "moebius");
  MapHandle base = parse_node(require_field(j, "base", "moebius"));
  if (base->n != n || base->m != m) {
    throw MapFormatError("moebius base dimensions disagree with n/m");
  }
  const CVector pvec =
      parse_complex_array(require_field(j, "p", "moebius"), "\"p\"");
  std::vector<Complex> p(pvec.data(), pvec.data() + pvec.size());
  try {
    return compose_moebius(std::move(base), std::move(p));
  } catch (const Error& e) {
    throw MapFormatError(e.what());
  }
}

MapHandle parse_projection(const ordered_json& j) {
  reject_unknown_fields(j, "projection", {"kind", "n", "m", "base", "u"});
  const int n = require_positive_int(j, "n", "projection");
  const int m = require_positive_int(j, "m", "projection");
  if (m != 1) {
    throw MapFormatError("projection maps are scalar-valued; m must be 1");
  }
  MapHandle base = parse_node(require_field(j, "base", "projection"));
  if (base->n != n) {
    throw MapFormatError("projection base dimensions disagree with n");
  }
  const CVector u =
      parse_complex_array(require_field(j, "u", "projection"), "\"u\"");
  try {
    return project_scalar(std::move(base), u);
  } catch (const Error& e) {
    throw MapFormatError(e.what());
  }
}

MapHandle parse_node(const ordered_json& j) {
  if (!j.is_object()) throw MapFormatError("map must be a JSON object");
  const ordered_json& kind = require_field(j, "kind", "map");
  if (!kind.is_string()) {
    throw MapFormatError("field \"kind\" must be a string");
  }
  const std::string k = kind.get<std::string>();
  if (k == "polynomial") return make_map(parse_polymap_object(j));
  if (k == "rational") return parse_rational(j);
  if (k == "moebius") return parse_moebius(j);
  if (k == "projection") return parse_projection(j);
  throw MapFormatError("unknown kind \"" + k + "\"");
}

ordered_json complex_to_json(const Complex& c) {
  return ordered_json::array({c.real(), c.imag()});
}

ordered_json polymap_to_json(const PolyMap& pm) {
  ordered_json j;
  j["kind"] = "polynomial";
  j["n"] = pm.n;
  j["m"] = pm.m;
  ordered_json terms = ordered_json::array();
  for (const auto& [alpha, coeff] : pm.terms) {
    ordered_json t;
    t["alpha"] = alpha.exponents;
    ordered_json cs = ordered_json::array();
    for (Eigen::Index i = 0; i < coeff.size(); ++i) {
      cs.push_back(complex_to_json(coeff[i]));
    }
    t["coeff"] = std::move(cs);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

ordered_json node_to_json(const MapHandle& map) {
  struct Visitor {
    const MapNode& node;

    ordered_json operator()(const PolyMap& pm) const {
      return polymap_to_json(pm);
    }
    ordered_json operator()(const RationalMap& rm) const {
      ordered_json j;
      j["kind"] = "rational";
      j["n"] = node.n;
      j["m"] = node.m;
      j["numerator"] = polymap_to_json(rm.numerator);
      j["denominator"] = polymap_to_json(rm.denominator);
      return j;
    }
    ordered_json operator()(const MoebiusComposed& mc) const {
      ordered_json j;
      j["kind"] = "moebius";
      j["n"] = node.n;
      j["m"] = node.m;
      j["base"] = node_to_json(mc.base);
      ordered_json p = ordered_json::array();
      for (const Complex& c : mc.p) p.push_back(complex_to_json(c));
      j["p"] = std::move(p);
      return j;
    }
    ordered_json operator()(const ScalarProjection& sp) const {
      ordered_json j;
      j["kind"] = "projection";
      j["n"] = node.n;
      j["m"] = node.m;
      j["base"] = node_to_json(sp.base);
      ordered_json u = ordered_json::array();
      for (Eigen::Index i = 0; i < sp.u.size(); ++i) {
        u.push_back(complex_to_json(sp.u[i]));
      }
      j["u"] = std::move(u);
      return j;
    }
  };
  return std::visit(Visitor{*map}, map->kind);
}

}  // namespace

MapHandle parse_map(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MapFormatError(std::string("invalid JSON: ") + e.what());
  }
  return parse_node(j);
}

MapHandle load_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MapFormatError("cannot open map file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_map(buf.str());
}

std::string map_to_json(const MapHandle& map) {
  if (!map) throw ParameterError("map_to_json: null map handle");
  return node_to_json(map).dump(2);
}

void save_map_file(const MapHandle& map, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw MapFormatError("cannot open output file: " + path);
  out << map_to_json(map) << "\n";
  if (!out) throw MapFormatError("failed writing map file: " + path);
}

}  // namespace splab
