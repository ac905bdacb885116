#include "fano/config.hpp"

#include <cassert>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fano {

using nlohmann::json;

std::string to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Point: return "point";
    case ComponentKind::Curve: return "curve";
    case ComponentKind::Surface: return "surface";
  }
  assert(false && "unreachable");
  return "";
}

ExtremalComponent ExtremalComponent::point() {
  return ExtremalComponent{};
}

ExtremalComponent ExtremalComponent::curve(std::int64_t c1N) {
  ExtremalComponent c;
  c.kind = ComponentKind::Curve;
  c.c1N = c1N;
  return c;
}

ExtremalComponent ExtremalComponent::surface(std::int64_t degree, std::int64_t c1F_dot_c1N,
                                             std::int64_t c1N_sq, int picard_rank) {
  ExtremalComponent c;
  c.kind = ComponentKind::Surface;
  c.degree = degree;
  c.c1F_dot_c1N = c1F_dot_c1N;
  c.c1N_sq = c1N_sq;
  c.picard = picard_rank;
  return c;
}

void Configuration::validate() const {
  for (const ExtremalComponent* comp : {&min, &max}) {
    if (comp->kind == ComponentKind::Surface) {
      if (comp->degree < 1 || comp->degree > 9)
        throw ConfigError("surface degree must lie in [1,9]");
      if (comp->picard < 1) throw ConfigError("surface picard_rank must be positive");
    }
  }
  if (b < 0 || c < 0) throw ConfigError("interior point counts b, c must be nonnegative");
  for (const InteriorCurve& curve : interior_curves) {
    if (curve.genus < 0) throw ConfigError("interior curve genus must be nonnegative");
    if (curve.cls) {
      if (!reduced_space)
        throw ConfigError("interior curve carries a class but no reduced_space is given");
      const std::int64_t cc = intersect(*reduced_space, *curve.cls, *curve.cls);
      if (curve.alpha_plus + curve.alpha_minus != cc)
        throw ConfigError("alpha_plus + alpha_minus must equal the class self-intersection");
    }
  }
  if (euler_min && !reduced_space)
    throw ConfigError("euler_min given without a reduced_space");
}

std::optional<std::int64_t> extremum_euler_square(const ExtremalComponent& comp) {
  switch (comp.kind) {
    case ComponentKind::Point: return 1;
    case ComponentKind::Curve: return -comp.c1N;
    case ComponentKind::Surface: return std::nullopt;
  }
  assert(false && "unreachable");
  return std::nullopt;
}

bool euler_jump_check(ReducedSpace space, std::int64_t k, std::int64_t l,
                      const std::vector<InteriorCurve>& curves,
                      const DivisorClass& e_before, const DivisorClass& e_after) {
  std::int64_t alpha_jump = 0;
  for (const InteriorCurve& curve : curves) alpha_jump += curve.alpha_plus - curve.alpha_minus;
  const std::int64_t lhs =
      intersect(space, e_after, e_after) - intersect(space, e_before, e_before);
  return lhs == k - l + alpha_jump;
}

namespace {

const json& require_field(const json& obj, const char* name, const char* where) {
  auto it = obj.find(name);
  if (it == obj.end())
    throw ConfigError(std::string("missing field \"") + name + "\" in " + where);
  return *it;
}

std::int64_t require_int(const json& obj, const char* name, const char* where) {
  const json& field = require_field(obj, name, where);
  if (!field.is_number_integer())
    throw ConfigError(std::string("field \"") + name + "\" in " + where + " must be an integer");
  return field.get<std::int64_t>();
}

DivisorClass class_from_json(const json& arr, const char* where) {
  if (!arr.is_array() || arr.empty() || arr.size() > 2)
    throw ConfigError(std::string("coordinate array in ") + where +
                      " must have one or two integer entries");
  for (const json& entry : arr)
    if (!entry.is_number_integer())
      throw ConfigError(std::string("coordinate array in ") + where +
                        " must have integer entries");
  DivisorClass c;
  c.u = arr[0].get<std::int64_t>();
  if (arr.size() == 2) c.v = arr[1].get<std::int64_t>();
  return c;
}

json class_to_json(ReducedSpace space, const DivisorClass& c) {
  json arr = json::array();
  arr.push_back(c.u);
  if (lattice_rank(space) == 2) arr.push_back(c.v);
  return arr;
}

ExtremalComponent component_from_json(const json& obj, const char* where) {
  if (!obj.is_object()) throw ConfigError(std::string(where) + " must be an object");
  const json& kind = require_field(obj, "kind", where);
  if (!kind.is_string())
    throw ConfigError(std::string("field \"kind\" in ") + where + " must be a string");
  const std::string name = kind.get<std::string>();
  if (name == "point") return ExtremalComponent::point();
  if (name == "curve") return ExtremalComponent::curve(require_int(obj, "c1N", where));
  if (name == "surface")
    return ExtremalComponent::surface(
        require_int(obj, "degree", where), require_int(obj, "c1F_dot_c1N", where),
        require_int(obj, "c1N_sq", where), static_cast<int>(require_int(obj, "picard_rank", where)));
  throw ConfigError("unknown component kind \"" + name + "\" in " + where);
}

json component_to_json(const ExtremalComponent& comp) {
  json obj;
  obj["kind"] = to_string(comp.kind);
  if (comp.kind == ComponentKind::Curve) obj["c1N"] = comp.c1N;
  if (comp.kind == ComponentKind::Surface) {
    obj["degree"] = comp.degree;
    obj["c1F_dot_c1N"] = comp.c1F_dot_c1N;
    obj["c1N_sq"] = comp.c1N_sq;
    obj["picard_rank"] = comp.picard;
  }
  return obj;
}

}  // namespace

Configuration config_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ConfigError(std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");

  Configuration config;
  config.min = component_from_json(require_field(doc, "min", "configuration"), "min");
  config.max = component_from_json(require_field(doc, "max", "configuration"), "max");

  const json& curves = require_field(doc, "interior_curves", "configuration");
  if (!curves.is_array()) throw ConfigError("\"interior_curves\" must be an array");
  for (const json& entry : curves) {
    if (!entry.is_object()) throw ConfigError("interior curve entries must be objects");
    InteriorCurve curve;
    curve.genus = require_int(entry, "genus", "interior curve");
    curve.alpha_plus = require_int(entry, "alpha_plus", "interior curve");
    curve.alpha_minus = require_int(entry, "alpha_minus", "interior curve");
    if (auto it = entry.find("class"); it != entry.end())
      curve.cls = class_from_json(*it, "interior curve class");
    config.interior_curves.push_back(curve);
  }

  config.b = require_int(doc, "b", "configuration");
  config.c = require_int(doc, "c", "configuration");

  if (auto it = doc.find("reduced_space"); it != doc.end()) {
    if (!it->is_string()) throw ConfigError("\"reduced_space\" must be a string");
    try {
      config.reduced_space = reduced_space_from_string(it->get<std::string>());
    } catch (const std::invalid_argument& err) {
      throw ConfigError(err.what());
    }
  }
  if (auto it = doc.find("euler_min"); it != doc.end())
    config.euler_min = class_from_json(*it, "euler_min");

  config.validate();
  return config;
}

Configuration config_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return config_from_json(buffer.str());
}

std::string config_to_json(const Configuration& config) {
  json doc;
  doc["min"] = component_to_json(config.min);
  doc["max"] = component_to_json(config.max);
  json curves = json::array();
  for (const InteriorCurve& curve : config.interior_curves) {
    json entry;
    entry["genus"] = curve.genus;
    entry["alpha_plus"] = curve.alpha_plus;
    entry["alpha_minus"] = curve.alpha_minus;
    if (curve.cls && config.reduced_space)
      entry["class"] = class_to_json(*config.reduced_space, *curve.cls);
    curves.push_back(entry);
  }
  doc["interior_curves"] = curves;
  doc["b"] = config.b;
  doc["c"] = config.c;
  if (config.reduced_space) doc["reduced_space"] = to_string(*config.reduced_space);
  if (config.euler_min && config.reduced_space)
    doc["euler_min"] = class_to_json(*config.reduced_space, *config.euler_min);
  return doc.dump(2) + "\n";
}

}  // namespace fano
