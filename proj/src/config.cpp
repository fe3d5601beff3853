#include "voroshire/config.hpp"

#include <set>

#include <json.hpp>

namespace voroshire {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.contains(it.key()))
      throw ConfigError("config: unknown key '" + it.key() + "' in " + where);
}

std::vector<GaussRational> parse_exact_array(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.empty())
    throw ConfigError("config: " + where + " must be a non-empty array of rational strings");
  std::vector<GaussRational> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_string())
      throw ConfigError("config: " + where + " entries must be rational strings");
    try {
      out.push_back(GaussRational::parse(item.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("config: " + where + ": " + e.what());
    }
  }
  return out;
}

json exact_array(const std::vector<GaussRational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.to_string());
  return arr;
}

}  // namespace

RunConfig RunConfig::parse_text(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  require_keys(doc, "top level",
               {"numerator", "denominator", "operator", "n_values", "grid", "escape_radius",
                "tube_radii", "precision_bits", "tolerances", "probe", "output_dir", "formats"});

  RunConfig cfg;
  if (!doc.contains("numerator") || !doc.contains("denominator") || !doc.contains("operator"))
    throw ConfigError("config: numerator, denominator and operator are required");

  cfg.numerator = parse_exact_array(doc["numerator"], "numerator");

  const json& den = doc["denominator"];
  if (!den.is_object()) throw ConfigError("config: denominator must be an object");
  require_keys(den, "denominator", {"coefficients", "roots"});
  if (den.contains("roots") == den.contains("coefficients"))
    throw ConfigError("config: denominator needs exactly one of 'roots' or 'coefficients'");
  if (den.contains("roots"))
    cfg.denominator_roots = parse_exact_array(den["roots"], "denominator.roots");
  else
    cfg.denominator_coefficients =
        parse_exact_array(den["coefficients"], "denominator.coefficients");

  cfg.operator_coefficients = parse_exact_array(doc["operator"], "operator");

  if (doc.contains("n_values")) {
    if (!doc["n_values"].is_array()) throw ConfigError("config: n_values must be an array");
    cfg.n_values.clear();
    for (const auto& v : doc["n_values"]) {
      if (!v.is_number_unsigned()) throw ConfigError("config: n_values must be non-negative integers");
      cfg.n_values.push_back(v.get<unsigned>());
    }
  }

  if (doc.contains("grid") && !doc["grid"].is_null()) {
    const json& g = doc["grid"];
    require_keys(g, "grid", {"bbox", "nx", "ny"});
    if (!g.contains("bbox") || !g["bbox"].is_array() || g["bbox"].size() != 4)
      throw ConfigError("config: grid.bbox must be [x_min, x_max, y_min, y_max]");
    GridSpec spec;
    spec.bbox = {g["bbox"][0].get<double>(), g["bbox"][1].get<double>(),
                 g["bbox"][2].get<double>(), g["bbox"][3].get<double>()};
    if (spec.bbox.x_min >= spec.bbox.x_max || spec.bbox.y_min >= spec.bbox.y_max)
      throw ConfigError("config: grid.bbox is empty");
    if (g.contains("nx")) spec.nx = g["nx"].get<size_t>();
    if (g.contains("ny")) spec.ny = g["ny"].get<size_t>();
    if (spec.nx < 3 || spec.ny < 3) throw ConfigError("config: grid must be at least 3x3");
    cfg.grid = spec;
  }

  if (doc.contains("escape_radius") && !doc["escape_radius"].is_null()) {
    cfg.escape_radius = doc["escape_radius"].get<double>();
    if (*cfg.escape_radius <= 0) throw ConfigError("config: escape_radius must be positive");
  }

  if (doc.contains("tube_radii") && !doc["tube_radii"].is_null()) {
    cfg.tube_radii.emplace();
    for (const auto& v : doc["tube_radii"]) cfg.tube_radii->push_back(v.get<double>());
  }

  if (doc.contains("precision_bits")) {
    cfg.precision_bits = doc["precision_bits"].get<unsigned>();
    if (cfg.precision_bits < 64 || cfg.precision_bits > 65536)
      throw ConfigError("config: precision_bits out of range [64, 65536]");
  }

  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    require_keys(t, "tolerances", {"root_residual", "vieta_rel", "classify_rel"});
    if (t.contains("root_residual")) cfg.tolerances.root_residual = t["root_residual"].get<double>();
    if (t.contains("vieta_rel")) cfg.tolerances.vieta_rel = t["vieta_rel"].get<double>();
    if (t.contains("classify_rel")) cfg.tolerances.classify_rel = t["classify_rel"].get<double>();
  }

  if (doc.contains("probe") && !doc["probe"].is_null()) {
    const json& p = doc["probe"];
    if (!p.is_array() || p.size() != 2) throw ConfigError("config: probe must be [re, im]");
    cfg.probe = std::complex<double>(p[0].get<double>(), p[1].get<double>());
  }

  if (doc.contains("output_dir")) cfg.output_dir = doc["output_dir"].get<std::string>();

  if (doc.contains("formats")) {
    cfg.formats.clear();
    for (const auto& f : doc["formats"]) {
      std::string s = f.get<std::string>();
      if (s != "csv" && s != "json" && s != "svg")
        throw ConfigError("config: format must be csv, json or svg");
      cfg.formats.push_back(std::move(s));
    }
  }

  return cfg;
}

std::string RunConfig::serialize() const {
  json doc;
  doc["numerator"] = exact_array(numerator);
  json den;
  if (denominator_roots)
    den["roots"] = exact_array(*denominator_roots);
  else
    den["coefficients"] = exact_array(*denominator_coefficients);
  doc["denominator"] = den;
  doc["operator"] = exact_array(operator_coefficients);
  doc["n_values"] = n_values;
  if (grid) {
    doc["grid"] = {{"bbox", {grid->bbox.x_min, grid->bbox.x_max, grid->bbox.y_min, grid->bbox.y_max}},
                   {"nx", grid->nx},
                   {"ny", grid->ny}};
  } else {
    doc["grid"] = nullptr;
  }
  doc["escape_radius"] = escape_radius ? json(*escape_radius) : json(nullptr);
  doc["tube_radii"] = tube_radii ? json(*tube_radii) : json(nullptr);
  doc["precision_bits"] = precision_bits;
  doc["tolerances"] = {{"root_residual", tolerances.root_residual},
                       {"vieta_rel", tolerances.vieta_rel},
                       {"classify_rel", tolerances.classify_rel}};
  doc["probe"] = probe ? json{probe->real(), probe->imag()} : json(nullptr);
  doc["output_dir"] = output_dir;
  doc["formats"] = formats;
  return doc.dump(2) + "\n";
}

RationalFn RunConfig::make_rational_fn() const {
  ExactPoly numer{std::vector<GaussRational>(numerator.begin(), numerator.end())};
  if (denominator_roots) return RationalFn::from_poles(std::move(numer), *denominator_roots);
  return RationalFn(std::move(numer),
                    ExactPoly{std::vector<GaussRational>(denominator_coefficients->begin(),
                                                         denominator_coefficients->end())});
}

OperatorSymbol RunConfig::make_symbol() const {
  return OperatorSymbol(operator_coefficients);
}

}  // namespace voroshire
