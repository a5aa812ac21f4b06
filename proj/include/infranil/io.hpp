#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <infranil/crystal.hpp>
#include <infranil/errors.hpp>

namespace infranil {

struct ParsedInput {
  CrystalGroup group;
  SelfMapData map;
};

namespace detail {

inline Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ValidationError("rational entries must be integers or \"p/q\" strings");
}

inline std::vector<Rational> vector_from_json(const nlohmann::json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim)
    throw ValidationError("translation must be an array of length " + std::to_string(dim));
  std::vector<Rational> out(dim);
  for (std::size_t i = 0; i < dim; ++i) out[i] = rational_from_json(j[i]);
  return out;
}

inline RatMatrix matrix_from_json(const nlohmann::json& j, std::size_t dim) {
  if (j.is_string()) {
    if (j.get<std::string>() == "identity") return RatMatrix::identity(dim);
    throw ValidationError("linear part string must be \"identity\"");
  }
  if (!j.is_array() || j.size() != dim)
    throw ValidationError("linear part must be a " + std::to_string(dim) + "x" +
                          std::to_string(dim) + " matrix");
  RatMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!j[i].is_array() || j[i].size() != dim)
      throw ValidationError("linear part must be a " + std::to_string(dim) + "x" +
                            std::to_string(dim) + " matrix");
    for (std::size_t c = 0; c < dim; ++c) m(i, c) = rational_from_json(j[i][c]);
  }
  return m;
}

inline AffineElement affine_from_json(const nlohmann::json& j, std::size_t dim) {
  if (!j.is_object() || !j.contains("translation") || !j.contains("linear"))
    throw ValidationError("affine elements need \"translation\" and \"linear\" fields");
  return AffineElement(vector_from_json(j["translation"], dim), matrix_from_json(j["linear"], dim));
}

}  // namespace detail

inline ParsedInput parse_input(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ValidationError("input document must be a JSON object");
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
    throw ValidationError("missing integer field \"dimension\"");
  const long dim_raw = doc["dimension"].get<long>();
  if (dim_raw <= 0) throw ValidationError("dimension must be positive");
  const std::size_t dim = static_cast<std::size_t>(dim_raw);

  std::vector<AffineElement> lattice_generators;
  if (doc.contains("lattice_generators")) {
    if (!doc["lattice_generators"].is_array())
      throw ValidationError("\"lattice_generators\" must be an array");
    for (const auto& entry : doc["lattice_generators"])
      lattice_generators.push_back(detail::affine_from_json(entry, dim));
  }

  std::vector<AffineElement> holonomy_lifts;
  if (doc.contains("holonomy_lifts")) {
    if (!doc["holonomy_lifts"].is_array()) throw ValidationError("\"holonomy_lifts\" must be an array");
    for (const auto& entry : doc["holonomy_lifts"])
      holonomy_lifts.push_back(detail::affine_from_json(entry, dim));
  }

  std::size_t closure_bound = kDefaultClosureBound;
  if (doc.contains("closure_bound")) {
    if (!doc["closure_bound"].is_number_integer() || doc["closure_bound"].get<long>() <= 0)
      throw ValidationError("\"closure_bound\" must be a positive integer");
    closure_bound = doc["closure_bound"].get<std::size_t>();
  }

  if (!doc.contains("map")) throw ValidationError("missing field \"map\"");
  const AffineElement lift = detail::affine_from_json(doc["map"], dim);

  std::optional<std::vector<AffineElement>> images;
  if (doc.contains("fstar_lattice_images")) {
    if (!doc["fstar_lattice_images"].is_array())
      throw ValidationError("\"fstar_lattice_images\" must be an array");
    images.emplace();
    for (const auto& entry : doc["fstar_lattice_images"])
      images->push_back(detail::affine_from_json(entry, dim));
  }

  ParsedInput parsed{make_crystal_group(dim, lattice_generators, holonomy_lifts, closure_bound), {}};
  const std::vector<AffineElement>* gen_ptr =
      lattice_generators.empty() ? nullptr : &lattice_generators;
  parsed.map = make_self_map(parsed.group, lift, std::move(images), gen_ptr);
  return parsed;
}

inline ParsedInput parse_input_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ValidationError(std::string("invalid JSON: ") + err.what());
  }
  return parse_input(doc);
}

inline ParsedInput parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_input_text(text);
}

}  // namespace infranil
