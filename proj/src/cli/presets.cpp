#include "cpl/cli/presets.hpp"

#include <algorithm>

#include "cpl/algebra/error.hpp"

namespace cpl::cli {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_presets();
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(Errc::ConfigInvalid, std::string("preset is missing field \"") + key + "\"");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw Error(Errc::ConfigInvalid, std::string("preset field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [name, body] : detail::embedded_presets()) out.emplace_back(name);
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view preset_source(std::string_view name) {
  for (const auto& [n, body] : detail::embedded_presets())
    if (n == name) return body;
  std::string known;
  for (const auto& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
  throw Error(Errc::ConfigInvalid, "unknown preset \"" + std::string(name) + "\" (known: " + known + ")");
}

Preset load_preset(std::string_view name) {
  Json j;
  try {
    j = Json::parse(preset_source(name));
  } catch (const Json::parse_error& e) {
    throw Error(Errc::ConfigInvalid, "embedded preset " + std::string(name) + " is not valid JSON: " + e.what());
  }
  return preset_from_json(j);
}

Preset preset_from_json(const Json& j) {
  std::vector<long> tuple;
  try {
    tuple = field(j, "tuple").get<std::vector<long>>();
  } catch (const Json::exception&) {
    throw Error(Errc::ConfigInvalid, "preset tuple must be an array of integers");
  }
  const Json& m = field(j, "matrix");
  const Json& rows = field(m, "rows");
  algebra::IntMatrix b = algebra::matrix_from_json(rows);
  if (m.contains("n") && m.at("n").get<std::size_t>() != b.rows())
    throw Error(Errc::ConfigInvalid, "preset matrix size field disagrees with its rows");
  return Preset{string_field(j, "name"), j.value("description", ""), j.value("provenance", ""),
                quiver::PalindromicTuple(std::move(tuple)), quiver::ExchangeMatrix(std::move(b))};
}

Json to_json(const Preset& p) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < p.matrix.n(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < p.matrix.n(); ++k) row.push_back(algebra::to_long(p.matrix(i, k)));
    rows.push_back(row);
  }
  return Json{{"name", p.name},
              {"description", p.description},
              {"provenance", p.provenance},
              {"tuple", p.tuple.values()},
              {"matrix", Json{{"n", p.matrix.n()}, {"rows", rows}}}};
}

PresetCheck check_preset(const Preset& p) {
  PresetCheck c;
  c.name = p.name;
  auto rep = quiver::check_period1(p.matrix);
  c.period1 = rep.period1;
  if (!rep.period1) c.witness = rep.witness;
  if (p.tuple.order() == p.matrix.n()) {
    c.builder_matches = quiver::build_from_tuple(p.tuple) == p.matrix;
    if (!c.builder_matches && c.witness.empty()) c.witness = "build_from_tuple differs from the stored matrix";
  } else if (c.witness.empty()) {
    c.witness = "tuple order differs from matrix size";
  }
  c.tuple_matches = p.matrix.first_row() == p.tuple.values();
  if (!c.tuple_matches && c.witness.empty()) c.witness = "first row differs from the tuple";
  return c;
}

}  // namespace cpl::cli
