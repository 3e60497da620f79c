#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cpl/algebra/serialize.hpp"
#include "cpl/quiver/exchange_matrix.hpp"

namespace cpl::cli {

using algebra::Json;

/// A named system: the tuple and the exchange matrix are stored independently,
/// so the builder can be checked against the fixture.
struct Preset {
  std::string name;
  std::string description;
  std::string provenance;
  quiver::PalindromicTuple tuple;
  quiver::ExchangeMatrix matrix;
};

/// Names of the embedded fixtures, sorted.
std::vector<std::string> preset_names();
/// Throws Errc::ConfigInvalid for an unknown name.
Preset load_preset(std::string_view name);
/// Raw JSON text of an embedded fixture.
std::string_view preset_source(std::string_view name);
/// Throws Errc::ConfigInvalid on missing fields; matrix errors propagate
/// (Errc::NotSkewSymmetric).
Preset preset_from_json(const Json& j);
Json to_json(const Preset& p);

struct PresetCheck {
  std::string name;
  bool period1 = false;
  bool builder_matches = false;
  bool tuple_matches = false;
  /// First failing relation or mismatch.
  std::string witness;

  bool ok() const { return period1 && builder_matches && tuple_matches; }
};

/// is_period1 on the stored matrix and round trip through build_from_tuple.
PresetCheck check_preset(const Preset& p);

}  // namespace cpl::cli
