#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpl/algebra/serialize.hpp"
#include "cpl/quiver/exchange_matrix.hpp"

namespace cpl::cli {

using algebra::Json;

enum class Mode { Rational, Symbolic, Tropical };
enum class Format { Json, Csv };

/// "ones", "random(seed,bound)", "random" (uses the global seed) or a
/// comma-separated list of rationals.
struct InitSpec {
  enum class Kind { Ones, Random, Values } kind = Kind::Ones;
  std::optional<std::uint64_t> seed;
  unsigned long bound = 9;
  std::vector<BigRational> values;

  std::string to_string() const;
};

/// Throws Errc::ConfigInvalid.
InitSpec parse_init(const std::string& text);

/// n values; Random gives p/q with 1 <= p, q <= bound from a 64-bit Mersenne
/// twister, reduced by modulo so the stream is platform independent.
/// Errc::ConfigInvalid when explicit values have the wrong count.
std::vector<BigRational> realize(const InitSpec& spec, std::size_t n, std::uint64_t default_seed);

struct ExperimentConfig {
  /// run-t, run-tz, run-y, run-qp1, reduce, zsys, entropy, linrel.
  std::string command;
  std::optional<std::string> preset;
  std::optional<quiver::PalindromicTuple> tuple;
  Mode mode = Mode::Rational;
  InitSpec init;
  std::size_t steps = 12;
  std::optional<InitSpec> z_init;
  std::uint64_t seed = 1;
  std::string out_dir;
  Format format = Format::Json;
  /// run-qp1.
  BigRational beta = 1, q = 1;
  /// linrel.
  std::string orbit_path;
  std::vector<std::size_t> offsets;
  std::size_t train = 4, verify = 30;

  /// Errc::ConfigInvalid listing the first problem.
  void validate() const;
  /// Tuple from the preset or the explicit tuple.
  quiver::PalindromicTuple resolved_tuple() const;
  /// Matrix from the preset fixture, otherwise built from the tuple.
  quiver::ExchangeMatrix resolved_matrix() const;
  std::string system_name() const;
};

Json to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const Json& j);

Mode parse_mode(const std::string& s);
Format parse_format(const std::string& s);
std::string to_string(Mode m);

}  // namespace cpl::cli
