#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "voroshire/operator_symbol.hpp"
#include "voroshire/rational_fn.hpp"
#include "voroshire/voronoi.hpp"

namespace voroshire {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSpec {
  BoundingBox bbox;
  size_t nx = 401, ny = 401;
};

struct Tolerances {
  double root_residual = 1e-30;
  double vieta_rel = 1e-25;
  double classify_rel = 1e-9;
};

/// One JSON document drives every subcommand. Exact values travel as
/// rational strings and never pass through floats; unknown keys are
/// rejected; serialize(parse(text)) is canonical and stable.
struct RunConfig {
  std::vector<GaussRational> numerator;  // ascending powers
  std::optional<std::vector<GaussRational>> denominator_coefficients;
  std::optional<std::vector<GaussRational>> denominator_roots;
  std::vector<GaussRational> operator_coefficients;  // c_0..c_m
  std::vector<unsigned> n_values{1};
  std::optional<GridSpec> grid;
  std::optional<double> escape_radius;
  std::optional<std::vector<double>> tube_radii;
  unsigned precision_bits = 256;
  Tolerances tolerances;
  std::optional<std::complex<double>> probe;
  std::string output_dir = "out";
  std::vector<std::string> formats{"csv", "json", "svg"};

  static RunConfig parse_text(const std::string& json_text);  // throws ConfigError
  std::string serialize() const;

  RationalFn make_rational_fn() const;  // exact poles attached when roots were given
  OperatorSymbol make_symbol() const;
};

}  // namespace voroshire
