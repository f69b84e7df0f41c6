#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "jcr/jc_model.hpp"

namespace jcr {

/// Contents of a "key = value" parameter file. Recognized keys: alpha, beta,
/// alpha2, rho, t, n, y_hz. '#' starts a comment.
struct ParamFile {
  std::optional<Surd> alpha;
  std::optional<Surd> beta;
  std::optional<Rational> alpha_squared;
  std::optional<Rational> rho;
  std::optional<Rational> t;
  std::optional<std::uint64_t> n;
  std::optional<double> y_hz;
};

ParamFile parse_param_file(std::string_view text);
ParamFile load_param_file(const std::string& path);

/// Resolves one of the accepted parameter sets into (alpha, beta):
///   alpha + beta | alpha2 + rho (alpha >= 0) | t + rho + n (synthesized).
ModelParams resolve_params(const ParamFile& f);

}  // namespace jcr
