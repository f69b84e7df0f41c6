#include "jcr/param_file.hpp"

#include <fstream>
#include <sstream>

#include "jcr/diophantine.hpp"
#include "jcr/error.hpp"

namespace jcr {

namespace {

std::string trim(std::string s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

ParamFile parse_param_file(std::string_view text) {
  ParamFile f;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::usage, "parameter file line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "alpha") {
      f.alpha = Surd::parse(value);
    } else if (key == "beta") {
      f.beta = Surd::parse(value);
    } else if (key == "alpha2") {
      f.alpha_squared = Rational::parse(value);
    } else if (key == "rho") {
      f.rho = Rational::parse(value);
    } else if (key == "t") {
      f.t = Rational::parse(value);
    } else if (key == "n") {
      Rational n = Rational::parse(value);
      if (!n.is_integer() || n.sign() <= 0) throw Error(ErrorCode::usage, "n must be a positive integer");
      f.n = n.numerator().get_ui();
    } else if (key == "y_hz") {
      try {
        f.y_hz = std::stod(value);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::usage, "y_hz is not a number: " + value);
      }
      if (!(*f.y_hz > 0)) throw Error(ErrorCode::domain, "y_hz must be > 0");
    } else {
      throw Error(ErrorCode::usage, "unknown parameter key '" + key + "'");
    }
  }
  return f;
}

ParamFile load_param_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::usage, "cannot open parameter file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_param_file(ss.str());
}

ModelParams resolve_params(const ParamFile& f) {
  ModelParams p;
  if (f.alpha && f.beta) {
    p.alpha = *f.alpha;
    p.beta = *f.beta;
  } else if (f.alpha_squared && f.rho) {
    if (f.alpha_squared->sign() < 0) throw Error(ErrorCode::domain, "alpha2 must be >= 0");
    p.alpha = Surd::sqrt_of(*f.alpha_squared);
    p.beta = Surd(*f.rho) - p.alpha;
  } else if (f.t && f.rho && f.n) {
    p = synthesize_params(*f.t, *f.rho, *f.n).params();
  } else {
    throw Error(ErrorCode::usage, "parameters need alpha+beta, alpha2+rho, or t+rho+n");
  }
  return p;
}

}  // namespace jcr
