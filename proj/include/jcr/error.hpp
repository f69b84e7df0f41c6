#pragma once

#include <stdexcept>
#include <string>

namespace jcr {

enum class ErrorCode {
  usage,                // malformed input text, empty lists, bad flags
  domain,               // mathematically invalid argument (negative sqrt, t = +-1, ...)
  factorization_limit,  // squarefree extraction could not certify a residue
  unsupported,          // parameters outside the closed-form machinery (alpha^2 irrational)
  single_level,         // fewer than two distinct levels
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jcr
