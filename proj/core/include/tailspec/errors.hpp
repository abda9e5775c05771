#pragma once

#include <stdexcept>
#include <string>

namespace tailspec {

/// Failure of an iterative numeric procedure (iteration cap, persistent
/// ill-conditioning). Input validation uses std::invalid_argument.
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tailspec
