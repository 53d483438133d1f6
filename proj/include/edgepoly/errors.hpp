#ifndef EDGEPOLY_ERRORS_HPP
#define EDGEPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edgepoly {

/// Malformed or out-of-contract input (bad vertex, loop edge, length mismatch, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input exceeds a configured size cap (enumeration, oracle, search limits).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace edgepoly

#endif  // EDGEPOLY_ERRORS_HPP
