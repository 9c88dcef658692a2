#ifndef TRACKRECT_ERRORS_HPP
#define TRACKRECT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trackrect {

/// Bad input data: unreadable files, schema violations, inconsistent
/// dimensions, out-of-range parameters. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A broken internal invariant. Maps to CLI exit code 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace trackrect

#endif
