#ifndef ORBIKIT_ERRORS_HPP
#define ORBIKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orbikit {

// Malformed input: bad JSON, mismatched groups, non-square matrices, ...
// The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Domain error: a computation cannot proceed on valid-looking input
// (irrational turn in exact mode, oracle bound exceeded, ...).
// The CLI maps this to exit code 3.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Resource error: a configured limit (e.g. the conductor cap) was hit.
class resource_error : public domain_error {
 public:
  explicit resource_error(const std::string& what) : domain_error(what) {}
};

}  // namespace orbikit

#endif
