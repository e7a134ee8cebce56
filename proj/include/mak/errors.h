#ifndef MAK_ERRORS_H_
#define MAK_ERRORS_H_

#include <stdexcept>
#include <string>

namespace mak {

// Malformed instance, bad arguments, or a solver applied outside its
// precondition (wrong rule, profile class not satisfied, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured state-space cap would be exceeded.
class SizeError : public std::runtime_error {
 public:
  SizeError(std::string cap, const std::string& detail)
      : std::runtime_error("cap '" + cap + "' exceeded: " + detail),
        cap_(std::move(cap)) {}

  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

// Broken internal invariant. Should never be observed by callers.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mak

#endif  // MAK_ERRORS_H_
