#ifndef TWISTED_ERRORS_HPP
#define TWISTED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twisted {

// Input that fails structural validation (bad Cayley table, bad file, ...).
// The CLI maps this to exit code 2.
class validation_error : public std::runtime_error {
public:
  validation_error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// A mathematical precondition of an operation is not met (infinite
// Reidemeister number where a finite one is required, reciprocal sum != 1,
// enumeration too large, ...). CLI exit code 3.
class precondition_error : public std::runtime_error {
public:
  precondition_error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

// Two routes that must agree disagreed (e.g. character tables at two
// primes). Signals a bug, not bad input. CLI exit code 4.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace twisted

#endif
