#ifndef FRPOISSON_ERROR_HPP
#define FRPOISSON_ERROR_HPP

#include <stdexcept>
#include <string>

namespace frpoisson {

// A violated contract of one of the engine operations (bad inputs, points off
// a locus, non-invertible data, ...). The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class ParseError : public DomainError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : DomainError("parse", message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace frpoisson

#endif
