#pragma once

#include <stdexcept>
#include <string>

namespace engel {

// Argument outside a function's mathematical domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Evaluation requested at (or beyond) a pole; location is in the caller's
// argument units (elliptic argument u for quotients, arc length s for
// geodesic charts).
class PoleError : public std::domain_error {
 public:
  PoleError(const std::string& what, double where)
      : std::domain_error(what), location(where) {}
  double location;
};

// A closed-form evaluator received data of a different geodesic case.
class WrongCaseError : public std::runtime_error {
 public:
  WrongCaseError(const std::string& what, std::string detected_case)
      : std::runtime_error(what), detected(std::move(detected_case)) {}
  std::string detected;
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace engel
