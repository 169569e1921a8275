#pragma once

#include <stdexcept>

namespace polyfisher {

/// Thrown when an argument lies outside the mathematical domain of an
/// operation (invalid family parameter, support point, or degree).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace polyfisher
