#pragma once

#include <stdexcept>
#include <string>

namespace arsite {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a mathematical precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace arsite
