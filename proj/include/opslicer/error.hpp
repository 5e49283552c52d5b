// SPDX-License-Identifier: Apache-2.0
#ifndef OPSLICER_ERROR_HPP
#define OPSLICER_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace opslicer {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

// Pasting diagrams that cannot be glued along a shared boundary.
class BoundaryError : public Error {
 public:
  BoundaryError(std::vector<std::size_t> path, std::string left, std::string right);
  const std::vector<std::size_t>& path() const { return path_; }
  const std::string& left() const { return left_; }
  const std::string& right() const { return right_; }

 private:
  std::vector<std::size_t> path_;
  std::string left_;
  std::string right_;
};

// A well-formed input that violates a precondition of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Unknown catalog key or undeclared name.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace opslicer

#endif  // OPSLICER_ERROR_HPP
