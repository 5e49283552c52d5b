// SPDX-License-Identifier: Apache-2.0
#include "opslicer/error.hpp"

#include <utility>

namespace opslicer {

namespace {

std::string path_text(const std::vector<std::size_t>& path) {
  std::string out = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(path[i]);
  }
  return out + "]";
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
            message),
      line_(line),
      column_(column),
      detail_(message) {}

BoundaryError::BoundaryError(std::vector<std::size_t> path, std::string left, std::string right)
    : Error("incompatible boundaries at path " + path_text(path) + ": " + left + " vs " + right),
      path_(std::move(path)),
      left_(std::move(left)),
      right_(std::move(right)) {}

}  // namespace opslicer
