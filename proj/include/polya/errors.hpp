#pragma once

#include <stdexcept>
#include <string>

namespace polya {

/// Base class for all errors thrown by this library.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input: cycle notation, group specs, compositions.
struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

/// A requested computation exceeds a configured size cap.
struct limit_error : error {
  explicit limit_error(const std::string& what) : error(what) {}
};

}  // namespace polya
