#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hirz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A rational function in y has a genuine pole at y = -1.
class NotPolynomial : public Error {
 public:
  using Error::Error;
};

class UnsupportedMap : public Error {
 public:
  using Error::Error;
};

class MissingLogStructure : public Error {
 public:
  using Error::Error;
};

/// Syntax error in an expression, polynomial or space description.
/// `position` is 1-based; one past the last character means end of input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& what)
      : Error(format(position, expected, what)), position_(position), expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string format(std::size_t position, const std::vector<std::string>& expected,
                            const std::string& what) {
    std::string msg = "parse error at offset " + std::to_string(position) + ": " + what;
    if (!expected.empty()) {
      msg += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += ", ";
        msg += expected[i];
      }
      msg += ")";
    }
    return msg;
  }

  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace hirz
