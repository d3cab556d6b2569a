#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ontalign {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The subclass relation contains at least one cycle.
class CycleError : public Error {
 public:
  explicit CycleError(std::vector<std::vector<std::string>> cycles);

  const std::vector<std::vector<std::string>>& cycles() const { return cycles_; }

 private:
  std::vector<std::vector<std::string>> cycles_;
};

class NotFoundError : public Error {
 public:
  explicit NotFoundError(std::string name);

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class InvalidNameError : public Error {
 public:
  using Error::Error;
};

/// Bad configuration value or mapping entry.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Line-oriented text format violation (lexicon, TSV, mapping files).
class FormatError : public Error {
 public:
  FormatError(const std::string& message, std::size_t line);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ontalign
