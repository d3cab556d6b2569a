#include "ontalign/errors.hpp"

namespace ontalign {

namespace {

std::string located(const std::string& message, std::size_t line, std::size_t column) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

std::string describe_cycles(const std::vector<std::vector<std::string>>& cycles) {
  std::string out = "subclass cycle";
  out += cycles.size() == 1 ? ": " : "s: ";
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (i > 0) out += "; ";
    for (const auto& name : cycles[i]) out += name + " -> ";
    if (!cycles[i].empty()) out += cycles[i].front();
  }
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(located(message, line, column)), line_(line), column_(column) {}

CycleError::CycleError(std::vector<std::vector<std::string>> cycles)
    : Error(describe_cycles(cycles)), cycles_(std::move(cycles)) {}

NotFoundError::NotFoundError(std::string name)
    : Error("unknown concept '" + name + "'"), name_(std::move(name)) {}

FormatError::FormatError(const std::string& message, std::size_t line)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace ontalign
