#pragma once

// Minimal non-validating XML reader producing an element tree.
//
// Handles the XML declaration, comments, processing instructions, CDATA,
// character and predefined entity references, and general entities declared
// in a DOCTYPE internal subset (the common `<!ENTITY owl "...">` idiom in
// OWL files). Text content is kept per element; mixed content order is not.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ontalign::xml {

struct Attribute {
  std::string name;
  std::string value;
};

struct Element {
  std::string name;  // qualified name as written, e.g. "owl:Class"
  std::vector<Attribute> attributes;
  std::vector<Element> children;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;

  const std::string* attribute(std::string_view qname) const;
};

struct Document {
  Element root;
};

/// Throws ParseError with the 1-based line/column of the first violation.
Document parse(std::string_view text);

/// Splits "prefix:local" into its parts; prefix is empty when absent.
std::pair<std::string_view, std::string_view> split_qname(std::string_view qname);

}  // namespace ontalign::xml
