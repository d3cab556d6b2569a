#pragma once

// Comparison of matching techniques over chosen concept pairs.
//
// A technique is approximated by structural predicates. Its rule is a list
// of alternatives; each alternative is a conjunction of predicates, and the
// technique accepts a pair when any alternative holds. In the mapping file:
//
//   # comment
//   Technique Name = pred_a, pred_b | pred_c
//
// reads "(pred_a and pred_b) or pred_c". Column order follows the file.

#include <string>
#include <string_view>
#include <vector>

#include "ontalign/matcher.hpp"
#include "ontalign/taxonomy.hpp"

namespace ontalign {

struct Technique {
  std::string name;
  std::vector<std::vector<std::string>> alternatives;
};

struct TechniqueMapping {
  std::vector<Technique> techniques;
};

/// The built-in approximation of the four baseline systems plus the
/// shared-super-concept criterion.
TechniqueMapping default_technique_mapping();

/// Throws FormatError for malformed lines, ConfigError for unknown
/// predicates or duplicate technique names.
TechniqueMapping parse_technique_mapping(std::string_view text);

std::string format_technique_mapping(const TechniqueMapping& mapping);

struct TechniqueMatrix {
  std::vector<std::string> techniques;
  std::vector<ConceptPair> pairs;
  std::vector<std::vector<bool>> cells;  // cells[pair][technique]
};

/// Throws NotFoundError when a pair names a concept missing from its table.
TechniqueMatrix technique_report(const std::vector<ConceptPair>& pairs, const ContextTable& source,
                                 const ContextTable& target, const TechniqueMapping& mapping,
                                 const MatchConfig& cfg);

}  // namespace ontalign
