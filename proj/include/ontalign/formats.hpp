#pragma once

// Text renderings shared by the command-line tool and the tests.
//
// Alignment TSV: optional '#' comment lines echoing the configuration, then
// a header row and one row per pair, sorted by (source, target):
//
//   source  target  shared_ancestors  score  <predicate columns...>
//
// shared_ancestors is a ';'-joined list of "a=b" tokens, score has four
// decimals, and each predicate column holds "true" or "false". Predicate
// columns appear in kPredicateNames order, restricted to the configured
// criteria. Readers only need the first two columns, so a plain two-column
// "source<TAB>target" file is also a valid alignment.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontalign/evaluator.hpp"
#include "ontalign/matcher.hpp"
#include "ontalign/ontology.hpp"
#include "ontalign/taxonomy.hpp"
#include "ontalign/techniques.hpp"

namespace ontalign {

enum class OutputFormat { table, tsv, json };

OutputFormat parse_output_format(std::string_view text);  // throws ConfigError

/// Fixed-point with the given number of decimals, locale independent.
std::string fixed(double value, int decimals = 4);

void write_alignment(std::ostream& out, const Alignment& alignment, OutputFormat format);

/// Accepts alignment TSV or the JSON rendering (detected by a leading '{').
/// Throws FormatError.
PairSet read_alignment_pairs(std::string_view text);

/// Concept pairs in file order, for technique reports. Same TSV rules.
std::vector<ConceptPair> read_pair_list(std::string_view text);

/// One block per concept; empty sets print as "---". SUPC is listed from
/// the root down, other sets by name.
void write_contexts(std::ostream& out, const Ontology& ontology, const ContextTable& table,
                    const std::optional<ConceptId>& only);

void write_matrix(std::ostream& out, const TechniqueMatrix& matrix, OutputFormat format);

void write_metrics(std::ostream& out, const EvalMetrics& metrics, OutputFormat format);

void write_parse_summary(std::ostream& out, const Ontology& ontology);

}  // namespace ontalign
