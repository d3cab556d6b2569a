#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontalign/lexicon.hpp"
#include "ontalign/ontology.hpp"
#include "ontalign/taxonomy.hpp"

namespace ontalign {

/// strict: any two concepts whose ancestor sets share an equivalent name.
/// named: additionally the concepts' own names must be equivalent, and two
/// equivalent roots match even though they have no ancestors.
enum class MatchMode { strict, named };

const char* to_string(MatchMode mode);
MatchMode parse_match_mode(std::string_view text);  // throws ConfigError

/// Structural predicates, in canonical column order.
inline constexpr std::array<std::string_view, 7> kPredicateNames = {
    "direct_super_sim", "sibling_sim",   "direct_sub_sim", "descendant_sim",
    "leaf_sim",         "root_path_sim", "proposed_sim",
};

bool is_predicate_name(std::string_view name);

struct ScoreWeights {
  double base = 0.4;
  double sibling = 0.2;
  double sub = 0.2;
  double relation = 0.2;
};

struct MatchConfig {
  MatchMode mode = MatchMode::named;
  std::vector<std::string> criteria{kPredicateNames.begin(), kPredicateNames.end()};
  double tau = 1.0;  // "all" = 1.0; lower values read "most"
  SynonymLexicon lexicon;
  ScoreWeights weights;

  /// Throws ConfigError: tau outside (0, 1], negative weights, weights not
  /// summing to 1 within 1e-9, or unknown criterion names.
  void validate() const;
};

struct ConceptPair {
  ConceptId source;
  ConceptId target;

  friend auto operator<=>(const ConceptPair&, const ConceptPair&) = default;
  friend bool operator==(const ConceptPair&, const ConceptPair&) = default;
};

using PairSet = std::set<ConceptPair>;

struct AlignmentPair {
  ConceptId source;
  ConceptId target;
  PairSet shared_ancestors;
  std::map<std::string, bool> criteria_flags;
  double score = 0.0;
};

struct Alignment {
  std::vector<AlignmentPair> pairs;  // sorted by (source, target), unique
  std::string source_ontology;
  std::string target_ontology;
  MatchConfig config;

  PairSet pair_set() const;
};

/// All (a, b) in supA x supB with equivalent names. Non-empty means the two
/// concepts share at least one super-concept.
PairSet any_super_same(const ConceptSet& sup_a, const ConceptSet& sup_b, const SynonymLexicon& lex);

/// Bidirectional coverage test. Both empty: true. One empty: false.
/// Otherwise the share of each side with an equivalent member on the other
/// side must reach tau.
bool set_similar(const ConceptSet& s1, const ConceptSet& s2, const SynonymLexicon& lex, double tau);

bool direct_super_sim(const ConceptContext& a, const ConceptContext& b, const SynonymLexicon& lex, double tau);
bool sibling_sim(const ConceptContext& a, const ConceptContext& b, const SynonymLexicon& lex, double tau);
bool direct_sub_sim(const ConceptContext& a, const ConceptContext& b, const SynonymLexicon& lex, double tau);
bool descendant_sim(const ConceptContext& a, const ConceptContext& b, const SynonymLexicon& lex, double tau);
bool leaf_sim(const ConceptContext& a, const ConceptContext& b, const SynonymLexicon& lex, double tau);
bool root_path_sim(const ConceptContext& a, const ConceptContext& b, const SynonymLexicon& lex, double tau);

/// Shared super-concept, or (named mode only) both concepts are roots.
/// Reads nothing but the ancestor sets and root status.
bool proposed_sim(const ConceptContext& a, const ConceptContext& b, const SynonymLexicon& lex,
                  MatchMode mode = MatchMode::named);

/// Dispatch by predicate name. Throws ConfigError for an unknown name.
bool evaluate_predicate(std::string_view name, const ConceptContext& a, const ConceptContext& b,
                        const MatchConfig& cfg);

/// Jaccard overlap of the equivalence classes present in each set;
/// 1 when both are empty.
double jaccard(const std::set<std::string>& s1, const std::set<std::string>& s2, const SynonymLexicon& lex);
double jaccard(const ConceptSet& s1, const ConceptSet& s2, const SynonymLexicon& lex);

/// base + sibling*J(sblc) + sub*J(subc) + relation*J(relations).
double rank_score(const ConceptContext& a, const ConceptContext& b, const std::set<std::string>& relations_a,
                  const std::set<std::string>& relations_b, const ScoreWeights& weights,
                  const SynonymLexicon& lex);

/// Exhaustive pairwise scan over both concept sets.
Alignment align(const Ontology& source, const Ontology& target, const MatchConfig& cfg);

/// Same result as align, with candidates drawn from an inverted index keyed
/// by normalized ancestor name (strict) or concept name (named).
Alignment align_indexed(const Ontology& source, const Ontology& target, const MatchConfig& cfg);

}  // namespace ontalign
