#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ontalign {

/// Case-folds and removes whitespace and underscores:
/// "HEC_Student" -> "hecstudent". Throws InvalidNameError when nothing is left.
std::string normalize(std::string_view name);

/// Lower-cased camel-case/underscore tokens: "BookChapter" -> {book, chapter}.
std::vector<std::string> camel_tokens(std::string_view name);

/// Disjoint groups of mutually equivalent, normalized terms.
///
/// Names compare through a canonical key: the smallest member of the
/// term's synonym group, or the normalized name itself. With token matching
/// enabled, names outside the lexicon compare by their sorted camel-case
/// token set instead, so "BookChapter" matches "ChapterBook".
class SynonymLexicon {
 public:
  SynonymLexicon() = default;

  /// Groups that share a term are merged. Throws InvalidNameError for
  /// empty terms.
  static SynonymLexicon from_groups(const std::vector<std::vector<std::string>>& groups);

  const std::vector<std::set<std::string>>& groups() const { return groups_; }
  bool empty() const { return groups_.empty(); }

  std::string key(std::string_view name) const;

  bool token_matching() const { return token_matching_; }
  SynonymLexicon with_token_matching(bool on) const;

 private:
  std::vector<std::set<std::string>> groups_;
  std::map<std::string, std::string, std::less<>> canonical_;  // term -> group representative
  bool token_matching_ = false;
};

bool equivalent(std::string_view a, std::string_view b, const SynonymLexicon& lex);

/// One group per non-comment line: "term, term, ...". '#' starts a comment
/// line; blank lines are skipped. Throws FormatError for a line with fewer
/// than two terms.
SynonymLexicon load_lexicon(std::string_view source_text);

}  // namespace ontalign
