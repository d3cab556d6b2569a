#include "ontalign/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "ontalign/errors.hpp"

namespace ontalign {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string normalize(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (const char c : name) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isspace(u) || c == '_') continue;
    out += static_cast<char>(std::tolower(u));
  }
  if (out.empty()) throw InvalidNameError("name is empty after normalization: '" + std::string(name) + "'");
  return out;
}

std::vector<std::string> camel_tokens(std::string_view name) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::exchange(current, {}));
  };
  for (std::size_t i = 0; i < name.size(); ++i) {
    const auto u = static_cast<unsigned char>(name[i]);
    if (std::isspace(u) || name[i] == '_' || name[i] == '-') {
      flush();
      continue;
    }
    if (std::isupper(u) && !current.empty()) {
      const bool prev_lower = std::islower(static_cast<unsigned char>(name[i - 1])) ||
                              std::isdigit(static_cast<unsigned char>(name[i - 1]));
      const bool next_lower = i + 1 < name.size() && std::islower(static_cast<unsigned char>(name[i + 1]));
      // "HECStudent" splits as HEC|Student.
      if (prev_lower || next_lower) flush();
    }
    current += static_cast<char>(std::tolower(u));
  }
  flush();
  return tokens;
}

SynonymLexicon SynonymLexicon::from_groups(const std::vector<std::vector<std::string>>& groups) {
  // Union-find over terms.
  std::map<std::string, std::size_t> index;
  std::vector<std::size_t> parent;
  auto id_of = [&](const std::string& term) {
    auto [it, inserted] = index.emplace(term, parent.size());
    if (inserted) parent.push_back(parent.size());
    return it->second;
  };
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& group : groups) {
    std::optional<std::size_t> first;
    for (const auto& raw : group) {
      const auto term = normalize(raw);
      const auto id = id_of(term);
      if (!first) {
        first = id;
      } else {
        parent[find(id)] = find(*first);
      }
    }
  }

  std::map<std::size_t, std::set<std::string>> merged;
  for (const auto& [term, id] : index) merged[find(id)].insert(term);

  SynonymLexicon lex;
  for (auto& [root, terms] : merged) {
    if (terms.size() < 2) continue;
    for (const auto& t : terms) lex.canonical_.emplace(t, *terms.begin());
    lex.groups_.push_back(std::move(terms));
  }
  std::sort(lex.groups_.begin(), lex.groups_.end());
  return lex;
}

SynonymLexicon SynonymLexicon::with_token_matching(bool on) const {
  SynonymLexicon copy = *this;
  copy.token_matching_ = on;
  return copy;
}

std::string SynonymLexicon::key(std::string_view name) const {
  const auto norm = normalize(name);
  if (auto it = canonical_.find(norm); it != canonical_.end()) return it->second;
  if (!token_matching_) return norm;
  auto tokens = camel_tokens(name);
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  // Space-joined, so it cannot collide with a whitespace-free normalized term
  // unless the name is a single token, in which case both agree.
  std::string joined;
  for (const auto& t : tokens) {
    if (!joined.empty()) joined += ' ';
    joined += t;
  }
  return joined;
}

bool equivalent(std::string_view a, std::string_view b, const SynonymLexicon& lex) {
  return lex.key(a) == lex.key(b);
}

SynonymLexicon load_lexicon(std::string_view source_text) {
  std::vector<std::vector<std::string>> groups;
  std::size_t line_no = 0;
  while (!source_text.empty()) {
    const auto nl = source_text.find('\n');
    std::string_view line = source_text.substr(0, nl);
    source_text = nl == std::string_view::npos ? std::string_view{} : source_text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string> terms;
    while (true) {
      const auto comma = line.find(',');
      const auto term = trim(line.substr(0, comma));
      if (!term.empty()) {
        try {
          terms.push_back(normalize(term));
        } catch (const InvalidNameError&) {
          throw FormatError("empty synonym term", line_no);
        }
      }
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (terms.size() < 2) throw FormatError("a synonym group needs at least two terms", line_no);
    groups.push_back(std::move(terms));
  }
  return SynonymLexicon::from_groups(groups);
}

}  // namespace ontalign
