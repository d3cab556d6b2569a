#include "ontalign/techniques.hpp"

#include <cctype>
#include <set>

#include "ontalign/errors.hpp"

namespace ontalign {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto at = s.find(sep);
    out.push_back(trim(s.substr(0, at)));
    if (at == std::string_view::npos) return out;
    s.remove_prefix(at + 1);
  }
}

// One line per technique: '|' separates alternatives, ',' joins predicates.
constexpr std::string_view kDefaultMapping = R"(Information Content = direct_super_sim | root_path_sim
OWL Lite Aligner = direct_super_sim | sibling_sim
Anchor Prompt = direct_super_sim | root_path_sim
Similarity Flooding = direct_super_sim | sibling_sim
Proposed Technique = proposed_sim
)";

}  // namespace

TechniqueMapping default_technique_mapping() { return parse_technique_mapping(kDefaultMapping); }

TechniqueMapping parse_technique_mapping(std::string_view text) {
  TechniqueMapping mapping;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw FormatError("expected 'Technique = predicate, ...'", line_no);
    Technique t;
    t.name = std::string(trim(line.substr(0, eq)));
    if (t.name.empty()) throw FormatError("missing technique name", line_no);
    if (!seen.insert(t.name).second) throw ConfigError("technique '" + t.name + "' mapped twice");

    for (const auto alt : split(line.substr(eq + 1), '|')) {
      auto& conj = t.alternatives.emplace_back();
      for (const auto pred : split(alt, ',')) {
        if (pred.empty()) throw FormatError("empty predicate name", line_no);
        if (!is_predicate_name(pred)) {
          throw ConfigError("line " + std::to_string(line_no) + ": unknown predicate '" + std::string(pred) + "'");
        }
        conj.emplace_back(pred);
      }
    }
    mapping.techniques.push_back(std::move(t));
  }
  return mapping;
}

std::string format_technique_mapping(const TechniqueMapping& mapping) {
  std::string out;
  for (const auto& t : mapping.techniques) {
    out += t.name + " =";
    for (std::size_t i = 0; i < t.alternatives.size(); ++i) {
      out += i == 0 ? " " : " | ";
      for (std::size_t j = 0; j < t.alternatives[i].size(); ++j) {
        if (j > 0) out += ", ";
        out += t.alternatives[i][j];
      }
    }
    out += '\n';
  }
  return out;
}

TechniqueMatrix technique_report(const std::vector<ConceptPair>& pairs, const ContextTable& source,
                                 const ContextTable& target, const TechniqueMapping& mapping,
                                 const MatchConfig& cfg) {
  TechniqueMatrix matrix;
  for (const auto& t : mapping.techniques) matrix.techniques.push_back(t.name);
  matrix.pairs = pairs;
  for (const auto& pair : pairs) {
    const auto& a = source.at(pair.source);
    const auto& b = target.at(pair.target);
    auto& row = matrix.cells.emplace_back();
    for (const auto& t : mapping.techniques) {
      bool accepted = false;
      for (const auto& conj : t.alternatives) {
        bool all = true;
        for (const auto& pred : conj) all = all && evaluate_predicate(pred, a, b, cfg);
        accepted = accepted || all;
      }
      row.push_back(accepted);
    }
  }
  return matrix;
}

}  // namespace ontalign
