#include "ontalign/formats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

#include "ontalign/errors.hpp"
#include "ontalign/lexicon.hpp"

namespace ontalign {

using nlohmann::json;

OutputFormat parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::table;
  if (text == "tsv") return OutputFormat::tsv;
  if (text == "json") return OutputFormat::json;
  throw ConfigError("unknown format '" + std::string(text) + "' (expected table, tsv or json)");
}

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

namespace {

std::string shortest(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> ordered_criteria(const MatchConfig& cfg) {
  std::vector<std::string> out;
  for (const auto name : kPredicateNames) {
    if (std::find(cfg.criteria.begin(), cfg.criteria.end(), name) != cfg.criteria.end()) {
      out.emplace_back(name);
    }
  }
  return out;
}

std::string weights_text(const ScoreWeights& w) {
  return join({shortest(w.base), shortest(w.sibling), shortest(w.sub), shortest(w.relation)}, ",");
}

std::string shared_text(const PairSet& shared) {
  std::vector<std::string> tokens;
  for (const auto& p : shared) tokens.push_back(p.source.str() + "=" + p.target.str());
  return join(tokens, ";");
}

double rounded(double value) { return std::round(value * 1e4) / 1e4; }

json config_json(const MatchConfig& cfg) {
  return json{{"mode", to_string(cfg.mode)},
              {"criteria", ordered_criteria(cfg)},
              {"tau", cfg.tau},
              {"weights", {cfg.weights.base, cfg.weights.sibling, cfg.weights.sub, cfg.weights.relation}},
              {"synonym_groups", cfg.lexicon.groups().size()},
              {"token_matching", cfg.lexicon.token_matching()}};
}

void write_config_comments(std::ostream& out, const Alignment& a) {
  const auto& cfg = a.config;
  out << "# source_ontology: " << a.source_ontology << '\n'
      << "# target_ontology: " << a.target_ontology << '\n'
      << "# mode: " << to_string(cfg.mode) << '\n'
      << "# criteria: " << join(ordered_criteria(cfg), ",") << '\n'
      << "# tau: " << shortest(cfg.tau) << '\n'
      << "# weights: " << weights_text(cfg.weights) << '\n'
      << "# synonym_groups: " << cfg.lexicon.groups().size() << '\n'
      << "# token_matching: " << (cfg.lexicon.token_matching() ? "true" : "false") << '\n';
}

// Display width in code points, which is enough for names and check marks.
std::size_t width(std::string_view s) {
  std::size_t n = 0;
  for (const char c : s) n += (static_cast<unsigned char>(c) & 0xC0) != 0x80 ? 1 : 0;
  return n;
}

void write_grid(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], width(row[i]));
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(widths[i] - width(row[i]) + 2, ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<ConceptPair> read_tsv_pairs(std::string_view text) {
  std::vector<ConceptPair> out;
  std::size_t line_no = 0;
  bool header_allowed = true;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw FormatError("expected tab-separated source and target", line_no);
    const auto source = trim(line.substr(0, tab));
    auto rest = line.substr(tab + 1);
    const auto target = trim(rest.substr(0, rest.find('\t')));
    if (header_allowed && source == "source" && target == "target") {
      header_allowed = false;
      continue;
    }
    header_allowed = false;
    if (source.empty() || target.empty()) throw FormatError("empty concept name", line_no);
    out.push_back({ConceptId(std::string(source)), ConceptId(std::string(target))});
  }
  return out;
}

}  // namespace

void write_alignment(std::ostream& out, const Alignment& alignment, OutputFormat format) {
  const auto criteria = ordered_criteria(alignment.config);
  switch (format) {
    case OutputFormat::json: {
      json pairs = json::array();
      for (const auto& p : alignment.pairs) {
        json shared = json::array();
        for (const auto& s : p.shared_ancestors) shared.push_back({s.source.str(), s.target.str()});
        json flags = json::object();
        for (const auto& [name, value] : p.criteria_flags) flags[name] = value;
        pairs.push_back({{"source", p.source.str()},
                         {"target", p.target.str()},
                         {"shared_ancestors", std::move(shared)},
                         {"score", rounded(p.score)},
                         {"criteria", std::move(flags)}});
      }
      const json doc{{"source_ontology", alignment.source_ontology},
                     {"target_ontology", alignment.target_ontology},
                     {"config", config_json(alignment.config)},
                     {"pairs", std::move(pairs)}};
      out << doc.dump(2) << '\n';
      return;
    }
    case OutputFormat::tsv: {
      write_config_comments(out, alignment);
      out << "source\ttarget\tshared_ancestors\tscore";
      for (const auto& c : criteria) out << '\t' << c;
      out << '\n';
      for (const auto& p : alignment.pairs) {
        out << p.source.str() << '\t' << p.target.str() << '\t' << shared_text(p.shared_ancestors) << '\t'
            << fixed(p.score);
        for (const auto& c : criteria) out << '\t' << (p.criteria_flags.at(c) ? "true" : "false");
        out << '\n';
      }
      return;
    }
    case OutputFormat::table: {
      const auto& cfg = alignment.config;
      out << "alignment " << alignment.source_ontology << " -> " << alignment.target_ontology << ": "
          << alignment.pairs.size() << " pair" << (alignment.pairs.size() == 1 ? "" : "s") << '\n'
          << "mode " << to_string(cfg.mode) << ", tau " << shortest(cfg.tau) << ", weights "
          << weights_text(cfg.weights) << ", synonym groups " << cfg.lexicon.groups().size() << "\n\n";
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> header{"source", "target", "score"};
      header.insert(header.end(), criteria.begin(), criteria.end());
      header.emplace_back("shared ancestors");
      rows.push_back(std::move(header));
      for (const auto& p : alignment.pairs) {
        std::vector<std::string> row{p.source.str(), p.target.str(), fixed(p.score)};
        for (const auto& c : criteria) row.emplace_back(p.criteria_flags.at(c) ? "Y" : "N");
        row.push_back(shared_text(p.shared_ancestors));
        rows.push_back(std::move(row));
      }
      write_grid(out, rows);
      return;
    }
  }
}

PairSet read_alignment_pairs(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    try {
      const auto doc = json::parse(text);
      PairSet out;
      for (const auto& p : doc.at("pairs")) {
        out.insert({ConceptId(p.at("source").get<std::string>()), ConceptId(p.at("target").get<std::string>())});
      }
      return out;
    } catch (const json::exception& e) {
      throw FormatError(std::string("bad alignment JSON: ") + e.what(), 1);
    } catch (const InvalidNameError& e) {
      throw FormatError(e.what(), 1);
    }
  }
  const auto list = read_tsv_pairs(text);
  return PairSet(list.begin(), list.end());
}

std::vector<ConceptPair> read_pair_list(std::string_view text) { return read_tsv_pairs(text); }

void write_contexts(std::ostream& out, const Ontology& ontology, const ContextTable& table,
                    const std::optional<ConceptId>& only) {
  const auto depth = depths(ontology);
  const auto names = [](const auto& concepts) {
    std::vector<std::string> parts;
    for (const auto& c : concepts) parts.push_back(c.str());
    return parts.empty() ? std::string("---") : join(parts, ", ");
  };

  out << "ontology: " << ontology.id() << '\n' << "concepts: " << ontology.concepts().size() << '\n';
  const auto block = [&](const ConceptContext& ctx) {
    out << '\n'
        << "concept: " << ctx.id.str() << '\n'
        << "  SUPC: " << names(order_by_depth(ctx.supc, depth)) << '\n'
        << "  SUBC: " << names(ctx.subc) << '\n'
        << "  SBLC: " << names(ctx.sblc) << '\n'
        << "  direct supers: " << names(ctx.direct_supers) << '\n'
        << "  direct subs: " << names(ctx.direct_subs) << '\n'
        << "  leaves: " << names(ctx.leaves) << '\n';
  };
  if (only) {
    block(table.at(*only));
  } else {
    for (const auto& [c, ctx] : table.contexts()) block(ctx);
  }
}

void write_matrix(std::ostream& out, const TechniqueMatrix& matrix, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      json rows = json::array();
      for (std::size_t i = 0; i < matrix.pairs.size(); ++i) {
        json cells = json::array();
        for (const bool b : matrix.cells[i]) cells.push_back(b ? "Y" : "N");
        rows.push_back({{"source", matrix.pairs[i].source.str()},
                        {"target", matrix.pairs[i].target.str()},
                        {"cells", std::move(cells)}});
      }
      out << json{{"techniques", matrix.techniques}, {"rows", std::move(rows)}}.dump(2) << '\n';
      return;
    }
    case OutputFormat::tsv: {
      out << "source\ttarget";
      for (const auto& t : matrix.techniques) out << '\t' << t;
      out << '\n';
      for (std::size_t i = 0; i < matrix.pairs.size(); ++i) {
        out << matrix.pairs[i].source.str() << '\t' << matrix.pairs[i].target.str();
        for (const bool b : matrix.cells[i]) out << '\t' << (b ? "Y" : "N");
        out << '\n';
      }
      return;
    }
    case OutputFormat::table: {
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> header{"Concepts (Ci, Cj)"};
      header.insert(header.end(), matrix.techniques.begin(), matrix.techniques.end());
      rows.push_back(std::move(header));
      for (std::size_t i = 0; i < matrix.pairs.size(); ++i) {
        std::vector<std::string> row{"(" + matrix.pairs[i].source.str() + ", " + matrix.pairs[i].target.str() + ")"};
        for (const bool b : matrix.cells[i]) row.emplace_back(b ? "✓" : "✗");
        rows.push_back(std::move(row));
      }
      write_grid(out, rows);
      return;
    }
  }
}

void write_metrics(std::ostream& out, const EvalMetrics& m, OutputFormat format) {
  if (format == OutputFormat::json) {
    const json doc{{"precision", rounded(m.precision)},
                   {"recall", rounded(m.recall)},
                   {"f_measure", rounded(m.f_measure)},
                   {"true_positives", m.true_positives},
                   {"false_positives", m.false_positives},
                   {"false_negatives", m.false_negatives}};
    out << doc.dump(2) << '\n';
    return;
  }
  const char* sep = format == OutputFormat::tsv ? "\t" : ": ";
  out << "precision" << sep << fixed(m.precision) << '\n'
      << "recall" << sep << fixed(m.recall) << '\n'
      << "f_measure" << sep << fixed(m.f_measure) << '\n'
      << "true_positives" << sep << m.true_positives << '\n'
      << "false_positives" << sep << m.false_positives << '\n'
      << "false_negatives" << sep << m.false_negatives << '\n';
}

void write_parse_summary(std::ostream& out, const Ontology& ontology) {
  out << "ontology: " << ontology.id() << '\n'
      << "concepts: " << ontology.concepts().size() << '\n'
      << "subclass edges: " << ontology.edges().size() << '\n'
      << "object properties: " << ontology.properties().size() << '\n'
      << "report entries: " << ontology.report().entries.size() << '\n';
  for (const auto& e : ontology.report().entries) {
    out << "  ";
    if (e.line > 0) out << "line " << e.line << ' ';
    out << '[' << to_string(e.kind) << ']';
    if (!e.subject.empty()) out << ' ' << e.subject;
    if (!e.detail.empty()) out << ": " << e.detail;
    out << '\n';
  }
}

}  // namespace ontalign
