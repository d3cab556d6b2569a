// ontalign: align two OWL ontologies by shared super-concepts.
//
// Commands:
//   align    SOURCE TARGET   alignment as table, TSV or JSON
//   inspect  FILE            surrounding concepts of one or all concepts
//   report   SOURCE TARGET PAIRS   technique comparison matrix
//   eval     PRODUCED REFERENCE    precision / recall / F-measure
//   parse    FILE            parse summary and report
//
// Exit codes: 0 ok, 1 usage, 2 parse, 3 cycle, 4 unknown concept or pair.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ontalign/errors.hpp"
#include "ontalign/evaluator.hpp"
#include "ontalign/formats.hpp"
#include "ontalign/lexicon.hpp"
#include "ontalign/matcher.hpp"
#include "ontalign/owl_parser.hpp"
#include "ontalign/taxonomy.hpp"
#include "ontalign/techniques.hpp"

namespace {

namespace fs = std::filesystem;
using namespace ontalign;

enum Exit : int { kOk = 0, kUsage = 1, kParse = 2, kCycle = 3, kUnknown = 4 };

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string(), 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Ontology load(const std::string& path) { return load_ontology(path, fs::path(path).stem().string()); }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct MatchOptions {
  std::string mode = "named";
  std::string criteria;
  std::string synonyms;
  double tau = 1.0;
  std::string weights;
  bool camel_tokens = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--mode", mode, "strict or named")->check(CLI::IsMember({"strict", "named"}));
    cmd->add_option("--criteria", criteria, "comma-separated predicate names (default: all)");
    cmd->add_option("--synonyms", synonyms, "synonym lexicon file");
    cmd->add_option("--tau", tau, "coverage threshold in (0, 1] for the set predicates");
    cmd->add_option("--weights", weights, "score weights base,sibling,sub,relation");
    cmd->add_flag("--camel-tokens", camel_tokens, "compare names outside the lexicon by camel-case tokens");
  }

  MatchConfig build() const {
    MatchConfig cfg;
    cfg.mode = parse_match_mode(mode);
    if (!criteria.empty()) cfg.criteria = split_list(criteria);
    cfg.tau = tau;
    if (!weights.empty()) {
      const auto parts = split_list(weights);
      if (parts.size() != 4) throw ConfigError("--weights needs four comma-separated numbers");
      double w[4];
      for (std::size_t i = 0; i < 4; ++i) {
        try {
          std::size_t used = 0;
          w[i] = std::stod(parts[i], &used);
          if (used != parts[i].size()) throw std::invalid_argument(parts[i]);
        } catch (const std::exception&) {
          throw ConfigError("bad weight '" + parts[i] + "'");
        }
      }
      cfg.weights = {w[0], w[1], w[2], w[3]};
    }
    if (!synonyms.empty()) cfg.lexicon = load_lexicon(read_file(synonyms));
    cfg.lexicon = cfg.lexicon.with_token_matching(camel_tokens);
    cfg.validate();
    return cfg;
  }
};

// Writes to --output when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ConfigError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

int run(int argc, char** argv) {
  CLI::App app{"Ontology alignment by shared super-concepts", "ontalign"};
  app.require_subcommand(1);

  MatchOptions align_opts;
  std::string source;
  std::string target;
  std::string format = "table";
  std::string output;
  auto* align_cmd = app.add_subcommand("align", "align SOURCE against TARGET");
  align_cmd->add_option("source", source, "source ontology (RDF/XML)")->required();
  align_cmd->add_option("target", target, "target ontology (RDF/XML)")->required();
  align_cmd->add_option("--format", format, "table, tsv or json")->check(CLI::IsMember({"table", "tsv", "json"}));
  align_cmd->add_option("--output", output, "write to this file instead of stdout");
  bool scan = false;
  align_cmd->add_flag("--scan", scan, "use the exhaustive pairwise scan instead of the index");
  align_opts.attach(align_cmd);

  std::string inspect_path;
  std::optional<std::string> concept_name;
  auto* inspect_cmd = app.add_subcommand("inspect", "show surrounding concepts");
  inspect_cmd->add_option("file", inspect_path, "ontology (RDF/XML)")->required();
  inspect_cmd->add_option("--concept", concept_name, "only this concept");

  MatchOptions report_opts;
  std::string pairs_path;
  std::string mapping_path;
  std::string report_format = "table";
  std::string report_output;
  bool show_mapping = false;
  auto* report_cmd = app.add_subcommand("report", "compare techniques on chosen concept pairs");
  report_cmd->add_option("source", source, "source ontology (RDF/XML)")->required();
  report_cmd->add_option("target", target, "target ontology (RDF/XML)")->required();
  report_cmd->add_option("pairs", pairs_path, "TSV of source<TAB>target pairs")->required();
  report_cmd->add_option("--mapping", mapping_path, "technique mapping file");
  report_cmd->add_option("--format", report_format, "table, tsv or json")
      ->check(CLI::IsMember({"table", "tsv", "json"}));
  report_cmd->add_option("--output", report_output, "write to this file instead of stdout");
  report_cmd->add_flag("--show-mapping", show_mapping, "print the technique mapping in use and exit");
  report_opts.attach(report_cmd);

  std::string produced_path;
  std::string reference_path;
  std::string eval_format = "table";
  auto* eval_cmd = app.add_subcommand("eval", "score PRODUCED against REFERENCE");
  eval_cmd->add_option("produced", produced_path, "alignment TSV or JSON")->required();
  eval_cmd->add_option("reference", reference_path, "reference alignment TSV or JSON")->required();
  eval_cmd->add_option("--format", eval_format, "table, tsv or json")->check(CLI::IsMember({"table", "tsv", "json"}));

  std::string parse_path;
  auto* parse_cmd = app.add_subcommand("parse", "parse a file and print its parse report");
  parse_cmd->add_option("file", parse_path, "ontology (RDF/XML)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*align_cmd) {
    const auto cfg = align_opts.build();
    const auto a = load(source);
    const auto b = load(target);
    const auto alignment = scan ? align(a, b, cfg) : align_indexed(a, b, cfg);
    Sink sink(output);
    write_alignment(sink.stream(), alignment, parse_output_format(format));
  } else if (*inspect_cmd) {
    const auto o = load(inspect_path);
    const auto table = build_contexts(o);
    std::optional<ConceptId> only;
    if (concept_name) only = ConceptId(*concept_name);
    write_contexts(std::cout, o, table, only);
  } else if (*report_cmd) {
    const auto mapping = mapping_path.empty() ? default_technique_mapping()
                                              : parse_technique_mapping(read_file(mapping_path));
    if (show_mapping) {
      std::cout << format_technique_mapping(mapping);
      return kOk;
    }
    const auto cfg = report_opts.build();
    const auto a = load(source);
    const auto b = load(target);
    const auto pairs = read_pair_list(read_file(pairs_path));
    const auto matrix = technique_report(pairs, build_contexts(a), build_contexts(b), mapping, cfg);
    Sink sink(report_output);
    write_matrix(sink.stream(), matrix, parse_output_format(report_format));
  } else if (*eval_cmd) {
    const auto produced = read_alignment_pairs(read_file(produced_path));
    const ReferenceAlignment reference{read_alignment_pairs(read_file(reference_path))};
    write_metrics(std::cout, evaluate(produced, reference), parse_output_format(eval_format));
  } else if (*parse_cmd) {
    write_parse_summary(std::cout, load(parse_path));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ontalign::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const ontalign::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const ontalign::CycleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCycle;
  } catch (const ontalign::NotFoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnknown;
  } catch (const ontalign::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
