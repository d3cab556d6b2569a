#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ontalign {

/// Local name of a concept: the rdf:ID value or the fragment after '#'.
class ConceptId {
 public:
  /// Throws InvalidNameError on an empty name.
  explicit ConceptId(std::string local_name);

  const std::string& str() const { return name_; }

  friend auto operator<=>(const ConceptId&, const ConceptId&) = default;
  friend bool operator==(const ConceptId&, const ConceptId&) = default;

 private:
  std::string name_;
};

using ConceptSet = std::set<ConceptId>;

struct SubclassEdge {
  ConceptId child;
  ConceptId parent;

  friend auto operator<=>(const SubclassEdge&, const SubclassEdge&) = default;
  friend bool operator==(const SubclassEdge&, const SubclassEdge&) = default;
};

struct ObjectProperty {
  std::string name;
  ConceptSet domain;
  ConceptSet range;
  std::optional<std::string> inverse_of;

  friend bool operator==(const ObjectProperty&, const ObjectProperty&) = default;
};

enum class ReportKind {
  discarded_disjoint_with,
  discarded_equivalent_class,
  flattened_union,
  ignored_element,
  merged_duplicate,
  auto_registered,
  nonstandard_vocabulary,
};

const char* to_string(ReportKind kind);

struct ReportEntry {
  ReportKind kind;
  std::string subject;  // concept or property the entry is about; may be empty
  std::string detail;
  std::size_t line = 0;
};

/// Everything the parser accepted but did not turn into model content.
struct ParseReport {
  std::vector<ReportEntry> entries;

  std::size_t count(ReportKind kind) const;
  std::vector<std::string> subjects(ReportKind kind) const;
  bool empty() const { return entries.empty(); }
};

/// Immutable concept taxonomy plus object properties.
///
/// Construction registers every edge endpoint and property domain/range
/// member as a concept, and rejects self-edges and cycles with CycleError.
class Ontology {
 public:
  static Ontology create(std::string id, ConceptSet concepts, std::set<SubclassEdge> edges,
                         std::vector<ObjectProperty> properties = {}, ParseReport report = {});

  const std::string& id() const { return data_->id; }
  const ConceptSet& concepts() const { return data_->concepts; }
  const std::set<SubclassEdge>& edges() const { return data_->edges; }
  const std::map<std::string, ObjectProperty>& properties() const { return data_->properties; }
  const ParseReport& report() const { return data_->report; }

  bool contains(const ConceptId& c) const { return data_->concepts.contains(c); }

  /// Empty set for roots. Throws NotFoundError for unknown concepts.
  const ConceptSet& direct_supers(const ConceptId& c) const;
  const ConceptSet& direct_subs(const ConceptId& c) const;
  bool is_root(const ConceptId& c) const { return direct_supers(c).empty(); }
  ConceptSet roots() const;

  /// Names of object properties whose domain or range mentions c.
  std::set<std::string> relations_of(const ConceptId& c) const;

  /// Structural equality; the id and the parse report are not compared.
  friend bool operator==(const Ontology& a, const Ontology& b);

 private:
  struct Data {
    std::string id;
    ConceptSet concepts;
    std::set<SubclassEdge> edges;
    std::map<std::string, ObjectProperty> properties;
    ParseReport report;
    std::map<ConceptId, ConceptSet> supers;
    std::map<ConceptId, ConceptSet> subs;
  };

  explicit Ontology(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

}  // namespace ontalign
