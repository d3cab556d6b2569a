#pragma once

// Structural neighbourhoods of concepts in a subclass DAG.
//
// All sets are ordered lexicographically by local name so that every
// enumeration is stable across runs. No implicit owl:Thing is added: a
// concept without declared supers is a root and has an empty ancestor set.
// Roots count as siblings of one another.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontalign/ontology.hpp"

namespace ontalign {

/// A concept together with its surrounding concepts.
struct ConceptContext {
  ConceptId id;
  ConceptSet supc;           // all transitive super-concepts
  ConceptSet subc;           // all transitive sub-concepts
  ConceptSet sblc;           // siblings
  ConceptSet direct_supers;
  ConceptSet direct_subs;
  ConceptSet leaves;         // leaf descendants, or {concept} for a leaf
  ConceptSet root_path;      // union of all root-to-concept paths, i.e. supc

  bool is_root() const { return direct_supers.empty(); }
};

class ContextTable {
 public:
  ContextTable(std::string ontology_id, std::map<ConceptId, ConceptContext> contexts)
      : ontology_id_(std::move(ontology_id)), contexts_(std::move(contexts)) {}

  const std::string& ontology_id() const { return ontology_id_; }
  const std::map<ConceptId, ConceptContext>& contexts() const { return contexts_; }
  std::size_t size() const { return contexts_.size(); }

  /// Throws NotFoundError.
  const ConceptContext& at(const ConceptId& c) const;
  const ConceptContext& at(const std::string& name) const { return at(ConceptId(name)); }

 private:
  std::string ontology_id_;
  std::map<ConceptId, ConceptContext> contexts_;
};

ConceptSet ancestors(const Ontology& ontology, const ConceptId& c);
ConceptSet descendants(const Ontology& ontology, const ConceptId& c);
ConceptSet siblings(const Ontology& ontology, const ConceptId& c);
ConceptSet leaves_under(const Ontology& ontology, const ConceptId& c);

ContextTable build_contexts(const Ontology& ontology);

/// One cycle per strongly connected component of the child->parent graph
/// (plus self-loops), each starting at its lexicographically smallest
/// concept and following child->parent edges. Empty for a DAG.
std::vector<std::vector<ConceptId>> detect_cycles(const std::set<SubclassEdge>& edges);
std::vector<std::vector<ConceptId>> detect_cycles(const Ontology& ontology);

/// Longest distance from any root; roots have depth 0.
std::map<ConceptId, std::size_t> depths(const Ontology& ontology);

/// Orders a concept set shallowest first, ties broken by name.
std::vector<ConceptId> order_by_depth(const ConceptSet& concepts,
                                      const std::map<ConceptId, std::size_t>& depth);

}  // namespace ontalign
