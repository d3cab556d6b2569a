#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ontalign/ontology.hpp"

namespace testsupport {

using ontalign::ConceptId;
using ontalign::ConceptSet;
using ontalign::ObjectProperty;
using ontalign::Ontology;
using ontalign::SubclassEdge;

struct DagSpec {
  std::size_t max_concepts = 50;
  std::size_t max_parents = 2;
  std::size_t name_pool = 0;  // 0: names unique to this instance
  std::size_t max_properties = 3;
};

inline std::string pool_name(std::size_t i) {
  static const char* const stems[] = {"Person", "Student", "Course", "Paper", "Event", "Place", "Unit", "Item"};
  return std::string(stems[i % 8]) + std::to_string(i / 8);
}

// Parents are always drawn from concepts earlier in a random order, so the
// result is acyclic by construction.
inline Ontology random_dag(std::mt19937_64& rng, const DagSpec& spec, const std::string& id = "rand") {
  std::uniform_int_distribution<std::size_t> count(0, spec.max_concepts);
  const std::size_t n = count(rng);

  std::vector<std::string> names;
  if (spec.name_pool == 0) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("C" + std::to_string(i));
  } else {
    std::vector<std::size_t> idx(std::max(spec.name_pool, n));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t i = 0; i < n; ++i) names.push_back(pool_name(idx[i]));
  }

  ConceptSet concepts;
  for (const auto& s : names) concepts.insert(ConceptId(s));
  std::set<SubclassEdge> edges;
  std::uniform_int_distribution<std::size_t> parents(0, spec.max_parents);
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t k = std::min(parents(rng), i);
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    for (std::size_t j = 0; j < k; ++j) edges.insert({ConceptId(names[i]), ConceptId(names[pick(rng)])});
  }

  std::vector<ObjectProperty> props;
  if (n > 0) {
    std::uniform_int_distribution<std::size_t> nprops(0, spec.max_properties);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t np = nprops(rng);
    for (std::size_t p = 0; p < np; ++p) {
      ObjectProperty prop{.name = "rel" + std::to_string(p), .domain = {}, .range = {}, .inverse_of = {}};
      prop.domain.insert(ConceptId(names[pick(rng)]));
      prop.range.insert(ConceptId(names[pick(rng)]));
      if (rng() % 2) prop.range.insert(ConceptId(names[pick(rng)]));
      props.push_back(std::move(prop));
    }
  }
  return Ontology::create(id, std::move(concepts), std::move(edges), std::move(props));
}

// Adds leaves and properties, or removes a leaf; no surviving concept's
// ancestor set changes.
inline Ontology mutate_outside_ancestry(const Ontology& o, std::mt19937_64& rng, int serial) {
  ConceptSet concepts = o.concepts();
  std::set<SubclassEdge> edges = o.edges();
  std::vector<ObjectProperty> props;
  for (const auto& [name, p] : o.properties()) props.push_back(p);
  std::vector<ConceptId> all(concepts.begin(), concepts.end());
  if (all.empty()) return o;
  const auto pick = [&] { return all[rng() % all.size()]; };
  const int steps = 1 + static_cast<int>(rng() % 4);
  for (int s = 0; s < steps; ++s) {
    const std::string tag = std::to_string(serial) + "_" + std::to_string(s);
    switch (rng() % 3) {
      case 0: {
        const ConceptId fresh("Mut" + tag);
        concepts.insert(fresh);
        edges.insert({fresh, pick()});
        break;
      }
      case 1:
        props.push_back({.name = "mutRel" + tag, .domain = {pick()}, .range = {pick()}, .inverse_of = {}});
        break;
      default: {
        const ConceptId victim = pick();
        bool leaf = concepts.contains(victim);
        for (const auto& e : edges) leaf = leaf && e.parent != victim;
        for (const auto& p : props) leaf = leaf && !p.domain.contains(victim) && !p.range.contains(victim);
        if (!leaf) break;
        concepts.erase(victim);
        std::erase_if(edges, [&](const SubclassEdge& e) { return e.child == victim; });
        std::erase(all, victim);
        if (all.empty()) return Ontology::create(o.id(), std::move(concepts), std::move(edges), std::move(props));
        break;
      }
    }
  }
  return Ontology::create(o.id(), std::move(concepts), std::move(edges), std::move(props));
}

// Reachability by boolean matrix closure, independent of the library's
// traversal code.
class ClosureOracle {
 public:
  explicit ClosureOracle(const Ontology& o) : names_(o.concepts().begin(), o.concepts().end()) {
    const std::size_t n = names_.size();
    parent_.assign(n, std::vector<bool>(n, false));
    for (const auto& e : o.edges()) parent_[index(e.child)][index(e.parent)] = true;
    reach_ = parent_;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (reach_[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (reach_[k][j]) reach_[i][j] = true;
  }

  ConceptSet ancestors(const ConceptId& c) const {
    ConceptSet out;
    const std::size_t i = index(c);
    for (std::size_t j = 0; j < names_.size(); ++j)
      if (reach_[i][j]) out.insert(names_[j]);
    return out;
  }

  ConceptSet descendants(const ConceptId& c) const {
    ConceptSet out;
    const std::size_t j = index(c);
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (reach_[i][j]) out.insert(names_[i]);
    return out;
  }

  ConceptSet siblings(const ConceptId& c) const {
    ConceptSet out;
    const std::size_t i = index(c);
    const bool root = !has_parent(i);
    for (std::size_t k = 0; k < names_.size(); ++k) {
      if (k == i) continue;
      if (root) {
        if (!has_parent(k)) out.insert(names_[k]);
        continue;
      }
      for (std::size_t p = 0; p < names_.size(); ++p)
        if (parent_[i][p] && parent_[k][p]) out.insert(names_[k]);
    }
    return out;
  }

  ConceptSet leaves(const ConceptId& c) const {
    const auto below = descendants(c);
    if (below.empty()) return {c};
    ConceptSet out;
    for (const auto& d : below)
      if (descendants(d).empty()) out.insert(d);
    return out;
  }

 private:
  std::size_t index(const ConceptId& c) const {
    return static_cast<std::size_t>(std::lower_bound(names_.begin(), names_.end(), c) - names_.begin());
  }
  bool has_parent(std::size_t i) const { return std::find(parent_[i].begin(), parent_[i].end(), true) != parent_[i].end(); }

  std::vector<ConceptId> names_;
  std::vector<std::vector<bool>> parent_;
  std::vector<std::vector<bool>> reach_;
};

// RDF/XML rendering; when rng is given, declaration order is shuffled.
inline std::string to_rdfxml(const Ontology& o, std::mt19937_64* rng = nullptr) {
  std::vector<std::string> blocks;
  for (const auto& c : o.concepts()) {
    std::ostringstream b;
    b << "  <owl:Class rdf:ID=\"" << c.str() << "\"";
    const auto& supers = o.direct_supers(c);
    if (supers.empty()) {
      b << "/>\n";
    } else {
      b << ">\n";
      for (const auto& p : supers) b << "    <rdfs:subClassOf rdf:resource=\"#" << p.str() << "\"/>\n";
      b << "  </owl:Class>\n";
    }
    blocks.push_back(b.str());
  }
  auto render_set = [](std::ostringstream& b, const char* tag, const ConceptSet& s) {
    if (s.empty()) return;
    if (s.size() == 1) {
      b << "    <rdfs:" << tag << " rdf:resource=\"#" << s.begin()->str() << "\"/>\n";
      return;
    }
    b << "    <rdfs:" << tag << ">\n      <owl:Class>\n        <owl:unionOf rdf:parseType=\"Collection\">\n";
    for (const auto& c : s) b << "          <owl:Class rdf:about=\"#" << c.str() << "\"/>\n";
    b << "        </owl:unionOf>\n      </owl:Class>\n    </rdfs:" << tag << ">\n";
  };
  for (const auto& [name, p] : o.properties()) {
    std::ostringstream b;
    b << "  <owl:ObjectProperty rdf:ID=\"" << name << "\">\n";
    render_set(b, "domain", p.domain);
    render_set(b, "range", p.range);
    if (p.inverse_of) b << "    <owl:inverseOf rdf:resource=\"#" << *p.inverse_of << "\"/>\n";
    b << "  </owl:ObjectProperty>\n";
    blocks.push_back(b.str());
  }
  if (rng) std::shuffle(blocks.begin(), blocks.end(), *rng);

  std::ostringstream out;
  out << "<?xml version=\"1.0\"?>\n"
         "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\"\n"
         "         xmlns:rdfs=\"http://www.w3.org/2000/01/rdf-schema#\"\n"
         "         xmlns:owl=\"http://www.w3.org/2002/07/owl#\">\n";
  for (const auto& b : blocks) out << b;
  out << "</rdf:RDF>\n";
  return out.str();
}

}  // namespace testsupport
