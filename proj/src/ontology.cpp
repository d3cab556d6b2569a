#include "ontalign/ontology.hpp"

#include "ontalign/errors.hpp"
#include "ontalign/taxonomy.hpp"

namespace ontalign {

ConceptId::ConceptId(std::string local_name) : name_(std::move(local_name)) {
  if (name_.empty()) throw InvalidNameError("concept name must be non-empty");
}

const char* to_string(ReportKind kind) {
  switch (kind) {
    case ReportKind::discarded_disjoint_with: return "discarded owl:disjointWith";
    case ReportKind::discarded_equivalent_class: return "discarded owl:equivalentClass";
    case ReportKind::flattened_union: return "flattened owl:unionOf";
    case ReportKind::ignored_element: return "ignored element";
    case ReportKind::merged_duplicate: return "merged duplicate declaration";
    case ReportKind::auto_registered: return "auto-registered concept";
    case ReportKind::nonstandard_vocabulary: return "nonstandard vocabulary";
  }
  return "?";
}

std::size_t ParseReport::count(ReportKind kind) const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.kind == kind ? 1 : 0;
  return n;
}

std::vector<std::string> ParseReport::subjects(ReportKind kind) const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (e.kind == kind) out.push_back(e.subject);
  }
  return out;
}

Ontology Ontology::create(std::string id, ConceptSet concepts, std::set<SubclassEdge> edges,
                          std::vector<ObjectProperty> properties, ParseReport report) {
  auto data = std::make_shared<Data>();
  data->id = std::move(id);

  for (const auto& e : edges) {
    concepts.insert(e.child);
    concepts.insert(e.parent);
  }
  for (auto& p : properties) {
    if (p.name.empty()) throw InvalidNameError("object property name must be non-empty");
    concepts.insert(p.domain.begin(), p.domain.end());
    concepts.insert(p.range.begin(), p.range.end());
    auto [it, inserted] = data->properties.emplace(p.name, p);
    if (!inserted) {
      it->second.domain.insert(p.domain.begin(), p.domain.end());
      it->second.range.insert(p.range.begin(), p.range.end());
      if (!it->second.inverse_of) it->second.inverse_of = p.inverse_of;
    }
  }

  if (auto cycles = detect_cycles(edges); !cycles.empty()) {
    std::vector<std::vector<std::string>> named;
    for (const auto& cycle : cycles) {
      auto& out = named.emplace_back();
      for (const auto& c : cycle) out.push_back(c.str());
    }
    throw CycleError(std::move(named));
  }

  for (const auto& c : concepts) {
    data->supers.emplace(c, ConceptSet{});
    data->subs.emplace(c, ConceptSet{});
  }
  for (const auto& e : edges) {
    data->supers[e.child].insert(e.parent);
    data->subs[e.parent].insert(e.child);
  }

  data->concepts = std::move(concepts);
  data->edges = std::move(edges);
  data->report = std::move(report);
  return Ontology(std::move(data));
}

const ConceptSet& Ontology::direct_supers(const ConceptId& c) const {
  auto it = data_->supers.find(c);
  if (it == data_->supers.end()) throw NotFoundError(c.str());
  return it->second;
}

const ConceptSet& Ontology::direct_subs(const ConceptId& c) const {
  auto it = data_->subs.find(c);
  if (it == data_->subs.end()) throw NotFoundError(c.str());
  return it->second;
}

ConceptSet Ontology::roots() const {
  ConceptSet out;
  for (const auto& [c, supers] : data_->supers) {
    if (supers.empty()) out.insert(c);
  }
  return out;
}

std::set<std::string> Ontology::relations_of(const ConceptId& c) const {
  if (!contains(c)) throw NotFoundError(c.str());
  std::set<std::string> out;
  for (const auto& [name, prop] : data_->properties) {
    if (prop.domain.contains(c) || prop.range.contains(c)) out.insert(name);
  }
  return out;
}

bool operator==(const Ontology& a, const Ontology& b) {
  return a.concepts() == b.concepts() && a.edges() == b.edges() && a.properties() == b.properties();
}

}  // namespace ontalign
