#include "ontalign/owl_parser.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "ontalign/errors.hpp"
#include "ontalign/xml.hpp"

namespace ontalign {

namespace {

enum class Vocab { none, owl, rdf, rdfs };

constexpr std::string_view kOwlNs = "http://www.w3.org/2002/07/owl#";
constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
constexpr std::string_view kRdfsNs = "http://www.w3.org/2000/01/rdf-schema#";

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

Vocab vocab_of_uri(std::string_view uri) {
  if (uri == kOwlNs) return Vocab::owl;
  if (uri == kRdfNs) return Vocab::rdf;
  if (uri == kRdfsNs) return Vocab::rdfs;
  return Vocab::none;
}

Vocab vocab_of_prefix_text(std::string_view prefix) {
  if (iequals(prefix, "owl")) return Vocab::owl;
  if (iequals(prefix, "rdf")) return Vocab::rdf;
  if (iequals(prefix, "rdfs")) return Vocab::rdfs;
  return Vocab::none;
}

class Builder {
 public:
  explicit Builder(std::string id) : id_(std::move(id)) {}

  Ontology run(const xml::Document& doc) {
    Enter root_scope(*this, doc.root);
    if (is(doc.root, Vocab::rdf, "RDF")) {
      for (const auto& child : doc.root.children) top_level(child);
    } else {
      top_level(doc.root);
    }
    return finish();
  }

 private:
  // Pushes the xmlns declarations of an element for the lifetime of the guard.
  class Enter {
   public:
    Enter(Builder& b, const xml::Element& el) : b_(b) {
      std::map<std::string, std::string> frame;
      for (const auto& a : el.attributes) {
        if (a.name == "xmlns") frame[""] = a.value;
        else if (a.name.starts_with("xmlns:")) frame[a.name.substr(6)] = a.value;
      }
      b_.scopes_.push_back(std::move(frame));
    }
    ~Enter() { b_.scopes_.pop_back(); }
    Enter(const Enter&) = delete;
    Enter& operator=(const Enter&) = delete;

   private:
    Builder& b_;
  };

  Vocab vocab_of(std::string_view prefix, bool is_attribute) const {
    if (prefix.empty() && is_attribute) return Vocab::none;
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (auto found = it->find(std::string(prefix)); found != it->end()) {
        const Vocab v = vocab_of_uri(found->second);
        // A vocabulary prefix bound to a near-miss URI (http vs https, missing
        // '#') is still read as that vocabulary.
        return v != Vocab::none ? v : vocab_of_prefix_text(prefix);
      }
    }
    return vocab_of_prefix_text(prefix);
  }

  bool is(const xml::Element& el, Vocab vocab, std::string_view local) const {
    const auto [prefix, name] = xml::split_qname(el.name);
    return iequals(name, local) && vocab_of(prefix, false) == vocab;
  }

  Vocab vocab_local(const xml::Element& el, std::string_view local) const {
    const auto [prefix, name] = xml::split_qname(el.name);
    return iequals(name, local) ? vocab_of(prefix, false) : Vocab::none;
  }

  const std::string* attr(const xml::Element& el, std::string_view local) const {
    for (const auto& a : el.attributes) {
      const auto [prefix, name] = xml::split_qname(a.name);
      if (iequals(name, local) && vocab_of(prefix, true) == Vocab::rdf) return &a.value;
    }
    return nullptr;
  }

  void note(ReportKind kind, std::string subject, std::string detail, const xml::Element& el) {
    report_.entries.push_back({kind, std::move(subject), std::move(detail), el.line});
  }

  void ignored(const xml::Element& el, const std::string& where) {
    note(ReportKind::ignored_element, where, el.name, el);
  }

  std::optional<ConceptId> name_from_iri(const std::string& iri) const {
    auto name = local_name(iri);
    if (name.empty()) return std::nullopt;
    return ConceptId(std::move(name));
  }

  void declare(const ConceptId& c, const xml::Element& el) {
    if (!declared_.insert(c).second) {
      note(ReportKind::merged_duplicate, c.str(), "owl:Class declared more than once", el);
    }
  }

  void reference(const ConceptId& c) { referenced_.insert(c); }

  void top_level(const xml::Element& el) {
    Enter scope(*this, el);
    if (is(el, Vocab::owl, "Class")) {
      if (!visit_class(el, /*top_level=*/true)) ignored(el, "anonymous top-level class");
    } else if (is(el, Vocab::owl, "ObjectProperty")) {
      visit_property(el);
    } else {
      ignored(el, "");
    }
  }

  // Returns the class name, or nullopt for an anonymous class expression.
  std::optional<ConceptId> visit_class(const xml::Element& el, bool top_level) {
    std::optional<ConceptId> self;
    if (const auto* id = attr(el, "ID")) {
      if (!id->empty()) {
        self = ConceptId(*id);
        declare(*self, el);
      }
    } else if (const auto* about = attr(el, "about")) {
      self = name_from_iri(*about);
      if (self) {
        if (top_level) declare(*self, el);
        else reference(*self);
      }
    }
    if (!self) return std::nullopt;

    for (const auto& child : el.children) {
      Enter scope(*this, child);
      const Vocab sub_vocab = vocab_local(child, "subClassOf");
      if (sub_vocab != Vocab::none) {
        if (sub_vocab != Vocab::rdfs) {
          note(ReportKind::nonstandard_vocabulary, self->str(),
               child.name + " read as rdfs:subClassOf", child);
        }
        visit_super(*self, child);
      } else if (is(child, Vocab::owl, "disjointWith")) {
        note(ReportKind::discarded_disjoint_with, self->str(), target_name(child), child);
        declare_nested(child);
      } else if (is(child, Vocab::owl, "equivalentClass")) {
        note(ReportKind::discarded_equivalent_class, self->str(), target_name(child), child);
        declare_nested(child);
      } else {
        ignored(child, self->str());
      }
    }
    return self;
  }

  void visit_super(const ConceptId& self, const xml::Element& el) {
    if (const auto* res = attr(el, "resource")) {
      if (auto parent = name_from_iri(*res)) add_edge(self, *parent);
      else ignored(el, self.str());
      return;
    }
    if (el.children.empty()) {
      ignored(el, self.str());
      return;
    }
    for (const auto& child : el.children) {
      Enter scope(*this, child);
      std::optional<ConceptId> parent;
      if (is(child, Vocab::owl, "Class")) parent = visit_class(child, false);
      if (parent) add_edge(self, *parent);
      else ignored(child, self.str() + " super-class expression");
    }
  }

  void add_edge(const ConceptId& child, const ConceptId& parent) {
    reference(child);
    reference(parent);
    edges_.insert({child, parent});
  }

  std::string target_name(const xml::Element& el) const {
    if (const auto* res = attr(el, "resource")) return local_name(*res);
    for (const auto& child : el.children) {
      if (const auto* id = attr(child, "ID")) return *id;
      if (const auto* about = attr(child, "about")) return local_name(*about);
    }
    return "";
  }

  // Named classes introduced with rdf:ID inside a discarded construct are
  // still declarations.
  void declare_nested(const xml::Element& el) {
    for (const auto& child : el.children) {
      Enter scope(*this, child);
      if (is(child, Vocab::owl, "Class") && attr(child, "ID") != nullptr) {
        visit_class(child, false);
      } else {
        declare_nested(child);
      }
    }
  }

  void visit_property(const xml::Element& el) {
    std::optional<std::string> name;
    if (const auto* id = attr(el, "ID")) name = *id;
    else if (const auto* about = attr(el, "about")) name = local_name(*about);
    if (!name || name->empty()) {
      ignored(el, "anonymous object property");
      return;
    }
    ObjectProperty prop{.name = *name, .domain = {}, .range = {}, .inverse_of = std::nullopt};
    for (const auto& child : el.children) {
      Enter scope(*this, child);
      if (is(child, Vocab::rdfs, "domain")) {
        collect_classes(prop.name, "domain", child, prop.domain);
      } else if (is(child, Vocab::rdfs, "range")) {
        collect_classes(prop.name, "range", child, prop.range);
      } else if (is(child, Vocab::owl, "inverseOf")) {
        std::string inverse;
        if (const auto* res = attr(child, "resource")) {
          inverse = local_name(*res);
        } else {
          for (const auto& g : child.children) {
            if (const auto* about = attr(g, "about")) inverse = local_name(*about);
            else if (const auto* id = attr(g, "ID")) inverse = *id;
          }
        }
        if (inverse.empty()) ignored(child, prop.name);
        else prop.inverse_of = inverse;
      } else {
        ignored(child, prop.name);
      }
    }
    for (const auto& c : prop.domain) reference(c);
    for (const auto& c : prop.range) reference(c);
    properties_.push_back(std::move(prop));
  }

  void collect_classes(const std::string& prop, const char* role, const xml::Element& el,
                       ConceptSet& out) {
    if (const auto* res = attr(el, "resource")) {
      if (auto c = name_from_iri(*res)) out.insert(*c);
      else ignored(el, prop);
      return;
    }
    for (const auto& child : el.children) {
      Enter scope(*this, child);
      if (!is(child, Vocab::owl, "Class")) {
        ignored(child, prop);
        continue;
      }
      if (auto named = visit_class(child, false)) {
        out.insert(*named);
        continue;
      }
      bool flattened = false;
      for (const auto& expr : child.children) {
        Enter inner(*this, expr);
        if (!is(expr, Vocab::owl, "unionOf")) {
          ignored(expr, prop);
          continue;
        }
        flattened = true;
        for (const auto& member : expr.children) {
          Enter m(*this, member);
          std::optional<ConceptId> c;
          if (is(member, Vocab::owl, "Class")) c = visit_class(member, false);
          if (c) out.insert(*c);
          else ignored(member, prop);
        }
      }
      if (flattened) {
        note(ReportKind::flattened_union, prop, std::string(role) + " union flattened", child);
      }
    }
  }

  Ontology finish() {
    for (const auto& c : referenced_) {
      if (!declared_.contains(c)) {
        report_.entries.push_back({ReportKind::auto_registered, c.str(), "referenced but never declared", 0});
      }
    }
    ConceptSet concepts = declared_;
    concepts.insert(referenced_.begin(), referenced_.end());
    return Ontology::create(std::move(id_), std::move(concepts), std::move(edges_),
                            std::move(properties_), std::move(report_));
  }

  std::string id_;
  std::vector<std::map<std::string, std::string>> scopes_;
  ConceptSet declared_;
  ConceptSet referenced_;
  std::set<SubclassEdge> edges_;
  std::vector<ObjectProperty> properties_;
  ParseReport report_;
};

}  // namespace

std::string local_name(std::string_view iri) {
  if (const auto hash = iri.rfind('#'); hash != std::string_view::npos) {
    return std::string(iri.substr(hash + 1));
  }
  if (const auto slash = iri.rfind('/'); slash != std::string_view::npos) {
    return std::string(iri.substr(slash + 1));
  }
  return std::string(iri);
}

Ontology parse_ontology(std::string_view source_text, std::string id) {
  const auto doc = xml::parse(source_text);
  return Builder(std::move(id)).run(doc);
}

const ParseReport& parse_report(const Ontology& ontology) { return ontology.report(); }

Ontology load_ontology(const std::filesystem::path& path, std::string id) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string(), 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ontology(buf.str(), std::move(id));
}

}  // namespace ontalign
