#pragma once

// OWL-in-RDF/XML subset reader.
//
// Accepted constructs: owl:Class (rdf:ID or rdf:about, top level or nested),
// rdfs:subClassOf (rdf:resource or nested named class), owl:ObjectProperty
// with rdfs:domain, rdfs:range (direct or owl:unionOf collection) and
// owl:inverseOf. owl:disjointWith and owl:equivalentClass are read and
// discarded. Anything else is skipped and noted in the parse report.
//
// Vocabulary prefixes resolve through xmlns declarations when present; an
// undeclared owl/rdf/rdfs prefix is taken at face value. Vocabulary names
// compare case-insensitively, so "owl:CLASS" is owl:Class.

#include <filesystem>
#include <string>
#include <string_view>

#include "ontalign/ontology.hpp"

namespace ontalign {

/// Throws ParseError (malformed XML, with line/column) or CycleError.
Ontology parse_ontology(std::string_view source_text, std::string id);

const ParseReport& parse_report(const Ontology& ontology);

/// Reads a UTF-8 file and parses it. Throws ParseError when unreadable.
Ontology load_ontology(const std::filesystem::path& path, std::string id);

/// Local name of an IRI reference: text after the last '#', else after the
/// last '/'. Empty when nothing remains.
std::string local_name(std::string_view iri);

}  // namespace ontalign
