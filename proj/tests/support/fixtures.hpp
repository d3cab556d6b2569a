#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ontalign/owl_parser.hpp"

namespace testsupport {

inline std::filesystem::path fixture_path(const std::string& file) {
  return std::filesystem::path(ONTALIGN_FIXTURE_DIR) / file;
}

inline ontalign::Ontology fixture(const std::string& stem) {
  return ontalign::load_ontology(fixture_path(stem + ".owl"), stem);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ontalign::ConceptSet names(std::initializer_list<const char*> list) {
  ontalign::ConceptSet out;
  for (const char* s : list) out.insert(ontalign::ConceptId(s));
  return out;
}

}  // namespace testsupport
