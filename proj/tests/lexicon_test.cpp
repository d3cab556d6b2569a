#include "doctest.h"

#include "ontalign/errors.hpp"
#include "ontalign/lexicon.hpp"

using namespace ontalign;

TEST_CASE("lexicon: normalize") {
  CHECK(normalize("HEC_Student") == "hecstudent");
  CHECK(normalize("  Full Professor ") == "fullprofessor");
  CHECK(normalize("hecstudent") == normalize("HEC_Student"));
  CHECK_THROWS_AS(normalize("  _ "), InvalidNameError);
  CHECK_THROWS_AS(normalize(""), InvalidNameError);
}

TEST_CASE("lexicon: camel tokens") {
  CHECK(camel_tokens("HECStudent") == std::vector<std::string>{"hec", "student"});
  CHECK(camel_tokens("PhDStudent") == std::vector<std::string>{"ph", "d", "student"});
  CHECK(camel_tokens("student_Union") == std::vector<std::string>{"student", "union"});
}

TEST_CASE("lexicon: equivalent") {
  const SynonymLexicon none;
  CHECK(equivalent("Department", "department", none));
  CHECK(equivalent("HEC_Student", "HECStudent", none));
  CHECK_FALSE(equivalent("Conference", "Publication", none));
  CHECK_FALSE(equivalent("Faculty", "Professor", none));

  const auto lex = SynonymLexicon::from_groups({{"faculty", "professor"}});
  CHECK(equivalent("Faculty", "Professor", lex));
  CHECK(equivalent("Professor", "FACULTY", lex));
  CHECK_FALSE(equivalent("Faculty", "Lecturer", lex));
}

TEST_CASE("lexicon: token matching is opt-in") {
  const SynonymLexicon plain;
  CHECK_FALSE(equivalent("StudentGrad", "GradStudent", plain));
  const auto tokens = plain.with_token_matching(true);
  CHECK(tokens.token_matching());
  CHECK(equivalent("StudentGrad", "GradStudent", tokens));
  CHECK(equivalent("Grad_Student", "GradStudent", tokens));
  CHECK_FALSE(equivalent("GradStudent", "UnderGradStudent", tokens));
}

TEST_CASE("lexicon: load_lexicon") {
  const auto lex = load_lexicon("a, b\nb, c\n");
  REQUIRE(lex.groups().size() == 1);
  CHECK(lex.groups()[0] == std::set<std::string>{"a", "b", "c"});
  CHECK(equivalent("A", "c", lex));

  const auto commented = load_lexicon("# synonyms\n\nFaculty, Professor , Teacher\nCollege,School\n");
  CHECK(commented.groups().size() == 2);
  CHECK(load_lexicon("").empty());

  try {
    load_lexicon("a, b\nlonely\n");
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(load_lexicon("a, _\n"), FormatError);
}
