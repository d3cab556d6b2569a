#include "doctest.h"

#include "ontalign/errors.hpp"
#include "ontalign/taxonomy.hpp"
#include "support/fixtures.hpp"

using namespace ontalign;
using testsupport::fixture;
using testsupport::names;

TEST_CASE("taxonomy: ancestors") {
  const auto a = fixture("A");
  const auto b = fixture("B");
  CHECK(ancestors(a, ConceptId("FullProfessor")) == names({"Faculty", "Employee", "Person"}));
  CHECK(ancestors(b, ConceptId("Conference")) == names({"Publication"}));
  CHECK(ancestors(a, ConceptId("Person")).empty());
  CHECK_THROWS_AS(ancestors(a, ConceptId("Nope")), NotFoundError);
}

TEST_CASE("taxonomy: descendants") {
  CHECK(descendants(fixture("D"), ConceptId("PhDStudent")) == names({"LocalStudent", "HEC_Student"}));
  CHECK(descendants(fixture("B"), ConceptId("Department")) == names({"OldBlock", "NewBlock"}));
  CHECK(descendants(fixture("A"), ConceptId("Lecturer")).empty());
  CHECK_THROWS_AS(descendants(fixture("A"), ConceptId("Nope")), NotFoundError);
}

TEST_CASE("taxonomy: siblings") {
  CHECK(siblings(fixture("A"), ConceptId("Department")) == names({"ResearchCentre"}));
  CHECK(siblings(fixture("C"), ConceptId("PhDStudent")) == names({"MPhilStudent"}));
  CHECK(siblings(fixture("C"), ConceptId("Student")).empty());
  // Roots are siblings of one another.
  CHECK(siblings(fixture("A"), ConceptId("Person")) == names({"Organization", "Publication"}));
  CHECK_THROWS_AS(siblings(fixture("A"), ConceptId("Nope")), NotFoundError);
}

TEST_CASE("taxonomy: leaves") {
  CHECK(leaves_under(fixture("A"), ConceptId("Lecturer")) == names({"Lecturer"}));
  CHECK(leaves_under(fixture("D"), ConceptId("PhDStudent")) == names({"LocalStudent", "HEC_Student"}));
  CHECK(leaves_under(fixture("A"), ConceptId("Conference")) == names({"Conference"}));
  CHECK_THROWS_AS(leaves_under(fixture("A"), ConceptId("Nope")), NotFoundError);
}

TEST_CASE("taxonomy: build_contexts") {
  const auto a = fixture("A");
  const auto table = build_contexts(a);
  CHECK(table.size() == a.concepts().size());
  const auto& dept = table.at("Department");
  CHECK(dept.supc == names({"Organization", "EducationOrganization", "University"}));
  CHECK(dept.root_path == dept.supc);
  CHECK(dept.direct_supers == names({"University"}));
  CHECK(dept.subc.empty());
  CHECK(dept.leaves == names({"Department"}));
  CHECK_THROWS_AS(table.at("Nope"), NotFoundError);

  const auto empty = build_contexts(fixture("empty"));
  CHECK(empty.size() == 0);

  const auto order = order_by_depth(dept.supc, depths(a));
  CHECK(order == std::vector<ConceptId>{ConceptId("Organization"), ConceptId("EducationOrganization"),
                                        ConceptId("University")});
}

TEST_CASE("taxonomy: detect_cycles") {
  const std::set<SubclassEdge> two{{ConceptId("A"), ConceptId("B")}, {ConceptId("B"), ConceptId("A")}};
  CHECK(detect_cycles(two) == std::vector<std::vector<ConceptId>>{{ConceptId("A"), ConceptId("B")}});

  const std::set<SubclassEdge> self{{ConceptId("S"), ConceptId("S")}};
  CHECK(detect_cycles(self) == std::vector<std::vector<ConceptId>>{{ConceptId("S")}});

  // Shortest cycle through the smallest member of the component.
  const std::set<SubclassEdge> tri{{ConceptId("A"), ConceptId("B")},
                                   {ConceptId("B"), ConceptId("C")},
                                   {ConceptId("C"), ConceptId("A")},
                                   {ConceptId("B"), ConceptId("A")},
                                   {ConceptId("X"), ConceptId("A")}};
  CHECK(detect_cycles(tri) == std::vector<std::vector<ConceptId>>{{ConceptId("A"), ConceptId("B")}});

  for (const char* stem : {"A", "B", "C", "D", "travel", "empty"}) CHECK(detect_cycles(fixture(stem)).empty());
}
