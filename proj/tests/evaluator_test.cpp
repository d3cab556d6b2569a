#include "doctest.h"

#include "ontalign/evaluator.hpp"
#include "support/fixtures.hpp"

using namespace ontalign;

namespace {

ConceptPair p(const char* a, const char* b) { return {ConceptId(a), ConceptId(b)}; }

}  // namespace

TEST_CASE("evaluator: hand-counted cases") {
  const auto half = evaluate(PairSet{p("a", "a"), p("b", "b")}, {PairSet{p("a", "a"), p("c", "c")}});
  CHECK(half.precision == doctest::Approx(0.5));
  CHECK(half.recall == doctest::Approx(0.5));
  CHECK(half.f_measure == doctest::Approx(0.5));
  CHECK(half.true_positives == 1);
  CHECK(half.false_positives == 1);
  CHECK(half.false_negatives == 1);

  const PairSet three{p("a", "a"), p("b", "b"), p("c", "c")};
  const auto same = evaluate(three, {three});
  CHECK(same.precision == 1.0);
  CHECK(same.recall == 1.0);
  CHECK(same.f_measure == 1.0);

  const auto missing = evaluate(PairSet{p("a", "a"), p("b", "b")}, {three});
  CHECK(missing.precision == 1.0);
  CHECK(missing.recall == doctest::Approx(2.0 / 3.0));
  CHECK(missing.f_measure == doctest::Approx(0.8));

  const auto vacuous = evaluate(PairSet{}, {PairSet{}});
  CHECK(vacuous.precision == 1.0);
  CHECK(vacuous.recall == 1.0);
  CHECK(vacuous.f_measure == 1.0);

  const auto disjoint = evaluate(PairSet{p("x", "x")}, {PairSet{p("y", "y")}});
  CHECK(disjoint.precision == 0.0);
  CHECK(disjoint.recall == 0.0);
  CHECK(disjoint.f_measure == 0.0);
}

TEST_CASE("evaluator: studied pairs are recovered") {
  const auto aligned = align_indexed(testsupport::fixture("A"), testsupport::fixture("B"), MatchConfig{});
  const ReferenceAlignment ref{{p("FullProfessor", "FullProfessor"), p("Department", "Department"),
                                p("Conference", "Conference")}};
  PairSet restricted;
  for (const auto& pair : aligned.pair_set())
    if (ref.pairs.contains(pair)) restricted.insert(pair);
  CHECK(evaluate(restricted, ref).recall == 1.0);
  CHECK(evaluate(aligned, ref).recall == 1.0);
}

TEST_CASE("evaluator: identity reference") {
  const auto o = testsupport::fixture("C");
  const auto ref = identity_reference(o);
  CHECK(ref.pairs.size() == o.concepts().size());
  CHECK(evaluate(ref.pairs, ref).f_measure == 1.0);
}
