#include <random>

#include "doctest.h"
#include "random_ultragraph.hpp"
#include "test_support.hpp"
#include "ultragrade/classifier.hpp"
#include "ultragrade/error.hpp"
#include "ultragrade/lattice.hpp"
#include "ultragrade/structure.hpp"

using namespace ultragrade;
using S = VerdictStatus;

namespace {

bool has_failed_reason(const GradingVerdict& v, const std::string& predicate) {
  for (auto& r : v.reasons)
    if (r.predicate == predicate && !r.supports) return true;
  return false;
}

}  // namespace

TEST_CASE("strong Z verdicts") {
  CHECK(classify_strong_z(test::load("single_loop.ug")).status == S::Yes);
  CHECK(classify_strong_z(test::load("ef.ug")).status == S::Yes);
  CHECK(classify_strong_z(test::load("two_cycle.ug")).status == S::Yes);
  CHECK(classify_strong_z(test::load("one_edge.ug")).status == S::No);

  auto nrf = classify_strong_z(test::load("non_row_finite.ug"));
  CHECK(nrf.status == S::No);
  CHECK(has_failed_reason(nrf, "row-finite"));
  CHECK_FALSE(has_failed_reason(nrf, "no sinks"));

  auto ex2 = classify_strong_z(test::load("ex2.ug"));
  CHECK(ex2.status == S::No);
  CHECK(has_failed_reason(ex2, "no sinks"));
  CHECK(has_failed_reason(ex2, "row-finite"));
  CHECK(has_failed_reason(ex2, "Condition (Y)"));
}

TEST_CASE("strong Z attaches verified factorizations") {
  auto v = classify_strong_z(test::load("ef.ug"));
  CHECK(v.factorizations.size() == 4);
  for (auto& f : v.factorizations) CHECK(f.verified);
  ClassifierOptions off;
  off.factorization_vertices = 0;
  CHECK(classify_strong_z(test::load("ef.ug"), off).factorizations.empty());
}

TEST_CASE("epsilon-strong Z verdicts") {
  CHECK(classify_eps_strong_z(test::load("ex2.ug")).status == S::No);
  CHECK(classify_eps_strong_z(test::load("non_row_finite.ug")).status == S::No);
  CHECK(classify_eps_strong_z(test::load("two_cycle.ug")).status == S::Yes);
  auto one = classify_eps_strong_z(test::load("one_edge.ug"));
  CHECK(one.status == S::Yes);
  REQUIRE(one.epsilon);
  CHECK(one.epsilon->found);
  CHECK(has_failed_reason(one, "every edge source lies in a range"));
  // The certificate search only tries projections in negative degrees.
  CHECK(classify_eps_strong_z(test::load("ef.ug")).status == S::Undetermined);
}

TEST_CASE("free group verdicts") {
  CHECK(classify_strong_f(test::load("single_loop.ug")).status == S::Yes);
  CHECK(classify_strong_f(test::load("one_edge.ug")).status == S::No);
  CHECK(classify_strong_f(test::load("ef.ug")).status == S::No);
  CHECK(classify_strong_f(test::load("two_loops.ug")).status == S::No);
  CHECK(classify_strong_f(test::load("ex2.ug")).status == S::No);
  CHECK(classify_eps_strong_f(test::load("one_edge.ug")).status == S::Yes);
  CHECK(classify_eps_strong_f(test::load("ex2.ug")).status == S::No);
  auto empty = parse_presentation("ultragraph g\nvertex u\n");
  for (auto fn : {classify_strong_f, classify_eps_strong_f}) {
    try {
      fn(empty);
      FAIL("expected NoEdges");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NoEdges);
    }
  }
}

TEST_CASE("gauge saturation follows strong Z") {
  for (auto name : {"single_loop.ug", "non_row_finite.ug", "ex2.ug", "one_edge.ug", "ef.ug"}) {
    auto p = test::load(name);
    CHECK(gauge_saturation(p).status == classify_strong_z(p).status);
  }
  CHECK(gauge_saturation(test::load("single_loop.ug")).status == S::Yes);
  CHECK(gauge_saturation(test::load("non_row_finite.ug")).status == S::No);
}

TEST_CASE("classifier invariants on random instances") {
  std::mt19937 rng(21);
  for (int i = 0; i < 100; ++i) {
    auto p = test::random_ultragraph(rng, {});
    auto eg = build_associated_graph(p);
    CHECK(classify_strong_z(p).status == classify_strong_z(eg).status);
    if (!p.all_edges().empty()) CHECK((classify_eps_strong_f(p).status == S::Yes) == is_unital(p));
    CHECK(gauge_saturation(p).status == classify_strong_z(p).status);
    auto ez = classify_eps_strong_z(p);
    CHECK(ez.status != S::No);  // finite and unital
  }
}
