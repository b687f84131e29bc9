#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "test_support.hpp"
#include "ultragrade/condition_y.hpp"
#include "ultragrade/structure.hpp"

using namespace ultragrade;
using Status = ConditionYVerdict::Status;

namespace {

std::vector<std::size_t> indices(const Presentation& p, const EdgePath& path) {
  auto all = p.all_edges();
  std::vector<std::size_t> out;
  for (auto e : path) out.push_back(std::find(all.begin(), all.end(), e) - all.begin());
  return out;
}

}  // namespace

TEST_CASE("condition Y on the named examples") {
  CHECK(decide_condition_y(test::load("ef.ug")).status == Status::Holds);
  CHECK(decide_condition_y(test::load("single_loop.ug")).status == Status::Holds);
  CHECK(check_condition_y_bounded(test::load("single_loop.ug")).status == Status::HoldsByNoSources);
  CHECK(check_condition_y_bounded(test::load("non_row_finite.ug")).status == Status::HoldsByNoSources);

  auto ex2 = test::load("ex2.ug");
  auto v = check_condition_y_bounded(ex2, 40);
  REQUIRE(v.status == Status::ViolationUpToHorizon);
  REQUIRE(v.witness);
  CHECK(is_valid_infinite_path(ex2, *v.witness));
  CHECK(v.witness->edge_at(0) == test::edge(ex2, "e"));
  CHECK_FALSE(condition_y_witness(ex2, *v.witness, 1, 40));
}

TEST_CASE("bounded check delegates on finite input") {
  std::mt19937 rng(17);
  for (int i = 0; i < 50; ++i) {
    auto p = test::random_ultragraph(rng, {});
    auto bounded = check_condition_y_bounded(p, 5).status;
    if (structural_report(p).has_sources) {
      CHECK(bounded == decide_condition_y(p).status);
    } else {
      CHECK(bounded == Status::HoldsByNoSources);
    }
  }
}

TEST_CASE("finitely many edges never fail") {
  // x_i = x_j with i < j gives the replacement x_{j-i} .. x_{j-1} at k = i - 1.
  auto p = parse_presentation(
      "ultragraph g\nvertex a\nvertex b\nvertex c\n"
      "edge e : a -> { b }\nedge f : b -> { c }\nedge g : c -> { b }\n");
  CHECK(decide_condition_y(p).status == Status::Holds);
  auto fam = parse_presentation(
      "ultragraph g\nvertex a\nvertex_family y infinite\nedge e : a -> { y[*] }\nedge l : a -> { a }\n");
  CHECK(decide_condition_y(fam).status == Status::Holds);
}

TEST_CASE("lasso checker rejects good and broken lassos") {
  auto p = test::load("ef.ug");
  auto g = test::to_masks(p);
  CHECK_FALSE(test::is_bad_lasso(g, {0}, {1}));
  CHECK_FALSE(test::is_bad_lasso(g, {}, {0}));
}

TEST_CASE("decide_condition_y matches the subset oracle") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 300; ++i) {
    auto p = test::random_ultragraph(rng, {});
    auto g = test::to_masks(p);
    auto v = decide_condition_y(p);
    bool holds = v.status == Status::Holds || v.status == Status::HoldsByNoSources;
    CAPTURE(print_presentation(p));
    REQUIRE(holds == test::condition_y_oracle(g));
    CHECK(v.status != Status::Fails);
    if (v.status == Status::Fails) {
      REQUIRE(v.witness);
      REQUIRE(v.witness->tail == InfinitePath::Tail::Cycle);
      CHECK(test::is_bad_lasso(g, indices(p, v.witness->prefix), indices(p, v.witness->cycle)));
    }
  }
}

TEST_CASE("length profile matches mask iteration") {
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    auto p = test::random_ultragraph(rng, {});
    auto g = test::to_masks(p);
    auto prof = incoming_length_profile(p);
    auto vs = p.vertices();
    std::uint64_t s = test::reach_one(g);
    for (std::uint64_t l = 1; l < 80; ++l) {
      for (std::size_t j = 0; j < vs.size(); ++j) REQUIRE(prof.of(vs[j]).contains(l) == bool(s >> j & 1));
      s = test::next_reach(g, s);
    }
    CHECK_FALSE(prof.of(vs[0]).contains(0));
  }
}

TEST_CASE("incoming_path returns a path of the requested length") {
  std::mt19937 rng(8);
  for (int i = 0; i < 100; ++i) {
    auto p = test::random_ultragraph(rng, {});
    auto prof = incoming_length_profile(p);
    for (auto v : p.vertices()) {
      for (std::uint64_t l = 1; l < 10; ++l) {
        auto path = incoming_path(p, v, l);
        REQUIRE(bool(path) == prof.of(v).contains(l));
        if (path) {
          CHECK(path->size() == l);
          CHECK(p.is_path(*path));
          CHECK(p.range(path->back()).contains(v));
        }
      }
    }
  }
}

TEST_CASE("m-version witnesses exist when Y holds") {
  std::mt19937 rng(31);
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    auto p = test::random_ultragraph(rng, {.max_vertices = 4, .max_edges = 6, .no_sinks = true});
    if (decide_condition_y(p).status != Status::Holds) continue;
    auto prof = incoming_length_profile(p);
    std::uint64_t bound = prof.preperiod + 2 * prof.period + 1;
    // Lassos: every edge followed by a cycle of length <= 2 found greedily.
    for (auto e : p.all_edges()) {
      for (auto f : p.out_edges(p.source(e))) {
        if (!p.composable(f, f) && !(p.composable(e, f) && p.composable(f, e))) continue;
        InfinitePath x = p.composable(f, f) ? InfinitePath::lasso({e}, {f})
                                            : InfinitePath::lasso({}, {e, f});
        if (!is_valid_infinite_path(p, x)) continue;
        for (std::uint64_t m = 1; m <= 3; ++m) {
          auto w = condition_y_witness(p, x, m, bound + 8);
          REQUIRE(w);
          CHECK(w->alpha.size() == w->k + m);
          CHECK(p.is_path(w->alpha));
          CHECK(is_valid_infinite_path(p, prepend(w->alpha, shift_path(x, w->k))));
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("condition Y transfers to the associated graph") {
  std::mt19937 rng(77);
  for (int i = 0; i < 100; ++i) {
    auto p = test::random_ultragraph(rng, {});
    auto eg = build_associated_graph(p);
    CHECK(decide_condition_y(p).status == decide_condition_y(eg).status);
  }
}
