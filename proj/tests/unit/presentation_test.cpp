#include <random>

#include "doctest.h"
#include "random_ultragraph.hpp"
#include "test_support.hpp"
#include "ultragrade/error.hpp"

using namespace ultragrade;

namespace {

ErrorCode parse_error(const std::string& text, int* line = nullptr) {
  try {
    parse_presentation(text);
  } catch (const Error& e) {
    if (line) *line = e.line();
    return e.code();
  }
  FAIL("parse succeeded: " << text);
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("corpus files round-trip through the printer") {
  for (auto name : {"single_loop.ug", "ef.ug", "one_edge.ug", "two_cycle.ug", "ex2.ug", "non_row_finite.ug",
                    "two_range.ug", "two_loops.ug", "sink_chain.ug", "shared_range.ug", "mixed_sinks.ug"}) {
    CAPTURE(name);
    auto p = test::load(name);
    auto text = print_presentation(p);
    auto q = parse_presentation(text);
    CHECK(q == p);
    CHECK(print_presentation(q) == text);
  }
}

TEST_CASE("random presentations round-trip") {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto p = test::random_ultragraph(rng, {});
    CHECK(parse_presentation(print_presentation(p)) == p);
  }
}

TEST_CASE("ex2 edges and ranges") {
  auto p = test::load("ex2.ug");
  CHECK_FALSE(p.vertices_finite());
  CHECK_FALSE(p.edges_finite());
  auto e = test::edge(p, "e");
  auto r = p.range(e);
  CHECK(r.contains(test::vref(p, "v[0]")));
  CHECK(r.contains(test::vref(p, "v[1]")));
  CHECK_FALSE(r.contains(test::vref(p, "v[2]")));
  CHECK(r.contains(test::vref(p, "w[17]")));
  auto f5 = test::edge(p, "f[5]");
  CHECK(p.source(f5) == test::vref(p, "v[4]"));
  CHECK(p.range(f5) == p.singleton(test::vref(p, "v[5]")));
  CHECK(p.out_edges(test::vref(p, "v[0]")).size() == 1);
  CHECK(p.out_edges(test::vref(p, "w[3]")).empty());
}

TEST_CASE("non-row-finite progression ranges") {
  auto p = test::load("non_row_finite.ug");
  auto r = p.range(test::edge(p, "e"));
  for (std::uint64_t n = 0; n < 20; ++n) CHECK(r.contains(test::vref(p, "y[" + std::to_string(n) + "]")) == (n % 2 == 0));
  CHECK(p.range(test::edge(p, "g[3]")) == p.singleton(test::vref(p, "y[7]")));
}

TEST_CASE("vertex set literals") {
  auto p = test::load("ex2.ug");
  auto s = parse_vertex_set(p, "u, v[2*n+1 for n>=1], w[*]");
  CHECK(s.contains(test::vref(p, "u")));
  CHECK(s.contains(test::vref(p, "v[3]")));
  CHECK_FALSE(s.contains(test::vref(p, "v[1]")));
  CHECK(s.contains(test::vref(p, "w[0]")));
  CHECK(parse_vertex_set(p, p.set_label(s)) == s);
}

TEST_CASE("parse errors carry codes and lines") {
  int line = 0;
  CHECK(parse_error("vertex u\n") == ErrorCode::Syntax);
  CHECK(parse_error("ultragraph g\nvertex u\nedge e : u -> { }\n", &line) == ErrorCode::EmptyRange);
  CHECK(line == 3);
  CHECK(parse_error("ultragraph g\nvertex u\nedge e : u -> { q }\n", &line) == ErrorCode::DanglingReference);
  CHECK(line == 3);
  CHECK(parse_error("ultragraph g\nvertex u\nedge e : q -> { u }\n") == ErrorCode::DanglingReference);
  CHECK(parse_error("ultragraph g\nvertex u\nvertex u\n") == ErrorCode::InvalidPresentation);
  CHECK(parse_error("ultragraph g\nvertex u\nedge e u -> { u }\n", &line) == ErrorCode::Syntax);
  CHECK(line == 3);
  CHECK(parse_error("ultragraph g\nvertex_family v finite 3\nedge e : v[3] -> { v[0] }\n") ==
        ErrorCode::DanglingReference);
}

TEST_CASE("comments and blank lines are ignored") {
  auto p = parse_presentation("# header comment\n\nultragraph g # trailing\nvertex u\n\nedge e : u -> { u } # loop\n");
  CHECK(p.name() == "g");
  CHECK(p.all_edges().size() == 1);
}
