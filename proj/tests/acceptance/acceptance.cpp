// Runs every acceptance criterion and prints one PASS/FAIL line for each.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "random_algebra.hpp"
#include "random_ultragraph.hpp"
#include "test_support.hpp"
#include "ultragrade/certificates.hpp"
#include "ultragrade/classifier.hpp"
#include "ultragrade/condition_y.hpp"
#include "ultragrade/error.hpp"
#include "ultragrade/expression.hpp"
#include "ultragrade/lattice.hpp"
#include "ultragrade/partial_action.hpp"
#include "ultragrade/report.hpp"
#include "ultragrade/structure.hpp"

using namespace ultragrade;
using Clock = std::chrono::steady_clock;
using YStatus = ConditionYVerdict::Status;

namespace {

struct Result {
  bool pass = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail.str("");
      detail << "first failure: " << what;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Sum a_i b_i against p_v, with the degree of every factor.
bool factorization_ok(const Presentation& p, const Factorization& f) {
  AlgebraElement sum = AlgebraElement::zero(p);
  for (const auto& [a, b] : f.pairs) {
    if (a.is_zero() || b.is_zero()) return false;
    if (z_degree(a) != f.n || z_degree(b) != -f.n) return false;
    sum += a * b;
  }
  return f.verified && equal_mod_ck2(sum, AlgebraElement::vertex(p, f.target));
}

std::vector<std::pair<std::string, Presentation>> corpus() {
  std::vector<std::pair<std::string, Presentation>> out;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(ULTRAGRADE_DATA_DIR))
    if (entry.path().extension() == ".ug") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) out.emplace_back(f.filename().string(), test::load(f.filename().string()));
  return out;
}

bool holds(YStatus s) { return s == YStatus::Holds || s == YStatus::HoldsByNoSources; }

Result ex2_verdicts() {
  Result r;
  auto t0 = Clock::now();
  auto p = test::load("ex2.ug");
  auto y = check_condition_y_bounded(p, 40);
  r.require(y.status == YStatus::ViolationUpToHorizon, "Condition (Y) is not ViolationUpToHorizon");
  r.require(y.witness && is_valid_infinite_path(p, *y.witness), "witness is not an infinite path");
  auto doc = analyze_json(p, {.horizon = 40, .ck2_depth = kDefaultCk2Depth});
  r.require(doc["strong_z"] == "No", "strong_z is not No");
  r.require(doc["eps_strong_z"] == "No", "eps_strong_z is not No");
  r.require(doc["unital"] == false, "unital is not false");
  r.require(doc["strong_f"] == "No" && doc["eps_strong_f"] == "No" && doc["gauge_saturated"] == "No",
            "free group or gauge verdict is not No");
  double s = seconds_since(t0);
  r.require(s < 5.0, "took longer than 5 s");
  if (r.pass) r.detail << "cond-y ViolationUpToHorizon at K=40, witness " << infinite_path_label(p, *y.witness)
                       << "; all verdicts No; " << s << " s";
  return r;
}

Result ef_example() {
  Result r;
  auto p = test::load("ef.ug");
  r.require(decide_condition_y(p).status == YStatus::Holds, "exact Condition (Y) is not Holds");
  r.require(structural_report(p).has_sources, "u is not a source");
  auto v = classify_strong_z(p);
  r.require(v.status == VerdictStatus::Yes, "strong-Z is not Yes");
  int count = 0;
  for (const char* name : {"u", "v"}) {
    for (int n : {1, -1}) {
      auto f = strong_factorization(p, test::vref(p, name), n);
      r.require(factorization_ok(p, f), std::string("factorization of p_") + name + " for n=" + std::to_string(n));
      ++count;
    }
  }
  if (r.pass) r.detail << "Y Holds with source u; strong-Z Yes; " << count << " factorizations verified";
  return r;
}

Result non_row_finite_example() {
  Result r;
  auto p = test::load("non_row_finite.ug");
  auto s = structural_report(p);
  r.require(!s.has_sinks, "has sinks");
  r.require(!s.has_sources, "has sources");
  r.require(!s.row_finite, "row-finite");
  r.require(check_condition_y_bounded(p).status == YStatus::HoldsByNoSources, "Y is not HoldsByNoSources");
  r.require(classify_strong_z(p).status == VerdictStatus::No, "strong-Z is not No");
  r.require(gauge_saturation(p).status == VerdictStatus::No, "gauge is not No");
  if (r.pass) r.detail << "no sinks, no sources, not row-finite; Y HoldsByNoSources; strong-Z No; gauge No";
  return r;
}

Result free_group_and_one_edge() {
  Result r;
  auto loop = test::load("single_loop.ug");
  r.require(classify_strong_f(loop).status == VerdictStatus::Yes, "single loop strong-F is not Yes");
  auto one = test::load("one_edge.ug");
  r.require(classify_strong_f(one).status == VerdictStatus::No, "one edge strong-F is not No");
  auto ez = classify_eps_strong_z(one);
  r.require(ez.status == VerdictStatus::Yes, "one edge eps-Z is not Yes");
  auto e = test::edge(one, "e");
  auto eps1 = AlgebraElement::s(one, e) * AlgebraElement::s_star(one, e);
  auto epsm1 = AlgebraElement::projection(one, one.range(e));
  r.require(epsilon_candidate(one, 1) == eps1, "eps_1 is not s_e s_e^*");
  r.require(epsilon_candidate(one, -1) == epsm1, "eps_-1 is not p_r(e)");
  r.require(verify_epsilon(one, 1, eps1).ok, "eps_1 fails verification");
  r.require(verify_epsilon(one, -1, epsm1).ok, "eps_-1 fails verification");
  std::size_t two_edge = 0;
  for (auto name : {"ef.ug", "two_cycle.ug", "two_loops.ug", "two_range.ug"}) {
    auto p = test::load(name);
    r.require(classify_strong_f(p).status == VerdictStatus::No, std::string(name) + " strong-F is not No");
    ++two_edge;
  }
  std::mt19937 rng(404);
  while (two_edge < 104) {
    auto p = test::random_ultragraph(rng, {.max_vertices = 4, .max_edges = 2});
    if (p.all_edges().size() != 2) continue;
    r.require(classify_strong_f(p).status == VerdictStatus::No, "random two-edge strong-F is not No");
    ++two_edge;
  }
  if (r.pass) r.detail << "single loop Yes; one edge strong-F No, eps-Z Yes with eps_1, eps_-1 verified; "
                       << two_edge << " two-edge ultragraphs No";
  return r;
}

Result condition_y_oracle() {
  Result r;
  std::mt19937 rng(5005);
  int n = 0;
  for (; n < 500; ++n) {
    auto p = test::random_ultragraph(rng, {.max_vertices = 6, .max_edges = 8});
    bool lib = holds(decide_condition_y(p).status);
    r.require(lib == test::condition_y_oracle(test::to_masks(p)), "disagreement on " + print_presentation(p));
  }
  if (r.pass) r.detail << n << " instances, 0 disagreements";
  return r;
}

Result transfer() {
  Result r;
  std::mt19937 rng(6006);
  int n = 0;
  for (; n < 200; ++n) {
    auto p = test::random_ultragraph(rng, {.max_vertices = 6, .max_edges = 8, .no_sinks = n % 2 == 0});
    auto eg = build_associated_graph(p);
    r.require(check_condition_y_bounded(p).status == check_condition_y_bounded(eg).status,
              "Y differs on " + print_presentation(p));
    ClassifierOptions opt;
    opt.factorization_vertices = 0;
    r.require(classify_strong_z(p, opt).status == classify_strong_z(eg, opt).status,
              "strong-Z differs on " + print_presentation(p));
  }
  if (r.pass) r.detail << n << " instances, Y and strong-Z identical for G and E_G";
  return r;
}

Result factorizations() {
  Result r;
  std::mt19937 rng(7007);
  int instances = 0, checked = 0;
  while (instances < 200) {
    auto p = test::random_ultragraph(rng, {.max_vertices = 6, .max_edges = 8, .no_sinks = true});
    ClassifierOptions opt;
    opt.factorization_vertices = 0;
    if (classify_strong_z(p, opt).status != VerdictStatus::Yes) continue;
    ++instances;
    for (auto v : p.vertices()) {
      for (int n : {1, -1}) {
        try {
          r.require(factorization_ok(p, strong_factorization(p, v, n)), "verification failed on " + print_presentation(p));
        } catch (const Error& e) {
          r.require(false, std::string(e.what()) + " on " + print_presentation(p));
        }
        ++checked;
      }
    }
  }
  if (r.pass) r.detail << instances << " strongly graded instances, " << checked << " factorizations verified";
  return r;
}

Result g0_oracle() {
  Result r;
  int files = 0;
  std::uint64_t subsets = 0;
  for (const auto& [name, p] : corpus()) {
    if (!p.vertices_finite() || p.vertex_count() > 10) continue;
    ++files;
    auto closure = g0_closure_finite(p);
    std::set<std::uint64_t> in(closure.begin(), closure.end());
    auto vs = p.vertices();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << vs.size()); ++m) {
      VertexSet a = p.empty_set();
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (m >> i & 1) a.insert(vs[i]);
      r.require(g0_contains(p, a).member == (in.count(m) > 0), name + " subset " + std::to_string(m));
      ++subsets;
    }
  }
  if (r.pass) r.detail << files << " corpus files, " << subsets << " subsets agree";
  return r;
}

Result isomorphism() {
  Result r;
  std::mt19937 rng(9009);
  int files = 0, monomials = 0;
  for (const auto& [name, p] : corpus()) {
    if (!p.is_finite() || p.all_edges().size() > 5) continue;
    ++files;
    PartialAction pa(p);
    for (const auto& c : pa.verify_generator_relations(3))
      r.require(c.pass, name + " relation " + c.relation + ": " + c.detail);
    if (p.all_edges().empty()) continue;
    for (int i = 0; i < 100;) {
      auto m = test::random_monomial(rng, p);
      if (m.is_zero()) continue;
      ++i;
      auto img = pa.phi(m);
      r.require(img.components.size() == 1 && img.components.begin()->first == f_degree(m),
                name + " tag mismatch for " + m.to_string());
      ++monomials;
    }
  }
  if (r.pass) r.detail << files << " corpus files pass all four relations at depth 3; " << monomials
                       << " monomial tags match";
  return r;
}

Result algebra_properties() {
  Result r;
  auto t0 = Clock::now();
  std::mt19937 rng(1010);
  int assoc = 0, invol = 0, degree = 0, units = 0;
  auto graph = [&] { return test::random_ultragraph(rng, {.max_vertices = 4, .max_edges = 5}); };
  while (assoc < 300) {
    auto p = graph();
    auto x = test::random_element(rng, p), y = test::random_element(rng, p), z = test::random_element(rng, p);
    r.require((x * y) * z == x * (y * z), "associativity on " + print_presentation(p));
    ++assoc;
  }
  while (invol < 300) {
    auto p = graph();
    auto x = test::random_element(rng, p), y = test::random_element(rng, p);
    r.require(star(star(x)) == x && star(x * y) == star(y) * star(x), "involution on " + print_presentation(p));
    ++invol;
  }
  while (degree < 300) {
    auto p = graph();
    auto x = test::random_monomial(rng, p), y = test::random_monomial(rng, p);
    auto xy = x * y;
    if (x.is_zero() || y.is_zero() || xy.is_zero()) continue;
    r.require(z_degree(xy) == z_degree(x) + z_degree(y), "z-degree additivity");
    r.require(f_degree(xy) == f_degree(x) * f_degree(y), "f-degree multiplicativity");
    ++degree;
  }
  while (units < 300) {
    auto p = graph();
    std::int64_t n = static_cast<std::int64_t>(test::pick(rng, 0, 2)) - 1;
    auto x = test::random_element(rng, p, 3, n);
    if (x.is_zero()) continue;
    r.require(x * t0_right_unit(x) == x && t0_left_unit(x) * x == x, "t0 unit for " + x.to_string());
    ++units;
  }
  double s = seconds_since(t0);
  r.require(s < 60.0, "took longer than 60 s");
  if (r.pass) r.detail << assoc << " associativity, " << invol << " involution, " << degree << " degree, " << units
                       << " unit cases; " << s << " s";
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Result()> run;
  };
  std::vector<Criterion> criteria = {
      {"ex2 verdicts", ex2_verdicts},
      {"e,f example", ef_example},
      {"non-row-finite example", non_row_finite_example},
      {"free group and one-edge grading", free_group_and_one_edge},
      {"Condition (Y) oracle", condition_y_oracle},
      {"transfer to E_G", transfer},
      {"strong factorizations", factorizations},
      {"G^0 oracle", g0_oracle},
      {"isomorphism verification", isomorphism},
      {"algebra properties", algebra_properties},
  };
  int failed = 0;
  auto t0 = Clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail.str("");
      r.detail << "exception: " << e.what();
    }
    if (!r.pass) ++failed;
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].name << ": " << r.detail.str()
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed in " << seconds_since(t0)
            << " s" << std::endl;
  return failed == 0 ? 0 : 1;
}
