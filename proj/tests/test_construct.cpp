#include <doctest.h>

#include "ramsey/construct.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/serialize.hpp"
#include "support/oracle.hpp"

using namespace ramsey;

TEST_CASE("parameter selection at epsilon = 0.5") {
  ConstructionParams p = select_params(std::uint64_t{1} << 16, 0.5);
  // (log2 c + 2)/(2c): c=4 gives exactly 0.5, first strict winner is c=5
  CHECK(p.c == 5);
  CHECK(p.l == 1);  // ceil(sqrt(16)/5)
  CHECK(p.k == 65536);
  CHECK(p.base_bound == 48);
  CHECK(p.final_bound == 48);
}

TEST_CASE("parameter selection scans every integer c") {
  // smallest integer c with (log2 c + 2)/(2c) < 0.05 is 84:
  // c=83 gives 0.050452..., c=84 gives 0.049954...
  ConstructionParams p = select_params(std::uint64_t{1} << 16, 0.05);
  CHECK(p.c == 84);
  CHECK(p.l == 1);
}

TEST_CASE("parameter selection guards") {
  CHECK_THROWS_AS(select_params(15, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(select_params(100, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(select_params(100, 1e-6), ParameterError);  // needs c > 2^20
}

TEST_CASE("k is minimal with k^l >= n") {
  ConstructionParams p = select_params(1000, 2.0);
  // epsilon = 2: c = 2 admissible; l = ceil(sqrt(log2 1000)/2) = 2; 32^2 = 1024
  CHECK(p.c == 2);
  CHECK(p.l == 2);
  CHECK(p.k == 32);
  CHECK(p.final_bound == 225);
  CHECK(p.sharp_bound == 196);
}

TEST_CASE("guaranteed bound report") {
  ConstructionParams p = select_params(256, 0.5);
  p.k = 16;
  p.l = 2;
  p.base_bound = 12;
  p.final_bound = 144;
  p.sharp_bound = 121;
  BoundCheck b = guaranteed_bound(p);
  CHECK(b.guaranteed == 144);
  CHECK(b.target == 19);  // ceil(2^(0.5*sqrt(8)*3))
  CHECK(!b.binding);      // the asymptotic guarantee is not yet binding here

  // l = 1: the guarantee is just base_bound
  ConstructionParams q = select_params(std::uint64_t{1} << 25, 0.5);
  CHECK(q.l == 1);
  CHECK(q.final_bound == static_cast<std::uint64_t>(q.base_bound));

  ConstructionParams r = select_params(64, 0.5);
  r.k = 32;
  r.l = 1;
  r.base_bound = 15;
  r.final_bound = 15;
  r.sharp_bound = 14;
  CHECK(guaranteed_bound(r).guaranteed == 15);
}

TEST_CASE("pipeline smoke test: n = 25 via a 5-cycle base") {
  // only the 5-cycles satisfy omega, alpha < 3 on 5 vertices, so the search
  // must walk seeds until one expands to a C5 isomorph
  ConstructOptions opt;
  opt.k = 5;
  opt.l = 2;
  opt.base_bound = 3;
  opt.cap = std::uint64_t{1} << 22;
  opt.verify = VerifyMode::exact;
  ConstructionResult res = construct_ramsey(25, 0.5, opt);
  CHECK(res.graph.order() == 25);
  CHECK(!res.truncated);
  CHECK(res.outcome.report.passed);
  REQUIRE(res.final_report.has_value());
  CHECK(res.final_report->omega == 4);
  CHECK(res.final_report->alpha == 4);
  CHECK(res.final_report->passed);
  CHECK(res.params.sharp_bound == 4);
  CHECK(res.params.final_bound == 9);
}

TEST_CASE("pipeline with truncation") {
  ConstructOptions opt;
  opt.k = 16;
  opt.l = 2;
  opt.cap = 10000;
  ConstructionResult full = construct_ramsey(256, 0.5, opt);
  CHECK(full.graph.order() == 256);
  CHECK(!full.truncated);
  CHECK(full.params.base_bound == 12);

  ConstructionResult cut = construct_ramsey(200, 0.5, opt);
  CHECK(cut.graph.order() == 200);
  CHECK(cut.truncated);
  // the truncation is the induced prefix of the full product
  CHECK(induced_subgraph(full.graph, VertexSet::range(200)) == cut.graph);
}

TEST_CASE("pipeline is deterministic") {
  ConstructOptions opt;
  opt.k = 16;
  opt.l = 2;
  opt.cap = 10000;
  ConstructionResult a = construct_ramsey(256, 0.5, opt);
  ConstructionResult b = construct_ramsey(256, 0.5, opt);
  CHECK(encode(a.graph, Format::adjacency_bits) == encode(b.graph, Format::adjacency_bits));
  CHECK(provenance_json(a, Format::adjacency_bits) == provenance_json(b, Format::adjacency_bits));
}

TEST_CASE("pipeline via conditional expectations") {
  ConstructOptions opt;
  opt.k = 16;
  opt.l = 2;
  opt.method = SearchMethod::conditional_expectations;
  ConstructionResult res = construct_ramsey(256, 0.5, opt);
  CHECK(res.graph.order() == 256);
  CHECK(res.outcome.method == SearchMethod::conditional_expectations);
  CHECK(!res.space.has_value());
}

TEST_CASE("pipeline option validation") {
  ConstructOptions opt;
  opt.k = 5;
  opt.l = 2;
  CHECK_THROWS_AS(construct_ramsey(26, 0.5, opt), std::invalid_argument);  // 5^2 < 26
  ConstructOptions bad_k;
  bad_k.k = 3;
  CHECK_THROWS_AS(construct_ramsey(25, 0.5, bad_k), std::invalid_argument);
  ConstructOptions bad_l;
  bad_l.l = 0;
  CHECK_THROWS_AS(construct_ramsey(25, 0.5, bad_l), std::invalid_argument);
}

TEST_CASE("provenance json carries the documented keys") {
  ConstructOptions opt;
  opt.k = 16;
  opt.l = 2;
  opt.cap = 10000;
  opt.verify = VerifyMode::decision;
  ConstructionResult res = construct_ramsey(256, 0.5, opt);
  std::string j = provenance_json(res, Format::dimacs);
  for (const char* key : {"\"tool\"", "\"version\"", "\"params\"", "\"bound_check\"", "\"base\"",
                          "\"space\"", "\"verification\"", "\"truncated\"", "\"format\"",
                          "\"seed\"", "\"seeds_tried\"", "\"method\""}) {
    CAPTURE(key);
    CHECK(j.find(key) != std::string::npos);
  }
}
