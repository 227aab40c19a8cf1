#include <random>

#include "doctest.h"
#include "szf/generators.hpp"
#include "szf/minimize.hpp"
#include "test_oracles.hpp"

using namespace szf;
using szf::testing::brute_minimum;
using szf::testing::naive_branched_forces;
using szf::testing::naive_signed_forces;

TEST_CASE("colex subset enumeration") {
  std::vector<std::uint64_t> seen;
  for_each_k_subset(5, 2, [&](VertexSet s) {
    seen.push_back(s.bits());
    return true;
  });
  CHECK(seen.size() == 10);
  CHECK(seen.front() == 0b00011);
  CHECK(seen[1] == 0b00101);
  CHECK(seen[2] == 0b00110);
  CHECK(seen.back() == 0b11000);
  CHECK(std::is_sorted(seen.begin(), seen.end()));

  int count = 0;
  for_each_k_subset(4, 0, [&](VertexSet s) {
    CHECK(s.empty());
    ++count;
    return true;
  });
  CHECK(count == 1);
  for_each_k_subset(3, 4, [&](VertexSet) { return ++count, true; });
  CHECK(count == 1);
}

TEST_CASE("classical forcing numbers of standard families") {
  CHECK(zero_forcing_number(path_graph(7)).value == 1);
  CHECK(zero_forcing_number(cycle_graph(6)).value == 2);
  CHECK(zero_forcing_number(complete_graph(5)).value == 4);
  CHECK(zero_forcing_number(Graph(3)).value == 3);
  CHECK(zero_forcing_number(Graph(0)).value == 0);
  CHECK(zero_forcing_number(hypercube(3)).value == 4);
  CHECK(zero_forcing_number(line_graph(complete_graph(5)).graph).value == 7);
}

TEST_CASE("results carry a verified minimal witness") {
  const Graph q3 = hypercube(3);
  const auto z = zero_forcing_number(q3);
  CHECK(z.witness.size() == z.value);
  CHECK(classical_derived(q3, z.witness) == q3.vertices());
  REQUIRE(std::holds_alternative<Transcript>(z.certificate));
  CHECK(verify_transcript(z_pattern_of_graph(q3), std::get<Transcript>(z.certificate)));

  const SignPattern p = z_pattern_of_graph(q3);
  const auto zs = signed_zero_forcing_number(p);
  CHECK(zs.value == 3);
  CHECK(verify_transcript(p, std::get<Transcript>(zs.certificate)));
  // The witness is the colex-first forcing set of its size.
  bool earlier = false;
  for_each_k_subset(8, zs.value, [&](VertexSet s) {
    if (s == zs.witness) return false;
    if (naive_signed_forces(p, s)) earlier = true;
    return true;
  });
  CHECK_FALSE(earlier);
}

TEST_CASE("Hadamard numbers") {
  const SignPattern h = hadamard_pattern();
  const auto zs = signed_zero_forcing_number(h);
  CHECK(zs.value == 2);
  CHECK(zs.witness == VertexSet{0, 1});
  const auto zb = branched_number(h, 1);
  CHECK(zb.value == 1);
  REQUIRE(std::holds_alternative<BranchCertificate>(zb.certificate));
  CHECK(verify_branch_certificate(h, std::get<BranchCertificate>(zb.certificate), 1));
  CHECK(branched_number(h, 0).value == 2);
}

TEST_CASE("minimisation matches brute force over all subsets") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const SignPattern p = z_pattern_of_graph(g);
      CHECK(zero_forcing_number(g).value ==
            brute_minimum(n, [&](VertexSet s) { return classical_derived(g, s) == g.vertices(); }));
      CHECK(signed_zero_forcing_number(p).value ==
            brute_minimum(n, [&](VertexSet s) { return naive_signed_forces(p, s); }));
      CHECK(branched_number(p, 1).value ==
            brute_minimum(n, [&](VertexSet s) { return naive_branched_forces(p, s, 1); }));
    }
  }
}

TEST_CASE("signed number never exceeds the classical one") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : all_graphs(n)) {
      MinimizeOptions opts;
      opts.prune = true;
      const int z = zero_forcing_number(g).value;
      const int zs = signed_zero_forcing_number(z_pattern_of_graph(g), opts).value;
      CHECK(zs <= z);
    }
  }
}

TEST_CASE("branched numbers decrease with the split budget") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const SignPattern p = z_pattern_of_graph(random_graph(6, 0.45, rng()));
    const int zs = signed_zero_forcing_number(p).value;
    const int b0 = branched_number(p, 0).value;
    const int b1 = branched_number(p, 1).value;
    const int b2 = branched_number(p, 2).value;
    CHECK(b0 == zs);
    CHECK(b1 <= b0);
    CHECK(b2 <= b1);
  }
}

TEST_CASE("trees") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph t = random_tree(9, seed);
    const int z = zero_forcing_number(t).value;
    CHECK(signed_zero_forcing_number(z_pattern_of_graph(t)).value <= z);
  }
}

TEST_CASE("thread count and pruning do not change results") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_graph(9, 0.4, rng());
    const SignPattern p = z_pattern_of_graph(g);
    const auto base = signed_zero_forcing_number(p);
    for (int threads : {2, 4}) {
      for (bool prune : {false, true}) {
        MinimizeOptions opts;
        opts.threads = threads;
        opts.prune = prune;
        const auto r = signed_zero_forcing_number(p, opts);
        CHECK(r.value == base.value);
        CHECK(r.witness == base.witness);
      }
    }
    MinimizeOptions opts;
    opts.threads = 3;
    CHECK(zero_forcing_number(g, opts).witness == zero_forcing_number(g).witness);
  }
}

TEST_CASE("large instance: L(K6)") {
  const SignPattern p = z_pattern_of_graph(line_graph(complete_graph(6)).graph);
  MinimizeOptions opts;
  opts.prune = true;
  const auto r = signed_zero_forcing_number(p, opts);
  CHECK(r.value == 9);
  CHECK(verify_transcript(p, std::get<Transcript>(r.certificate)));
}
