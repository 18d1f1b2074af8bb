// Property checks over randomly generated braid closures, plus the
// concurrency contract.

#include <algorithm>
#include <random>
#include <thread>

#include "doctest.h"
#include "skein/bounds.hpp"
#include "skein/diagram.hpp"
#include "skein/errors.hpp"
#include "skein/generators.hpp"
#include "skein/homfly.hpp"
#include "skein/seifert.hpp"
#include "support/bracket_oracle.hpp"
#include "support/random_diagrams.hpp"

using skein::LaurentPoly2;
using skein::LinkDiagram;
using skein::ResolveMode;

namespace {

std::vector<LinkDiagram> random_sample(unsigned seed, int count) {
  std::mt19937 rng(seed);
  std::vector<LinkDiagram> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i)
    out.push_back(skein_tests::random_braid_diagram(rng));
  return out;
}

}  // namespace

TEST_CASE("random braid closures: engine vs bracket oracle") {
  for (const LinkDiagram& d : random_sample(2026, 40)) {
    LaurentPoly2 p = skein::homfly(d);
    auto lhs = skein_tests::jones_from_homfly(p, d.component_count());
    auto rhs = skein_tests::jones_from_bracket(d);
    CHECK_MESSAGE(lhs == rhs, "pd: ", d.pd_text());
  }
}

TEST_CASE("random braid closures: skein relation and mirror identity") {
  std::mt19937 rng(11);
  for (const LinkDiagram& d : random_sample(7, 30)) {
    LaurentPoly2 p = skein::homfly(d);
    CHECK(skein::homfly(d.mirror()) == p.mirror_image());
    if (d.crossing_count() > 0) {
      std::uniform_int_distribution<int> pick(0, d.crossing_count() - 1);
      int i = pick(rng);
      LaurentPoly2 p_switch = skein::homfly(d.resolved(i, ResolveMode::kSwitch));
      LaurentPoly2 p_smooth = skein::homfly(d.resolved(i, ResolveMode::kSmooth));
      const LaurentPoly2& p_pos = d.crossings()[i].sign > 0 ? p : p_switch;
      const LaurentPoly2& p_neg = d.crossings()[i].sign > 0 ? p_switch : p;
      CHECK(p_pos.mono_mul(-1, 0) - p_neg.mono_mul(1, 0) ==
            p_smooth.mono_mul(0, 1));
    }
  }
}

TEST_CASE("random braid closures: graph-side identities") {
  for (const LinkDiagram& d : random_sample(5150, 40)) {
    skein::SignedGraph g = skein::SignedGraph::from_diagram(d);
    auto st = d.stats();
    CHECK(g.vertex_count() == st.seifert_circles);
    CHECK(g.edge_count() == st.crossings);
    CHECK(g.signed_edge_sum() == st.writhe);
    CHECK(g.positive_subgraph_components() == st.s_plus);

    auto a = skein::analyze(g);
    int rank_sum = 0;
    for (const auto& b : a.blocks) rank_sum += b.rank;
    CHECK(rank_sum == a.rank);

    if (d.connected_count() == 1 && a.homogeneous)
      CHECK(a.eps_rank_sum() == skein::eps_rank_sum_from_stats(d));
    if (d.connected_count() == 1 && d.is_alternating() && d.is_reduced() &&
        d.crossing_count() > 0)
      CHECK(skein::spanning_tree_signature(d) == a.eps_rank_sum());
  }
}

TEST_CASE("random braid closures: canonical code is relabel-invariant") {
  std::mt19937 rng(99);
  for (const LinkDiagram& d : random_sample(321, 25)) {
    if (d.crossing_count() == 0) continue;
    int top = 2 * d.crossing_count();
    std::vector<skein::Arc> perm(top + 1);
    for (int a = 1; a <= top; ++a) perm[a] = a;
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    // spread the labels out to exercise non-consecutive ids
    for (int a = 1; a <= top; ++a) perm[a] = perm[a] * 3 + 1;
    std::vector<std::array<skein::Arc, 4>> tuples;
    for (const auto& c : d.crossings()) {
      std::array<skein::Arc, 4> m{};
      for (int s = 0; s < 4; ++s) m[s] = perm[c.arcs[s]];
      tuples.push_back(m);
    }
    std::shuffle(tuples.begin(), tuples.end(), rng);
    LinkDiagram relabeled =
        LinkDiagram::from_tuples(tuples, d.unknot_components());
    CHECK(relabeled.canonical_code() == d.canonical_code());
  }
}

TEST_CASE("random split unions factor through delta") {
  std::mt19937 rng(4242);
  LaurentPoly2 delta = LaurentPoly2::delta_power(1);
  for (int i = 0; i < 10; ++i) {
    LinkDiagram a = skein_tests::random_braid_diagram(rng, 3, 6);
    LinkDiagram b = skein_tests::random_braid_diagram(rng, 3, 6);
    CHECK(skein::homfly(skein::gen::disjoint_union(a, b)) ==
          delta * skein::homfly(a) * skein::homfly(b));
  }
}

TEST_CASE("diagram values are safely shared across threads") {
  LinkDiagram d = skein::gen::torus(3, 4);
  LaurentPoly2 expected = skein::homfly(d);
  std::vector<LaurentPoly2> results(8);
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&d, &results, t] {
      // each thread reads the shared immutable diagram and computes
      // independently; results must be bit-identical
      results[t] = skein::homfly(d);
    });
  for (auto& w : workers) w.join();
  for (const auto& r : results) CHECK(r == expected);
}
