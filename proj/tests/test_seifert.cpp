#include <set>

#include "doctest.h"
#include "skein/diagram.hpp"
#include "skein/errors.hpp"
#include "skein/generators.hpp"
#include "skein/seifert.hpp"

using skein::Block;
using skein::LinkDiagram;
using skein::SignedEdge;
using skein::SignedGraph;

namespace {

LinkDiagram trefoil() {
  return LinkDiagram::parse_pd("X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)");
}

LinkDiagram fig8() { return skein::gen::rational({2, 2}, false, "4_1"); }

std::vector<LinkDiagram> sample_diagrams() {
  return {
      trefoil(),
      trefoil().mirror(),
      fig8(),
      skein::gen::rational({3, 2}),
      skein::gen::rational({3, 1, 2}),
      skein::gen::torus(2, 4),
      skein::gen::torus(2, 5),
      skein::gen::torus(3, 4),
      skein::gen::pretzel({3, 3, -2}),
      skein::gen::kink_unknot(+1),
      skein::gen::connected_sum(trefoil(), trefoil()),
      skein::gen::connected_sum(trefoil(), trefoil().mirror()),
      LinkDiagram::parse_pd("X(1,3,2,4),X(3,1,4,2)"),
  };
}

}  // namespace

TEST_CASE("seifert graph construction") {
  SignedGraph unknot = SignedGraph::from_diagram(LinkDiagram::unlink(1));
  CHECK(unknot.vertex_count() == 1);
  CHECK(unknot.edge_count() == 0);

  SignedGraph t = SignedGraph::from_diagram(trefoil());
  CHECK(t.vertex_count() == 2);
  CHECK(t.edge_count() == 3);
  for (const SignedEdge& e : t.edges()) CHECK(e.sign == 1);
  // three parallel edges
  std::set<std::pair<int, int>> endpoints;
  for (const SignedEdge& e : t.edges())
    endpoints.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  CHECK(endpoints.size() == 1);

  SignedGraph f = SignedGraph::from_diagram(fig8());
  CHECK(f.vertex_count() == 3);
  CHECK(f.edge_count() == 4);
  CHECK(f.signed_edge_sum() == 0);
}

TEST_CASE("graph counts tie back to diagram stats") {
  for (const LinkDiagram& d : sample_diagrams()) {
    auto st = d.stats();
    SignedGraph g = SignedGraph::from_diagram(d);
    CHECK(g.vertex_count() == st.seifert_circles);
    CHECK(g.edge_count() == st.crossings);
    CHECK(g.signed_edge_sum() == st.writhe);
    CHECK(g.component_count() == st.diagram_components);
    // s_plus two ways: diagram smoothing vs. deleting negative edges
    CHECK(g.positive_subgraph_components() == st.s_plus);
  }
}

TEST_CASE("block decomposition") {
  auto blocks_of = [](const LinkDiagram& d) {
    return skein::block_decomposition(SignedGraph::from_diagram(d));
  };

  auto tb = blocks_of(trefoil());
  REQUIRE(tb.size() == 1);
  CHECK(tb[0].rank == 2);
  CHECK(tb[0].sign == 1);

  auto fb = blocks_of(fig8());
  REQUIRE(fb.size() == 2);
  for (const Block& b : fb) {
    CHECK(b.rank == 1);
    CHECK(b.vertices.size() == 2);
    CHECK(b.edge_indices.size() == 2);
  }
  CHECK(((fb[0].sign == 1 && fb[1].sign == -1) ||
         (fb[0].sign == -1 && fb[1].sign == 1)));

  // bridges are their own blocks: path with signs (+,-)
  SignedGraph path(3, {{0, 1, +1, -1}, {1, 2, -1, -1}});
  auto pb = skein::block_decomposition(path);
  REQUIRE(pb.size() == 2);
  CHECK(pb[0].rank == 0);
  CHECK(pb[1].rank == 0);
  CHECK(pb[0].sign.has_value());
  CHECK(pb[1].sign.has_value());

  // isolated vertices become rank-0 blocks
  SignedGraph lonely(2, {});
  auto lb = skein::block_decomposition(lonely);
  REQUIRE(lb.size() == 2);
  CHECK(lb[0].rank == 0);
  CHECK(lb[0].sign == 1);

  // edges are partitioned across blocks
  for (const LinkDiagram& d : sample_diagrams()) {
    SignedGraph g = SignedGraph::from_diagram(d);
    std::set<int> seen;
    int total = 0;
    for (const Block& b : skein::block_decomposition(g)) {
      for (int e : b.edge_indices) {
        CHECK(seen.insert(e).second);
        ++total;
      }
    }
    CHECK(total == g.edge_count());
  }
}

TEST_CASE("analyze") {
  auto analyze_diagram = [](const LinkDiagram& d) {
    return skein::analyze(SignedGraph::from_diagram(d));
  };

  auto t = analyze_diagram(trefoil());
  CHECK(t.homogeneous);
  CHECK(t.positive);
  CHECK_FALSE(t.negative);
  CHECK(t.rank == 2);
  CHECK(t.eps_rank_sum() == 2);
  CHECK(t.positive_blocks == 1);

  auto f = analyze_diagram(fig8());
  CHECK(f.homogeneous);
  CHECK_FALSE(f.positive);
  CHECK_FALSE(f.negative);
  CHECK(f.rank == 2);
  CHECK(f.eps_rank_sum() == 0);
  CHECK(f.positive_blocks == 1);
  CHECK(f.negative_blocks == 1);

  // triangle with signs (+,+,-): a single mixed block
  SignedGraph triangle(3, {{0, 1, +1, -1}, {1, 2, +1, -1}, {2, 0, -1, -1}});
  auto tri = skein::analyze(triangle);
  CHECK_FALSE(tri.homogeneous);
  CHECK(tri.blocks.size() == 1);
  CHECK(tri.blocks[0].mixed());
  CHECK_THROWS_AS(tri.eps_rank_sum(), skein::NotHomogeneous);

  // rank additivity over blocks
  for (const LinkDiagram& d : sample_diagrams()) {
    auto a = analyze_diagram(d);
    int sum = 0;
    for (const Block& b : a.blocks) sum += b.rank;
    CHECK(sum == a.rank);
  }
}

TEST_CASE("eps_rank_sum_from_stats") {
  CHECK(skein::eps_rank_sum_from_stats(trefoil()) == 2);
  CHECK(skein::eps_rank_sum_from_stats(skein::gen::kink_unknot(+1)) == 0);
  CHECK(skein::eps_rank_sum_from_stats(trefoil().mirror()) == -2);
  CHECK_THROWS_AS(skein::eps_rank_sum_from_stats(LinkDiagram::unlink(2)),
                  skein::DisconnectedDiagram);
}

TEST_CASE("key identity: eps_rank_sum equals -s+w+2s_+-1") {
  for (const LinkDiagram& d : sample_diagrams()) {
    if (d.connected_count() != 1) continue;
    auto a = skein::analyze(SignedGraph::from_diagram(d));
    if (!a.homogeneous) continue;
    CHECK(a.eps_rank_sum() == skein::eps_rank_sum_from_stats(d));
  }
}

TEST_CASE("spanning-tree signature") {
  CHECK(skein::spanning_tree_signature(trefoil()) == 2);
  CHECK(skein::spanning_tree_signature(trefoil().mirror()) == -2);
  CHECK(skein::spanning_tree_signature(fig8()) == 0);

  CHECK_THROWS_AS(skein::spanning_tree_signature(skein::gen::torus(3, 4)),
                  skein::NotAlternating);
  CHECK_THROWS_AS(skein::spanning_tree_signature(skein::gen::kink_unknot(+1)),
                  skein::NotReduced);
  CHECK_THROWS_AS(skein::spanning_tree_signature(LinkDiagram::unlink(2)),
                  skein::DisconnectedDiagram);
}

TEST_CASE("spanning-tree signature is tree independent") {
  for (const LinkDiagram& d :
       {trefoil(), fig8(), skein::gen::rational({3, 1, 2}),
        skein::gen::connected_sum(trefoil(), trefoil().mirror())}) {
    SignedGraph g = SignedGraph::from_diagram(d);
    int n = g.vertex_count();
    int m = g.edge_count();
    int reference = skein::spanning_tree_signature(d);

    // enumerate every spanning tree by brute force
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      if (__builtin_popcount(mask) != n - 1) continue;
      std::vector<int> parent(n);
      for (int i = 0; i < n; ++i) parent[i] = i;
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      bool acyclic = true;
      int d_plus = 0, d_minus = 0;
      for (int e = 0; e < m && acyclic; ++e) {
        if (!(mask & (1u << e))) continue;
        int a = find(g.edges()[e].u), b = find(g.edges()[e].v);
        if (a == b) {
          acyclic = false;
        } else {
          parent[a] = b;
          (g.edges()[e].sign > 0 ? d_plus : d_minus) += 1;
        }
      }
      if (!acyclic) continue;
      int roots = 0;
      for (int i = 0; i < n; ++i)
        if (find(i) == i) ++roots;
      if (roots != 1) continue;
      CHECK(d.writhe() - (d_plus - d_minus) == reference);
    }
  }
}

TEST_CASE("alternating diagrams: signature equals eps_rank_sum") {
  for (const LinkDiagram& d :
       {trefoil(), trefoil().mirror(), fig8(), skein::gen::rational({3, 2}),
        skein::gen::rational({2, 1, 1, 2}), skein::gen::torus(2, 5),
        skein::gen::connected_sum(trefoil(), fig8())}) {
    if (!d.is_alternating() || !d.is_reduced()) continue;
    auto a = skein::analyze(SignedGraph::from_diagram(d));
    CHECK(skein::spanning_tree_signature(d) == a.eps_rank_sum());
  }
}

TEST_CASE("mirror antisymmetry") {
  for (const LinkDiagram& d : {trefoil(), fig8(), skein::gen::rational({3, 2})}) {
    auto a = skein::analyze(SignedGraph::from_diagram(d));
    auto am = skein::analyze(SignedGraph::from_diagram(d.mirror()));
    CHECK(a.eps_rank_sum() == -am.eps_rank_sum());
    CHECK(skein::spanning_tree_signature(d) == -skein::spanning_tree_signature(d.mirror()));
  }
}

TEST_CASE("graph analysis serializes to json") {
  auto a = skein::analyze(SignedGraph::from_diagram(fig8()));
  std::string j = a.to_json();
  for (const char* key :
       {"\"is_homogeneous\":true", "\"rank\":2", "\"eps_rank_sum\":0",
        "\"positive_block_count\":1", "\"negative_block_count\":1",
        "\"blocks\":"}) {
    CHECK_MESSAGE(j.find(key) != std::string::npos, "missing ", key, " in ", j);
  }
}

TEST_CASE("signed graph rejects malformed input") {
  CHECK_THROWS_AS(SignedGraph(2, {{0, 0, 1, -1}}), skein::InconsistentDiagram);
  CHECK_THROWS_AS(SignedGraph(2, {{0, 5, 1, -1}}), skein::InconsistentDiagram);
  CHECK_THROWS_AS(SignedGraph(2, {{0, 1, 2, -1}}), skein::InconsistentDiagram);
}
