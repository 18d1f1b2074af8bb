#include "skein/seifert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"
#include "skein/errors.hpp"

namespace skein {

SignedGraph::SignedGraph(int vertex_count, std::vector<SignedEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (const SignedEdge& e : edges_) {
    if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
      throw InconsistentDiagram("signed graph edge endpoint out of range");
    if (e.u == e.v)
      throw InconsistentDiagram("signed graph must not contain self-loops");
    if (e.sign != 1 && e.sign != -1)
      throw InconsistentDiagram("signed graph edge sign must be +1 or -1");
  }
}

SignedGraph SignedGraph::from_diagram(const LinkDiagram& d) {
  SeifertCircles circles = d.seifert_circles();
  // Arc -> circle vertex id; crossing-free unknot components become the
  // trailing isolated vertices.
  std::map<Arc, int> circle_of;
  for (int i = 0; i < static_cast<int>(circles.circles.size()); ++i)
    for (Arc a : circles.circles[i]) circle_of[a] = i;

  std::vector<SignedEdge> edges;
  edges.reserve(d.crossings().size());
  for (int i = 0; i < d.crossing_count(); ++i) {
    const Crossing& c = d.crossings()[i];
    // The four arcs of a crossing lie on exactly two Seifert circles.
    std::set<int> touched;
    for (Arc a : c.arcs) touched.insert(circle_of.at(a));
    if (touched.size() != 2)
      throw InconsistentDiagram("crossing " + std::to_string(i) +
                                " does not join two distinct Seifert circles");
    auto it = touched.begin();
    int u = *it++;
    int v = *it;
    edges.push_back({u, v, c.sign, i});
  }
  return SignedGraph(circles.count(), std::move(edges));
}

namespace {

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }
  int cluster_count() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
      if (find(i) == i) ++n;
    return n;
  }

private:
  std::vector<int> parent_;
};

}  // namespace

int SignedGraph::component_count() const {
  UnionFind uf(vertex_count_);
  for (const SignedEdge& e : edges_) uf.unite(e.u, e.v);
  return uf.cluster_count();
}

int SignedGraph::positive_subgraph_components() const {
  UnionFind uf(vertex_count_);
  for (const SignedEdge& e : edges_)
    if (e.sign > 0) uf.unite(e.u, e.v);
  return uf.cluster_count();
}

int SignedGraph::signed_edge_sum() const {
  int s = 0;
  for (const SignedEdge& e : edges_) s += e.sign;
  return s;
}

std::vector<Block> block_decomposition(const SignedGraph& g) {
  const int n = g.vertex_count();
  const auto& edges = g.edges();

  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj[edges[e].u].push_back({edges[e].v, e});
    adj[edges[e].v].push_back({edges[e].u, e});
  }

  // Hopcroft-Tarjan with an explicit stack; parallel edges are distinct
  // edges, so only the exact tree edge back to the parent is skipped.
  std::vector<int> depth(n, -1), low(n, 0);
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> block_edges;

  struct Frame {
    int v;
    int parent_edge;
    size_t next = 0;
  };

  for (int root = 0; root < n; ++root) {
    if (depth[root] != -1) continue;
    std::vector<Frame> stack{{root, -1}};
    depth[root] = 0;
    low[root] = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [to, eid] = adj[f.v][f.next++];
        if (eid == f.parent_edge) continue;
        if (depth[to] == -1) {
          edge_stack.push_back(eid);
          depth[to] = depth[f.v] + 1;
          low[to] = depth[to];
          stack.push_back({to, eid});
        } else if (depth[to] < depth[f.v]) {
          edge_stack.push_back(eid);
          low[f.v] = std::min(low[f.v], depth[to]);
        }
      } else {
        int child = f.v;
        int via = f.parent_edge;
        stack.pop_back();
        if (stack.empty()) continue;
        int parent = stack.back().v;
        low[parent] = std::min(low[parent], low[child]);
        if (low[child] >= depth[parent]) {
          // Pop one block: everything stacked since the tree edge `via`.
          std::vector<int> blk;
          for (;;) {
            int eid = edge_stack.back();
            edge_stack.pop_back();
            blk.push_back(eid);
            if (eid == via) break;
          }
          block_edges.push_back(std::move(blk));
        }
      }
    }
  }

  std::vector<Block> blocks;
  std::vector<bool> in_some_block(n, false);
  for (auto& eids : block_edges) {
    Block b;
    std::sort(eids.begin(), eids.end());
    b.edge_indices = std::move(eids);
    std::set<int> verts;
    bool all_pos = true, all_neg = true;
    for (int eid : b.edge_indices) {
      verts.insert(edges[eid].u);
      verts.insert(edges[eid].v);
      (edges[eid].sign > 0 ? all_neg : all_pos) = false;
    }
    b.vertices.assign(verts.begin(), verts.end());
    for (int v : b.vertices) in_some_block[v] = true;
    if (all_pos)
      b.sign = +1;
    else if (all_neg)
      b.sign = -1;
    b.rank = -static_cast<int>(b.vertices.size()) +
             static_cast<int>(b.edge_indices.size()) + 1;
    blocks.push_back(std::move(b));
  }
  // Isolated vertices form rank-0 blocks, positive by convention.
  for (int v = 0; v < n; ++v) {
    if (in_some_block[v]) continue;
    Block b;
    b.vertices = {v};
    b.sign = +1;
    b.rank = 0;
    blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    return a.vertices < b.vertices;
  });
  return blocks;
}

GraphAnalysis analyze(const SignedGraph& g) {
  GraphAnalysis out;
  out.blocks = block_decomposition(g);
  out.component_count = g.component_count();
  out.rank = -g.vertex_count() + g.edge_count() + out.component_count;

  out.homogeneous = true;
  bool any_negative_edge = false, any_positive_edge = false;
  for (const SignedEdge& e : g.edges())
    (e.sign > 0 ? any_positive_edge : any_negative_edge) = true;
  out.positive = !any_negative_edge;
  out.negative = !any_positive_edge && g.edge_count() > 0;

  int sum = 0;
  for (const Block& b : out.blocks) {
    if (b.mixed()) {
      out.homogeneous = false;
      continue;
    }
    if (*b.sign > 0)
      ++out.positive_blocks;
    else
      ++out.negative_blocks;
    sum += *b.sign * b.rank;
  }
  if (out.homogeneous) out.eps_rank_sum_opt = sum;
  return out;
}

int GraphAnalysis::eps_rank_sum() const {
  if (!eps_rank_sum_opt)
    throw NotHomogeneous("eps_rank_sum requested on a graph with a mixed block");
  return *eps_rank_sum_opt;
}

std::string GraphAnalysis::to_json() const {
  nlohmann::json j;
  j["is_homogeneous"] = homogeneous;
  j["is_positive"] = positive;
  j["is_negative"] = negative;
  j["rank"] = rank;
  j["component_count"] = component_count;
  j["positive_block_count"] = positive_blocks;
  j["negative_block_count"] = negative_blocks;
  if (eps_rank_sum_opt)
    j["eps_rank_sum"] = *eps_rank_sum_opt;
  else
    j["eps_rank_sum"] = nullptr;
  j["blocks"] = nlohmann::json::array();
  for (const Block& b : blocks) {
    nlohmann::json jb;
    jb["vertices"] = b.vertices;
    jb["edges"] = b.edge_indices;
    jb["rank"] = b.rank;
    if (b.sign)
      jb["sign"] = *b.sign;
    else
      jb["sign"] = "mixed";
    j["blocks"].push_back(jb);
  }
  return j.dump();
}

int eps_rank_sum_from_stats(const LinkDiagram& d) {
  if (d.connected_count() != 1)
    throw DisconnectedDiagram("eps_rank_sum_from_stats requires a connected diagram");
  DiagramStats st = d.stats();
  return -st.seifert_circles + st.writhe + 2 * st.s_plus - 1;
}

int spanning_tree_signature(const LinkDiagram& d) {
  if (d.connected_count() != 1)
    throw DisconnectedDiagram("signature formula requires a connected diagram");
  if (!d.is_alternating())
    throw NotAlternating("signature formula requires an alternating diagram");
  if (!d.is_reduced())
    throw NotReduced("signature formula requires a reduced diagram");

  SignedGraph g = SignedGraph::from_diagram(d);
  // Any DFS spanning tree works; the value is tree-independent because
  // within a block every edge has one sign.
  UnionFind uf(g.vertex_count());
  int d_plus = 0, d_minus = 0;
  for (const SignedEdge& e : g.edges()) {
    if (uf.find(e.u) == uf.find(e.v)) continue;
    uf.unite(e.u, e.v);
    (e.sign > 0 ? d_plus : d_minus) += 1;
  }
  return d.writhe() - (d_plus - d_minus);
}

}  // namespace skein
