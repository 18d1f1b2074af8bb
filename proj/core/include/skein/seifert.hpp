#ifndef SKEIN_SEIFERT_HPP
#define SKEIN_SEIFERT_HPP

#include <optional>
#include <string>
#include <vector>

#include "skein/diagram.hpp"

namespace skein {

// Signed multigraph without self-loops. Built from a diagram it has one
// vertex per Seifert circle and one signed edge per crossing.
struct SignedEdge {
  int u = 0;
  int v = 0;
  int sign = 0;
  int crossing = -1;  // source crossing index, -1 for synthetic graphs
};

class SignedGraph {
public:
  SignedGraph() = default;
  SignedGraph(int vertex_count, std::vector<SignedEdge> edges);

  static SignedGraph from_diagram(const LinkDiagram& d);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<SignedEdge>& edges() const { return edges_; }

  int component_count() const;
  // Component count after deleting negative edges (isolated vertices count).
  int positive_subgraph_components() const;
  int signed_edge_sum() const;

private:
  int vertex_count_ = 0;
  std::vector<SignedEdge> edges_;
};

// A block of the decomposition: a maximal connected subgraph without a
// cut vertex -- a 2-connected piece, a bridge, or an isolated vertex.
struct Block {
  std::vector<int> vertices;
  std::vector<int> edge_indices;          // indices into SignedGraph::edges()
  std::optional<int> sign;                // +1 / -1, nullopt when mixed
  int rank = 0;                           // -#V + #E + 1

  bool mixed() const { return !sign.has_value(); }
};

struct GraphAnalysis {
  std::vector<Block> blocks;
  bool homogeneous = false;
  bool positive = false;
  bool negative = false;
  int rank = 0;                 // -#V + #E + #components
  int component_count = 0;
  int positive_blocks = 0;      // P
  int negative_blocks = 0;      // N

  // Sum of sign(B) * rank(B) over blocks; defined only when homogeneous.
  int eps_rank_sum() const;
  std::optional<int> eps_rank_sum_opt;

  std::string to_json() const;
};

std::vector<Block> block_decomposition(const SignedGraph& g);
GraphAnalysis analyze(const SignedGraph& g);

// -s(D) + w(D) + 2 s_+(D) - 1 for a connected diagram.
int eps_rank_sum_from_stats(const LinkDiagram& d);

// Signature of a connected, reduced, alternating diagram's link from a
// spanning tree of its Seifert graph: w(D) - (d+ - d-). Uses the
// convention where the positive trefoil has signature +2.
int spanning_tree_signature(const LinkDiagram& d);

}  // namespace skein

#endif  // SKEIN_SEIFERT_HPP
