#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "skein/errors.hpp"
#include "skein/homfly.hpp"

namespace skein {

namespace {

// Duplicated from the engine on purpose: the tree builder materializes
// every node, while the engine folds the chain and caches. Keeping the
// two paths separate lets the tests compare them.
struct Head {
  int crossing;
  int slot;
};

std::map<Arc, Head> head_map(const LinkDiagram& d) {
  std::map<Arc, Head> heads;
  for (int i = 0; i < d.crossing_count(); ++i) {
    const Crossing& c = d.crossings()[i];
    heads[c.arcs[0]] = {i, 0};
    int over_in = c.sign > 0 ? 1 : 3;
    heads[c.arcs[over_in]] = {i, over_in};
  }
  return heads;
}

std::vector<Arc> canonical_order(const LinkDiagram& d) {
  std::vector<Arc> order;
  for (const auto& comp : d.components())
    order.insert(order.end(), comp.begin(), comp.end());
  return order;
}

std::optional<int> first_offending(const LinkDiagram& d,
                                   const std::vector<Arc>& order) {
  std::map<Arc, Head> heads = head_map(d);
  std::vector<bool> seen(d.crossing_count(), false);
  for (Arc a : order) {
    const Head& h = heads.at(a);
    if (seen[h.crossing]) continue;
    if (h.slot != 0) return h.crossing;
    seen[h.crossing] = true;
  }
  return std::nullopt;
}

// The switch child keeps the parent's traversal (switching preserves the
// arc labels); the smooth child starts over from canonical basepoints.
SkeinNode build_node(const LinkDiagram& d, const std::vector<Arc>& order,
                     std::string edge_label, LaurentPoly2 pi) {
  SkeinNode node;
  node.diagram = d;
  node.edge_label = std::move(edge_label);
  node.pi = std::move(pi);

  std::optional<int> off = first_offending(d, order);
  if (!off) {
    node.is_leaf = true;
    node.leaf_component_count = d.component_count();
    return node;
  }
  int sign = d.crossings()[*off].sign;
  LinkDiagram switched = d.resolved(*off, ResolveMode::kSwitch);
  LinkDiagram smoothed = d.resolved(*off, ResolveMode::kSmooth);

  LaurentPoly2 switch_mono =
      LaurentPoly2::monomial(sign > 0 ? 2 : -2, 0, 1);
  LaurentPoly2 smooth_mono =
      sign > 0 ? LaurentPoly2::monomial(1, 1, 1) : LaurentPoly2::monomial(-1, 1, -1);

  node.children.push_back(build_node(switched, order,
                                     sign > 0 ? "v^2" : "v^-2",
                                     node.pi * switch_mono));
  node.children.push_back(build_node(smoothed, canonical_order(smoothed),
                                     sign > 0 ? "vz" : "-v^-1 z",
                                     node.pi * smooth_mono));
  return node;
}

void count_leaves(const SkeinNode& n, int& acc) {
  if (n.is_leaf) {
    ++acc;
    return;
  }
  for (const SkeinNode& c : n.children) count_leaves(c, acc);
}

void sum_leaves(const SkeinNode& n, LaurentPoly2& acc) {
  if (n.is_leaf) {
    acc += n.pi * LaurentPoly2::delta_power(n.leaf_component_count - 1);
    return;
  }
  for (const SkeinNode& c : n.children) sum_leaves(c, acc);
}

void dot_nodes(const SkeinNode& n, int& next_id, int my_id, std::ostream& os) {
  std::string label = n.diagram.name().empty()
                          ? "c=" + std::to_string(n.diagram.crossing_count())
                          : n.diagram.name();
  os << "  n" << my_id << " [label=\"" << label << "\\npi = " << n.pi.str();
  if (n.is_leaf) os << "\\nunlink #" << n.leaf_component_count;
  os << "\"];\n";
  for (const SkeinNode& c : n.children) {
    int child_id = next_id++;
    os << "  n" << my_id << " -> n" << child_id << " [label=\"" << c.edge_label
       << "\"];\n";
    dot_nodes(c, next_id, child_id, os);
  }
}

nlohmann::json node_json(const SkeinNode& n) {
  nlohmann::json j;
  j["pd"] = n.diagram.pd_text();
  j["crossings"] = n.diagram.crossing_count();
  j["pi"] = n.pi.str();
  if (!n.edge_label.empty()) j["edge"] = n.edge_label;
  j["leaf"] = n.is_leaf;
  if (n.is_leaf) {
    j["components"] = n.leaf_component_count;
  } else {
    j["children"] = nlohmann::json::array();
    for (const SkeinNode& c : n.children) j["children"].push_back(node_json(c));
  }
  return j;
}

}  // namespace

SkeinTree skein_tree(const LinkDiagram& d, const HomflyOptions& opt) {
  if (d.crossing_count() > opt.crossing_cap)
    throw CrossingCapExceeded("diagram has " + std::to_string(d.crossing_count()) +
                              " crossings, cap is " +
                              std::to_string(opt.crossing_cap));
  SkeinTree tree;
  tree.root = build_node(d, canonical_order(d), "", LaurentPoly2(1));
  return tree;
}

int SkeinTree::leaf_count() const {
  int n = 0;
  count_leaves(root, n);
  return n;
}

LaurentPoly2 SkeinTree::leaf_sum() const {
  LaurentPoly2 acc;
  sum_leaves(root, acc);
  return acc;
}

std::string SkeinTree::to_dot() const {
  std::ostringstream os;
  os << "digraph skein_tree {\n  node [shape=box];\n";
  int next_id = 1;
  dot_nodes(root, next_id, 0, os);
  os << "}\n";
  return os.str();
}

std::string SkeinTree::to_json() const { return node_json(root).dump(2); }

}  // namespace skein
