#ifndef SKEIN_HOMFLY_HPP
#define SKEIN_HOMFLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "skein/diagram.hpp"
#include "skein/laurent.hpp"

namespace skein {

struct HomflyOptions {
  int crossing_cap = 16;
  bool memoize = true;
};

// HOMFLY polynomial P(v,z) under the skein relation
//   v^-1 P_+ - v P_- = z P_0,   P(unknot) = 1.
// Computed by ascending-diagram resolution: walk the components from
// their basepoints; the first crossing met on its over-strand is
// switched (toward ascending) and smoothed, and the two children are
// combined as P+ = v^2 P- + v z P0 or P- = v^-2 P+ - v^-1 z P0. A fully
// ascending diagram is an unlink and contributes delta^(components-1).
LaurentPoly2 homfly(const LinkDiagram& d, const HomflyOptions& opt = {});

// Same computation with explicit basepoints for the root diagram: one
// starting arc per component, in the desired component order. The result
// is independent of this choice; the parameter exists so that invariance
// is testable.
LaurentPoly2 homfly_with_basepoints(const LinkDiagram& d,
                                    const std::vector<Arc>& component_starts,
                                    const HomflyOptions& opt = {});

// Link determinant |conway(2i)|, where conway(z) = P(1,z), evaluated
// with exact Gaussian-integer arithmetic.
Coeff link_determinant(const LaurentPoly2& p);

// Node of the skein resolution tree. Non-leaf nodes have exactly two
// children: the switched diagram and the smoothed diagram.
struct SkeinNode {
  LinkDiagram diagram;
  std::string edge_label;       // "v^2", "vz", "v^-2", "-v^-1 z"; empty at root
  LaurentPoly2 pi;              // product of edge monomials from the root
  bool is_leaf = false;
  int leaf_component_count = 0; // #n, set on leaves
  std::vector<SkeinNode> children;
};

struct SkeinTree {
  SkeinNode root;

  int leaf_count() const;
  // sum over leaves of pi(n) * delta^(#n - 1); equals homfly(root).
  LaurentPoly2 leaf_sum() const;
  std::string to_dot() const;
  std::string to_json() const;
};

SkeinTree skein_tree(const LinkDiagram& d, const HomflyOptions& opt = {});

}  // namespace skein

#endif  // SKEIN_HOMFLY_HPP
