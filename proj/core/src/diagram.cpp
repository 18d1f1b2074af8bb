#include "skein/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "skein/errors.hpp"

namespace skein {

namespace {

struct Occurrence {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

bool is_under_slot(int slot) { return slot == 0 || slot == 2; }

// Arc -> its (exactly two) slot occurrences.
std::map<Arc, std::vector<Occurrence>> occurrence_map(
    const std::vector<std::array<Arc, 4>>& tuples) {
  std::map<Arc, std::vector<Occurrence>> occ;
  for (int c = 0; c < static_cast<int>(tuples.size()); ++c)
    for (int s = 0; s < 4; ++s) occ[tuples[c][s]].push_back({c, s});
  return occ;
}

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

private:
  std::vector<int> parent_;
};

}  // namespace

// Orients every strand, derives crossing signs, and applies the
// canonical arc relabeling. All structural validation lives here.
class DiagramBuilder {
public:
  DiagramBuilder(const std::vector<std::array<Arc, 4>>& tuples, int unknots,
                 std::string name)
      : tuples_(tuples), unknots_(unknots), name_(std::move(name)) {}

  LinkDiagram build() {
    validate_arcs();
    orient_all();
    return relabeled();
  }

private:
  void validate_arcs() {
    if (unknots_ < 0)
      throw InconsistentDiagram("negative unknot component count");
    occ_ = occurrence_map(tuples_);
    for (const auto& [arc, occs] : occ_) {
      if (arc <= 0)
        throw InconsistentDiagram("arc identifier " + std::to_string(arc) +
                                  " is not a positive integer");
      if (occs.size() != 2)
        throw InconsistentDiagram("arc " + std::to_string(arc) + " is used " +
                                  std::to_string(occs.size()) +
                                  " times (expected exactly 2)");
    }
  }

  Occurrence other_occurrence(Arc arc, const Occurrence& here) const {
    const auto& occs = occ_.at(arc);
    return occs[0] == here ? occs[1] : occs[0];
  }

  // Follows the strand leaving `out`, assigning over-strand directions,
  // until the cycle closes at `close_at`. Returns the arc cycle.
  std::vector<Arc> walk_cycle(Occurrence out, Occurrence close_at) {
    std::vector<Arc> cycle;
    for (;;) {
      Arc arc = tuples_[out.crossing][out.slot];
      cycle.push_back(arc);
      Occurrence head = other_occurrence(arc, out);
      if (head == close_at) return cycle;
      int c = head.crossing;
      if (is_under_slot(head.slot)) {
        if (head.slot != 0)
          throw InconsistentDiagram("arc " + std::to_string(arc) +
                                    " runs against the under-strand orientation");
        if (under_visited_[c])
          throw InconsistentDiagram("arc " + std::to_string(arc) +
                                    " re-enters an oriented strand");
        under_visited_[c] = true;
        out = {c, 2};
      } else {
        if (over_in_slot_[c] != 0)
          throw InconsistentDiagram("arc " + std::to_string(arc) +
                                    " conflicts with the over-strand orientation");
        over_in_slot_[c] = head.slot;
        out = {c, head.slot == 1 ? 3 : 1};
      }
    }
  }

  static std::vector<Arc> reversed_cycle(const std::vector<Arc>& cycle) {
    return {cycle.rbegin(), cycle.rend()};
  }

  static std::vector<Arc> rotated_to_min(const std::vector<Arc>& cycle) {
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::vector<Arc> out(it, cycle.end());
    out.insert(out.end(), cycle.begin(), it);
    return out;
  }

  void orient_all() {
    int n = static_cast<int>(tuples_.size());
    under_visited_.assign(n, false);
    over_in_slot_.assign(n, 0);

    // Components carrying at least one under-pass are forced.
    for (int c = 0; c < n; ++c) {
      if (under_visited_[c]) continue;
      under_visited_[c] = true;
      components_.push_back(walk_cycle({c, 2}, {c, 0}));
    }

    // Remaining over-passes lie on components that never go under; their
    // orientation is free. Orient so the arc cycle read from its minimal
    // arc is lexicographically smallest (ties broken by the head slot of
    // the minimal arc), matching the usual ascending arc numbering.
    for (int c = 0; c < n; ++c) {
      if (over_in_slot_[c] != 0) continue;
      over_in_slot_[c] = 1;
      std::vector<Arc> cycle = walk_cycle({c, 3}, {c, 1});
      std::vector<Arc> fwd = rotated_to_min(cycle);
      std::vector<Arc> rev = rotated_to_min(reversed_cycle(cycle));
      bool flip = rev < fwd;
      if (rev == fwd) {
        // Same arc sequence both ways (e.g. a two-arc cycle): compare the
        // two candidate head occurrences of the minimal arc instead.
        Occurrence h1 = head_of_in_direction(fwd.front(), false);
        Occurrence h2 = head_of_in_direction(fwd.front(), true);
        flip = h2 < h1;
      }
      if (flip) {
        for (Arc a : cycle)
          for (const Occurrence& o : occ_.at(a))
            if (!is_under_slot(o.slot)) over_in_slot_[o.crossing] = 0;
        over_in_slot_[c] = 3;
        cycle = walk_cycle({c, 1}, {c, 3});
      }
      components_.push_back(std::move(cycle));
    }
  }

  // Head occurrence of arc m in the walked direction (the occurrence
  // whose slot is the recorded over-pass in-slot) or in the reversed one.
  Occurrence head_of_in_direction(Arc m, bool reverse) const {
    const auto& occs = occ_.at(m);
    for (const Occurrence& o : occs)
      if (!is_under_slot(o.slot) && over_in_slot_[o.crossing] == o.slot)
        return reverse ? other_occurrence(m, o) : o;
    return occs[0];
  }

  LinkDiagram relabeled() {
    // Components ordered by their minimal original arc id, each rotated
    // to start at that arc, then arcs renumbered consecutively.
    std::vector<std::vector<Arc>> comps = components_;
    for (auto& c : comps) c = rotated_to_min(c);
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    std::map<Arc, Arc> relabel;
    Arc next = 1;
    for (const auto& comp : comps)
      for (Arc a : comp) relabel[a] = next++;

    LinkDiagram d;
    d.name_ = std::move(name_);
    d.unknot_components_ = unknots_;
    d.crossings_.resize(tuples_.size());
    for (size_t c = 0; c < tuples_.size(); ++c) {
      for (int s = 0; s < 4; ++s) d.crossings_[c].arcs[s] = relabel.at(tuples_[c][s]);
      d.crossings_[c].sign = over_in_slot_[c] == 1 ? +1 : -1;
    }
    d.components_.reserve(comps.size());
    for (const auto& comp : comps) {
      std::vector<Arc> labeled;
      labeled.reserve(comp.size());
      for (Arc a : comp) labeled.push_back(relabel.at(a));
      d.components_.push_back(std::move(labeled));
    }
    return d;
  }

  std::vector<std::array<Arc, 4>> tuples_;
  int unknots_;
  std::string name_;
  std::map<Arc, std::vector<Occurrence>> occ_;
  std::vector<bool> under_visited_;
  std::vector<int> over_in_slot_;  // 0 = unset, else 1 or 3
  std::vector<std::vector<Arc>> components_;
};

LinkDiagram LinkDiagram::from_tuples(const std::vector<std::array<Arc, 4>>& tuples,
                                     int unknot_components, std::string name) {
  return DiagramBuilder(tuples, unknot_components, std::move(name)).build();
}

LinkDiagram LinkDiagram::unlink(int components, std::string name) {
  if (components < 1)
    throw InconsistentDiagram("unlink needs at least one component");
  LinkDiagram d;
  d.unknot_components_ = components;
  d.name_ = std::move(name);
  return d;
}

LinkDiagram LinkDiagram::with_name(std::string name) const {
  LinkDiagram d = *this;
  d.name_ = std::move(name);
  return d;
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (const Crossing& c : crossings_) w += c.sign;
  return w;
}

namespace {

// Union-find keyed by arc label (labels are 1..2c after relabeling).
class ArcUnion {
public:
  explicit ArcUnion(int max_arc) : uf_(max_arc + 1) {}
  int find(Arc a) { return uf_.find(a); }
  void unite(Arc a, Arc b) { uf_.unite(a, b); }

private:
  UnionFind uf_;
};

int max_arc_label(const std::vector<Crossing>& crossings) {
  int m = 0;
  for (const Crossing& c : crossings)
    for (Arc a : c.arcs) m = std::max(m, a);
  return m;
}

// Merges arcs by the orientation-preserving smoothing of one crossing:
// at a positive crossing slots (0,3) and (1,2) join, at a negative one
// slots (0,1) and (2,3).
void seifert_merge(ArcUnion& uf, const Crossing& c) {
  if (c.sign > 0) {
    uf.unite(c.arcs[0], c.arcs[3]);
    uf.unite(c.arcs[1], c.arcs[2]);
  } else {
    uf.unite(c.arcs[0], c.arcs[1]);
    uf.unite(c.arcs[2], c.arcs[3]);
  }
}

}  // namespace

SeifertCircles LinkDiagram::seifert_circles() const {
  SeifertCircles out;
  out.unknot_components = unknot_components_;
  if (crossings_.empty()) return out;
  int top = max_arc_label(crossings_);
  ArcUnion uf(top);
  for (const Crossing& c : crossings_) seifert_merge(uf, c);
  std::map<int, std::vector<Arc>> classes;
  for (const auto& comp : components_)
    for (Arc a : comp) classes[uf.find(a)].push_back(a);
  for (auto& [rep, arcs] : classes) {
    std::sort(arcs.begin(), arcs.end());
    out.circles.push_back(std::move(arcs));
  }
  std::sort(out.circles.begin(), out.circles.end());
  return out;
}

int LinkDiagram::s_plus() const {
  if (crossings_.empty()) return unknot_components_;
  int top = max_arc_label(crossings_);
  ArcUnion uf(top);
  for (const Crossing& c : crossings_)
    if (c.sign < 0) seifert_merge(uf, c);

  // Positive crossings chained through merged arc classes.
  std::map<int, int> class_to_crossing;
  UnionFind cross_uf(static_cast<int>(crossings_.size()));
  std::vector<bool> class_touches_positive(top + 1, false);
  for (int i = 0; i < static_cast<int>(crossings_.size()); ++i) {
    if (crossings_[i].sign < 0) continue;
    for (Arc a : crossings_[i].arcs) {
      int rep = uf.find(a);
      class_touches_positive[rep] = true;
      auto [it, fresh] = class_to_crossing.emplace(rep, i);
      if (!fresh) cross_uf.unite(it->second, i);
    }
  }
  int clusters = 0;
  for (int i = 0; i < static_cast<int>(crossings_.size()); ++i)
    if (crossings_[i].sign >= 0 && cross_uf.find(i) == i) ++clusters;

  // Merged classes no positive crossing touches are free circles.
  int free_circles = 0;
  std::vector<bool> seen(top + 1, false);
  for (const auto& comp : components_)
    for (Arc a : comp) {
      int rep = uf.find(a);
      if (!seen[rep]) {
        seen[rep] = true;
        if (!class_touches_positive[rep]) ++free_circles;
      }
    }
  return clusters + free_circles + unknot_components_;
}

int LinkDiagram::connected_count() const {
  if (crossings_.empty()) return unknot_components_;
  UnionFind uf(static_cast<int>(crossings_.size()));
  std::map<Arc, int> first_seen;
  for (int i = 0; i < static_cast<int>(crossings_.size()); ++i)
    for (Arc a : crossings_[i].arcs) {
      auto [it, fresh] = first_seen.emplace(a, i);
      if (!fresh) uf.unite(it->second, i);
    }
  int clusters = 0;
  for (int i = 0; i < static_cast<int>(crossings_.size()); ++i)
    if (uf.find(i) == i) ++clusters;
  return clusters + unknot_components_;
}

std::vector<LinkDiagram> LinkDiagram::split_components() const {
  std::vector<LinkDiagram> parts;
  if (!crossings_.empty()) {
    UnionFind uf(static_cast<int>(crossings_.size()));
    std::map<Arc, int> first_seen;
    for (int i = 0; i < static_cast<int>(crossings_.size()); ++i)
      for (Arc a : crossings_[i].arcs) {
        auto [it, fresh] = first_seen.emplace(a, i);
        if (!fresh) uf.unite(it->second, i);
      }
    // Clusters in order of their lowest crossing index.
    std::map<int, std::vector<std::array<Arc, 4>>> clusters;
    for (int i = 0; i < static_cast<int>(crossings_.size()); ++i)
      clusters[uf.find(i)].push_back(crossings_[i].arcs);
    for (auto& [rep, tuples] : clusters)
      parts.push_back(LinkDiagram::from_tuples(tuples, 0));
  }
  for (int k = 0; k < unknot_components_; ++k) parts.push_back(unlink(1));
  return parts;
}

DiagramStats LinkDiagram::stats() const {
  DiagramStats st;
  st.crossings = crossing_count();
  st.writhe = writhe();
  st.seifert_circles = seifert_circles().count();
  st.s_plus = s_plus();
  st.diagram_components = connected_count();
  st.self_linking = st.writhe - st.seifert_circles;
  return st;
}

bool LinkDiagram::is_alternating() const {
  auto tuples = [&] {
    std::vector<std::array<Arc, 4>> t;
    t.reserve(crossings_.size());
    for (const Crossing& c : crossings_) t.push_back(c.arcs);
    return t;
  }();
  for (const auto& [arc, occs] : occurrence_map(tuples)) {
    if (occs.size() != 2) continue;  // unreachable on valid diagrams
    if (is_under_slot(occs[0].slot) == is_under_slot(occs[1].slot)) return false;
  }
  return true;
}

bool LinkDiagram::is_reduced() const {
  int n = crossing_count();
  if (n == 0) return true;

  // Projection multigraph: vertices are crossings, edges are arcs. A
  // crossing is nugatory iff it carries a self-loop arc or is a cut
  // vertex of this graph.
  struct Edge {
    int u, v;
  };
  std::vector<Edge> edges;
  {
    std::map<Arc, std::vector<int>> ends;
    for (int i = 0; i < n; ++i)
      for (Arc a : crossings_[i].arcs) ends[a].push_back(i);
    for (const auto& [arc, cs] : ends) {
      if (cs.size() != 2) continue;
      if (cs[0] == cs[1]) return false;  // kink
      edges.push_back({cs[0], cs[1]});
    }
  }
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj[edges[e].u].push_back({edges[e].v, e});
    adj[edges[e].v].push_back({edges[e].u, e});
  }

  // Iterative articulation-point DFS (parallel edges are distinct).
  std::vector<int> depth(n, -1), low(n, 0), child_count(n, 0);
  std::vector<bool> articulation(n, false);
  for (int root = 0; root < n; ++root) {
    if (depth[root] != -1) continue;
    struct Frame {
      int v;
      int parent_edge;
      size_t next = 0;
    };
    std::vector<Frame> stack{{root, -1}};
    depth[root] = 0;
    low[root] = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [to, eid] = adj[f.v][f.next++];
        if (eid == f.parent_edge) continue;
        if (depth[to] == -1) {
          depth[to] = depth[f.v] + 1;
          low[to] = depth[to];
          if (f.v == root) ++child_count[root];
          stack.push_back({to, eid});
        } else {
          low[f.v] = std::min(low[f.v], depth[to]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[f.v]);
          if (p != root && low[f.v] >= depth[p]) articulation[p] = true;
        }
      }
    }
    if (child_count[root] > 1) articulation[root] = true;
  }
  return std::none_of(articulation.begin(), articulation.end(),
                      [](bool b) { return b; });
}

LinkDiagram LinkDiagram::mirror() const {
  std::vector<std::array<Arc, 4>> tuples;
  tuples.reserve(crossings_.size());
  for (const Crossing& c : crossings_) {
    const auto& t = c.arcs;
    // Re-root the tuple at the over-strand's incoming slot; the old
    // under-strand becomes the over-strand.
    if (c.sign > 0)
      tuples.push_back({t[1], t[2], t[3], t[0]});
    else
      tuples.push_back({t[3], t[0], t[1], t[2]});
  }
  return from_tuples(tuples, unknot_components_, name_.empty() ? "" : name_ + "!");
}

LinkDiagram LinkDiagram::resolved(int crossing_index, ResolveMode mode) const {
  if (crossing_index < 0 || crossing_index >= crossing_count())
    throw IndexOutOfRange("crossing index " + std::to_string(crossing_index) +
                          " out of range (diagram has " +
                          std::to_string(crossing_count()) + " crossings)");
  const Crossing& target = crossings_[crossing_index];

  if (mode == ResolveMode::kSwitch) {
    std::vector<std::array<Arc, 4>> tuples;
    tuples.reserve(crossings_.size());
    for (int i = 0; i < crossing_count(); ++i) {
      const auto& t = crossings_[i].arcs;
      if (i != crossing_index) {
        tuples.push_back(t);
      } else if (target.sign > 0) {
        tuples.push_back({t[1], t[2], t[3], t[0]});
      } else {
        tuples.push_back({t[3], t[0], t[1], t[2]});
      }
    }
    return from_tuples(tuples, unknot_components_);
  }

  // Oriented smoothing: the crossing disappears and its arcs merge in
  // orientation-respecting pairs.
  int top = max_arc_label(crossings_);
  ArcUnion uf(top);
  seifert_merge(uf, target);

  std::vector<std::array<Arc, 4>> tuples;
  tuples.reserve(crossings_.size() - 1);
  std::vector<bool> rep_used(top + 1, false);
  for (int i = 0; i < crossing_count(); ++i) {
    if (i == crossing_index) continue;
    std::array<Arc, 4> t{};
    for (int s = 0; s < 4; ++s) {
      t[s] = uf.find(crossings_[i].arcs[s]);
      rep_used[t[s]] = true;
    }
    tuples.push_back(t);
  }
  // Merged classes that vanished from every remaining crossing close up
  // into free circles.
  int freed = 0;
  std::vector<bool> counted(top + 1, false);
  for (Arc a : target.arcs) {
    int rep = uf.find(a);
    if (!counted[rep]) {
      counted[rep] = true;
      if (!rep_used[rep]) ++freed;
    }
  }
  return from_tuples(tuples, unknot_components_ + freed);
}

std::string LinkDiagram::canonical_code() const {
  std::string prefix = "U" + std::to_string(unknot_components_) + "|";
  if (crossings_.empty()) return prefix;

  // Candidate labelings: all component orders (small counts only) and
  // all rotations of each component. Each candidate renumbers the arcs
  // along the traversal; the lexicographically smallest sorted tuple
  // list is the code. Falls back to the stored labeling when the
  // candidate space is too large -- the result is still a valid key,
  // just a weaker one for cache reuse.
  const size_t comp_count = components_.size();
  size_t rotation_product = 1;
  for (const auto& c : components_) rotation_product *= c.size();
  size_t perm_count = 1;
  for (size_t i = 2; i <= comp_count; ++i) perm_count *= i;

  int max_arc = 2 * crossing_count();
  std::vector<Arc> relabel(max_arc + 1, 0);
  std::vector<std::array<Arc, 4>> tuples(crossings_.size());
  auto fill_tuples = [&] {
    for (size_t c = 0; c < crossings_.size(); ++c)
      for (int s = 0; s < 4; ++s) tuples[c][s] = relabel[crossings_[c].arcs[s]];
    std::sort(tuples.begin(), tuples.end());
  };
  auto stringify = [&] {
    std::string out = prefix;
    for (const auto& t : tuples)
      for (Arc a : t) {
        out += std::to_string(a);
        out += ',';
      }
    return out;
  };

  if (comp_count > 4 || perm_count * rotation_product > 20000) {
    for (const auto& comp : components_)
      for (Arc a : comp) relabel[a] = a;
    fill_tuples();
    return stringify();
  }

  std::vector<size_t> order(comp_count);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::array<Arc, 4>> best;
  do {
    std::vector<size_t> rot(comp_count, 0);
    for (;;) {
      Arc next = 1;
      for (size_t k = 0; k < comp_count; ++k) {
        const auto& comp = components_[order[k]];
        for (size_t i = 0; i < comp.size(); ++i)
          relabel[comp[(rot[k] + i) % comp.size()]] = next++;
      }
      fill_tuples();
      if (best.empty() || tuples < best) best = tuples;
      // Odometer over rotations.
      size_t k = 0;
      while (k < comp_count) {
        if (++rot[k] < components_[order[k]].size()) break;
        rot[k] = 0;
        ++k;
      }
      if (k == comp_count) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  tuples = std::move(best);
  return stringify();
}

bool LinkDiagram::isomorphic_to(const LinkDiagram& other) const {
  return canonical_code() == other.canonical_code();
}

std::string LinkDiagram::pd_text() const {
  std::ostringstream os;
  bool first = true;
  for (const Crossing& c : crossings_) {
    if (!first) os << ",";
    os << "X(" << c.arcs[0] << "," << c.arcs[1] << "," << c.arcs[2] << ","
       << c.arcs[3] << ")";
    first = false;
  }
  if (unknot_components_ > 0) {
    if (!first) os << ",";
    os << "U(" << unknot_components_ << ")";
  }
  return os.str();
}

std::string LinkDiagram::to_json() const {
  nlohmann::json j;
  j["name"] = name_;
  j["crossings"] = nlohmann::json::array();
  for (const Crossing& c : crossings_)
    j["crossings"].push_back({c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]});
  j["unknot_components"] = unknot_components_;
  return j.dump();
}

LinkDiagram LinkDiagram::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedSyntax(std::string("diagram JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("crossings"))
    throw MalformedSyntax("diagram JSON: missing \"crossings\"");
  std::vector<std::array<Arc, 4>> tuples;
  for (const auto& t : j["crossings"]) {
    if (!t.is_array() || t.size() != 4)
      throw MalformedSyntax("diagram JSON: crossing is not a 4-tuple");
    tuples.push_back({t[0].get<Arc>(), t[1].get<Arc>(), t[2].get<Arc>(),
                      t[3].get<Arc>()});
  }
  int unknots = j.value("unknot_components", 0);
  std::string name = j.value("name", std::string{});
  if (tuples.empty() && unknots > 0) return unlink(unknots, name);
  return from_tuples(tuples, unknots, name);
}

std::ostream& operator<<(std::ostream& os, const LinkDiagram& d) {
  return os << (d.name().empty() ? d.pd_text() : d.name() + " " + d.pd_text());
}

}  // namespace skein
