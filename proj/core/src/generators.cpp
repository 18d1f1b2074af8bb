#include "skein/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "skein/errors.hpp"

namespace skein {
namespace gen {

namespace {

// Assembles a diagram from crossings given by strand-end tokens. A token
// is born fresh or at a crossing's outgoing slot and dies at another
// crossing's incoming slot or in a join; joined tokens form one arc.
// Slot lists run clockwise around each crossing. The under-strand
// diagonal may be fixed per crossing or left to the alternation solver,
// and strand orientations may be pinned by naming incoming slots.
class ShadowAssembler {
public:
  int fresh() { return token_count_++; }

  void add_crossing(const std::array<int, 4>& clockwise,
                    std::optional<int> under_diag,
                    const std::vector<int>& pinned_in_slots = {}) {
    int ci = static_cast<int>(crossings_.size());
    for (int tok : clockwise)
      if (tok < 0 || tok >= token_count_)
        throw std::logic_error("shadow: unknown token");
    crossings_.push_back({clockwise, under_diag});
    for (int s : pinned_in_slots) pins_.push_back({ci, s});
  }

  void join(int a, int b) { joins_.push_back({a, b}); }

  LinkDiagram finish(bool mirrored, std::string name) {
    resolve_arcs();
    solve_diagonals(mirrored);
    orient();
    return emit(std::move(name));
  }

private:
  struct SlotRef {
    int crossing;
    int slot;
    friend bool operator==(const SlotRef&, const SlotRef&) = default;
  };
  struct ShadowCrossing {
    std::array<int, 4> tokens;
    std::optional<int> under_diag;  // 0: slots {0,2} under, 1: slots {1,3}
  };

  int find(int t) {
    while (parent_[t] != t) t = parent_[t] = parent_[parent_[t]];
    return t;
  }

  void resolve_arcs() {
    parent_.resize(token_count_);
    std::iota(parent_.begin(), parent_.end(), 0);
    for (auto [a, b] : joins_) parent_[find(a)] = find(b);

    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c)
      for (int s = 0; s < 4; ++s)
        refs_[find(crossings_[c].tokens[s])].push_back({c, s});

    int next_arc = 1;
    for (auto& [cls, slots] : refs_) {
      if (slots.size() != 2)
        throw std::logic_error("shadow: strand end left open");
      arc_of_class_[cls] = next_arc++;
    }
    // Joined classes no crossing references close into free circles.
    std::vector<bool> seen(token_count_, false);
    for (auto [a, b] : joins_) {
      int cls = find(a);
      if (seen[cls]) continue;
      seen[cls] = true;
      if (!refs_.count(cls)) ++free_loops_;
    }
  }

  // The other reference of the arc passing through (c,s).
  SlotRef partner(int c, int s) {
    const auto& r = refs_.at(find(crossings_[c].tokens[s]));
    return r[0] == SlotRef{c, s} ? r[1] : r[0];
  }

  // Alternation: along every strand consecutive passes alternate
  // over/under, which fixes all diagonals up to one global flip. Only
  // runs when no crossing carries an explicit diagonal.
  void solve_diagonals(bool mirrored) {
    bool any_set = false, any_unset = false;
    for (const auto& c : crossings_)
      (c.under_diag ? any_set : any_unset) = true;
    if (!any_unset) return;
    if (any_set)
      throw std::logic_error("shadow: mixing explicit and solved diagonals");

    for (int seed = 0; seed < static_cast<int>(crossings_.size()); ++seed) {
      if (crossings_[seed].under_diag) continue;
      crossings_[seed].under_diag = mirrored ? 1 : 0;
      std::vector<int> queue{seed};
      while (!queue.empty()) {
        int c = queue.back();
        queue.pop_back();
        for (int s = 0; s < 4; ++s) {
          SlotRef p = partner(c, s);
          bool under_here = (s % 2) == *crossings_[c].under_diag;
          // Partner pass must be the opposite kind.
          int want = under_here ? 1 - (p.slot % 2) : (p.slot % 2);
          if (!crossings_[p.crossing].under_diag) {
            crossings_[p.crossing].under_diag = want;
            queue.push_back(p.crossing);
          } else if (*crossings_[p.crossing].under_diag != want) {
            throw InconsistentDiagram("shadow admits no alternating assignment");
          }
        }
      }
    }
  }

  // Walks every strand, fixing which slot of each pass is incoming.
  void orient() {
    in_slot_.assign(crossings_.size(), {-1, -1});  // per diagonal 0/1

    auto walk_from = [&](int c0, int s0) {
      int c = c0, s = s0;
      for (;;) {
        int diag = s % 2;
        if (in_slot_[c][diag] != -1) {
          if (in_slot_[c][diag] != s)
            throw std::logic_error("shadow: conflicting orientation pins");
          return;  // strand closed or already walked
        }
        in_slot_[c][diag] = s;
        SlotRef next = partner(c, (s + 2) % 4);
        c = next.crossing;
        s = next.slot;
      }
    };

    for (const auto& [c, s] : pins_) walk_from(c, s);
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c)
      for (int diag = 0; diag < 2; ++diag)
        if (in_slot_[c][diag] == -1) walk_from(c, diag);
  }

  LinkDiagram emit(std::string name) {
    std::vector<std::array<Arc, 4>> tuples;
    tuples.reserve(crossings_.size());
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
      int under_in = in_slot_[c][*crossings_[c].under_diag];
      std::array<Arc, 4> t{};
      for (int k = 0; k < 4; ++k)
        t[k] = arc_of_class_.at(find(crossings_[c].tokens[(under_in + k) % 4]));
      tuples.push_back(t);
    }
    if (tuples.empty()) return LinkDiagram::unlink(std::max(free_loops_, 1), name);
    return LinkDiagram::from_tuples(tuples, free_loops_, std::move(name));
  }

  int token_count_ = 0;
  std::vector<ShadowCrossing> crossings_;
  std::vector<std::pair<int, int>> joins_;
  std::vector<std::pair<int, int>> pins_;
  std::vector<int> parent_;
  std::map<int, std::vector<SlotRef>> refs_;
  std::map<int, Arc> arc_of_class_;
  std::vector<std::array<int, 2>> in_slot_;
  int free_loops_ = 0;
};

}  // namespace

LinkDiagram braid_closure(int strands, const std::vector<int>& word,
                          std::string name) {
  if (strands < 1) throw IndexOutOfRange("braid needs at least one strand");

  ShadowAssembler sh;
  std::vector<int> pos(strands);
  for (int j = 0; j < strands; ++j) pos[j] = sh.fresh();
  std::vector<int> tops = pos;
  int untouched = strands;
  std::vector<bool> crossed(strands, false);
  for (int letter : word) {
    int i = std::abs(letter) - 1;
    if (letter == 0 || i + 1 >= strands)
      throw IndexOutOfRange("braid letter " + std::to_string(letter) +
                            " out of range for " + std::to_string(strands) +
                            " strands");
    int br = sh.fresh();
    int bl = sh.fresh();
    // Both strands run downward, so the two upper slots are incoming.
    // For a positive letter the left-to-right strand goes under (under
    // diagonal {0,2}); a negative letter swaps the diagonals.
    sh.add_crossing({pos[i], pos[i + 1], br, bl}, letter > 0 ? 0 : 1, {0, 1});
    pos[i] = bl;
    pos[i + 1] = br;
    for (int k : {i, i + 1})
      if (!crossed[k]) {
        crossed[k] = true;
        --untouched;
      }
  }
  if (untouched == strands) return LinkDiagram::unlink(strands, std::move(name));
  for (int j = 0; j < strands; ++j) {
    if (!crossed[j]) continue;  // untouched strands close into free loops
    sh.join(pos[j], tops[j]);
  }
  LinkDiagram d = sh.finish(false, {});
  if (untouched > 0)
    d = disjoint_union(d, LinkDiagram::unlink(untouched));
  return d.with_name(std::move(name));
}

LinkDiagram torus(int p, int q, std::string name) {
  if (p < 1 || q < 1)
    throw IndexOutOfRange("torus braid needs p >= 1, q >= 1");
  std::vector<int> word;
  for (int r = 0; r < q; ++r)
    for (int i = 1; i < p; ++i) word.push_back(i);
  return braid_closure(p, word, std::move(name));
}

LinkDiagram rational(const std::vector<int>& twists, bool mirrored,
                     std::string name) {
  if (twists.empty()) throw IndexOutOfRange("rational: empty twist vector");
  for (int a : twists)
    if (a < 1) throw IndexOutOfRange("rational: twist counts must be >= 1");

  ShadowAssembler sh;
  int nw = sh.fresh(), ne = sh.fresh();
  int sw = sh.fresh(), se = sh.fresh();
  sh.join(nw, ne);
  sh.join(sw, se);
  // nw/ne/sw/se name the live tangle ends; twisting replaces two of
  // them. The first group twists the east side, the next the south, and
  // so on; the continued fraction grows from the innermost group out.
  for (size_t i = 0; i < twists.size(); ++i) {
    if (i % 2 == 0) {
      for (int t = 0; t < twists[i]; ++t) {
        int new_ne = sh.fresh(), new_se = sh.fresh();
        sh.add_crossing({ne, new_ne, new_se, se}, std::nullopt);
        ne = new_ne;
        se = new_se;
      }
    } else {
      for (int t = 0; t < twists[i]; ++t) {
        int new_sw = sh.fresh(), new_se = sh.fresh();
        sh.add_crossing({sw, se, new_se, new_sw}, std::nullopt);
        sw = new_sw;
        se = new_se;
      }
    }
  }
  // A twist vector ending in a horizontal group closes top-to-top and
  // bottom-to-bottom; one ending vertically closes side-to-side.
  if (twists.size() % 2 == 1) {
    sh.join(nw, ne);
    sh.join(sw, se);
  } else {
    sh.join(nw, sw);
    sh.join(ne, se);
  }
  LinkDiagram d = sh.finish(mirrored, std::move(name));
  if (d.component_count() != 1)
    throw InconsistentDiagram("rational: twist vector yields a link, not a knot");
  return d;
}

LinkDiagram pretzel(const std::vector<int>& twists, bool mirrored,
                    std::string name) {
  if (twists.empty()) throw IndexOutOfRange("pretzel: empty twist vector");
  ShadowAssembler sh;
  int m = static_cast<int>(twists.size());
  std::vector<int> tl(m), tr(m), bl(m), br(m);
  for (int i = 0; i < m; ++i) {
    if (twists[i] == 0) throw IndexOutOfRange("pretzel: zero twist region");
    tl[i] = sh.fresh();
    tr[i] = sh.fresh();
    int cur_l = tl[i], cur_r = tr[i];
    bool positive = (twists[i] > 0) != mirrored;
    for (int t = 0; t < std::abs(twists[i]); ++t) {
      int nbr = sh.fresh(), nbl = sh.fresh();
      sh.add_crossing({cur_l, cur_r, nbr, nbl}, positive ? 1 : 0);
      cur_l = nbl;
      cur_r = nbr;
    }
    bl[i] = cur_l;
    br[i] = cur_r;
  }
  for (int i = 0; i < m; ++i) {
    sh.join(tr[i], tl[(i + 1) % m]);
    sh.join(br[i], bl[(i + 1) % m]);
  }
  return sh.finish(false, std::move(name));
}

LinkDiagram kink_unknot(int sign, std::string name) {
  if (sign >= 0) return LinkDiagram::parse_pd("X(1,2,2,1)").with_name(name);
  return LinkDiagram::parse_pd("X(1,1,2,2)").with_name(name);
}

namespace {

// Head slot of an arc in a crossing tuple: slot 0 for the under-strand,
// the sign-dependent over-in slot otherwise.
bool is_head_slot(const Crossing& c, int slot) {
  return slot == 0 || slot == (c.sign > 0 ? 1 : 3);
}

}  // namespace

LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b,
                          std::string name) {
  if (a.crossing_count() == 0 || b.crossing_count() == 0)
    throw InconsistentDiagram("connected_sum needs crossings on both sides");

  int offset = 0;
  for (const Crossing& c : a.crossings())
    for (Arc arc : c.arcs) offset = std::max(offset, arc);

  std::vector<std::array<Arc, 4>> tuples;
  for (const Crossing& c : a.crossings()) tuples.push_back(c.arcs);
  for (const Crossing& c : b.crossings()) {
    std::array<Arc, 4> t{};
    for (int s = 0; s < 4; ++s) t[s] = c.arcs[s] + offset;
    tuples.push_back(t);
  }

  // Splice the under-incoming arcs of each diagram's first crossing:
  // swapping two under-heads keeps each spliced arc with one over end
  // and one under end, so alternating diagrams stay alternating.
  Arc xa = a.crossings()[0].arcs[0];
  Arc xb = b.crossings()[0].arcs[0] + offset;
  auto swap_head = [&](Arc from, Arc to, int lo, int hi,
                       const std::vector<Crossing>& src) {
    for (int c = lo; c < hi; ++c)
      for (int s = 0; s < 4; ++s)
        if (tuples[c][s] == from && is_head_slot(src[c - lo], s)) {
          tuples[c][s] = to;
          return;
        }
    throw std::logic_error("connected_sum: head occurrence not found");
  };
  swap_head(xa, xb, 0, a.crossing_count(), a.crossings());
  swap_head(xb, xa, a.crossing_count(),
            a.crossing_count() + b.crossing_count(), b.crossings());

  return LinkDiagram::from_tuples(tuples,
                                  a.unknot_components() + b.unknot_components(),
                                  std::move(name));
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b,
                           std::string name) {
  int offset = 0;
  for (const Crossing& c : a.crossings())
    for (Arc arc : c.arcs) offset = std::max(offset, arc);
  std::vector<std::array<Arc, 4>> tuples;
  for (const Crossing& c : a.crossings()) tuples.push_back(c.arcs);
  for (const Crossing& c : b.crossings()) {
    std::array<Arc, 4> t{};
    for (int s = 0; s < 4; ++s) t[s] = c.arcs[s] + offset;
    tuples.push_back(t);
  }
  int unknots = a.unknot_components() + b.unknot_components();
  if (tuples.empty()) return LinkDiagram::unlink(unknots, std::move(name));
  return LinkDiagram::from_tuples(tuples, unknots, std::move(name));
}

}  // namespace gen
}  // namespace skein
