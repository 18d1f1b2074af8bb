#include "skein/homfly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include "skein/errors.hpp"

namespace skein {

namespace {

// Head occurrence of each arc: the (crossing, slot) where the arc runs
// into the crossing. Slot 0 is the under-strand head; the over-strand
// head is slot 1 at positive crossings and slot 3 at negative ones.
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

// Pass order induced by basepoints: each component's cycle rotated to
// start at its chosen arc, components in the given order.
std::vector<Arc> traversal_order(const LinkDiagram& d,
                                 const std::vector<Arc>* starts) {
  std::vector<Arc> order;
  if (!starts) {
    for (const auto& comp : d.components())
      order.insert(order.end(), comp.begin(), comp.end());
    return order;
  }
  if (starts->size() != d.components().size())
    throw IndexOutOfRange("need exactly one basepoint arc per component");
  std::set<size_t> used;
  for (Arc start : *starts) {
    bool found = false;
    for (size_t k = 0; k < d.components().size(); ++k) {
      const auto& comp = d.components()[k];
      auto it = std::find(comp.begin(), comp.end(), start);
      if (it == comp.end()) continue;
      if (!used.insert(k).second)
        throw IndexOutOfRange("two basepoints on one component");
      order.insert(order.end(), it, comp.end());
      order.insert(order.end(), comp.begin(), it);
      found = true;
      break;
    }
    if (!found)
      throw IndexOutOfRange("basepoint arc " + std::to_string(start) +
                            " not in diagram");
  }
  return order;
}

// First crossing whose first visit along the traversal happens on the
// over-strand; nullopt when the diagram is ascending.
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

class Engine {
public:
  explicit Engine(const HomflyOptions& opt) : opt_(opt) {}

  LaurentPoly2 eval(const LinkDiagram& d, const std::vector<Arc>* root_starts) {
    if (d.crossing_count() > opt_.crossing_cap)
      throw CrossingCapExceeded("diagram has " + std::to_string(d.crossing_count()) +
                                " crossings, cap is " +
                                std::to_string(opt_.crossing_cap));
    if (d.crossing_count() == 0)
      return LaurentPoly2::delta_power(d.component_count() - 1);

    std::string key;
    if (opt_.memoize) {
      key = d.canonical_code();
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }

    // Unroll the switch chain: switching never changes the arc labels,
    // so one traversal serves the whole chain, and each step strictly
    // advances the first offending crossing. Smoothed children recurse
    // with one crossing fewer. Only the entry diagram is cached; keying
    // every chain intermediate costs more than it saves.
    std::vector<Arc> order = traversal_order(d, root_starts);
    struct Step {
      int sign;
      LinkDiagram smoothed;
    };
    std::vector<Step> chain;
    LinkDiagram w = d;
    for (;;) {
      std::optional<int> off = first_offending(w, order);
      if (!off) break;
      chain.push_back({w.crossings()[*off].sign,
                       w.resolved(*off, ResolveMode::kSmooth)});
      w = w.resolved(*off, ResolveMode::kSwitch);
    }

    LaurentPoly2 p = LaurentPoly2::delta_power(w.component_count() - 1);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      LaurentPoly2 smooth_poly = eval(it->smoothed, nullptr);
      if (it->sign > 0)
        p = p.mono_mul(2, 0) + smooth_poly.mono_mul(1, 1);
      else
        p = p.mono_mul(-2, 0) - smooth_poly.mono_mul(-1, 1);
    }
    if (opt_.memoize) memo_.emplace(std::move(key), p);
    return p;
  }

private:
  HomflyOptions opt_;
  std::unordered_map<std::string, LaurentPoly2> memo_;
};

}  // namespace

LaurentPoly2 homfly(const LinkDiagram& d, const HomflyOptions& opt) {
  return Engine(opt).eval(d, nullptr);
}

LaurentPoly2 homfly_with_basepoints(const LinkDiagram& d,
                                    const std::vector<Arc>& component_starts,
                                    const HomflyOptions& opt) {
  return Engine(opt).eval(d, &component_starts);
}

Coeff link_determinant(const LaurentPoly2& p) {
  // Conway polynomial: collect P at v = 1 by z-degree. The z^-k parts of
  // a link polynomial cancel there.
  std::map<int, Coeff> conway;
  for (const auto& [e, c] : p.terms()) {
    conway[e.z] += c;
    if (conway[e.z] == 0) conway.erase(e.z);
  }
  Coeff re = 0, im = 0;
  for (const auto& [z_exp, c] : conway) {
    if (z_exp < 0)
      throw Error("determinant: conway polynomial has a negative z-degree");
    Coeff mag = c << z_exp;  // (2i)^n = 2^n i^n
    switch (z_exp % 4) {
      case 0: re += mag; break;
      case 1: im += mag; break;
      case 2: re -= mag; break;
      case 3: im -= mag; break;
    }
  }
  if (re != 0 && im != 0)
    throw Error("determinant: conway value at 2i is off-axis");
  return abs(re) + abs(im);
}

}  // namespace skein
