#ifndef SKEIN_DIAGRAM_HPP
#define SKEIN_DIAGRAM_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace skein {

using Arc = int;

// One crossing in PD-code form. Slot 0 holds the incoming under-strand
// arc; slots 1..3 continue around the crossing in the PD rotational
// order. The under-strand runs slot 0 -> slot 2, the over-strand
// occupies slots 1 and 3. sign is derived from the strand orientations:
// +1 when the over-strand enters at slot 1, -1 when it enters at slot 3.
struct Crossing {
  std::array<Arc, 4> arcs{};
  int sign = 0;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

enum class ResolveMode { kSwitch, kSmooth };

// Seifert circles of a diagram: the orientation-preserving smoothing of
// every crossing. Crossing-free unknot components count as circles but
// carry no arcs.
struct SeifertCircles {
  std::vector<std::vector<Arc>> circles;
  int unknot_components = 0;

  int count() const { return static_cast<int>(circles.size()) + unknot_components; }
};

struct DiagramStats {
  int seifert_circles = 0;   // s
  int crossings = 0;         // c
  int writhe = 0;            // w
  int s_plus = 0;            // components after resolving negative crossings
  int diagram_components = 0;
  int self_linking = 0;      // w - s
};

// An oriented link diagram over abstract arc labels (PD-code semantics),
// plus a count of crossing-free unknot components. Immutable after
// construction; every operation returns a fresh value, so diagrams are
// safe to share across threads.
class LinkDiagram {
public:
  LinkDiagram() = default;

  // Parses the PD text form: comma-separated "X(a,b,c,d)" tuples plus
  // optional "U(k)" tokens for crossing-free unknot components.
  static LinkDiagram parse_pd(const std::string& text);

  // Builds from raw tuples (slot 0 = incoming under). Arc labels may be
  // arbitrary positive integers; they are canonically relabeled.
  static LinkDiagram from_tuples(const std::vector<std::array<Arc, 4>>& tuples,
                                 int unknot_components = 0,
                                 std::string name = {});

  static LinkDiagram unlink(int components, std::string name = {});

  const std::string& name() const { return name_; }
  LinkDiagram with_name(std::string name) const;

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  int unknot_components() const { return unknot_components_; }

  // Oriented arc cycles, one per link component with crossings; arcs are
  // relabeled 1..2c consecutively along each cycle.
  const std::vector<std::vector<Arc>>& components() const { return components_; }
  int component_count() const {
    return static_cast<int>(components_.size()) + unknot_components_;
  }

  int writhe() const;
  SeifertCircles seifert_circles() const;
  int s_plus() const;
  DiagramStats stats() const;

  // Connected components of the diagram itself (crossings chained by
  // arcs; each crossing-free unknot is its own component).
  int connected_count() const;
  std::vector<LinkDiagram> split_components() const;

  bool is_alternating() const;
  bool is_reduced() const;

  LinkDiagram mirror() const;
  LinkDiagram resolved(int crossing_index, ResolveMode mode) const;

  // Label-invariant canonical key: the lexicographically smallest PD
  // relabeling over basepoint and component-order choices. Equal codes
  // iff the diagrams are identical up to arc relabeling.
  std::string canonical_code() const;
  bool isomorphic_to(const LinkDiagram& other) const;

  std::string pd_text() const;
  std::string to_json() const;
  static LinkDiagram from_json(const std::string& text);

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;

private:
  friend class DiagramBuilder;

  std::vector<Crossing> crossings_;
  int unknot_components_ = 0;
  std::vector<std::vector<Arc>> components_;
  std::string name_;
};

std::ostream& operator<<(std::ostream& os, const LinkDiagram& d);

}  // namespace skein

#endif  // SKEIN_DIAGRAM_HPP
