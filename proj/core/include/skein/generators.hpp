#ifndef SKEIN_GENERATORS_HPP
#define SKEIN_GENERATORS_HPP

#include <string>
#include <vector>

#include "skein/diagram.hpp"

namespace skein {
namespace gen {

// Closure of a braid on `strands` strands. Letters are nonzero
// integers: +i crosses strands i and i+1 with a positive crossing,
// -i with a negative one (1-based positions).
LinkDiagram braid_closure(int strands, const std::vector<int>& word,
                          std::string name = {});

// Closure of the positive braid (s_1 s_2 ... s_{p-1})^q on p strands:
// the (p,q) torus link drawn with all crossings positive.
LinkDiagram torus(int p, int q, std::string name = {});

// Standard alternating diagram of the 2-bridge knot with Conway notation
// C(a_1,...,a_k), all a_i >= 1. `mirrored` picks the other chirality.
// Only knots are supported (an even continued-fraction numerator throws).
LinkDiagram rational(const std::vector<int>& twists, bool mirrored = false,
                     std::string name = {});

// Pretzel diagram P(e_1,...,e_m): m vertical twist regions of |e_i|
// crossings whose handedness follows the sign of e_i.
LinkDiagram pretzel(const std::vector<int>& twists, bool mirrored = false,
                    std::string name = {});

// One-crossing unknot diagram with a kink of the given sign.
LinkDiagram kink_unknot(int sign, std::string name = {});

// Joins two diagrams along one strand of each (connected sum), or places
// them side by side (split union).
LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b,
                          std::string name = {});
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b,
                           std::string name = {});

}  // namespace gen
}  // namespace skein

#endif  // SKEIN_GENERATORS_HPP
