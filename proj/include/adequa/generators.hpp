#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adequa/diagram.hpp"
#include "adequa/kauffman.hpp"

namespace adequa {

// A link diagram in an annulus. Arcs listed in meridian_arcs cross the
// annulus meridian exactly once, ordered across the meridian; winding is
// their count. rect_* list the H_A elements lying inside the marked
// meridional rectangle R.
struct AnnularPattern {
  PlanarDiagram diagram;
  std::vector<int> meridian_arcs;
  std::vector<int> rect_segments;      // crossing ids
  std::vector<int> rect_circle_arcs;   // one arc id per rectangle-internal circle
  int winding() const { return static_cast<int>(meridian_arcs.size()); }
};

// Verifies the rectangle condition: deleting the listed circles and segments
// from H_A leaves exactly `winding` circles, each containing exactly one
// meridian arc. Throws DiagramError when violated.
void check_pattern(const AnnularPattern& p);

// Pattern text: PD tokens (X[...] and O[label] for crossing-free loops),
// then "meridian: a1,a2,..." and optionally "rect: c<k>... s<arc>...".
AnnularPattern parse_pattern(const std::string& text);

// n parallel copies of the core, no crossings.
AnnularPattern core_pattern(int n);
// Winding-2 clasp pattern whose satellites are A-adequate doubles.
AnnularPattern whitehead_pattern();

struct SatelliteResult {
  PlanarDiagram diagram;
  int host_arc = -1;  // companion arc the pattern was spliced along
};

// Blackboard-framed satellite: n-cables the companion (n^2 copies per
// crossing) and splices the pattern tangle along the lowest-numbered
// companion arc. Requires an A-adequate companion and a valid pattern.
SatelliteResult satellite(const PlanarDiagram& companion, const AnnularPattern& pattern);

// Deterministic pseudo-random diagrams grown by chord insertion; over/under
// chosen uniformly per crossing.
PlanarDiagram random_diagram(int crossings, uint64_t seed);
// Same 4-valent maps with the alternating over/under assignment.
PlanarDiagram random_alternating(int crossings, uint64_t seed);

}  // namespace adequa
