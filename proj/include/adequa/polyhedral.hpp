#pragma once

#include <vector>

#include "adequa/diagram.hpp"
#include "adequa/kauffman.hpp"

namespace adequa {

// Arc in the complement of H with both endpoints on one state circle such
// that cutting separates segments from segments. Attachment positions are
// gaps in the circle's cyclic traversal: the endpoint sits just after the
// record with that index.
struct NonPrimeArc {
  int circle = -1;
  int gap1 = -1;
  int gap2 = -1;
  int face = -1;  // H-face the arc runs through (diagnostic)
};

struct PolyhedralRegion {
  std::vector<int> segments;  // crossing ids of the segments in this region
  // Circle fragments on the region boundary: (circle id, index of the Pass
  // record the fragment starts at).
  std::vector<std::pair<int, int>> fragments;
};

// Maximal collection of non-prime arcs under the deterministic greedy order
// (circles by id, attachment gap positions lexicographic). Requires a
// connected diagram with at least one crossing, adequate on the chosen side.
std::vector<NonPrimeArc> maximal_nonprime_arcs(const StateGraphH& h);

// Segment-containing regions of the complement of the state circles and the
// given arcs. Throws DiagramError if the arcs are not a valid non-prime
// collection for h.
std::vector<PolyhedralRegion> polyhedral_regions(const StateGraphH& h,
                                                 const std::vector<NonPrimeArc>& arcs);

// max{-chi(G'_A), 0}. Requires A-adequacy and the 2-edge-loop condition on
// the A side; throws DiagramError otherwise.
int guts_euler(const PlanarDiagram& d);

}  // namespace adequa
