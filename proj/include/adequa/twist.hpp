#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "adequa/diagram.hpp"
#include "adequa/kauffman.hpp"

namespace adequa {

// Maximal chain of crossings joined end to end by bigon faces.
struct TwistRegion {
  std::vector<int> crossings;  // chain order; a single crossing is a region
  std::vector<int> bigons;     // face ids of the #crossings-1 chain bigons
  bool alternating = true;
  int size() const { return static_cast<int>(crossings.size()); }
};

enum class ResolutionKind { Short, Long, NotApplicable };

// Partition of all crossings into maximal bigon chains. Requires a connected
// diagram. Non-alternating chains are flagged, not rejected.
std::vector<TwistRegion> twist_regions(const PlanarDiagram& d);
int twist_number(const PlanarDiagram& d);

// Short iff the region's crossings become parallel edges between the same
// two circles under c; Long iff the chain bigons become circles;
// NotApplicable iff the region has a single crossing. Throws DiagramError on
// non-alternating regions.
ResolutionKind resolution_kind(const PlanarDiagram& d, const TwistRegion& r,
                               ResolutionChoice c);

struct TwoEdgeLoopResult {
  bool pass = true;
  // On failure: a pair of crossings forming a 2-edge loop that does not come
  // from the short resolution of a single twist region.
  std::pair<int, int> witness{-1, -1};
};

// Requires is_adequate(d, c). Checks every parallel edge pair of the state
// graph against Definition-style membership: same twist region, resolved
// short.
TwoEdgeLoopResult two_edge_loop_condition(const PlanarDiagram& d, ResolutionChoice c);

struct PrimalityResult {
  bool prime = true;
  std::pair<int, int> witness_arcs{-1, -1};  // a 2-arc cut with crossings on both sides
};

// A connected diagram is prime iff every 2-arc edge cut of the underlying
// 4-valent graph has a crossing-free side.
PrimalityResult prime_witness(const PlanarDiagram& d);
bool is_prime_diagram(const PlanarDiagram& d);

// Crossings with two coinciding opposite corner faces.
std::vector<int> nugatory_crossings(const PlanarDiagram& d);

struct TwistReducedResult {
  bool reduced = true;
  // Offending pair of crossings and cut corners if not.
  int x1 = -1, k1 = -1, x2 = -1, k2 = -1;
};

// Definition of A-(or B-)twist reduced, decided by enumerating candidate
// curves through quadruples (x1, corner, x2, corner) whose corner cuts match
// the c-smoothing, and checking that one side is a row of bigons.
TwistReducedResult twist_reduced_witness(const PlanarDiagram& d, ResolutionChoice c);
bool is_twist_reduced(const PlanarDiagram& d, ResolutionChoice c);

// Optional normalization: repeatedly removes non-alternating bigon pairs
// (a Reidemeister II move). Off the main certification path by default.
PlanarDiagram normalize_bigons(const PlanarDiagram& d);

// True if some twist region is flagged non-alternating.
bool has_nonalternating_bigon(const PlanarDiagram& d);

}  // namespace adequa
