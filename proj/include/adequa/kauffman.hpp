#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "adequa/diagram.hpp"

namespace adequa {

enum class ResolutionChoice { A, B };

inline ResolutionChoice other(ResolutionChoice c) {
  return c == ResolutionChoice::A ? ResolutionChoice::B : ResolutionChoice::A;
}

// Smoothing convention: the A-resolution joins ports {0,1} and {2,3}, the
// B-resolution joins ports {1,2} and {3,0}.  Channel k of a crossing is the
// smoothed strand through port pair k; its canonical direction runs from the
// first port of the pair to the second, and the crossing's segment leaves to
// the left of that direction.
int smoothing_mate(ResolutionChoice c, int port);
int channel_of_port(ResolutionChoice c, int port);
// First port of channel k under choice c (canonical direction start).
int channel_start(ResolutionChoice c, int k);

// One step of a state circle traversal: either an arc of the diagram or a
// pass through a smoothed channel of a crossing.
struct CircleRecord {
  enum Kind { ArcPiece, Pass } kind = ArcPiece;
  int arc = -1;        // ArcPiece
  int crossing = -1;   // Pass
  int channel = -1;    // Pass: 0 or 1
  bool canonical = true;  // Pass: traversed in the canonical channel direction
};

struct StateCircleSet {
  ResolutionChoice choice = ResolutionChoice::A;
  std::vector<std::vector<CircleRecord>> circles;  // cyclic record sequences
  int circle_count() const { return static_cast<int>(circles.size()); }
};

// Position of a segment endpoint: which circle, and the index of the Pass
// record in that circle's cyclic traversal.
struct SegmentEnd {
  int circle = -1;
  int position = -1;
  bool left = true;  // segment leaves on the left of the circle's traversal
};

// The trivalent graph H: state circles plus one segment per crossing, with
// attachment positions recording the embedding.
struct StateGraphH {
  StateCircleSet circles;
  // segment i corresponds to crossing i; ends[0] is the channel-0 end.
  struct Segment {
    std::array<SegmentEnd, 2> ends{};
  };
  std::vector<Segment> segments;
};

// State graph: one vertex per circle, one edge per crossing.
struct StateGraph {
  ResolutionChoice choice = ResolutionChoice::A;
  int vertices = 0;
  struct Edge {
    int u = -1, v = -1;  // circle ids, u <= v
    int crossing = -1;
  };
  std::vector<Edge> edges;
};

struct ReducedStateGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // distinct unordered pairs
};

StateCircleSet resolve_all(const PlanarDiagram& d, ResolutionChoice c);
StateGraphH build_H(const PlanarDiagram& d, ResolutionChoice c);
StateGraph state_graph(const StateGraphH& h);
StateGraph state_graph(const PlanarDiagram& d, ResolutionChoice c);

// Loop witness: a crossing whose segment joins a circle to itself.
std::optional<int> adequacy_witness(const StateGraph& g);
bool is_adequate(const PlanarDiagram& d, ResolutionChoice c);

// Collapses parallel edge classes. Throws DiagramError if g has a loop edge
// (inadequate side); every downstream use requires adequacy first.
ReducedStateGraph reduce(const StateGraph& g);

int euler_char(const ReducedStateGraph& g);

}  // namespace adequa
