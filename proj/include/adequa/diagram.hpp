#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace adequa {

// Raised on malformed or inconsistent user input (parse errors, bad
// parameters, violated operation preconditions).
struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One end of an arc: (crossing index, port 0..3).
// Port 0 is the incoming understrand end; ports 0,1,2,3 run counterclockwise,
// so the understrand occupies ports {0,2} and the overstrand ports {1,3}.
struct Endpoint {
  int crossing = -1;
  int port = -1;
  bool operator==(const Endpoint&) const = default;
};

// An arc joins exactly two (crossing, port) endpoints, or is a closed
// crossing-free loop component (loop == true, endpoints unused).
struct Arc {
  std::array<Endpoint, 2> ends{};
  bool loop = false;
};

struct Crossing {
  std::array<int, 4> ports{};  // arc id attached at each port
};

// Face of the sphere embedding. Boundary items come from the rotation-system
// traversal: each (arc, side) incidence appears in exactly one face, each
// crossing corner (between ports k and k+1) in exactly one face.
struct Face {
  std::vector<std::pair<int, int>> arc_sides;  // (arc id, side 0/1)
  std::vector<std::pair<int, int>> corners;    // (crossing id, corner k)
};

// Darts: directed arc ends. Dart 4*c+p leaves crossing c through port p and
// traverses the arc to its far endpoint. Loop arcs have two synthetic darts
// appended after the crossing darts.
struct FaceSet {
  std::vector<Face> faces;
  std::vector<int> face_of_dart;            // dart id -> face id
  std::vector<std::array<int, 4>> corner_face;  // [crossing][k] -> face id
  std::vector<std::vector<int>> walk;       // face id -> cyclic dart sequence

  int face_at(int crossing, int corner) const { return corner_face[crossing][corner]; }
};

class PlanarDiagram {
 public:
  PlanarDiagram() = default;

  // Builds and validates. Throws DiagramError if ports and arcs are
  // inconsistent or the rotation system fails the per-component Euler check.
  static PlanarDiagram make(std::vector<Crossing> crossings, int loop_components);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int loop_count() const { return loops_; }

  int arc_at(int crossing, int port) const { return crossings_[crossing].ports[port]; }
  // The far endpoint of the arc attached at (crossing, port).
  Endpoint other_end(int crossing, int port) const;

  // Number of link components (closed strands).
  int component_count() const;
  // Connectivity of the underlying 4-valent graph (loop arcs are their own
  // components).
  bool is_connected() const;
  // Graph-component label per crossing.
  std::vector<int> crossing_components() const;

  bool empty() const { return crossings_.empty() && loops_ == 0; }

  bool operator==(const PlanarDiagram& o) const {
    return loops_ == o.loops_ && same_crossings(o);
  }

 private:
  bool same_crossings(const PlanarDiagram& o) const;

  std::vector<Crossing> crossings_;
  std::vector<Arc> arcs_;
  int loops_ = 0;
};

// Face traversal of the sphere embedding, per connected component.
// Each loop component contributes two faces (its two sides).
FaceSet faces(const PlanarDiagram& d);

// Convenience: V - E + F Euler count per crossing-bearing component is
// checked at construction; this exposes the face count.
int face_count(const PlanarDiagram& d);

// Mirror image: each crossing's port cyclic order is reversed in place
// (ports[i] -> ports[(4-i)%4]), which swaps crossing handedness and
// exchanges the roles of the A- and B-resolutions. Exact involution.
PlanarDiagram mirror(const PlanarDiagram& d);

// --- parsing and constructors -------------------------------------------

// Parses whitespace-separated X[a,b,c,d] tokens (positive integer arc
// labels, each occurring exactly twice; a = incoming understrand).
PlanarDiagram parse_pd(const std::string& text);

// The k-component unlink as k closed loop arcs (k >= 1).
PlanarDiagram unknot(int loop_components = 1);

struct BraidWord {
  int strands = 2;                // n >= 2
  std::vector<int> letters;       // letter +-i means sigma_i^{+-1}, 1 <= i <= n-1
};

// Parses "n: e1 e2 ..." (signed integers).
BraidWord parse_braid(const std::string& text);

// Standard closure of a braid word; crossing count = #letters.
PlanarDiagram braid_closure(const BraidWord& b);

// Standard pretzel diagram P(k1,...,kr): vertical bands of |ki| crossings
// joined cyclically along the top and bottom. ki > 0 gives bands with the
// same crossing handedness as positive braid generators.
PlanarDiagram pretzel(const std::vector<int>& params);

// Parses "P(k1,k2,...)".
std::vector<int> parse_pretzel_params(const std::string& text);

// --- canonical form -------------------------------------------------------

// Deterministic relabeling by breadth-first traversal seeded at the lowest
// arc label; output is a PD token string ("X[...] ..." plus "O" per loop).
// Two diagrams constructed with order-isomorphic labelings canonicalize
// identically, making equality decidable.
std::string canonical_pd(const PlanarDiagram& d);

// Renders as PD tokens with 1-based labels in internal order.
std::string to_pd(const PlanarDiagram& d);

}  // namespace adequa
