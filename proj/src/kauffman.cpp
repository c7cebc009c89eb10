#include "adequa/kauffman.hpp"

#include <algorithm>
#include <map>

namespace adequa {

int smoothing_mate(ResolutionChoice c, int port) {
  return c == ResolutionChoice::A ? (port ^ 1) : (3 - port);
}

int channel_of_port(ResolutionChoice c, int port) {
  if (c == ResolutionChoice::A) return port >> 1;          // {0,1} -> 0, {2,3} -> 1
  return (port == 1 || port == 2) ? 0 : 1;                 // {1,2} -> 0, {3,0} -> 1
}

int channel_start(ResolutionChoice c, int k) {
  if (c == ResolutionChoice::A) return 2 * k;              // 0->1, 2->3
  return k == 0 ? 1 : 3;                                   // 1->2, 3->0
}

StateCircleSet resolve_all(const PlanarDiagram& d, ResolutionChoice c) {
  StateCircleSet out;
  out.choice = c;
  std::vector<bool> arc_done(d.arc_count(), false);

  for (int a0 = 0; a0 < d.arc_count(); ++a0) {
    if (arc_done[a0]) continue;
    if (d.arcs()[a0].loop) {
      arc_done[a0] = true;
      out.circles.push_back({CircleRecord{CircleRecord::ArcPiece, a0, -1, -1, true}});
      continue;
    }
    std::vector<CircleRecord> circle;
    const int arc0 = a0;
    const Endpoint from0 = d.arcs()[a0].ends[0];
    int arc = arc0;
    Endpoint from = from0;
    // Walk: arc piece, then the smoothed channel at its far end, repeatedly,
    // until the traversal closes up at the initial arc end.
    while (true) {
      arc_done[arc] = true;
      circle.push_back(CircleRecord{CircleRecord::ArcPiece, arc, -1, -1, true});
      Endpoint far = d.arcs()[arc].ends[0] == from ? d.arcs()[arc].ends[1]
                                                   : d.arcs()[arc].ends[0];
      int mate = smoothing_mate(c, far.port);
      int chan = channel_of_port(c, far.port);
      bool canonical = far.port == channel_start(c, chan);
      circle.push_back(CircleRecord{CircleRecord::Pass, -1, far.crossing, chan, canonical});
      from = Endpoint{far.crossing, mate};
      arc = d.arc_at(far.crossing, mate);
      if (arc == arc0 && from == from0) break;
    }
    out.circles.push_back(std::move(circle));
  }
  return out;
}

StateGraphH build_H(const PlanarDiagram& d, ResolutionChoice c) {
  StateGraphH h;
  h.circles = resolve_all(d, c);
  h.segments.assign(d.crossing_count(), {});
  for (int ci = 0; ci < h.circles.circle_count(); ++ci) {
    const auto& circle = h.circles.circles[ci];
    for (int pos = 0; pos < static_cast<int>(circle.size()); ++pos) {
      const CircleRecord& r = circle[pos];
      if (r.kind != CircleRecord::Pass) continue;
      SegmentEnd e;
      e.circle = ci;
      e.position = pos;
      e.left = r.canonical;
      h.segments[r.crossing].ends[r.channel] = e;
    }
  }
  return h;
}

StateGraph state_graph(const StateGraphH& h) {
  StateGraph g;
  g.choice = h.circles.choice;
  g.vertices = h.circles.circle_count();
  g.edges.reserve(h.segments.size());
  for (int x = 0; x < static_cast<int>(h.segments.size()); ++x) {
    int u = h.segments[x].ends[0].circle;
    int v = h.segments[x].ends[1].circle;
    if (u > v) std::swap(u, v);
    g.edges.push_back(StateGraph::Edge{u, v, x});
  }
  return g;
}

StateGraph state_graph(const PlanarDiagram& d, ResolutionChoice c) {
  return state_graph(build_H(d, c));
}

std::optional<int> adequacy_witness(const StateGraph& g) {
  for (const auto& e : g.edges)
    if (e.u == e.v) return e.crossing;
  return std::nullopt;
}

bool is_adequate(const PlanarDiagram& d, ResolutionChoice c) {
  return !adequacy_witness(state_graph(d, c)).has_value();
}

ReducedStateGraph reduce(const StateGraph& g) {
  ReducedStateGraph r;
  r.vertices = g.vertices;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : g.edges) {
    if (e.u == e.v)
      throw DiagramError("reduce: state graph has a loop edge (inadequate side)");
    pairs.emplace_back(e.u, e.v);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  r.edges = std::move(pairs);
  return r;
}

int euler_char(const ReducedStateGraph& g) {
  return g.vertices - static_cast<int>(g.edges.size());
}

}  // namespace adequa
