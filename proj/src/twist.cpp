#include "adequa/twist.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace adequa {

namespace {

bool is_bigon(const Face& f) {
  return f.corners.size() == 2 && f.corners[0].first != f.corners[1].first;
}

// A bigon is alternating when each of its strands passes under at one end
// and over at the other (port parities differ).
bool bigon_alternating(const PlanarDiagram& d, const Face& f) {
  int arc = f.arc_sides[0].first;
  const Arc& a = d.arcs()[arc];
  return (a.ends[0].port % 2) != (a.ends[1].port % 2);
}

}  // namespace

std::vector<TwistRegion> twist_regions(const PlanarDiagram& d) {
  FaceSet fs = faces(d);
  int V = d.crossing_count();
  // nbr[x]: distinct bigon neighbors with the bigon faces joining them.
  std::vector<std::map<int, std::vector<int>>> nbr(V);
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
    if (!is_bigon(fs.faces[f])) continue;
    int x = fs.faces[f].corners[0].first;
    int y = fs.faces[f].corners[1].first;
    nbr[x][y].push_back(f);
    nbr[y][x].push_back(f);
  }
  for (int x = 0; x < V; ++x)
    if (nbr[x].size() > 2)
      throw std::logic_error("crossing with more than two bigon neighbors");

  std::vector<bool> used(V, false);
  std::vector<TwistRegion> out;
  for (int s = 0; s < V; ++s) {
    if (used[s]) continue;
    // Find the chain component containing s and a deterministic start: an
    // endpoint of the chain if one exists, else (cycle) the lowest id.
    std::vector<int> comp{s};
    std::set<int> seen{s};
    for (size_t i = 0; i < comp.size(); ++i)
      for (const auto& [y, _] : nbr[comp[i]])
        if (seen.insert(y).second) comp.push_back(y);
    // Start from the smallest chain endpoint; cycles start at their
    // smallest vertex.
    int start = -1;
    for (int v : comp)
      if (nbr[v].size() <= 1 && (start == -1 || v < start)) start = v;
    if (start == -1) start = *std::min_element(comp.begin(), comp.end());

    TwistRegion r;
    int prev = -1, cur = start;
    while (true) {
      used[cur] = true;
      r.crossings.push_back(cur);
      int next = -1;
      for (const auto& [y, faces_xy] : nbr[cur]) {
        if (y == prev || used[y]) continue;
        next = y;
        break;
      }
      if (next == -1) break;
      r.bigons.push_back(*std::min_element(nbr[cur][next].begin(), nbr[cur][next].end()));
      prev = cur;
      cur = next;
    }
    r.alternating = true;
    for (int f : r.bigons)
      if (!bigon_alternating(d, fs.faces[f])) r.alternating = false;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const TwistRegion& a, const TwistRegion& b) {
    return a.crossings.front() < b.crossings.front();
  });
  return out;
}

int twist_number(const PlanarDiagram& d) {
  return static_cast<int>(twist_regions(d).size());
}

bool has_nonalternating_bigon(const PlanarDiagram& d) {
  FaceSet fs = faces(d);
  for (const Face& f : fs.faces)
    if (is_bigon(f) && !bigon_alternating(d, f)) return true;
  return false;
}

ResolutionKind resolution_kind(const PlanarDiagram& d, const TwistRegion& r,
                               ResolutionChoice c) {
  if (r.size() == 1) return ResolutionKind::NotApplicable;
  if (!r.alternating)
    throw DiagramError("resolution kind undefined for a non-alternating twist region");

  StateGraphH h = build_H(d, c);
  std::vector<int> circle_of_arc(d.arc_count(), -1);
  std::vector<int> piece_count(h.circles.circle_count(), 0);
  for (int ci = 0; ci < h.circles.circle_count(); ++ci)
    for (const CircleRecord& rec : h.circles.circles[ci])
      if (rec.kind == CircleRecord::ArcPiece) {
        circle_of_arc[rec.arc] = ci;
        ++piece_count[ci];
      }

  // Short: every crossing of the region is a parallel edge between the same
  // two distinct circles.
  bool short_pred = true;
  int u = -1, v = -1;
  for (int x : r.crossings) {
    int a = h.segments[x].ends[0].circle;
    int b = h.segments[x].ends[1].circle;
    if (a > b) std::swap(a, b);
    if (u == -1) {
      u = a;
      v = b;
    }
    if (a != u || b != v || a == b) short_pred = false;
  }
  if (short_pred) return ResolutionKind::Short;

  // Long: each chain bigon becomes its own circle.
  FaceSet fs = faces(d);
  bool long_pred = !r.bigons.empty();
  for (int f : r.bigons) {
    int a = fs.faces[f].arc_sides[0].first;
    int b = fs.faces[f].arc_sides[1].first;
    int ca = circle_of_arc[a];
    if (ca != circle_of_arc[b] || piece_count[ca] != 2) long_pred = false;
  }
  if (long_pred) return ResolutionKind::Long;
  return ResolutionKind::Short;
}

TwoEdgeLoopResult two_edge_loop_condition(const PlanarDiagram& d, ResolutionChoice c) {
  StateGraph g = state_graph(d, c);
  if (adequacy_witness(g))
    throw DiagramError("2-edge-loop condition requires an adequate side");

  std::vector<TwistRegion> regions = twist_regions(d);
  std::vector<int> region_of(d.crossing_count(), -1);
  for (int i = 0; i < static_cast<int>(regions.size()); ++i)
    for (int x : regions[i].crossings) region_of[x] = i;

  std::map<std::pair<int, int>, std::vector<int>> classes;
  for (const auto& e : g.edges) classes[{e.u, e.v}].push_back(e.crossing);

  std::vector<int> kind_cache(regions.size(), -1);
  auto region_short = [&](int ri) {
    if (kind_cache[ri] == -1) {
      if (!regions[ri].alternating)
        kind_cache[ri] = 0;
      else
        kind_cache[ri] =
            resolution_kind(d, regions[ri], c) == ResolutionKind::Short ? 1 : 0;
    }
    return kind_cache[ri] == 1;
  };

  for (auto& [uv, xs] : classes) {
    if (xs.size() < 2) continue;
    std::sort(xs.begin(), xs.end());
    for (size_t i = 0; i < xs.size(); ++i)
      for (size_t j = i + 1; j < xs.size(); ++j) {
        int a = xs[i], b = xs[j];
        if (region_of[a] != region_of[b] || !regions[region_of[a]].alternating ||
            !region_short(region_of[a]))
          return TwoEdgeLoopResult{false, {a, b}};
      }
  }
  return TwoEdgeLoopResult{true, {-1, -1}};
}

PrimalityResult prime_witness(const PlanarDiagram& d) {
  if (!d.is_connected())
    throw DiagramError("diagram primality requires a connected diagram");
  int V = d.crossing_count();
  int E = d.arc_count() - d.loop_count();
  if (V <= 1) return PrimalityResult{};

  std::vector<int> label(V);
  auto splits = [&](int skip_a, int skip_b) {
    std::fill(label.begin(), label.end(), -1);
    std::vector<int> stack{0};
    label[0] = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int p = 0; p < 4; ++p) {
        int a = d.arc_at(x, p);
        if (a == skip_a || a == skip_b) continue;
        int y = d.other_end(x, p).crossing;
        if (label[y] == -1) {
          label[y] = 0;
          stack.push_back(y);
        }
      }
    }
    for (int x = 0; x < V; ++x)
      if (label[x] == -1) return true;  // both sides carry crossings
    return false;
  };

  for (int a = 0; a < E; ++a)
    for (int b = a + 1; b < E; ++b)
      if (splits(a, b)) return PrimalityResult{false, {a, b}};
  return PrimalityResult{};
}

bool is_prime_diagram(const PlanarDiagram& d) { return prime_witness(d).prime; }

std::vector<int> nugatory_crossings(const PlanarDiagram& d) {
  FaceSet fs = faces(d);
  std::vector<int> out;
  for (int x = 0; x < d.crossing_count(); ++x)
    if (fs.corner_face[x][0] == fs.corner_face[x][2] ||
        fs.corner_face[x][1] == fs.corner_face[x][3])
      out.push_back(x);
  return out;
}

// --- twist-reducedness ------------------------------------------------------

namespace {

struct Chord {
  int face;
  int dart_a;
  int dart_b;
};

// Dart whose arc incidence lies on the opposite side of the arc attached at
// (crossing, port), seen from the corner face flanked by that port.
int opposite_incidence_entry(const PlanarDiagram& d, int crossing, int port) {
  return crossing * 4 + port;
}
int opposite_incidence_exit(const PlanarDiagram& d, int crossing, int port) {
  Endpoint e = d.other_end(crossing, port);
  return e.crossing * 4 + e.port;
}

// Walks a prospective bigon row from x1 (entering through `corner`) and
// succeeds if it reaches x2 arriving at `end_corner`.
bool walk_row(const PlanarDiagram& d, const FaceSet& fs, int x1, int corner, int x2,
              int end_corner) {
  int cur = x1, k = corner;
  for (int step = 0; step <= d.crossing_count(); ++step) {
    int f = fs.face_at(cur, k);
    const Face& face = fs.faces[f];
    if (face.corners.size() != 2) return false;
    auto [ca, ka] = face.corners[0];
    auto [cb, kb] = face.corners[1];
    int ny, nk;
    if (ca == cur && ka == k) {
      ny = cb;
      nk = kb;
    } else if (cb == cur && kb == k) {
      ny = ca;
      nk = ka;
    } else {
      return false;
    }
    if (ny == cur) return false;
    if (ny == x2) return nk == end_corner;
    if (ny == x1) return false;
    cur = ny;
    k = (nk + 2) % 4;
  }
  return false;
}

bool has_row_side(const PlanarDiagram& d, const FaceSet& fs, int x1, int k1, int x2,
                  int k2) {
  int a1 = d.arc_at(x1, k1), a2 = d.arc_at(x1, (k1 + 1) % 4);
  int b1 = d.arc_at(x2, k2), b2 = d.arc_at(x2, (k2 + 1) % 4);
  // Degenerate empty row: the two corners are hooked up directly by a pair
  // of parallel arcs.
  if (std::minmax(a1, a2) == std::minmax(b1, b2)) return true;
  for (int x1_in = 0; x1_in < 2; ++x1_in)
    for (int x2_in = 0; x2_in < 2; ++x2_in) {
      int start = x1_in ? (k1 + 2) % 4 : k1;
      int end = x2_in ? (k2 + 2) % 4 : k2;
      if (walk_row(d, fs, x1, start, x2, end)) return true;
    }
  return false;
}

// True if two chords in one face must cross: all four endpoints on distinct
// boundary positions and strictly interleaved. Shared positions can always
// be ordered to avoid a crossing.
bool chords_clash(const std::vector<int>& walk, const Chord& p, const Chord& q) {
  auto pos = [&](int dart) {
    for (int i = 0; i < static_cast<int>(walk.size()); ++i)
      if (walk[i] == dart) return i;
    return -1;
  };
  int p1 = pos(p.dart_a), p2 = pos(p.dart_b), q1 = pos(q.dart_a), q2 = pos(q.dart_b);
  if (p1 == p2 || q1 == q2) return false;
  if (p1 == q1 || p1 == q2 || p2 == q1 || p2 == q2) return false;
  auto between = [&](int lo, int hi, int x) {
    // cyclic open interval (lo, hi)
    if (lo < hi) return lo < x && x < hi;
    return x > lo || x < hi;
  };
  return between(p1, p2, q1) != between(p1, p2, q2);
}

}  // namespace

TwistReducedResult twist_reduced_witness(const PlanarDiagram& d, ResolutionChoice c) {
  if (!d.is_connected())
    throw DiagramError("twist-reducedness requires a connected diagram");
  FaceSet fs = faces(d);
  int V = d.crossing_count();
  // Corner cuts compatible with choice c are the corners the c-smoothing
  // does not merge (the segment runs parallel to such a cut).
  std::array<int, 2> cuts =
      c == ResolutionChoice::A ? std::array<int, 2>{1, 3} : std::array<int, 2>{0, 2};

  for (int x1 = 0; x1 < V; ++x1)
    for (int x2 = x1 + 1; x2 < V; ++x2)
      for (int k1 : cuts)
        for (int k2 : cuts) {
          int c1f = fs.face_at(x1, k1);
          int c2f = fs.face_at(x2, k2);
          int f_exit = fs.face_of_dart[opposite_incidence_exit(d, x1, (k1 + 1) % 4)];
          int f_ret = fs.face_of_dart[opposite_incidence_entry(d, x1, k1)];
          int of_b1 = fs.face_of_dart[opposite_incidence_entry(d, x2, k2)];
          int of_b2 = fs.face_of_dart[opposite_incidence_exit(d, x2, (k2 + 1) % 4)];

          bool in_is_b1 = (f_exit == of_b1 && f_ret == of_b2);
          bool in_is_b2 = (f_exit == of_b2 && f_ret == of_b1);
          if (!in_is_b1 && !in_is_b2) continue;

          // Assemble the candidate curve's four chords and reject
          // configurations that cannot be drawn simple.
          int a1_in_c1 = opposite_incidence_exit(d, x1, k1);
          int a2_in_c1 = x1 * 4 + (k1 + 1) % 4;
          int a2_in_f = opposite_incidence_exit(d, x1, (k1 + 1) % 4);
          int b1_in_c2 = opposite_incidence_exit(d, x2, k2);
          int b2_in_c2 = x2 * 4 + (k2 + 1) % 4;
          int b1_other = x2 * 4 + k2;
          int b2_other = opposite_incidence_exit(d, x2, (k2 + 1) % 4);
          int bin_f = in_is_b1 ? b1_other : b2_other;
          int bout_fret = in_is_b1 ? b2_other : b1_other;
          int a1_in_fret = x1 * 4 + k1;
          std::vector<Chord> chords = {
              {c1f, a1_in_c1, a2_in_c1},
              {f_exit, a2_in_f, bin_f},
              {c2f, b1_in_c2, b2_in_c2},
              {f_ret, bout_fret, a1_in_fret},
          };
          bool realizable = true;
          for (size_t i = 0; i < chords.size() && realizable; ++i)
            for (size_t j = i + 1; j < chords.size() && realizable; ++j)
              if (chords[i].face == chords[j].face &&
                  chords_clash(fs.walk[chords[i].face], chords[i], chords[j]))
                realizable = false;
          if (!realizable) continue;

          if (!has_row_side(d, fs, x1, k1, x2, k2))
            return TwistReducedResult{false, x1, k1, x2, k2};
        }
  return TwistReducedResult{true, -1, -1, -1, -1};
}

bool is_twist_reduced(const PlanarDiagram& d, ResolutionChoice c) {
  return twist_reduced_witness(d, c).reduced;
}

PlanarDiagram normalize_bigons(const PlanarDiagram& d) {
  PlanarDiagram cur = d;
  while (true) {
    FaceSet fs = faces(cur);
    int target = -1;
    for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f)
      if (is_bigon(fs.faces[f]) && !bigon_alternating(cur, fs.faces[f])) {
        target = f;
        break;
      }
    if (target == -1) return cur;

    int x = fs.faces[target].corners[0].first;
    int y = fs.faces[target].corners[1].first;
    // Reidemeister II: delete both crossings, letting each strand run
    // straight through their former positions.
    std::vector<int> root(cur.arc_count());
    for (int i = 0; i < cur.arc_count(); ++i) root[i] = i;
    std::function<int(int)> find = [&](int a) {
      while (root[a] != a) a = root[a] = root[root[a]];
      return a;
    };
    auto unite = [&](int a, int b) { root[find(a)] = find(b); };
    for (int z : {x, y}) {
      unite(cur.arc_at(z, 0), cur.arc_at(z, 2));
      unite(cur.arc_at(z, 1), cur.arc_at(z, 3));
    }
    std::vector<Crossing> cs;
    std::map<int, int> compact;
    for (int ci = 0; ci < cur.crossing_count(); ++ci) {
      if (ci == x || ci == y) continue;
      Crossing nc;
      for (int p = 0; p < 4; ++p) {
        int r = find(cur.arc_at(ci, p));
        auto [it, fresh] = compact.emplace(r, static_cast<int>(compact.size()));
        nc.ports[p] = it->second;
      }
      cs.push_back(nc);
    }
    // Strand cycles that lost every crossing close into loop components.
    std::set<int> live_roots;
    for (const auto& crs : cs)
      for (int a : crs.ports) live_roots.insert(a);
    int loops = cur.loop_count();
    std::set<int> all_roots;
    for (int a = 0; a < cur.arc_count(); ++a)
      if (!cur.arcs()[a].loop) all_roots.insert(find(a));
    loops += static_cast<int>(all_roots.size()) - static_cast<int>(compact.size());
    cur = PlanarDiagram::make(std::move(cs), loops);
  }
}

}  // namespace adequa
