#include "adequa/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace adequa {

namespace {

struct UnionFind {
  std::vector<int> parent;
  int add() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Assembles a diagram from crossings whose ports reference provisional arc
// ids subject to identifications.
struct Builder {
  UnionFind uf;
  std::vector<Crossing> crossings;

  int new_arc() { return uf.add(); }
  void unite(int a, int b) { uf.unite(a, b); }
  void add_crossing(int p0, int p1, int p2, int p3) {
    crossings.push_back(Crossing{{p0, p1, p2, p3}});
  }

  PlanarDiagram build() {
    std::map<int, int> compact;  // root -> dense id, non-loop arcs first
    for (auto& c : crossings)
      for (int& a : c.ports) {
        a = uf.find(a);
        if (!compact.count(a)) compact.emplace(a, -1);
      }
    int next = 0;
    for (auto& [root, id] : compact) id = next++;
    for (auto& c : crossings)
      for (int& a : c.ports) a = compact[a];
    int loops = 0;
    for (int i = 0; i < static_cast<int>(uf.parent.size()); ++i)
      if (uf.find(i) == i && !compact.count(i)) ++loops;
    return PlanarDiagram::make(std::move(crossings), loops);
  }
};

}  // namespace

Endpoint PlanarDiagram::other_end(int crossing, int port) const {
  const Arc& a = arcs_[crossings_[crossing].ports[port]];
  Endpoint here{crossing, port};
  return a.ends[0] == here ? a.ends[1] : a.ends[0];
}

bool PlanarDiagram::same_crossings(const PlanarDiagram& o) const {
  if (crossings_.size() != o.crossings_.size()) return false;
  for (size_t i = 0; i < crossings_.size(); ++i)
    if (crossings_[i].ports != o.crossings_[i].ports) return false;
  return true;
}

PlanarDiagram PlanarDiagram::make(std::vector<Crossing> crossings, int loop_components) {
  PlanarDiagram d;
  d.crossings_ = std::move(crossings);
  d.loops_ = loop_components;
  if (loop_components < 0) throw DiagramError("negative loop count");

  int max_arc = -1;
  for (const auto& c : d.crossings_)
    for (int a : c.ports) {
      if (a < 0) throw DiagramError("crossing port refers to a negative arc id");
      max_arc = std::max(max_arc, a);
    }
  int n_ported = max_arc + 1;
  std::vector<int> count(n_ported, 0);
  d.arcs_.assign(n_ported + loop_components, Arc{});
  for (int c = 0; c < static_cast<int>(d.crossings_.size()); ++c)
    for (int p = 0; p < 4; ++p) {
      int a = d.crossings_[c].ports[p];
      if (count[a] >= 2)
        throw DiagramError("arc label occurs more than twice");
      d.arcs_[a].ends[count[a]] = Endpoint{c, p};
      ++count[a];
    }
  for (int a = 0; a < n_ported; ++a)
    if (count[a] != 2)
      throw DiagramError("arc label does not occur exactly twice");
  for (int l = 0; l < loop_components; ++l) d.arcs_[n_ported + l].loop = true;

  // Per-component Euler check V - E + F = 2 certifies a sphere embedding.
  std::vector<int> comp = d.crossing_components();
  int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  if (ncomp > 0) {
    std::vector<int> vcnt(ncomp, 0), ecnt(ncomp, 0), fcnt(ncomp, 0);
    for (int c = 0; c < d.crossing_count(); ++c) ++vcnt[comp[c]];
    for (int a = 0; a < n_ported; ++a) ++ecnt[comp[d.arcs_[a].ends[0].crossing]];
    FaceSet fs = faces(d);
    for (const Face& f : fs.faces) {
      if (f.corners.empty()) continue;  // loop-component face
      ++fcnt[comp[f.corners[0].first]];
    }
    for (int k = 0; k < ncomp; ++k)
      if (vcnt[k] - ecnt[k] + fcnt[k] != 2)
        throw DiagramError("inconsistent embedding: Euler check failed");
  }
  return d;
}

std::vector<int> PlanarDiagram::crossing_components() const {
  std::vector<int> comp(crossings_.size(), -1);
  int next = 0;
  for (int start = 0; start < crossing_count(); ++start) {
    if (comp[start] != -1) continue;
    comp[start] = next;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int p = 0; p < 4; ++p) {
        Endpoint e = other_end(c, p);
        if (comp[e.crossing] == -1) {
          comp[e.crossing] = next;
          stack.push_back(e.crossing);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool PlanarDiagram::is_connected() const {
  if (empty()) return false;
  if (crossing_count() == 0) return loops_ == 1;
  if (loops_ > 0) return false;
  std::vector<int> comp = crossing_components();
  return *std::max_element(comp.begin(), comp.end()) == 0;
}

int PlanarDiagram::component_count() const {
  // Link components: strand orbits (a strand passes straight through each
  // crossing, port p to port p+2).
  int n = 0;
  std::vector<bool> seen(arcs_.size(), false);
  for (int a = 0; a < arc_count(); ++a) {
    if (seen[a] || arcs_[a].loop) continue;
    ++n;
    int cur = a;
    Endpoint e = arcs_[a].ends[0];
    while (!seen[cur]) {
      seen[cur] = true;
      Endpoint far = arcs_[cur].ends[0] == e ? arcs_[cur].ends[1] : arcs_[cur].ends[0];
      Endpoint next{far.crossing, (far.port + 2) % 4};
      cur = crossings_[next.crossing].ports[next.port];
      e = next;
    }
  }
  return n + loops_;
}

FaceSet faces(const PlanarDiagram& d) {
  int V = d.crossing_count();
  int nd = 4 * V;
  FaceSet fs;
  fs.face_of_dart.assign(nd, -1);
  fs.corner_face.assign(V, {-1, -1, -1, -1});

  for (int start = 0; start < nd; ++start) {
    if (fs.face_of_dart[start] != -1) continue;
    int id = static_cast<int>(fs.faces.size());
    fs.faces.emplace_back();
    fs.walk.emplace_back();
    Face& f = fs.faces.back();
    int dart = start;
    do {
      fs.face_of_dart[dart] = id;
      fs.walk[id].push_back(dart);
      int c = dart / 4, p = dart % 4;
      int arc = d.arc_at(c, p);
      int side = (d.arcs()[arc].ends[0] == Endpoint{c, p}) ? 0 : 1;
      f.arc_sides.emplace_back(arc, side);
      Endpoint far = d.other_end(c, p);
      f.corners.emplace_back(far.crossing, far.port);
      fs.corner_face[far.crossing][far.port] = id;
      dart = far.crossing * 4 + (far.port + 1) % 4;
    } while (dart != start);
  }

  // Each crossing-free loop bounds two faces of its own.
  for (int a = 0; a < d.arc_count(); ++a) {
    if (!d.arcs()[a].loop) continue;
    for (int side = 0; side < 2; ++side) {
      fs.faces.emplace_back();
      fs.walk.emplace_back();
      fs.faces.back().arc_sides.emplace_back(a, side);
    }
  }
  return fs;
}

int face_count(const PlanarDiagram& d) {
  return static_cast<int>(faces(d).faces.size());
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  std::vector<Crossing> cs(d.crossings().size());
  for (size_t i = 0; i < cs.size(); ++i)
    for (int p = 0; p < 4; ++p)
      cs[i].ports[p] = d.crossings()[i].ports[(4 - p) % 4];
  return PlanarDiagram::make(std::move(cs), d.loop_count());
}

// --- parsing ---------------------------------------------------------------

namespace {

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

long parse_int(const std::string& s, size_t& i, const char* what) {
  skip_ws(s, i);
  size_t j = i;
  if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
  size_t k = j;
  while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
  if (k == j) throw DiagramError(std::string("expected integer in ") + what);
  long v = std::stol(s.substr(i, k - i));
  i = k;
  return v;
}

}  // namespace

PlanarDiagram parse_pd(const std::string& text) {
  size_t i = 0;
  std::vector<std::array<long, 4>> tokens;
  skip_ws(text, i);
  while (i < text.size()) {
    if (text[i] != 'X')
      throw DiagramError("malformed token: expected X[a,b,c,d]");
    ++i;
    skip_ws(text, i);
    if (i >= text.size() || (text[i] != '[' && text[i] != '('))
      throw DiagramError("malformed token: expected '[' after X");
    char close = text[i] == '[' ? ']' : ')';
    ++i;
    std::array<long, 4> t{};
    for (int k = 0; k < 4; ++k) {
      t[k] = parse_int(text, i, "PD token");
      if (t[k] <= 0) throw DiagramError("arc labels must be positive integers");
      skip_ws(text, i);
      char expect = k < 3 ? ',' : close;
      if (i >= text.size() || text[i] != expect)
        throw DiagramError("malformed token: bad separator in X[...]");
      ++i;
    }
    tokens.push_back(t);
    skip_ws(text, i);
  }
  if (tokens.empty())
    throw DiagramError("empty diagram text (use the unknot constructor for 0 crossings)");

  std::map<long, int> label_to_id;
  for (const auto& t : tokens)
    for (long l : t) label_to_id.emplace(l, 0);
  int next = 0;
  for (auto& [l, id] : label_to_id) id = next++;

  std::vector<Crossing> cs;
  cs.reserve(tokens.size());
  for (const auto& t : tokens) {
    Crossing c;
    for (int k = 0; k < 4; ++k) c.ports[k] = label_to_id[t[k]];
    cs.push_back(c);
  }
  return PlanarDiagram::make(std::move(cs), 0);
}

PlanarDiagram unknot(int loop_components) {
  if (loop_components < 1) throw DiagramError("unknot needs at least one component");
  return PlanarDiagram::make({}, loop_components);
}

BraidWord parse_braid(const std::string& text) {
  size_t i = 0;
  BraidWord b;
  b.strands = static_cast<int>(parse_int(text, i, "braid strand count"));
  skip_ws(text, i);
  if (i >= text.size() || text[i] != ':')
    throw DiagramError("braid format is \"n: e1 e2 ...\"");
  ++i;
  skip_ws(text, i);
  while (i < text.size()) {
    b.letters.push_back(static_cast<int>(parse_int(text, i, "braid letter")));
    skip_ws(text, i);
  }
  if (b.strands < 2) throw DiagramError("braid needs at least 2 strands");
  for (int l : b.letters)
    if (l == 0 || std::abs(l) > b.strands - 1)
      throw DiagramError("braid letter out of range 1..n-1");
  return b;
}

// Crossing templates, braid flowing downward with counterclockwise ports:
//   positive letter (type X, NW-SE strand over):  ports = (NE, NW, SW, SE)
//   negative letter (type Y, NE-SW strand over):  ports = (NW, SW, SE, NE)
PlanarDiagram braid_closure(const BraidWord& b) {
  if (b.strands < 2) throw DiagramError("braid needs at least 2 strands");
  for (int l : b.letters)
    if (l == 0 || std::abs(l) > b.strands - 1)
      throw DiagramError("braid letter out of range 1..n-1");
  Builder bld;
  std::vector<int> init(b.strands), cur(b.strands);
  for (int j = 0; j < b.strands; ++j) init[j] = cur[j] = bld.new_arc();
  for (int l : b.letters) {
    int i = std::abs(l) - 1;
    int nl = bld.new_arc(), nr = bld.new_arc();
    if (l > 0)
      bld.add_crossing(cur[i + 1], cur[i], nl, nr);
    else
      bld.add_crossing(cur[i], nl, nr, cur[i + 1]);
    cur[i] = nl;
    cur[i + 1] = nr;
  }
  for (int j = 0; j < b.strands; ++j) bld.unite(init[j], cur[j]);
  return bld.build();
}

PlanarDiagram pretzel(const std::vector<int>& params) {
  if (params.empty()) throw DiagramError("pretzel needs at least one band");
  for (int k : params)
    if (k == 0) throw DiagramError("pretzel parameters must be nonzero");
  Builder bld;
  int r = static_cast<int>(params.size());
  std::vector<int> tl(r), tr(r), bl(r), br(r);
  for (int i = 0; i < r; ++i) {
    int l = bld.new_arc(), rt = bld.new_arc();
    tl[i] = l;
    tr[i] = rt;
    for (int c = 0; c < std::abs(params[i]); ++c) {
      int nl = bld.new_arc(), nr = bld.new_arc();
      if (params[i] > 0)
        bld.add_crossing(rt, l, nl, nr);
      else
        bld.add_crossing(l, nl, nr, rt);
      l = nl;
      rt = nr;
    }
    bl[i] = l;
    br[i] = rt;
  }
  if (r == 1) {
    // A single band closes strand-wise, giving the standard (2,q) torus
    // link diagram rather than a plat.
    bld.unite(tl[0], bl[0]);
    bld.unite(tr[0], br[0]);
  } else {
    for (int i = 0; i < r; ++i) {
      bld.unite(tr[i], tl[(i + 1) % r]);
      bld.unite(br[i], bl[(i + 1) % r]);
    }
  }
  return bld.build();
}

std::vector<int> parse_pretzel_params(const std::string& text) {
  size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size() || (text[i] != 'P' && text[i] != 'p'))
    throw DiagramError("pretzel format is \"P(k1,k2,...)\"");
  ++i;
  skip_ws(text, i);
  if (i >= text.size() || text[i] != '(')
    throw DiagramError("pretzel format is \"P(k1,k2,...)\"");
  ++i;
  std::vector<int> params;
  while (true) {
    params.push_back(static_cast<int>(parse_int(text, i, "pretzel parameter")));
    skip_ws(text, i);
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  if (i >= text.size() || text[i] != ')')
    throw DiagramError("pretzel format is \"P(k1,k2,...)\"");
  ++i;
  skip_ws(text, i);
  if (i != text.size()) throw DiagramError("trailing junk after P(...)");
  return params;
}

// --- rendering and canonical form -------------------------------------------

std::string to_pd(const PlanarDiagram& d) {
  std::ostringstream os;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (c) os << ' ';
    os << "X[" << d.arc_at(c, 0) + 1 << ',' << d.arc_at(c, 1) + 1 << ','
       << d.arc_at(c, 2) + 1 << ',' << d.arc_at(c, 3) + 1 << ']';
  }
  for (int l = 0; l < d.loop_count(); ++l) os << (d.crossing_count() || l ? " O" : "O");
  return os.str();
}

namespace {

std::string canonical_from(const PlanarDiagram& d, Endpoint start) {
  int V = d.crossing_count();
  std::vector<int> shift(V, -1), order;
  std::vector<int> arc_label(d.arc_count(), 0);
  int next_label = 1;
  order.reserve(V);
  auto visit = [&](int c, int entry_port) {
    if (shift[c] != -1) return;
    shift[c] = entry_port >= 2 ? 2 : 0;
    order.push_back(c);
  };
  visit(start.crossing, start.port);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int c = order[qi];
    for (int i = 0; i < 4; ++i) {
      int p = (i + shift[c]) % 4;
      int a = d.arc_at(c, p);
      if (!arc_label[a]) arc_label[a] = next_label++;
      Endpoint far = d.other_end(c, p);
      visit(far.crossing, far.port);
    }
  }
  std::ostringstream os;
  for (size_t i = 0; i < order.size(); ++i) {
    int c = order[i];
    if (i) os << ' ';
    os << "X[";
    for (int k = 0; k < 4; ++k)
      os << arc_label[d.arc_at(c, (k + shift[c]) % 4)] << (k < 3 ? "," : "]");
  }
  for (int l = 0; l < d.loop_count(); ++l)
    os << (d.crossing_count() || l ? " O" : "O");
  return os.str();
}

}  // namespace

std::string canonical_pd(const PlanarDiagram& d) {
  if (d.crossing_count() == 0) {
    std::string s;
    for (int l = 0; l < d.loop_count(); ++l) s += (l ? " O" : "O");
    return s;
  }
  // The traversal is seeded at the lowest arc label; both endpoints are
  // tried and the lexicographically smaller rendering wins.
  const Arc& a0 = d.arcs()[0];
  std::string s1 = canonical_from(d, a0.ends[0]);
  std::string s2 = canonical_from(d, a0.ends[1]);
  return std::min(s1, s2);
}

}  // namespace adequa
