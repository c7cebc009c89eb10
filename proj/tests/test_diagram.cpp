#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adequa/diagram.hpp"
#include "oracles.hpp"

using namespace adequa;

static const char* kTrefoilPD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

TEST_CASE("parse_pd trefoil: V=3, E=6, F=5") {
  PlanarDiagram d = parse_pd(kTrefoilPD);
  CHECK(d.crossing_count() == 3);
  CHECK(d.arc_count() == 6);
  CHECK(face_count(d) == 5);
  CHECK(d.is_connected());
  CHECK(d.component_count() == 1);
}

TEST_CASE("parse_pd rejects bad input") {
  CHECK_THROWS_AS(parse_pd(""), DiagramError);
  CHECK_THROWS_AS(parse_pd("X[1,2,3,4]"), DiagramError);       // labels occur once
  CHECK_THROWS_AS(parse_pd("Y[1,1,2,2]"), DiagramError);       // malformed token
  CHECK_THROWS_AS(parse_pd("X[1,1,2]"), DiagramError);         // arity
  CHECK_THROWS_AS(parse_pd("X[1,1,1,1]"), DiagramError);       // label four times
  CHECK_THROWS_AS(parse_pd("X[0,0,1,1]"), DiagramError);       // non-positive label
}

TEST_CASE("kink diagram X[1,1,2,2]") {
  PlanarDiagram d = parse_pd("X[1,1,2,2]");
  CHECK(d.crossing_count() == 1);
  CHECK(d.arc_count() == 2);
  CHECK(face_count(d) == 3);
  CHECK(d.component_count() == 1);
}

TEST_CASE("face incidence sums") {
  for (const char* pd : {kTrefoilPD, "X[1,1,2,2]"}) {
    PlanarDiagram d = parse_pd(pd);
    FaceSet fs = faces(d);
    int corners = 0, sides = 0;
    for (const Face& f : fs.faces) {
      corners += static_cast<int>(f.corners.size());
      sides += static_cast<int>(f.arc_sides.size());
    }
    CHECK(corners == 4 * d.crossing_count());
    CHECK(sides == 2 * d.arc_count());
  }
}

TEST_CASE("disconnected two-block diagram parses, is_connected false") {
  PlanarDiagram d = parse_pd(
      "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] X[11,14,12,15] X[13,16,14,11] X[15,12,16,13]");
  CHECK(d.crossing_count() == 6);
  CHECK_FALSE(d.is_connected());
  CHECK(d.component_count() == 2);
}

TEST_CASE("braid closure basics") {
  PlanarDiagram tre = braid_closure({2, {1, 1, 1}});
  CHECK(tre.crossing_count() == 3);
  CHECK(tre.is_connected());
  CHECK(tre.component_count() == 1);
  CHECK(face_count(tre) == 5);

  PlanarDiagram six = braid_closure({3, {1, 1, 1, 2, 2, 2}});
  CHECK(six.crossing_count() == 6);
  CHECK(six.is_connected());
  CHECK(six.component_count() == 1);

  PlanarDiagram unlink = braid_closure({2, {}});
  CHECK(unlink.crossing_count() == 0);
  CHECK(unlink.loop_count() == 2);
  CHECK(unlink.component_count() == 2);
  CHECK_FALSE(unlink.is_connected());

  PlanarDiagram hopf = braid_closure({2, {1, 1}});
  CHECK(hopf.component_count() == 2);
  CHECK(face_count(hopf) == 4);

  CHECK_THROWS_AS(braid_closure({2, {2}}), DiagramError);
  CHECK_THROWS_AS(parse_braid("1: 1"), DiagramError);
  CHECK(parse_braid("3: 1 1 -2").letters.size() == 3);
}

TEST_CASE("pretzel construction") {
  PlanarDiagram p233 = pretzel({-2, 3, 3});
  CHECK(p233.crossing_count() == 8);
  CHECK(p233.is_connected());
  CHECK(p233.component_count() == 1);

  PlanarDiagram p333 = pretzel({3, 3, 3});
  CHECK(p333.crossing_count() == 9);
  CHECK(p333.component_count() == 1);

  for (int q = 2; q <= 9; ++q) {
    PlanarDiagram tq = pretzel({q});
    CHECK(tq.crossing_count() == q);
    CHECK(face_count(tq) == q + 2);
    CHECK(tq.component_count() == (q % 2 == 0 ? 2 : 1));
  }

  CHECK_THROWS_AS(pretzel({}), DiagramError);
  CHECK_THROWS_AS(pretzel({2, 0, 1}), DiagramError);
  CHECK(parse_pretzel_params("P(-2,3,3)") == std::vector<int>({-2, 3, 3}));
  CHECK_THROWS_AS(parse_pretzel_params("P(1,2"), DiagramError);
}

TEST_CASE("mirror is an involution preserving shape") {
  for (const char* name : {"t", "k", "p"}) {
    PlanarDiagram d = name[0] == 't'   ? parse_pd(kTrefoilPD)
                      : name[0] == 'k' ? parse_pd("X[1,1,2,2]")
                                       : pretzel({-2, 3, 3});
    PlanarDiagram m = mirror(d);
    CHECK(mirror(m) == d);
    CHECK(m.crossing_count() == d.crossing_count());
    CHECK(m.arc_count() == d.arc_count());
    CHECK(face_count(m) == face_count(d));
    CHECK(m.is_connected() == d.is_connected());
  }
  PlanarDiagram u = unknot();
  CHECK(mirror(u) == u);
}

TEST_CASE("canonical form is stable under relabeling round-trips") {
  for (int variant = 0; variant < 2; ++variant) {
    PlanarDiagram d =
        variant == 0 ? braid_closure({2, {1, 1, 1}}) : pretzel({3, 3, 3});
    CHECK(canonical_pd(d) == canonical_pd(parse_pd(to_pd(d))));
    CHECK(canonical_pd(d) == canonical_pd(parse_pd(canonical_pd(d))));
  }
  CHECK(canonical_pd(unknot(2)) == "O O");
}

TEST_CASE("unknot constructor") {
  PlanarDiagram u = unknot();
  CHECK(u.crossing_count() == 0);
  CHECK(u.loop_count() == 1);
  CHECK(u.is_connected());
  CHECK(u.component_count() == 1);
  CHECK(face_count(u) == 2);
  CHECK_THROWS_AS(unknot(0), DiagramError);
}

TEST_CASE("bigon oracle agrees with face-based bigon detection") {
  for (int variant = 0; variant < 3; ++variant) {
    PlanarDiagram d = variant == 0   ? parse_pd(kTrefoilPD)
                      : variant == 1 ? pretzel({3, 3, 3})
                                     : braid_closure({3, {1, 1, 1, 2, 2, 2}});
    auto pairs = oracle::bigon_pairs(d);
    FaceSet fs = faces(d);
    std::set<std::pair<int, int>> face_pairs;
    for (const Face& f : fs.faces)
      if (f.corners.size() == 2 && f.corners[0].first != f.corners[1].first)
        face_pairs.insert({std::min(f.corners[0].first, f.corners[1].first),
                           std::max(f.corners[0].first, f.corners[1].first)});
    CHECK(pairs == face_pairs);
  }
}
