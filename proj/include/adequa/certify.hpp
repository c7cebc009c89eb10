#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adequa/diagram.hpp"
#include "adequa/kauffman.hpp"
#include "adequa/twist.hpp"

namespace adequa {

// Volume of the regular ideal octahedron.
inline constexpr double kV8 = 3.663862376708;

enum class Verdict { Hyperbolic, TorusLink, Inconclusive };
enum class SideUsed { AOnDiagram, AOnMirror };
enum class Outcome { Pass, Fail, NotEvaluated };
enum class LinkPrimality { Prime, Composite, Unknown };
enum class NonSplit { NonSplit, Unknown };

struct HypothesisOutcome {
  std::string name;
  Outcome outcome = Outcome::NotEvaluated;
  std::string detail;               // human-readable note ("0 regions", ...)
  std::vector<int> witness;         // crossing ids (or arc ids for primality)
};

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  int torus_q = 0;                  // set when verdict == TorusLink
  SideUsed side = SideUsed::AOnDiagram;
  std::vector<HypothesisOutcome> reasons;

  // Quantities. chi refers to the reduced state graph of the side used.
  std::optional<int> chi;
  std::optional<double> volume_lower_bound;  // only when Hyperbolic
  std::optional<double> effective_bound;     // max(bound, 0)
  std::optional<int> turaev_genus;           // connected diagrams only
  std::optional<int> guts_chi;               // when the guts formula applies
  NonSplit nonsplit = NonSplit::Unknown;
  LinkPrimality link_primality = LinkPrimality::Unknown;
};

// Applies the hyperbolicity criterion for choice A on d, retrying with A on
// mirror(d) when A-adequacy fails. Hypothesis failures yield Inconclusive
// verdicts, never errors; Inconclusive does not assert non-hyperbolicity.
Certificate certify(const PlanarDiagram& d);

// Force the side: 0 = auto, 1 = A on d only, 2 = A on mirror only.
Certificate certify_side(const PlanarDiagram& d, int side_mode);

// Positive/negative braid route: all syllable exponents >= 3 (or <= -3) and
// a prime closure certify Hyperbolic directly; otherwise falls back to
// certify(braid_closure(b)). Requires n >= 3.
Certificate certify_braid(const BraidWord& b);

// -v8 * chi(G') for the side certify() used; requires a Hyperbolic verdict.
std::pair<double, double> volume_lower_bound(const PlanarDiagram& d);

// (2 + c - s_A - s_B)/2 for connected diagrams.
int turaev_genus(const PlanarDiagram& d);

LinkPrimality link_primality(const PlanarDiagram& d);
NonSplit nonsplit(const PlanarDiagram& d);

const char* to_string(Verdict v);
const char* to_string(Outcome o);
const char* to_string(SideUsed s);
const char* to_string(LinkPrimality p);
const char* to_string(NonSplit n);

}  // namespace adequa
