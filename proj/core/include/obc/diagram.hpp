#pragma once

#include <string>
#include <vector>

#include "obc/params.hpp"
#include "obc/word.hpp"

namespace obc {

struct Endpoint {
  bool top = false;  // false = bottom line, true = top line
  int idx = 0;       // 0-based position in the word on that side
  bool operator==(const Endpoint& o) const { return top == o.top && idx == o.idx; }
  bool operator<(const Endpoint& o) const {
    if (top != o.top) return !top;  // Bottom < Top
    return idx < o.idx;
  }
};

enum class StrandKind { VertUp, VertDown, Cup, Cap };

struct Strand {
  Endpoint a, b;  // canonical: a < b
  int dots = 0;
};

// A normally ordered dotted oriented Brauer diagram: perfect matching of the
// endpoints of src (bottom) and dst (top) plus a dot count per strand.
// Crossing data is not part of the value; diagrams with equal matching and
// dot counts are equal.
struct NormalDiagram {
  Word src, dst;
  std::vector<Strand> strands;

  void canonicalize();
  char letter(const Endpoint& e) const { return e.top ? dst[e.idx] : src[e.idx]; }
  StrandKind kind(const Strand& s) const;
  // End where dots canonically sit: top of an up vertical, bottom of a down
  // vertical, the 'u' end of a cup, the 'd' end of a cap.
  Endpoint outward_end(const Strand& s) const;
  int strand_at(const Endpoint& e) const;  // index into strands, -1 if absent
  bool orientation_consistent() const;

  bool operator==(const NormalDiagram& o) const;
  bool operator<(const NormalDiagram& o) const;

  std::string json() const;
};

NormalDiagram identity_diagram(const Word& a);

// The unique dot-free all-vertical diagram in Hom(b, a) joining the k-th 'u'
// of b to the k-th 'u' of a and likewise for 'd'; requires class_of(a) == class_of(b).
NormalDiagram sigma_diagram(const Word& a, const Word& b);

NormalDiagram tau_diagram(const NormalDiagram& d);

// Full basis of Hom(src, dst): all orientation-consistent matchings, each with
// every dot vector in [0, level-1]^strands; deterministic order.
std::vector<NormalDiagram> enumerate_basis(const Word& src, const Word& dst, const Params& P);

enum class YHX { Y, H, X };

// Y(a,b) / H(a,b) / X(a,b) as subsets of Hom(b, a):
//   Y: no caps, no crossings among vertical strands, no dots on verticals;
//   H: no cups and no caps;
//   X: no cups, no crossings among vertical strands, no dots on verticals.
std::vector<NormalDiagram> enumerate_YHX(YHX kind, const Word& a, const Word& b, const Params& P);

NormalDiagram diagram_from_json(const std::string& text);

}  // namespace obc
