#pragma once

#include <map>
#include <string>
#include <vector>

#include "obc/diagram.hpp"

namespace obc {

// Finite formal linear combination of basis diagrams of a fixed type.
struct Morphism {
  Word src, dst;
  std::map<NormalDiagram, Fq> terms;

  Morphism() = default;
  Morphism(Word s, Word d) : src(std::move(s)), dst(std::move(d)) {}

  static Morphism zero(const Word& s, const Word& d) { return Morphism(s, d); }
  static Morphism unit(const NormalDiagram& dg, const Fq& c);

  void add(const NormalDiagram& d, const Fq& c);
  Morphism& operator+=(const Morphism& o);
  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism scaled(const Fq& c) const;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const Morphism& o) const {
    return src == o.src && dst == o.dst && terms == o.terms;
  }
  bool operator!=(const Morphism& o) const { return !(*this == o); }

  std::string json() const;
};

Morphism identity_morphism(const Word& a, const Params& P);
Morphism morphism_from_json(const std::string& text, const Params& P);

enum class Gen { CupR, CapR, CupL, CapL, CrossUU, CrossDD, CrossUD, CrossDU, DotUp, DotDown };

const char* gen_name(Gen g);
Gen gen_parse(const std::string& s);

struct Layer {
  int pos = 0;
  Gen gen = Gen::CupR;
};

// A vertical stack of single-generator layers read bottom to top.
struct LayerWord {
  Word src;
  std::vector<Layer> layers;
};

// The word obtained by applying one generator layer on top of `w`;
// throws if the layer does not fit.
Word layer_output(const Word& w, const Layer& ly);

LayerWord layerword_from_json(const std::string& text);

}  // namespace obc
