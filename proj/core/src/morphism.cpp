#include "obc/morphism.hpp"

#include <stdexcept>

#include "json.hpp"

namespace obc {

Morphism Morphism::unit(const NormalDiagram& dg, const Fq& c) {
  Morphism m(dg.src, dg.dst);
  m.add(dg, c);
  return m;
}

void Morphism::add(const NormalDiagram& d, const Fq& c) {
  if (c.is_zero()) return;
  auto it = terms.find(d);
  if (it == terms.end()) {
    terms.emplace(d, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Morphism& Morphism::operator+=(const Morphism& o) {
  if (src != o.src || dst != o.dst) throw std::invalid_argument("morphism type mismatch");
  for (const auto& [d, c] : o.terms) add(d, c);
  return *this;
}

Morphism Morphism::operator+(const Morphism& o) const {
  Morphism r = *this;
  r += o;
  return r;
}

Morphism Morphism::operator-(const Morphism& o) const {
  Morphism r = *this;
  for (const auto& [d, c] : o.terms) r.add(d, -c);
  if (src != o.src || dst != o.dst) throw std::invalid_argument("morphism type mismatch");
  return r;
}

Morphism Morphism::scaled(const Fq& c) const {
  Morphism r(src, dst);
  if (c.is_zero()) return r;
  for (const auto& [d, v] : terms) r.add(d, v * c);
  return r;
}

Morphism identity_morphism(const Word& a, const Params& P) {
  return Morphism::unit(identity_diagram(a), Fq::one(P.p));
}

std::string Morphism::json() const {
  nlohmann::json j;
  j["src"] = src;
  j["dst"] = dst;
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& [d, c] : terms)
    ts.push_back({{"diagram", nlohmann::json::parse(d.json())}, {"coeff", c.str()}});
  j["terms"] = ts;
  return j.dump();
}

Morphism morphism_from_json(const std::string& text, const Params& P) {
  auto j = nlohmann::json::parse(text);
  Morphism m(j.at("src").get<std::string>(), j.at("dst").get<std::string>());
  for (const auto& t : j.at("terms")) {
    auto d = diagram_from_json(t.at("diagram").dump());
    if (d.src != m.src || d.dst != m.dst) throw std::invalid_argument("term type mismatch");
    m.add(d, Fq::parse(P.p, t.at("coeff").get<std::string>()));
  }
  return m;
}

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::CupR: return "CupR";
    case Gen::CapR: return "CapR";
    case Gen::CupL: return "CupL";
    case Gen::CapL: return "CapL";
    case Gen::CrossUU: return "CrossUU";
    case Gen::CrossDD: return "CrossDD";
    case Gen::CrossUD: return "CrossUD";
    case Gen::CrossDU: return "CrossDU";
    case Gen::DotUp: return "DotUp";
    case Gen::DotDown: return "DotDown";
  }
  return "?";
}

Gen gen_parse(const std::string& s) {
  for (Gen g : {Gen::CupR, Gen::CapR, Gen::CupL, Gen::CapL, Gen::CrossUU, Gen::CrossDD,
                Gen::CrossUD, Gen::CrossDU, Gen::DotUp, Gen::DotDown})
    if (s == gen_name(g)) return g;
  throw std::invalid_argument("unknown generator: " + s);
}

Word layer_output(const Word& w, const Layer& ly) {
  int p = ly.pos;
  auto need = [&](int count) {
    if (p < 0 || p + count > (int)w.size())
      throw std::invalid_argument("layer position out of range");
  };
  auto expect = [&](const char* pat) {
    need(2);
    if (w[p] != pat[0] || w[p + 1] != pat[1])
      throw std::invalid_argument(std::string("layer does not fit word: ") + gen_name(ly.gen) +
                                  " at " + std::to_string(p) + " on " + w);
  };
  Word out = w;
  switch (ly.gen) {
    case Gen::CupR:
      if (p < 0 || p > (int)w.size()) throw std::invalid_argument("layer position out of range");
      return out.insert(p, "ud");
    case Gen::CupL:
      if (p < 0 || p > (int)w.size()) throw std::invalid_argument("layer position out of range");
      return out.insert(p, "du");
    case Gen::CapR:
      expect("du");
      return out.erase(p, 2);
    case Gen::CapL:
      expect("ud");
      return out.erase(p, 2);
    case Gen::CrossUU:
      expect("uu");
      return out;
    case Gen::CrossDD:
      expect("dd");
      return out;
    case Gen::CrossUD:
      expect("ud");
      out[p] = 'd';
      out[p + 1] = 'u';
      return out;
    case Gen::CrossDU:
      expect("du");
      out[p] = 'u';
      out[p + 1] = 'd';
      return out;
    case Gen::DotUp:
      need(1);
      if (w[p] != 'u') throw std::invalid_argument("DotUp needs an up letter");
      return out;
    case Gen::DotDown:
      need(1);
      if (w[p] != 'd') throw std::invalid_argument("DotDown needs a down letter");
      return out;
  }
  throw std::logic_error("unreachable");
}

LayerWord layerword_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  LayerWord lw;
  lw.src = j.at("src").get<std::string>();
  if (!valid_word(lw.src)) throw std::invalid_argument("bad source word");
  for (const auto& l : j.at("layers"))
    lw.layers.push_back({l.at("pos").get<int>(), gen_parse(l.at("gen").get<std::string>())});
  return lw;
}

}  // namespace obc
