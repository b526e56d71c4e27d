#include "obc/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace obc {

namespace {

// Shift endpoint indices on one side, from a starting index, by a delta.
void shift(NormalDiagram& d, bool top, int from, int by) {
  for (auto& s : d.strands) {
    if (s.a.top == top && s.a.idx >= from) s.a.idx += by;
    if (s.b.top == top && s.b.idx >= from) s.b.idx += by;
  }
}

Endpoint other_end(const Strand& s, const Endpoint& e) { return s.a == e ? s.b : s.a; }

void replace_end(Strand& s, const Endpoint& from, const Endpoint& to) {
  if (s.a == from)
    s.a = to;
  else if (s.b == from)
    s.b = to;
  else
    throw std::logic_error("endpoint not on strand");
}

// The state machine that appends one generator layer at a time, at the top or
// at the bottom of a basis diagram, producing a normalized combination.
struct Engine {
  const Params& P;
  std::vector<Fq> cf_up, cf_down;  // monic cyclotomic coefficient lists
  int depth = 0;

  explicit Engine(const Params& p)
      : P(p), cf_up(cyclo_poly(p, Orient::Up)), cf_down(cyclo_poly(p, Orient::Down)) {}

  struct Guard {
    Engine& e;
    explicit Guard(Engine& en) : e(en) {
      if (++e.depth > 20000) throw std::logic_error("engine recursion limit exceeded");
    }
    ~Guard() { --e.depth; }
  };

  Morphism top(const Morphism& m, const Layer& ly) {
    Morphism out(m.src, layer_output(m.dst, ly));
    for (const auto& [d, c] : m.terms) out += top(d, c, ly);
    return out;
  }

  Morphism bottom(const Morphism& m, const Layer& ly) {
    Morphism out(below_input(m.src, ly), m.dst);
    for (const auto& [d, c] : m.terms) out += bottom(d, c, ly);
    return out;
  }

  // ---- top appends -------------------------------------------------------

  Morphism top(const NormalDiagram& d, const Fq& c, const Layer& ly) {
    Guard g(*this);
    const int p = ly.pos;
    const Word out_word = layer_output(d.dst, ly);
    switch (ly.gen) {
      case Gen::CupR:
      case Gen::CupL: {
        NormalDiagram d2 = d;
        shift(d2, true, p, 2);
        d2.dst = out_word;
        d2.strands.push_back({Endpoint{true, p}, Endpoint{true, p + 1}, 0});
        d2.canonicalize();
        return Morphism::unit(d2, c);
      }
      case Gen::CapR:
      case Gen::CapL:
        return top_cap(d, c, ly, out_word);
      case Gen::CrossUU:
      case Gen::CrossDD:
      case Gen::CrossUD:
      case Gen::CrossDU:
        return top_cross(d, c, ly, out_word);
      case Gen::DotUp:
        return dot_top_up(d, c, p);
      case Gen::DotDown:
        return dot_top_down(d, c, p);
    }
    throw std::logic_error("unreachable");
  }

  // A closed loop carrying k dots that formed at columns (q, q+1) is the plain
  // series value only when it sits at the left edge. Further right, the bubble
  // series gains one correction factor per strand between the loop and the
  // edge; the corrections deposit dots on those strands. With x the dot on the
  // strand being passed, the factor is 1 - (u-x)^{-2} for a clockwise loop
  // passing an up strand or a counterclockwise loop passing a down strand, and
  // the inverse series in the two remaining cases. The value of the k-dotted
  // ccw loop is the u^{-k-1} coefficient of B(u)*H(u) - 1 where
  // B = 1 + sum_i delta_i u^{-i} and H is the product of the factors; the cw
  // value is that coefficient of 1 - B'(u)*H(u) with B' = 1 - sum delta'_i u^{-i}.
  Morphism close_loop(const NormalDiagram& d2, const Fq& c, int k, bool ccw, int q, bool at_top) {
    const Word& w = at_top ? d2.dst : d2.src;
    using Key = std::vector<int>;  // dots deposited on columns 0..q-1
    using Poly = std::map<Key, Fq>;
    const int ord = k + 2;  // track orders u^0 .. u^{-(k+1)}
    const Key none(q, 0);
    auto acc = [](Poly& p, const Key& kk, const Fq& v) {
      auto it = p.find(kk);
      if (it == p.end()) p.emplace(kk, v);
      else it->second += v;
    };
    auto smul = [&](const std::vector<Poly>& a, const std::vector<Poly>& b) {
      std::vector<Poly> r(ord);
      for (int i = 0; i < ord; ++i)
        for (int j = 0; i + j < ord; ++j)
          for (auto& [ka, va] : a[i])
            for (auto& [kb, vb] : b[j]) {
              Key kk = ka;
              for (int t = 0; t < q; ++t) kk[t] += kb[t];
              acc(r[i + j], kk, va * vb);
            }
      return r;
    };

    std::vector<Poly> H(ord);
    H[0][none] = Fq::one(P.p);
    for (int col = 0; col < q; ++col) {
      bool plain = ccw ? (w[col] == 'd') : (w[col] == 'u');
      std::vector<Poly> h(ord);
      h[0][none] = Fq::one(P.p);
      for (int i = 0; i + 2 < ord; ++i) {
        Key kk = none;
        kk[col] = i;
        h[i + 2][kk] = Fq::from_int(P.p, -(i + 1));
      }
      if (!plain) {
        // geometric series for the inverse; g = 1 - h sits in orders >= 2
        std::vector<Poly> g(ord), inv(ord);
        for (int i = 2; i < ord; ++i)
          for (auto& [kk, v] : h[i]) g[i][kk] = -v;
        inv[0][none] = Fq::one(P.p);
        std::vector<Poly> pw = g;
        for (int m = 1; 2 * m < ord; ++m) {
          for (int i = 0; i < ord; ++i)
            for (auto& [kk, v] : pw[i]) acc(inv[i], kk, v);
          pw = smul(pw, g);
        }
        h = inv;
      }
      H = smul(H, h);
    }

    std::vector<Poly> S(ord);
    for (int i = 0; i + 1 < ord; ++i) S[i + 1][none] = ccw ? P.delta(i) : P.deltaprime(i);
    std::vector<Poly> F = smul(S, H);
    Fq sgn = ccw ? Fq::one(P.p) : -Fq::one(P.p);
    for (int i = 1; i < ord; ++i)
      for (auto& [kk, v] : H[i]) acc(F[i], kk, sgn * v);

    Morphism res(d2.src, d2.dst);
    for (auto& [kk, v] : F[k + 1]) {
      if (v.is_zero()) continue;
      Morphism t = Morphism::unit(d2, c * v);
      for (int col = 0; col < q; ++col) {
        Gen dg = (w[col] == 'u') ? Gen::DotUp : Gen::DotDown;
        for (int j = 0; j < kk[col]; ++j)
          t = at_top ? top(t, Layer{col, dg}) : bottom(t, Layer{col, dg});
      }
      res += t;
    }
    return res;
  }

  Morphism top_cap(const NormalDiagram& d, const Fq& c, const Layer& ly, const Word& out_word) {
    const int p = ly.pos;
    const int q = (ly.gen == Gen::CapR) ? p + 1 : p;   // the 'u' site
    const int qd = (ly.gen == Gen::CapR) ? p : p + 1;  // the 'd' site
    int iu = d.strand_at({true, q});
    int id = d.strand_at({true, qd});
    if (iu == id) {
      // A cup occupying exactly (p, p+1) closes into a loop.
      int k = d.strands[iu].dots;
      NormalDiagram d2 = d;
      d2.strands.erase(d2.strands.begin() + iu);
      shift(d2, true, p + 2, -2);
      d2.dst = out_word;
      d2.canonicalize();
      return close_loop(d2, c, k, ly.gen == Gen::CapL, p, true);
    }
    const Strand& su = d.strands[iu];
    if (su.dots > 0 && d.outward_end(su) == Endpoint{true, q}) {
      // Slide one dot under the cap to the 'd' site as a down dot, then retry.
      NormalDiagram d1 = d;
      d1.strands[iu].dots--;
      Morphism moved = dot_top_down(d1, c, qd);
      return top(moved, ly);
    }
    // Plain merge: the joined strand keeps all dots at its outward end.
    Endpoint e1 = other_end(d.strands[id], {true, qd});
    Endpoint e2 = other_end(d.strands[iu], {true, q});
    int nd = d.strands[id].dots + d.strands[iu].dots;
    NormalDiagram d2 = d;
    int hi = std::max(iu, id), lo = std::min(iu, id);
    d2.strands.erase(d2.strands.begin() + hi);
    d2.strands.erase(d2.strands.begin() + lo);
    d2.strands.push_back({e1, e2, nd});
    shift(d2, true, p + 2, -2);
    d2.dst = out_word;
    d2.canonicalize();
    return Morphism::unit(d2, c);
  }

  Morphism top_cross(const NormalDiagram& d, const Fq& c, const Layer& ly, const Word& out_word) {
    const int p = ly.pos;
    // Sites whose top end can carry dots that must commute past the crossing.
    std::vector<int> usites;
    if (ly.gen == Gen::CrossUU) usites = {p, p + 1};
    if (ly.gen == Gen::CrossUD) usites = {p};
    if (ly.gen == Gen::CrossDU) usites = {p + 1};
    for (int site : usites) {
      int si = d.strand_at({true, site});
      const Strand& s = d.strands[si];
      if (s.dots > 0 && d.outward_end(s) == Endpoint{true, site}) {
        NormalDiagram d1 = d;
        d1.strands[si].dots--;
        int moved = (site == p) ? p + 1 : p;
        Morphism res = dot_top_up(top(d1, c, ly), moved);
        if (ly.gen == Gen::CrossUU) {
          // crossing . x_0 = x_1 . crossing - 1 ;  crossing . x_1 = x_0 . crossing + 1
          Fq sign = (site == p) ? -Fq::one(P.p) : Fq::one(P.p);
          res.add(d1, c * sign);
        } else if (ly.gen == Gen::CrossUD) {
          // t . x_0 = x_1 . t + cupL . capL
          res += top(top(d1, c, {p, Gen::CapL}), {p, Gen::CupL});
        } else {
          // t' . x_1 = x_0 . t' - cupR . capR
          res += top(top(d1, c, {p, Gen::CapR}), {p, Gen::CupR}).scaled(-Fq::one(P.p));
        }
        return res;
      }
    }
    // No movable dots: a crossing of basis diagrams is a plain swap.
    NormalDiagram d2 = d;
    int i1 = d2.strand_at({true, p});
    int i2 = d2.strand_at({true, p + 1});
    if (i1 == i2) {
      // a cup spanning (p, p+1); the swap only changes its flavour
      d2.dst = out_word;
    } else {
      replace_end(d2.strands[i1], {true, p}, {true, p + 1});
      replace_end(d2.strands[i2], {true, p + 1}, {true, p});
      d2.dst = out_word;
    }
    d2.canonicalize();
    return Morphism::unit(d2, c);
  }

  Morphism dot_top_up(const Morphism& m, int p) {
    Morphism out(m.src, m.dst);
    for (const auto& [d, c] : m.terms) out += dot_top_up(d, c, p);
    return out;
  }

  Morphism dot_top_down(const Morphism& m, int p) {
    Morphism out(m.src, m.dst);
    for (const auto& [d, c] : m.terms) out += dot_top_down(d, c, p);
    return out;
  }

  Morphism dot_bot_down(const Morphism& m, int p) {
    Morphism out(m.src, m.dst);
    for (const auto& [d, c] : m.terms) out += dot_bot_down(d, c, p);
    return out;
  }

  // Up dot arriving at top position p (an outward end).
  Morphism dot_top_up(const NormalDiagram& d, const Fq& c, int p) {
    Guard g(*this);
    if (d.dst[p] != 'u') throw std::logic_error("dot_top_up at a down letter");
    int si = d.strand_at({true, p});
    if (d.strands[si].dots + 1 < P.level) {
      NormalDiagram d2 = d;
      d2.strands[si].dots++;
      d2.canonicalize();
      return Morphism::unit(d2, c);
    }
    if (p == 0) {
      // full packet at the top-left corner: reduce with the minimal polynomial
      Morphism res(d.src, d.dst);
      for (int i = 0; i < P.level; ++i) {
        if (cf_up[i].is_zero()) continue;
        NormalDiagram d2 = d;
        d2.strands[si].dots = i;
        d2.canonicalize();
        res.add(d2, -(cf_up[i] * c));
      }
      return res;
    }
    int q = p - 1;
    if (d.dst[q] == 'u') {
      // x_p . d = s x_q (s . d) + s . d
      Morphism sd = top(d, c, {q, Gen::CrossUU});
      Morphism res = top(dot_top_up(sd, q), {q, Gen::CrossUU});
      res += sd;
      return res;
    }
    // letters (d, u) at (q, p): x_p . d = t x_q (t' . d) - (cupL . capR) . d
    Morphism td = top(d, c, {q, Gen::CrossDU});
    Morphism res = top(dot_top_up(td, q), {q, Gen::CrossUD});
    res += top(top(d, c, {q, Gen::CapR}), {q, Gen::CupL}).scaled(-Fq::one(P.p));
    return res;
  }

  Morphism eval_layers(const Word& src, const std::vector<Layer>& ls, const Fq& c) {
    Morphism m = Morphism::unit(identity_diagram(src), c);
    for (const auto& ly : ls) m = top(m, ly);
    return m;
  }

  // Evaluate the stack with one layer replaced (or dropped, if `repl` is empty).
  Morphism corr_eval(const NormalDiagram& d, const Fq& c, const std::vector<Layer>& L, int k,
                     const std::vector<Layer>& repl) {
    std::vector<Layer> mod(L.begin(), L.begin() + k);
    mod.insert(mod.end(), repl.begin(), repl.end());
    mod.insert(mod.end(), L.begin() + k + 1, L.end());
    return eval_layers(d.src, mod, c);
  }

  // A down dot placed on top of column `col`, just below layers L[startk+1..],
  // commuted downward through L[startk..0] to its resting place. Crossings it
  // passes contribute correction stacks; meeting the creation of its own cup
  // turns it into an up dot on the other leg.
  Morphism down_journey(const NormalDiagram& d, const Fq& c, const std::vector<Layer>& L,
                        int startk, int col) {
    Guard g(*this);
    Morphism res(d.src, d.dst);
    const Fq one = Fq::one(P.p), minus = -Fq::one(P.p);
    for (int k = startk; k >= 0; --k) {
      const Layer& ly = L[k];
      const int q = ly.pos;
      switch (ly.gen) {
        case Gen::DotUp:
        case Gen::DotDown:
          break;  // dots commute with dots
        case Gen::CupR:
        case Gen::CupL: {
          int dleg = (ly.gen == Gen::CupR) ? q + 1 : q;
          int uleg = (ly.gen == Gen::CupR) ? q : q + 1;
          if (col == dleg) {
            // the dot slides around the bend onto the up leg
            Morphism m = eval_layers(d.src, std::vector<Layer>(L.begin(), L.begin() + k + 1), c);
            m = dot_top_up(m, uleg);
            for (size_t j = k + 1; j < L.size(); ++j) m = top(m, L[j]);
            res += m;
            return res;
          }
          if (col > q + 1) col -= 2;
          break;
        }
        case Gen::CapR:
        case Gen::CapL:
          if (col >= q) col += 2;
          break;
        case Gen::CrossDD:
          if (col == q) {
            res += corr_eval(d, c * one, L, k, {});
            col = q + 1;
          } else if (col == q + 1) {
            res += corr_eval(d, c * minus, L, k, {});
            col = q;
          }
          break;
        case Gen::CrossUD:
          if (col == q) {  // the output down letter
            res += corr_eval(d, c * minus, L, k, {{q, Gen::CapL}, {q, Gen::CupL}});
            col = q + 1;
          }
          break;
        case Gen::CrossDU:
          if (col == q + 1) {
            res += corr_eval(d, c * one, L, k, {{q, Gen::CapR}, {q, Gen::CupR}});
            col = q;
          }
          break;
        case Gen::CrossUU:
          break;  // a down dot never sits on an up column
      }
    }
    res += dot_bot_down(d, c, col);
    return res;
  }

  // Mirror image: an up dot below column `col`, just above layers L[..startk-1],
  // commuted upward. Meeting its own cap converts it into a down dot on the
  // other foot, which then travels back down through the layers already passed.
  Morphism up_journey(const NormalDiagram& d, const Fq& c, const std::vector<Layer>& L, int startk,
                      int col) {
    Guard g(*this);
    Morphism res(d.src, d.dst);
    const Fq one = Fq::one(P.p), minus = -Fq::one(P.p);
    for (int k = startk; k < (int)L.size(); ++k) {
      const Layer& ly = L[k];
      const int q = ly.pos;
      switch (ly.gen) {
        case Gen::DotUp:
        case Gen::DotDown:
          break;
        case Gen::CapR:
        case Gen::CapL: {
          int ufoot = (ly.gen == Gen::CapR) ? q + 1 : q;
          int dfoot = (ly.gen == Gen::CapR) ? q : q + 1;
          if (col == ufoot) {
            res += down_journey(d, c, L, k - 1, dfoot);
            return res;
          }
          if (col > q + 1) col -= 2;
          break;
        }
        case Gen::CupR:
        case Gen::CupL:
          if (col >= q) col += 2;
          break;
        case Gen::CrossUU:
          if (col == q) {
            res += corr_eval(d, c * minus, L, k, {});
            col = q + 1;
          } else if (col == q + 1) {
            res += corr_eval(d, c * one, L, k, {});
            col = q;
          }
          break;
        case Gen::CrossUD:
          if (col == q) {  // the input up letter
            res += corr_eval(d, c * one, L, k, {{q, Gen::CapL}, {q, Gen::CupL}});
            col = q + 1;
          }
          break;
        case Gen::CrossDU:
          if (col == q + 1) {
            res += corr_eval(d, c * minus, L, k, {{q, Gen::CapR}, {q, Gen::CupR}});
            col = q;
          }
          break;
        case Gen::CrossDD:
          break;
      }
    }
    res += dot_top_up(d, c, col);
    return res;
  }

  // Down dot arriving at top position p (an inward end): commute it down
  // through the canonical layer stack of the diagram.
  Morphism dot_top_down(const NormalDiagram& d, const Fq& c, int p) {
    Guard g(*this);
    if (d.dst[p] != 'd') throw std::logic_error("dot_top_down at an up letter");
    LayerWord lw = slice(d);
    return down_journey(d, c, lw.layers, (int)lw.layers.size() - 1, p);
  }

  // Down dot arriving at bottom position p (an outward end).
  Morphism dot_bot_down(const NormalDiagram& d, const Fq& c, int p) {
    Guard g(*this);
    if (d.src[p] != 'd') throw std::logic_error("dot_bot_down at an up letter");
    int si = d.strand_at({false, p});
    if (d.strands[si].dots + 1 < P.level) {
      NormalDiagram d2 = d;
      d2.strands[si].dots++;
      d2.canonicalize();
      return Morphism::unit(d2, c);
    }
    if (p == 0) {
      Morphism res(d.src, d.dst);
      for (int i = 0; i < P.level; ++i) {
        if (cf_down[i].is_zero()) continue;
        NormalDiagram d2 = d;
        d2.strands[si].dots = i;
        d2.canonicalize();
        res.add(d2, -(cf_down[i] * c));
      }
      return res;
    }
    int q = p - 1;
    if (d.src[q] == 'd') {
      // d . x_p = ((d . s) x_q) . s - d . s
      Morphism sd = bottom(d, c, {q, Gen::CrossDD});
      Morphism res = bottom(dot_bot_down(sd, q), {q, Gen::CrossDD});
      res += sd.scaled(-Fq::one(P.p));
      return res;
    }
    // letters (u, d) at (q, p): d . x_p = ((d . t') x_q) . t + (d . cupR) . capL
    Morphism td = bottom(d, c, {q, Gen::CrossDU});
    Morphism res = bottom(dot_bot_down(td, q), {q, Gen::CrossUD});
    res += bottom(bottom(d, c, {q, Gen::CupR}), {q, Gen::CapL});
    return res;
  }

  // Up dot arriving at bottom position p (an inward end): commute it up
  // through the canonical layer stack of the diagram.
  Morphism dot_bot_up(const NormalDiagram& d, const Fq& c, int p) {
    Guard g(*this);
    if (d.src[p] != 'u') throw std::logic_error("dot_bot_up at a down letter");
    LayerWord lw = slice(d);
    return up_journey(d, c, lw.layers, 0, p);
  }

  // ---- bottom appends ----------------------------------------------------

  // Input word of a generator composed *below* the current source word.
  static Word below_input(const Word& w, const Layer& ly) {
    int p = ly.pos;
    auto expect = [&](const char* pat) {
      if (p < 0 || p + 2 > (int)w.size() || w[p] != pat[0] || w[p + 1] != pat[1])
        throw std::invalid_argument(std::string("layer does not fit below: ") + gen_name(ly.gen));
    };
    Word out = w;
    switch (ly.gen) {
      case Gen::CapR:
        if (p < 0 || p > (int)w.size()) throw std::invalid_argument("position out of range");
        return out.insert(p, "du");
      case Gen::CapL:
        if (p < 0 || p > (int)w.size()) throw std::invalid_argument("position out of range");
        return out.insert(p, "ud");
      case Gen::CupR:
        expect("ud");
        return out.erase(p, 2);
      case Gen::CupL:
        expect("du");
        return out.erase(p, 2);
      case Gen::CrossUU:
        expect("uu");
        return out;
      case Gen::CrossDD:
        expect("dd");
        return out;
      case Gen::CrossUD:  // t: ud -> du composed below a 'du' source
        expect("du");
        out[p] = 'u';
        out[p + 1] = 'd';
        return out;
      case Gen::CrossDU:  // t': du -> ud composed below a 'ud' source
        expect("ud");
        out[p] = 'd';
        out[p + 1] = 'u';
        return out;
      case Gen::DotUp:
        if (p < 0 || p >= (int)w.size() || w[p] != 'u')
          throw std::invalid_argument("DotUp below needs an up letter");
        return out;
      case Gen::DotDown:
        if (p < 0 || p >= (int)w.size() || w[p] != 'd')
          throw std::invalid_argument("DotDown below needs a down letter");
        return out;
    }
    throw std::logic_error("unreachable");
  }

  Morphism bottom(const NormalDiagram& d, const Fq& c, const Layer& ly) {
    Guard g(*this);
    const int p = ly.pos;
    const Word in_word = below_input(d.src, ly);
    switch (ly.gen) {
      case Gen::CapR:
      case Gen::CapL: {
        NormalDiagram d2 = d;
        shift(d2, false, p, 2);
        d2.src = in_word;
        d2.strands.push_back({Endpoint{false, p}, Endpoint{false, p + 1}, 0});
        d2.canonicalize();
        return Morphism::unit(d2, c);
      }
      case Gen::CupR:
      case Gen::CupL:
        return bottom_cup(d, c, ly, in_word);
      case Gen::CrossUU:
      case Gen::CrossDD:
      case Gen::CrossUD:
      case Gen::CrossDU:
        return bottom_cross(d, c, ly, in_word);
      case Gen::DotUp:
        return dot_bot_up(d, c, p);
      case Gen::DotDown:
        return dot_bot_down(d, c, p);
    }
    throw std::logic_error("unreachable");
  }

  Morphism bottom_cup(const NormalDiagram& d, const Fq& c, const Layer& ly, const Word& in_word) {
    const int p = ly.pos;
    // CupR glues under letters (u, d); its dotted leg is the 'd' one at p+1.
    // CupL glues under letters (d, u); dotted leg at p.
    const int qd = (ly.gen == Gen::CupR) ? p + 1 : p;  // the 'd' site
    const int qu = (ly.gen == Gen::CupR) ? p : p + 1;  // the 'u' site
    int idn = d.strand_at({false, qd});
    int iup = d.strand_at({false, qu});
    if (idn == iup) {
      // a cap occupying (p, p+1) closes into a loop from below
      int k = d.strands[idn].dots;
      NormalDiagram d2 = d;
      d2.strands.erase(d2.strands.begin() + idn);
      shift(d2, false, p + 2, -2);
      d2.src = in_word;
      d2.canonicalize();
      return close_loop(d2, c, k, ly.gen == Gen::CupR, p, false);
    }
    const Strand& sd = d.strands[idn];
    if (sd.dots > 0 && d.outward_end(sd) == Endpoint{false, qd}) {
      // slide one dot across the cup to its up leg
      NormalDiagram d1 = d;
      d1.strands[idn].dots--;
      Morphism moved = dot_bot_up(d1, c, qu);
      return bottom(moved, ly);
    }
    Endpoint e1 = other_end(d.strands[idn], {false, qd});
    Endpoint e2 = other_end(d.strands[iup], {false, qu});
    int nd = d.strands[idn].dots + d.strands[iup].dots;
    NormalDiagram d2 = d;
    int hi = std::max(idn, iup), lo = std::min(idn, iup);
    d2.strands.erase(d2.strands.begin() + hi);
    d2.strands.erase(d2.strands.begin() + lo);
    d2.strands.push_back({e1, e2, nd});
    shift(d2, false, p + 2, -2);
    d2.src = in_word;
    d2.canonicalize();
    return Morphism::unit(d2, c);
  }

  Morphism bottom_cross(const NormalDiagram& d, const Fq& c, const Layer& ly, const Word& in_word) {
    const int p = ly.pos;
    // Bottom sites whose end can carry dots: the 'd' letters of the crossing's
    // *output* (current source) word.
    std::vector<int> dsites;
    if (ly.gen == Gen::CrossDD) dsites = {p, p + 1};
    if (ly.gen == Gen::CrossUD) dsites = {p};      // current src letters (d, u)
    if (ly.gen == Gen::CrossDU) dsites = {p + 1};  // current src letters (u, d)
    for (int site : dsites) {
      int si = d.strand_at({false, site});
      const Strand& s = d.strands[si];
      if (s.dots > 0 && d.outward_end(s) == Endpoint{false, site}) {
        NormalDiagram d1 = d;
        d1.strands[si].dots--;
        int moved = (site == p) ? p + 1 : p;
        Morphism res = dot_bot_down(bottom(d1, c, ly), moved);
        if (ly.gen == Gen::CrossDD) {
          // x_0 . s = s . x_1 + 1 ;  x_1 . s = s . x_0 - 1
          Fq sign = (site == p) ? Fq::one(P.p) : -Fq::one(P.p);
          res.add(d1, c * sign);
        } else if (ly.gen == Gen::CrossUD) {
          // x_0 . t = t . x_1 - cupL . capL
          res += bottom(bottom(d1, c, {p, Gen::CupL}), {p, Gen::CapL}).scaled(-Fq::one(P.p));
        } else {
          // x_1 . t' = t' . x_0 + cupR . capR
          res += bottom(bottom(d1, c, {p, Gen::CupR}), {p, Gen::CapR});
        }
        return res;
      }
    }
    NormalDiagram d2 = d;
    int i1 = d2.strand_at({false, p});
    int i2 = d2.strand_at({false, p + 1});
    if (i1 == i2) {
      d2.src = in_word;  // a cap spanning (p, p+1) changes flavour only
    } else {
      replace_end(d2.strands[i1], {false, p}, {false, p + 1});
      replace_end(d2.strands[i2], {false, p + 1}, {false, p});
      d2.src = in_word;
    }
    d2.canonicalize();
    return Morphism::unit(d2, c);
  }
};

}  // namespace

namespace {

Gen flip_gen(Gen g) {
  switch (g) {
    case Gen::CupR: return Gen::CapL;
    case Gen::CapL: return Gen::CupR;
    case Gen::CupL: return Gen::CapR;
    case Gen::CapR: return Gen::CupL;
    case Gen::CrossUD: return Gen::CrossDU;
    case Gen::CrossDU: return Gen::CrossUD;
    default: return g;
  }
}

}  // namespace

Morphism apply_tau(const Morphism& m, const Params& P) {
  // The flip of a basis diagram is generally a combination again: dots end up
  // at the wrong ends of their strands, so each flipped term is re-normalized.
  Engine eng(P);
  Morphism out(m.dst, m.src);
  for (const auto& [d, c] : m.terms) {
    LayerWord lw = slice(d);
    Morphism t = Morphism::unit(identity_diagram(d.dst), c);
    for (auto it = lw.layers.rbegin(); it != lw.layers.rend(); ++it)
      t = eng.top(t, Layer{it->pos, flip_gen(it->gen)});
    out += t;
  }
  return out;
}

Morphism eval(const LayerWord& lw, const Params& P) {
  if (!valid_word(lw.src)) throw std::invalid_argument("bad source word");
  Engine eng(P);
  Morphism m = identity_morphism(lw.src, P);
  for (const auto& ly : lw.layers) m = eng.top(m, ly);
  return m;
}

LayerWord slice(const NormalDiagram& d) {
  LayerWord lw;
  lw.src = d.src;
  // dots living on bottom ends come first, while every strand is still vertical
  for (int i = 0; i < (int)d.src.size(); ++i) {
    int si = d.strand_at({false, i});
    const Strand& s = d.strands[si];
    if (s.dots > 0 && d.outward_end(s) == Endpoint{false, i})
      for (int k = 0; k < s.dots; ++k) lw.layers.push_back({i, Gen::DotDown});
  }
  auto cross_type = [](char l1, char l2) {
    if (l1 == 'u' && l2 == 'u') return Gen::CrossUU;
    if (l1 == 'd' && l2 == 'd') return Gen::CrossDD;
    if (l1 == 'u' && l2 == 'd') return Gen::CrossUD;
    return Gen::CrossDU;
  };
  // tokens: current top line, each entry a bottom index (caps pending) and,
  // after the cap phase, reinterpreted through its letter only
  std::vector<int> tk(d.src.size());
  for (size_t i = 0; i < tk.size(); ++i) tk[i] = (int)i;
  std::vector<char> letter(d.src.begin(), d.src.end());
  auto cur_letter = [&](int pos) { return letter[pos]; };
  auto emit_cross = [&](int pos) {
    lw.layers.push_back({pos, cross_type(cur_letter(pos), cur_letter(pos + 1))});
    std::swap(tk[pos], tk[pos + 1]);
    std::swap(letter[pos], letter[pos + 1]);
  };
  // caps, ordered by their smaller foot
  std::vector<std::pair<int, int>> caps;
  for (const auto& s : d.strands)
    if (d.kind(s) == StrandKind::Cap) caps.push_back({s.a.idx, s.b.idx});
  std::sort(caps.begin(), caps.end());
  for (auto [f1, f2] : caps) {
    int pi = -1, pj = -1;
    for (size_t k = 0; k < tk.size(); ++k) {
      if (tk[k] == f1) pi = (int)k;
      if (tk[k] == f2) pj = (int)k;
    }
    while (pj > pi + 1) {
      emit_cross(pj - 1);
      pj--;
    }
    lw.layers.push_back({pi, d.src[f1] == 'd' ? Gen::CapR : Gen::CapL});
    tk.erase(tk.begin() + pi, tk.begin() + pi + 2);
    letter.erase(letter.begin() + pi, letter.begin() + pi + 2);
  }
  // sort the verticals into top order
  auto top_of = [&](int bot) {
    int si = d.strand_at({false, bot});
    return other_end(d.strands[si], {false, bot}).idx;
  };
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t k = 0; k + 1 < tk.size(); ++k) {
      if (top_of(tk[k]) > top_of(tk[k + 1])) {
        emit_cross((int)k);
        moved = true;
      }
    }
  }
  // reinterpret tokens as top indices, then lay down cups by right leg
  std::vector<int> tt;
  for (int b : tk) tt.push_back(top_of(b));
  std::vector<std::pair<int, int>> cups;
  for (const auto& s : d.strands)
    if (d.kind(s) == StrandKind::Cup) cups.push_back({s.b.idx, s.a.idx});  // (right, left)
  std::sort(cups.begin(), cups.end());
  for (auto [j, i] : cups) {
    int slot = 0;
    while (slot < (int)tt.size() && tt[slot] < i) slot++;
    lw.layers.push_back({slot, d.dst[i] == 'u' ? Gen::CupR : Gen::CupL});
    tt.insert(tt.begin() + slot, i);
    tt.insert(tt.begin() + slot + 1, j);
    int pos = slot + 1;
    while (pos + 1 < (int)tt.size() && tt[pos + 1] < j) {
      lw.layers.push_back({pos, cross_type(d.dst[tt[pos]], d.dst[tt[pos + 1]])});
      std::swap(tt[pos], tt[pos + 1]);
      pos++;
    }
  }
  // finally the dots on top ends
  for (int i = 0; i < (int)d.dst.size(); ++i) {
    int si = d.strand_at({true, i});
    const Strand& s = d.strands[si];
    if (s.dots > 0 && d.outward_end(s) == Endpoint{true, i})
      for (int k = 0; k < s.dots; ++k) lw.layers.push_back({i, Gen::DotUp});
  }
  return lw;
}

Morphism compose(const Morphism& g, const Morphism& h, const Params& P) {
  if (h.dst != g.src) throw std::invalid_argument("compose: type mismatch");
  Engine eng(P);
  Morphism acc(h.src, g.dst);
  for (const auto& [D, cd] : g.terms) {
    LayerWord lw = slice(D);
    for (const auto& [E, ce] : h.terms) {
      Morphism m = Morphism::unit(E, cd * ce);
      for (const auto& ly : lw.layers) m = eng.top(m, ly);
      acc += m;
    }
  }
  return acc;
}

Morphism tensor(const Morphism& g, const Morphism& h) {
  Morphism out(g.src + h.src, g.dst + h.dst);
  int bs = (int)g.src.size(), ts = (int)g.dst.size();
  for (const auto& [D, cd] : g.terms) {
    for (const auto& [E, ce] : h.terms) {
      NormalDiagram n;
      n.src = out.src;
      n.dst = out.dst;
      n.strands = D.strands;
      for (auto s : E.strands) {
        s.a.idx += s.a.top ? ts : bs;
        s.b.idx += s.b.top ? ts : bs;
        n.strands.push_back(s);
      }
      n.canonicalize();
      out.add(n, cd * ce);
    }
  }
  return out;
}

namespace {

struct RelSide {
  int coeff;
  std::vector<Layer> layers;
};

struct Relation {
  Word base;
  std::vector<RelSide> lhs, rhs;
};

using L = Layer;

// One entry per catalog identity; rel-5 has a companion checked alongside.
std::vector<std::pair<std::string, Relation>> catalog() {
  auto mk = [](Word base, std::vector<RelSide> lhs, std::vector<RelSide> rhs) {
    return Relation{std::move(base), std::move(lhs), std::move(rhs)};
  };
  std::vector<std::pair<std::string, Relation>> out;
  out.push_back({"rel-1", mk("u", {{1, {L{0, Gen::CupR}, L{1, Gen::CapR}}}}, {{1, {}}})});
  out.push_back({"rel-2", mk("d", {{1, {L{1, Gen::CupR}, L{0, Gen::CapR}}}}, {{1, {}}})});
  out.push_back({"rel-3", mk("uu", {{1, {L{0, Gen::CrossUU}, L{0, Gen::CrossUU}}}}, {{1, {}}})});
  out.push_back({"rel-4", mk("uuu",
                             {{1, {L{0, Gen::CrossUU}, L{1, Gen::CrossUU}, L{0, Gen::CrossUU}}}},
                             {{1, {L{1, Gen::CrossUU}, L{0, Gen::CrossUU}, L{1, Gen::CrossUU}}}})});
  out.push_back({"rel-5", mk("ud", {{1, {L{0, Gen::CrossUD}, L{0, Gen::CrossDU}}}}, {{1, {}}})});
  out.push_back({"rel-5b", mk("du", {{1, {L{0, Gen::CrossDU}, L{0, Gen::CrossUD}}}}, {{1, {}}})});
  out.push_back({"rel-6", mk("uu", {{1, {L{0, Gen::CrossUU}, L{1, Gen::DotUp}}}},
                             {{1, {L{0, Gen::DotUp}, L{0, Gen::CrossUU}}}, {1, {}}})});
  out.push_back({"rel-7", mk("d", {{1, {L{0, Gen::CupL}, L{1, Gen::CapL}}}}, {{1, {}}})});
  out.push_back({"rel-8", mk("u", {{1, {L{1, Gen::CupL}, L{0, Gen::CapL}}}}, {{1, {}}})});
  out.push_back({"rel-9", mk("dd", {{1, {L{0, Gen::CrossDD}, L{0, Gen::CrossDD}}}}, {{1, {}}})});
  out.push_back({"rel-10", mk("ddd",
                              {{1, {L{0, Gen::CrossDD}, L{1, Gen::CrossDD}, L{0, Gen::CrossDD}}}},
                              {{1, {L{1, Gen::CrossDD}, L{0, Gen::CrossDD}, L{1, Gen::CrossDD}}}})});
  out.push_back({"rel-11", mk("dd", {{1, {L{0, Gen::CrossDD}, L{1, Gen::DotDown}}}},
                              {{1, {L{0, Gen::DotDown}, L{0, Gen::CrossDD}}}, {-1, {}}})});
  out.push_back({"dots-1", mk("du", {{1, {L{0, Gen::DotDown}, L{0, Gen::CrossDU}}}},
                              {{1, {L{0, Gen::CrossDU}, L{1, Gen::DotDown}}},
                               {-1, {L{0, Gen::CapR}, L{0, Gen::CupR}}}})});
  out.push_back({"dots-2", mk("du", {{1, {L{1, Gen::DotUp}, L{0, Gen::CrossDU}}}},
                              {{1, {L{0, Gen::CrossDU}, L{0, Gen::DotUp}}},
                               {-1, {L{0, Gen::CapR}, L{0, Gen::CupR}}}})});
  out.push_back({"dots-3", mk("ud", {{1, {L{0, Gen::DotUp}, L{0, Gen::CrossUD}}}},
                              {{1, {L{0, Gen::CrossUD}, L{1, Gen::DotUp}}},
                               {1, {L{0, Gen::CapL}, L{0, Gen::CupL}}}})});
  out.push_back({"dots-4", mk("ud", {{1, {L{1, Gen::DotDown}, L{0, Gen::CrossUD}}}},
                              {{1, {L{0, Gen::CrossUD}, L{0, Gen::DotDown}}},
                               {1, {L{0, Gen::CapL}, L{0, Gen::CupL}}}})});
  out.push_back({"dots-5", mk("", {{1, {L{0, Gen::CupR}, L{0, Gen::DotUp}}}},
                              {{1, {L{0, Gen::CupR}, L{1, Gen::DotDown}}}})});
  out.push_back({"dots-6", mk("du", {{1, {L{0, Gen::DotDown}, L{0, Gen::CapR}}}},
                              {{1, {L{1, Gen::DotUp}, L{0, Gen::CapR}}}})});
  out.push_back({"dots-7", mk("", {{1, {L{0, Gen::CupL}, L{0, Gen::DotDown}}}},
                              {{1, {L{0, Gen::CupL}, L{1, Gen::DotUp}}}})});
  out.push_back({"dots-8", mk("ud", {{1, {L{0, Gen::DotUp}, L{0, Gen::CapL}}}},
                              {{1, {L{1, Gen::DotDown}, L{0, Gen::CapL}}}})});
  return out;
}

Morphism eval_side(const std::vector<RelSide>& side, const Word& src, int off, const Params& P) {
  Morphism acc;
  bool first = true;
  for (const auto& part : side) {
    LayerWord lw;
    lw.src = src;
    for (auto ly : part.layers) {
      ly.pos += off;
      lw.layers.push_back(ly);
    }
    Morphism m = eval(lw, P).scaled(Fq::from_int(P.p, part.coeff));
    if (first) {
      acc = Morphism(m.src, m.dst);
      first = false;
    }
    acc += m;
  }
  return acc;
}

}  // namespace

std::vector<std::string> relation_ids() {
  std::vector<std::string> ids;
  for (auto& [id, r] : catalog())
    if (id != "rel-5b") ids.push_back(id);
  return ids;
}

bool verify_relation(const std::string& id, const Word& left, const Word& right, const Params& P) {
  auto cat = catalog();
  bool found = false;
  bool ok = true;
  for (auto& [cid, rel] : cat) {
    bool match = (cid == id) || (id == "rel-5" && cid == "rel-5b");
    if (!match) continue;
    found = true;
    Word src = left + rel.base + right;
    int off = (int)left.size();
    Morphism l = eval_side(rel.lhs, src, off, P);
    Morphism r = eval_side(rel.rhs, src, off, P);
    if (l != r) ok = false;
  }
  if (!found) throw std::invalid_argument("unknown relation id: " + id);
  return ok;
}

}  // namespace obc
