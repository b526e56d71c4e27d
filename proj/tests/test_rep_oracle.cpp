// Independent check of the engine against matrix representations built from
// tensor calculus on a finite-dimensional vector space and its dual: letters
// map to tensor factors, cups/caps to (co)evaluation, crossings to flips and
// dots to partial Casimir operators. A hidden extra factor on the left turns
// the level-one model into a genuine level-two point, which exercises the
// position-dependent loop closures.
#include <random>
#include <vector>

#include "doctest.h"
#include "obc/engine.hpp"

using namespace obc;

namespace {

using Mat = std::vector<std::vector<long long>>;

struct RepModel {
  int N;            // dimension of the basic factor
  long long U, UP;  // dot constants
  bool hidden;      // prepend a silent factor that only the Casimirs touch
};

long long ipow(int b, int e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}
Mat zero(int r, int c) { return Mat(r, std::vector<long long>(c, 0)); }
Mat eye(int n) {
  Mat m = zero(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}
Mat mul(const Mat& a, const Mat& b) {
  int r = (int)a.size(), k = (int)b.size(), c = (int)b[0].size();
  Mat m = zero(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (int l = 0; l < c; ++l) m[i][l] += a[i][j] * b[j][l];
    }
  return m;
}
void addmul(Mat& a, const Mat& b, long long s) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) a[i][j] += s * b[i][j];
}
void digits(const RepModel& M, long long idx, int len, std::vector<int>& out) {
  out.assign(len, 0);
  for (int i = len - 1; i >= 0; --i) {
    out[i] = idx % M.N;
    idx /= M.N;
  }
}
long long undig(const RepModel& M, const std::vector<int>& d) {
  long long idx = 0;
  for (int x : d) idx = idx * M.N + x;
  return idx;
}

Mat layer_matrix(const RepModel& M, const Word& w, const Layer& ly) {
  Word wo = layer_output(w, ly);
  int li = (int)w.size();
  long long di = ipow(M.N, li), dout = ipow(M.N, (int)wo.size());
  Mat m = zero((int)dout, (int)di);
  int p = ly.pos;
  std::vector<int> dg, dg2;
  switch (ly.gen) {
    case Gen::CupR:
    case Gen::CupL:
      for (long long s = 0; s < di; ++s) {
        digits(M, s, li, dg);
        for (int a = 0; a < M.N; ++a) {
          dg2 = dg;
          dg2.insert(dg2.begin() + p, {a, a});
          m[undig(M, dg2)][s] += 1;
        }
      }
      return m;
    case Gen::CapR:
    case Gen::CapL:
      for (long long s = 0; s < di; ++s) {
        digits(M, s, li, dg);
        if (dg[p] != dg[p + 1]) continue;
        dg2 = dg;
        dg2.erase(dg2.begin() + p, dg2.begin() + p + 2);
        m[undig(M, dg2)][s] += 1;
      }
      return m;
    case Gen::CrossUU:
    case Gen::CrossDD:
    case Gen::CrossUD:
    case Gen::CrossDU:
      for (long long s = 0; s < di; ++s) {
        digits(M, s, li, dg);
        dg2 = dg;
        std::swap(dg2[p], dg2[p + 1]);
        m[undig(M, dg2)][s] += 1;
      }
      return m;
    case Gen::DotUp:
    case Gen::DotDown: {
      bool up = (ly.gen == Gen::DotUp);
      long long sg = up ? 1 : -1;
      Mat acc = eye((int)di);
      for (auto& row : acc)
        for (auto& v : row) v *= (up ? M.U : M.UP);
      for (int i = 0; i < p; ++i) {
        Mat om = zero((int)di, (int)di);
        char a = w[i], b = w[p];
        for (long long s = 0; s < di; ++s) {
          digits(M, s, li, dg);
          if (a == b) {
            dg2 = dg;
            std::swap(dg2[i], dg2[p]);
            om[undig(M, dg2)][s] += 1;
          } else if (dg[i] == dg[p]) {
            for (int t = 0; t < M.N; ++t) {
              dg2 = dg;
              dg2[i] = t;
              dg2[p] = t;
              om[undig(M, dg2)][s] -= 1;
            }
          }
        }
        addmul(acc, om, sg);
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

Mat stack_matrix(const RepModel& M, const Word& src, const std::vector<Layer>& ls) {
  Word w = M.hidden ? Word("u") + src : src;
  Mat m = eye((int)ipow(M.N, (int)w.size()));
  for (auto ly : ls) {
    if (M.hidden) ly.pos += 1;
    m = mul(layer_matrix(M, w, ly), m);
    w = layer_output(w, ly);
  }
  return m;
}

long long coeff_ll(const Fq& c) {
  REQUIRE(c.is_integer());
  return std::stoll(c.str());
}

Mat morphism_matrix(const RepModel& M, const Morphism& mo) {
  int extra = M.hidden ? 1 : 0;
  long long di = ipow(M.N, extra + (int)mo.src.size());
  long long dout = ipow(M.N, extra + (int)mo.dst.size());
  Mat acc = zero((int)dout, (int)di);
  for (const auto& [d, c] : mo.terms) {
    LayerWord lw = slice(d);
    addmul(acc, stack_matrix(M, lw.src, lw.layers), coeff_ll(c));
  }
  return acc;
}

void random_stack_check(const RepModel& M, const Params& P, unsigned seed, int trials) {
  std::mt19937 rng(seed);
  std::vector<Gen> gens = {Gen::CupR,    Gen::CupL,    Gen::CapR,    Gen::CapL,   Gen::CrossUU,
                           Gen::CrossDD, Gen::CrossUD, Gen::CrossDU, Gen::DotUp,  Gen::DotDown};
  std::vector<Word> starts = {"", "u", "d", "ud", "du", "uu", "dd", "uud", "dud"};
  int bad = 0;
  for (int trial = 0; trial < trials; ++trial) {
    Word src = starts[rng() % starts.size()];
    Word w = src;
    std::vector<Layer> ls;
    int len = 1 + (int)(rng() % 6);
    for (int i = 0; i < len; ++i) {
      std::vector<Layer> cand;
      for (Gen g : gens)
        for (int p = 0; p <= (int)w.size(); ++p) {
          try {
            Word o = layer_output(w, Layer{p, g});
            if ((int)o.size() <= 3) cand.push_back({p, g});
          } catch (...) {
          }
        }
      if (cand.empty()) break;
      Layer ly = cand[rng() % cand.size()];
      ls.push_back(ly);
      w = layer_output(w, ly);
    }
    LayerWord lw;
    lw.src = src;
    lw.layers = ls;
    Morphism m = eval(lw, P);
    if (morphism_matrix(M, m) != stack_matrix(M, src, ls)) ++bad;
  }
  CHECK(bad == 0);
}

}  // namespace

TEST_CASE("level one representation agrees with the engine") {
  RepModel M{4, 2, -2, false};  // charges u = (2), u' = (2 - 4)
  Params P = make_params(1, 0, {"2"}, {"-2"});
  random_stack_check(M, P, 11, 400);
}

TEST_CASE("level two representation agrees with the engine") {
  // hidden factor: the edge dot squares to one, a level-two point
  RepModel M{3, 0, -3, true};
  Params P = make_params(2, 0, {"-1", "1"}, {"-3", "0"});
  // loop scalars of the model match the parameter series
  for (int k = 0; k <= 4; ++k) {
    std::vector<Layer> ccw = {Layer{0, Gen::CupR}};
    for (int i = 0; i < k; ++i) ccw.push_back(Layer{0, Gen::DotUp});
    ccw.push_back(Layer{0, Gen::CapL});
    Mat m = stack_matrix(M, "", ccw);
    CHECK(m[0][0] == coeff_ll(P.delta(k)));
    std::vector<Layer> cw = {Layer{0, Gen::CupL}};
    for (int i = 0; i < k; ++i) cw.push_back(Layer{1, Gen::DotUp});
    cw.push_back(Layer{0, Gen::CapR});
    Mat m2 = stack_matrix(M, "", cw);
    CHECK(m2[0][0] == coeff_ll(P.deltaprime(k)));
  }
  random_stack_check(M, P, 5, 400);
}

TEST_CASE("composition matches the level two representation") {
  RepModel M{3, 0, -3, true};
  Params P = make_params(2, 0, {"-1", "1"}, {"-3", "0"});
  std::mt19937 rng(3);
  std::vector<Word> words = {"", "u", "d", "ud", "du", "uu", "dd", "uud", "dud"};
  int done = 0;
  for (int trial = 0; trial < 2000 && done < 120; ++trial) {
    Word a = words[rng() % words.size()];
    Word b = words[rng() % words.size()];
    Word c = words[rng() % words.size()];
    auto B1 = enumerate_basis(b, c, P);
    auto B2 = enumerate_basis(a, b, P);
    if (B1.empty() || B2.empty()) continue;
    Morphism g = Morphism::unit(B1[rng() % B1.size()], Fq::one(0));
    Morphism h = Morphism::unit(B2[rng() % B2.size()], Fq::one(0));
    Morphism gh = compose(g, h, P);
    CHECK(morphism_matrix(M, gh) == mul(morphism_matrix(M, g), morphism_matrix(M, h)));
    ++done;
  }
  CHECK(done == 120);
}
