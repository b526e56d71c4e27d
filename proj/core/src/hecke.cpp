#include "obc/hecke.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace obc {

namespace {

Word corner_word(int r, int s) { return Word(r, 'u') + Word(s, 'd'); }

Morphism layer_element(const Word& a, Layer ly, const Params& P) {
  LayerWord lw;
  lw.src = a;
  lw.layers = {ly};
  return project_leq(eval(lw, P), class_of(a));
}

}  // namespace

Morphism hecke_generator_image(HeckeGen g, int i, int r, int s, const Params& P) {
  Word a = corner_word(r, s);
  switch (g) {
    case HeckeGen::L1Up:
      if (r < 1) throw std::out_of_range("L1Up needs r >= 1");
      return layer_element(a, Layer{0, Gen::DotUp}, P);
    case HeckeGen::L1Down:
      if (s < 1) throw std::out_of_range("L1Down needs s >= 1");
      return layer_element(a, Layer{r, Gen::DotDown}, P).scaled(-Fq::one(P.p));
    case HeckeGen::SUp:
      if (i < 1 || i > r - 1) throw std::out_of_range("SUp index");
      return layer_element(a, Layer{i - 1, Gen::CrossUU}, P);
    case HeckeGen::SDown:
      if (i < 1 || i > s - 1) throw std::out_of_range("SDown index");
      return layer_element(a, Layer{r + i - 1, Gen::CrossDD}, P);
  }
  throw std::logic_error("unreachable");
}

Morphism jucys_murphy(int i, int r, int s, Orient side, const Params& P) {
  int n = (side == Orient::Up) ? r : s;
  if (i < 1 || i > n) throw std::out_of_range("jucys_murphy index");
  if (i == 1)
    return hecke_generator_image(side == Orient::Up ? HeckeGen::L1Up : HeckeGen::L1Down, 0, r, s,
                                 P);
  Morphism sm = hecke_generator_image(side == Orient::Up ? HeckeGen::SUp : HeckeGen::SDown, i - 1,
                                      r, s, P);
  Morphism prev = jucys_murphy(i - 1, r, s, side, P);
  return corner_mult(sm, corner_mult(prev, sm, P), P) + sm;
}

std::string HeckeReport::json() const {
  nlohmann::json j;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks)
    list.push_back({{"relation", c.relation}, {"context", c.context}, {"pass", c.pass}});
  j["checks"] = list;
  j["all_pass"] = all_pass;
  return j.dump(2);
}

namespace {

// any word of adjacent transpositions realizing the permutation (1-based gens)
std::vector<int> transposition_word(std::vector<int> perm) {
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < perm.size(); ++i)
      if (perm[i] > perm[i + 1]) {
        std::swap(perm[i], perm[i + 1]);
        word.push_back((int)i + 1);
        moved = true;
      }
  }
  return word;
}

}  // namespace

HeckeReport check_hecke_relations(int r, int s, const Params& P) {
  HeckeReport rep;
  Word a = corner_word(r, s);
  Morphism one = project_leq(identity_morphism(a, P), class_of(a));
  auto mul = [&](const Morphism& x, const Morphism& y) { return corner_mult(x, y, P); };
  auto record = [&](const std::string& rel, const std::string& ctx, bool pass) {
    rep.checks.push_back({rel, ctx, pass});
    if (!pass) rep.all_pass = false;
  };

  for (Orient side : {Orient::Up, Orient::Down}) {
    int n = (side == Orient::Up) ? r : s;
    std::string tag = (side == Orient::Up) ? "up" : "down";
    auto S = [&](int i) {
      return hecke_generator_image(side == Orient::Up ? HeckeGen::SUp : HeckeGen::SDown, i, r, s,
                                   P);
    };
    Morphism L1 = (n >= 1) ? jucys_murphy(1, r, s, side, P) : one;

    for (int i = 1; i <= n - 1; ++i)
      record("S_i^2 = 1", tag + " i=" + std::to_string(i), mul(S(i), S(i)) == one);
    for (int i = 1; i <= n - 2; ++i)
      record("braid", tag + " i=" + std::to_string(i),
             mul(S(i), mul(S(i + 1), S(i))) == mul(S(i + 1), mul(S(i), S(i + 1))));
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        record("S_i S_j = S_j S_i", tag + " i=" + std::to_string(i) + " j=" + std::to_string(j),
               mul(S(i), S(j)) == mul(S(j), S(i)));
    for (int i = 2; i <= n - 1; ++i)
      record("L_1 S_i = S_i L_1", tag + " i=" + std::to_string(i),
             mul(L1, S(i)) == mul(S(i), L1));
    if (n >= 2) {
      Morphism t = mul(S(1), mul(L1, S(1))) + S(1);
      record("(S_1 L_1 S_1 + S_1) L_1 = L_1 (...)", tag, mul(t, L1) == mul(L1, t));
    }
    if (n >= 1) {
      Morphism prod = one;
      for (int j = 0; j < P.level; ++j) {
        Fq charge = (side == Orient::Up) ? P.u[j] : -P.uprime[j];
        prod = mul(prod, L1 - one.scaled(charge));
      }
      record("cyclotomic", tag, prod.is_zero());
    }
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        record("L_i L_j = L_j L_i", tag + " i=" + std::to_string(i) + " j=" + std::to_string(j),
               mul(jucys_murphy(i, r, s, side, P), jucys_murphy(j, r, s, side, P)) ==
                   mul(jucys_murphy(j, r, s, side, P), jucys_murphy(i, r, s, side, P)));
  }

  // the two tensor factors commute
  std::vector<std::pair<std::string, Morphism>> ups, downs;
  if (r >= 1) ups.push_back({"L1up", jucys_murphy(1, r, s, Orient::Up, P)});
  for (int i = 1; i <= r - 1; ++i)
    ups.push_back({"Sup" + std::to_string(i), hecke_generator_image(HeckeGen::SUp, i, r, s, P)});
  if (s >= 1) downs.push_back({"L1down", jucys_murphy(1, r, s, Orient::Down, P)});
  for (int i = 1; i <= s - 1; ++i)
    downs.push_back(
        {"Sdown" + std::to_string(i), hecke_generator_image(HeckeGen::SDown, i, r, s, P)});
  for (const auto& [un, um] : ups)
    for (const auto& [dn, dm] : downs)
      record("factors commute", un + " vs " + dn, mul(um, dm) == mul(dm, um));

  // spanning rank of the standard basis images
  {
    CornerAlgebra alg = corner_algebra(a, P);
    long expected = 1;
    for (int i = 2; i <= r; ++i) expected *= i;
    for (int i = 2; i <= s; ++i) expected *= i;
    for (int i = 0; i < r + s; ++i) expected *= P.level;

    auto factor_elements = [&](Orient side) {
      int n = (side == Orient::Up) ? r : s;
      std::vector<Morphism> jms;
      for (int i = 1; i <= n; ++i) jms.push_back(jucys_murphy(i, r, s, side, P));
      std::vector<Morphism> out;
      std::vector<int> expo(n, 0);
      while (true) {
        Morphism lmono = one;
        for (int i = 0; i < n; ++i)
          for (int e = 0; e < expo[i]; ++e) lmono = mul(lmono, jms[i]);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
          Morphism el = lmono;
          for (int g : transposition_word(perm))
            el = mul(el, hecke_generator_image(
                            side == Orient::Up ? HeckeGen::SUp : HeckeGen::SDown, g, r, s, P));
          out.push_back(el);
        } while (std::next_permutation(perm.begin(), perm.end()));
        int k = n - 1;
        while (k >= 0 && expo[k] == P.level - 1) expo[k--] = 0;
        if (k < 0) break;
        expo[k]++;
      }
      return out;
    };
    auto ue = factor_elements(Orient::Up);
    auto de = factor_elements(Orient::Down);
    Mat span = mat_zero((int)alg.basis.size(), (int)(ue.size() * de.size()), P.p);
    int col = 0;
    for (const auto& x : ue)
      for (const auto& y : de) {
        Vec v = coords(mul(x, y), alg.basis, P.p);
        for (size_t i = 0; i < v.size(); ++i) span[i][col] = v[i];
        ++col;
      }
    bool ok = (long)alg.basis.size() == expected && mat_rank(span) == (int)expected;
    record("image rank = level^(r+s) r! s!", "dim=" + std::to_string(alg.basis.size()), ok);
  }
  return rep;
}

}  // namespace obc
