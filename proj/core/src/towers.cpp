#include "obc/towers.hpp"

#include <algorithm>
#include <stdexcept>

namespace obc {

namespace {

ClassIndex through_class(const NormalDiagram& d) {
  ClassIndex c{0, 0};
  for (const auto& s : d.strands) {
    switch (d.kind(s)) {
      case StrandKind::VertDown: c.r++; break;
      case StrandKind::VertUp: c.s++; break;
      default: break;
    }
  }
  return c;
}

}  // namespace

Morphism project_leq(const Morphism& m, ClassIndex cls) {
  if (!order_leq(class_of(m.src), cls) || !order_leq(class_of(m.dst), cls))
    throw std::invalid_argument("project_leq: objects not below the class");
  Morphism out(m.src, m.dst);
  for (const auto& [d, c] : m.terms)
    if (order_leq(through_class(d), cls)) out.add(d, c);
  return out;
}

Vec coords(const Morphism& m, const std::vector<NormalDiagram>& basis, long p) {
  Vec v(basis.size(), Fq::zero(p));
  for (const auto& [d, c] : m.terms) {
    auto it = std::lower_bound(basis.begin(), basis.end(), d);
    if (it == basis.end() || !(*it == d)) throw std::runtime_error("coords: term outside basis");
    v[it - basis.begin()] = c;
  }
  return v;
}

Morphism corner_mult(const Morphism& g, const Morphism& h, const Params& P) {
  return project_leq(compose(g, h, P), class_of(g.dst));
}

CornerAlgebra corner_algebra(const Word& a, const Params& P) {
  CornerAlgebra alg;
  alg.word = a;
  alg.basis = enumerate_YHX(YHX::H, a, a, P);
  std::sort(alg.basis.begin(), alg.basis.end());
  int n = (int)alg.basis.size();
  alg.mult.assign(n, std::vector<Vec>(n));
  for (int i = 0; i < n; ++i) {
    Morphism gi = Morphism::unit(alg.basis[i], Fq::one(P.p));
    for (int j = 0; j < n; ++j) {
      Morphism gj = Morphism::unit(alg.basis[j], Fq::one(P.p));
      alg.mult[i][j] = coords(corner_mult(gi, gj, P), alg.basis, P.p);
    }
  }
  return alg;
}

Morphism sigma_transport(const Morphism& m, const Word& c, const Word& d, const Params& P) {
  if (class_of(m.dst) != class_of(c) || class_of(m.src) != class_of(d))
    throw std::invalid_argument("sigma_transport: class mismatch");
  Morphism left = Morphism::unit(sigma_diagram(c, m.dst), Fq::one(P.p));
  Morphism right = Morphism::unit(sigma_diagram(m.src, d), Fq::one(P.p));
  Morphism out = compose(left, compose(m, right, P), P);
  return project_leq(out, class_of(c));
}

Mat dot_matrix(const Word& a, const Word& b, int i, const Params& P) {
  if (i < 1 || i > (int)a.size()) throw std::out_of_range("dot_matrix index");
  auto basis = enumerate_basis(b, a, P);
  int n = (int)basis.size();
  Mat mat = mat_zero(n, n, P.p);
  if (n == 0) return mat;
  Gen g = (a[i - 1] == 'u') ? Gen::DotUp : Gen::DotDown;
  LayerWord lw;
  lw.src = a;
  lw.layers = {Layer{i - 1, g}};
  Morphism dot = eval(lw, P);
  for (int j = 0; j < n; ++j) {
    Morphism img = compose(dot, Morphism::unit(basis[j], Fq::one(P.p)), P);
    Vec col = coords(img, basis, P.p);
    for (int r = 0; r < n; ++r) mat[r][j] = col[r];
  }
  return mat;
}

namespace {

std::vector<Fq> eigen_candidates(const Params& P, int window) {
  std::vector<Fq> all;
  for (const auto& charges : {P.u, P.uprime})
    for (const auto& c : charges)
      for (int n = -window; n <= window; ++n) all.push_back(c + P.fq(n));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

Mat columns_times(const Mat& s, const std::vector<Vec>& cols, long p) {
  // s * [cols as a matrix]
  Mat k = mat_zero(cols.empty() ? 0 : (int)cols[0].size(), (int)cols.size(), p);
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t i = 0; i < cols[j].size(); ++i) k[i][j] = cols[j][i];
  return mat_mul(s, k);
}

}  // namespace

EigenProfile eigen_profile(const Word& a, const Word& b, const Params& P) {
  EigenProfile prof;
  prof.word = a;
  auto basis = enumerate_basis(b, a, P);
  int dim = (int)basis.size();
  if (dim == 0) return prof;
  if (a.empty()) {
    prof.table[{}] = dim;
    return prof;
  }
  auto candidates = eigen_candidates(P, (int)(a.size() + b.size()));

  struct Piece {
    Mat space;  // dim x k, columns span the subspace
    std::vector<Fq> values;
  };
  std::vector<Piece> pieces = {Piece{mat_identity(dim, P.p), {}}};
  for (int i = 1; i <= (int)a.size(); ++i) {
    Mat x = dot_matrix(a, b, i, P);
    std::vector<Piece> next;
    for (const auto& piece : pieces) {
      int k = (int)piece.space[0].size();
      // X restricted to the subspace (invariant: the dots commute)
      Mat rest = express_in(piece.space, mat_mul(x, piece.space), P.p);
      int found = 0;
      for (const auto& c : candidates) {
        Mat shifted = rest;
        for (int r = 0; r < k; ++r) shifted[r][r] -= c;
        auto ker = kernel(mat_pow(shifted, k, P.p), P.p);
        if (ker.empty()) continue;
        Piece sub;
        sub.space = columns_times(piece.space, ker, P.p);
        sub.values = piece.values;
        sub.values.push_back(c);
        found += (int)ker.size();
        next.push_back(sub);
      }
      if (found != k)
        throw std::runtime_error("eigen_profile: eigenvalue outside the candidate window");
    }
    pieces = std::move(next);
  }
  for (const auto& piece : pieces) prof.table[piece.values] += (int)piece.space[0].size();
  return prof;
}

mpz_class std_dim(const Bipartition& la, const Word& a, const Params& P) {
  ClassIndex cls = bipartition_class(la);
  mpz_class ycount = 0;
  for (const auto& b : words_in_class(cls)) ycount += (long)enumerate_YHX(YHX::Y, a, b, P).size();
  return ycount * syt_count(la.down) * syt_count(la.up);
}

}  // namespace obc
