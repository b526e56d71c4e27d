#include "obc/params.hpp"

#include <stdexcept>

namespace obc {

Params make_params(int level, long p, const std::vector<std::string>& u,
                   const std::vector<std::string>& uprime) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  if (p != 0 && !is_prime(p)) throw std::invalid_argument("characteristic must be 0 or prime");
  if ((int)u.size() != level || (int)uprime.size() != level)
    throw std::invalid_argument("charge list length must equal the level");
  std::vector<Fq> uu, vv;
  uu.reserve(level);
  vv.reserve(level);
  for (auto& s : u) uu.push_back(Fq::parse(p, s));
  for (auto& s : uprime) vv.push_back(Fq::parse(p, s));
  return Params(level, p, std::move(uu), std::move(vv));
}

std::vector<Fq> cyclo_poly(const Params& P, Orient o) {
  const auto& roots = (o == Orient::Up) ? P.u : P.uprime;
  // Expand prod (x - r_i), monic of degree level.
  std::vector<Fq> c{Fq::one(P.p)};
  for (const Fq& r : roots) {
    std::vector<Fq> n(c.size() + 1, Fq::zero(P.p));
    for (size_t i = 0; i < c.size(); ++i) {
      n[i + 1] += c[i];
      n[i] -= c[i] * r;
    }
    c = std::move(n);
  }
  return c;  // c[i] is the coefficient of x^i

}

namespace {
// f(x) = sum c_k x^k monic of degree l gives f(x)/x^l = 1 + sum_{i>=1} c_{l-i} t^i
// in t = x^{-1}; truncated tail coefficients beyond i = l are zero.
std::vector<Fq> tail_series(const std::vector<Fq>& c, int l, int n, long p) {
  std::vector<Fq> a(n + 1, Fq::zero(p));
  a[0] = Fq::one(p);
  for (int i = 1; i <= n && i <= l; ++i) a[i] = c[l - i];
  return a;
}
}  // namespace

SeriesCoeffs delta_series(const Params& P, int n) {
  if (n < 1) throw std::invalid_argument("series order must be >= 1");
  auto cf = cyclo_poly(P, Orient::Up);
  auto cfp = cyclo_poly(P, Orient::Down);
  auto A = tail_series(cfp, P.level, n, P.p);  // from f'
  auto B = tail_series(cf, P.level, n, P.p);   // from f
  // Power-series division Q = A/B and R = B/A, both with constant term 1.
  auto divide = [&](const std::vector<Fq>& num, const std::vector<Fq>& den) {
    std::vector<Fq> q(n + 1, Fq::zero(P.p));
    for (int i = 0; i <= n; ++i) {
      Fq acc = num[i];
      for (int j = 1; j <= i; ++j) acc -= den[j] * q[i - j];
      q[i] = acc;  // den[0] == 1
    }
    return q;
  };
  auto q = divide(A, B);
  auto r = divide(B, A);
  SeriesCoeffs out;
  for (int i = 1; i <= n; ++i) {
    out.deltas.push_back(q[i]);
    out.deltaprimes.push_back(-r[i]);
  }
  return out;
}

void Params::ensure(int n) const {
  std::lock_guard<std::mutex> lk(cache_->mu);
  if ((int)cache_->series.deltas.size() >= n) return;
  cache_->series = delta_series(*this, std::max(n, 8));
}

Fq Params::delta(int k) const {
  ensure(k + 1);
  std::lock_guard<std::mutex> lk(cache_->mu);
  return cache_->series.deltas[k];
}

Fq Params::deltaprime(int k) const {
  ensure(k + 1);
  std::lock_guard<std::mutex> lk(cache_->mu);
  return cache_->series.deltaprimes[k];
}

}  // namespace obc
