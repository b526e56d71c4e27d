#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "obc/scalar.hpp"

namespace obc {

enum class Orient { Up, Down };

struct SeriesCoeffs {
  std::vector<Fq> deltas;       // delta_1, delta_2, ...
  std::vector<Fq> deltaprimes;  // delta'_1, delta'_2, ...
};

// Level, characteristic and the two charge vectors; immutable after
// construction apart from an internally synchronized series cache.
class Params {
public:
  int level = 1;
  long p = 0;  // 0 or a prime
  std::vector<Fq> u, uprime;

  Params() = default;
  Params(int level_, long p_, std::vector<Fq> u_, std::vector<Fq> up_)
      : level(level_), p(p_), u(std::move(u_)), uprime(std::move(up_)),
        cache_(std::make_shared<Cache>()) {}

  Fq fq(long n) const { return Fq::from_int(p, n); }

  // delta_{k+1} / delta'_{k+1} for a closed loop carrying k dots.
  Fq delta(int k) const;       // k >= 0, returns delta_{k+1}
  Fq deltaprime(int k) const;  // returns delta'_{k+1}

private:
  struct Cache {
    std::mutex mu;
    SeriesCoeffs series;  // extended on demand
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
  void ensure(int n) const;
};

Params make_params(int level, long p, const std::vector<std::string>& u,
                   const std::vector<std::string>& uprime);

// Monic coefficient list c_0..c_level of f (Up) or f' (Down).
std::vector<Fq> cyclo_poly(const Params& P, Orient o);

SeriesCoeffs delta_series(const Params& P, int n);

}  // namespace obc
