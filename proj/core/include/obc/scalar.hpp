#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace obc {

// Exact scalar: a rational number when the characteristic is 0, an element of
// the prime field F_p (integer representative in [0, p)) when it is p.
// All arithmetic checks that both operands live over the same characteristic.
class Fq {
public:
  Fq() : p_(0), v_(0) {}
  Fq(long p, mpq_class v) : p_(p), v_(std::move(v)) { reduce(); }

  static Fq zero(long p) { return Fq(p, 0); }
  static Fq one(long p) { return Fq(p, 1); }
  static Fq from_int(long p, long n) { return Fq(p, mpq_class(n)); }

  // Accepts "n" or "n/q"; in char p a fraction is resolved via modular inverse.
  static Fq parse(long p, const std::string& s);

  long characteristic() const { return p_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator*(const Fq& o) const;
  Fq operator/(const Fq& o) const;
  Fq operator-() const;
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }

  bool operator==(const Fq& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const Fq& o) const { return !(*this == o); }
  // Total order usable as a map key (value order; characteristic is expected
  // to be uniform within any one container).
  bool operator<(const Fq& o) const { return v_ < o.v_; }

  std::string str() const;

private:
  long p_;
  mpq_class v_;
  void reduce();
  void check(const Fq& o) const {
    if (p_ != o.p_) throw std::invalid_argument("scalar characteristic mismatch");
  }
};

bool is_prime(long p);

}  // namespace obc
