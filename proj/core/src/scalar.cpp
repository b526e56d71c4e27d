#include "obc/scalar.hpp"

namespace obc {

void Fq::reduce() {
  v_.canonicalize();
  if (p_ == 0) return;
  // Reduce to an integer representative in [0, p).
  mpz_class num = v_.get_num();
  mpz_class den = v_.get_den();
  mpz_class p(p_);
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::domain_error("division by zero mod p");
    num *= inv;
  }
  mpz_class r = num % p;
  if (r < 0) r += p;
  v_ = mpq_class(r);
}

Fq Fq::operator+(const Fq& o) const { check(o); return Fq(p_, v_ + o.v_); }
Fq Fq::operator-(const Fq& o) const { check(o); return Fq(p_, v_ - o.v_); }
Fq Fq::operator*(const Fq& o) const { check(o); return Fq(p_, v_ * o.v_); }

Fq Fq::operator/(const Fq& o) const {
  check(o);
  if (o.v_ == 0) throw std::domain_error("division by zero");
  if (p_ == 0) return Fq(p_, v_ / o.v_);
  mpz_class inv;
  mpz_class den = o.v_.get_num();  // o is an integer representative
  mpz_class p(p_);
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("division by zero mod p");
  return Fq(p_, v_ * mpq_class(inv));
}

Fq Fq::operator-() const { return Fq(p_, -v_); }

Fq Fq::parse(long p, const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  std::string t = s;
  // mpq_class accepts "a/b"; validate characters first for a clean error.
  for (char c : t)
    if (!(isdigit((unsigned char)c) || c == '-' || c == '+' || c == '/'))
      throw std::invalid_argument("bad scalar literal: " + s);
  mpq_class v;
  if (v.set_str(t, 10) != 0) throw std::invalid_argument("bad scalar literal: " + s);
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  return Fq(p, v);
}

std::string Fq::str() const { return v_.get_str(); }

bool is_prime(long p) {
  if (p < 2) return false;
  mpz_class z(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

}  // namespace obc
