#pragma once

#include <map>
#include <string>
#include <vector>

#include "obc/combinatorics.hpp"

namespace obc {

// Formal weight: finitely supported integer coordinates over fundamental
// weights and simple roots, both keyed by residues.
struct Weight {
  std::map<Fq, long> fund, roots;

  void add_fund(const Fq& i, long n);
  void add_root(const Fq& i, long n);
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  bool operator==(const Weight& o) const { return fund == o.fund && roots == o.roots; }
  std::string json() const;
};

// Cartan entry a_{ij}: 2 on the diagonal, -1 for neighbours (-2 for i = j-1
// when p = 2), 0 otherwise; arithmetic in the configured field.
long cartan(const Fq& i, const Fq& j, const Params& P);

// <h_i, w> = fund(i) + sum_j roots(j) a_{ij}.
long pairing(const Fq& i, const Weight& w, const Params& P);

// (wt_down, wt_up): wt_down = -omega_{u'} + sum over down boxes of alpha,
// wt_up = omega_u - sum over up boxes of alpha.
std::pair<Weight, Weight> wt(const Bipartition& la, const Params& P);

// x <= y iff the totals agree and y.first - x.first is a nonnegative sum of
// simple roots.
bool inverse_dominance_leq(const std::pair<Weight, Weight>& x,
                           const std::pair<Weight, Weight>& y);

struct KVector {
  std::map<Bipartition, mpq_class> terms;
  bool truncated = false;  // set when an operator dropped an overflow term

  void add(const Bipartition& la, const mpq_class& c);
  bool operator==(const KVector& o) const { return terms == o.terms; }
  std::string json() const;
};

enum class OpKind { E, F };
enum class Sector { Total, Up, Down };

// e_i: remove an i-box from up or add one to down; f_i: add to up or remove
// from down; Total sums the two one-sided operators. Shapes growing past the
// truncation bound are dropped and flagged.
KVector apply_op(OpKind op, Sector sector, const Fq& i, const KVector& v, int trunc,
                 const Params& P);

struct CommutatorReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// (e_i f_j - f_j e_i)(la) = delta_{ij} <h_i, wt_down + wt_up> la for every
// bipartition of size <= trunc.
CommutatorReport commutator_check(const Fq& i, const Fq& j, int trunc, const Params& P);

struct SemisimpleVerdict {
  bool semisimple = false;
  std::vector<std::string> reasons;
  std::string json() const;
};

SemisimpleVerdict semisimple_check(const Params& P);

struct Orbits {
  std::vector<std::vector<Fq>> orbits;  // charges grouped by integer translation
  std::string g_shape;
  std::string json() const;
};

Orbits orbit_decomposition(const Params& P);

// Residues u_j + n and u'_j + n with |n| <= window, sorted and deduplicated.
std::vector<Fq> residue_window(const Params& P, int window);

}  // namespace obc
