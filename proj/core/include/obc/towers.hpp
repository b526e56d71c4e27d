#pragma once

#include <map>

#include "obc/combinatorics.hpp"
#include "obc/engine.hpp"
#include "obc/linalg.hpp"

namespace obc {

// Quotient by the terms factoring through a class not below cls: drops every
// diagram whose vertical-strand class fails order_leq against cls.
Morphism project_leq(const Morphism& m, ClassIndex cls);

// Coefficient vector of m in an enumerated diagram basis; throws when a term
// falls outside the list.
Vec coords(const Morphism& m, const std::vector<NormalDiagram>& basis, long p);

struct CornerAlgebra {
  Word word;
  std::vector<NormalDiagram> basis;          // H(a, a), cup/cap-free
  std::vector<std::vector<Vec>> mult;        // mult[i][j] = basis_i * basis_j
};

// Multiplication in the corner: compose in the category, then project.
Morphism corner_mult(const Morphism& g, const Morphism& h, const Params& P);

CornerAlgebra corner_algebra(const Word& a, const Params& P);

// Conjugation by the crossing-minimal permutation diagrams: an element of the
// (b -> a) corner moved to the (d -> c) corner; classes must match pairwise.
Morphism sigma_transport(const Morphism& m, const Word& c, const Word& d, const Params& P);

// Matrix of left composition with the i-th dot of a (1-based) on the full
// basis of Hom(b, a); 0x0 when the Hom space is empty.
Mat dot_matrix(const Word& a, const Word& b, int i, const Params& P);

struct EigenProfile {
  Word word;
  std::map<std::vector<Fq>, int> table;  // simultaneous generalized multiplicities
};

// Simultaneous generalized eigenspace dimensions of the dot operators
// X_1..X_{|a|} on Hom(b, a); candidate eigenvalues are integer translates of
// the charges within |n| <= |a| + |b|.
EigenProfile eigen_profile(const Word& a, const Word& b, const Params& P);

// dim 1_a applied to the standard module of la:
// (sum over b in the class of la of |Y(a,b)|) * syt(la.down) * syt(la.up).
mpz_class std_dim(const Bipartition& la, const Word& a, const Params& P);

}  // namespace obc
