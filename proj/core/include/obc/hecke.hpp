#pragma once

#include <string>
#include <vector>

#include "obc/towers.hpp"

namespace obc {

// Generators of the two degenerate cyclotomic Hecke factors acting on the
// corner of the word u^r d^s: the Up factor has charges u, the Down factor
// charges -u' (the sign is carried by the generator image).
enum class HeckeGen { L1Up, L1Down, SUp, SDown };

// Image inside the corner algebra of u^r d^s; i is the transposition index
// for SUp (1 <= i <= r-1) and SDown (1 <= i <= s-1), ignored for L1.
Morphism hecke_generator_image(HeckeGen g, int i, int r, int s, const Params& P);

// L_i = S_{i-1} L_{i-1} S_{i-1} + S_{i-1}, computed with corner multiplication.
Morphism jucys_murphy(int i, int r, int s, Orient side, const Params& P);

struct HeckeCheck {
  std::string relation;
  std::string context;
  bool pass = false;
};

struct HeckeReport {
  std::vector<HeckeCheck> checks;
  bool all_pass = true;
  std::string json() const;
};

// All defining relations of both factors, the cross-factor commutation, and
// the spanning-rank identity dim = level^(r+s) r! s!.
HeckeReport check_hecke_relations(int r, int s, const Params& P);

}  // namespace obc
