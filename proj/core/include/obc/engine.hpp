#pragma once

#include "obc/morphism.hpp"

namespace obc {

// Normalization of a stacked generator word into the basis.
Morphism eval(const LayerWord& lw, const Params& P);

// Bilinear composition g after h (h.dst must equal g.src).
Morphism compose(const Morphism& g, const Morphism& h, const Params& P);

// Horizontal concatenation.
Morphism tensor(const Morphism& g, const Morphism& h);

// Canonical planar realization: caps lowest (preceded by the dots living on
// bottom ends), then a permutation block, then cups, then top dots; satisfies
// eval(slice(d)) == 1 * d.
LayerWord slice(const NormalDiagram& d);

// The anti-involution: vertical flip followed by re-normalization.
Morphism apply_tau(const Morphism& m, const Params& P);

// Defining-relation checker; ids are rel-1..rel-11 and dots-1..dots-8.
// The relation is whiskered by identity words on the left and right.
bool verify_relation(const std::string& id, const Word& left, const Word& right, const Params& P);
std::vector<std::string> relation_ids();

}  // namespace obc
