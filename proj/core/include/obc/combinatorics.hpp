#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "obc/params.hpp"
#include "obc/word.hpp"

namespace obc {

// A partition as a weakly decreasing list of positive row lengths.
using Partition = std::vector<int>;
// One partition per level component.
using Multipartition = std::vector<Partition>;

int mp_size(const Multipartition& mu);
bool valid_multipartition(const Multipartition& mu, int level);

struct Bipartition {
  Multipartition down, up;

  bool operator==(const Bipartition& o) const { return down == o.down && up == o.up; }
  bool operator<(const Bipartition& o) const {
    if (down != o.down) return down < o.down;
    return up < o.up;
  }
};

// (r, s) = (|down|, |up|); matches ClassIndex (r = #'d', s = #'u').
ClassIndex bipartition_class(const Bipartition& la);

enum class Side { Down, Up };

struct Box {
  Side side = Side::Up;
  int comp = 1;  // 1-based component index
  int row = 1;   // 1-based
  int col = 1;   // 1-based
  bool operator==(const Box& o) const {
    return side == o.side && comp == o.comp && row == o.row && col == o.col;
  }
  bool operator<(const Box& o) const {
    if (side != o.side) return side < o.side;
    if (comp != o.comp) return comp < o.comp;
    if (row != o.row) return row < o.row;
    return col < o.col;
  }
};

// u_j + col - row on the up side, u'_j + row - col on the down side.
Fq content(const Box& b, const Params& P);

std::vector<Box> addable_boxes(const Multipartition& mu, Side side, const Params& P);
std::vector<Box> removable_boxes(const Multipartition& mu, Side side, const Params& P);

struct AddRem {
  std::vector<Box> up_add, up_rem, down_add, down_rem;
};

// Boxes of content i addable to / removable from each side of la.
AddRem addable_removable(const Bipartition& la, const Fq& i, const Params& P);

Multipartition mp_with(const Multipartition& mu, const Box& b);     // add the box
Multipartition mp_without(const Multipartition& mu, const Box& b);  // remove the box

// Number of standard Young tableaux of the multipartition shape
// (multinomial over components times the hook length formula).
mpz_class syt_count(const Multipartition& mu);

struct Path {
  // (is_add, box) per edge, from (empty, empty) to the target shape.
  std::vector<std::pair<bool, Box>> steps;
  Word word;               // letter per edge
  std::vector<Fq> colors;  // content of the moved box per edge
};

// All paths from the empty bipartition to la with exactly m edges. Each edge
// adds or removes one box; letters: add-up / remove-down = 'u',
// add-down / remove-up = 'd'.
std::vector<Path> paths_to(const Bipartition& la, int m, const Params& P);

using CharKey = std::pair<Word, std::vector<Fq>>;

// Path counts grouped by (word, color sequence), all lengths <= maxlen.
std::map<CharKey, long> character_std(const Bipartition& la, int maxlen, const Params& P);

// All bipartitions of total size <= n, deterministic order.
std::vector<Bipartition> bipartitions_up_to(int n, const Params& P);

// JSON form: [[down components], [up components]], components as row lists.
std::string bipartition_json(const Bipartition& la);
Bipartition bipartition_from_json(const std::string& text, const Params& P);

}  // namespace obc
