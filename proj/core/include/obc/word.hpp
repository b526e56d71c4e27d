#pragma once

#include <string>
#include <vector>

namespace obc {

// Objects are words over {'u','d'} ('u' = up arrow, 'd' = down arrow),
// leftmost letter first; the empty string is the monoidal unit.
using Word = std::string;

struct ClassIndex {
  int r = 0;  // number of 'd'
  int s = 0;  // number of 'u'
  bool operator==(const ClassIndex& o) const { return r == o.r && s == o.s; }
  bool operator!=(const ClassIndex& o) const { return !(*this == o); }
};

ClassIndex class_of(const Word& w);

// x <= y iff x.r = y.r + k and x.s = y.s + k for some k >= 0
// (longer words are smaller; (0,0) is the unique maximum).
bool order_leq(ClassIndex x, ClassIndex y);

// All C(r+s, r) words of the class, lexicographic with 'u' before 'd'.
std::vector<Word> words_in_class(ClassIndex c, int size_limit = 24);

bool valid_word(const Word& w);

}  // namespace obc
