#include "obc/word.hpp"

#include <stdexcept>

namespace obc {

bool valid_word(const Word& w) {
  for (char c : w)
    if (c != 'u' && c != 'd') return false;
  return true;
}

ClassIndex class_of(const Word& w) {
  ClassIndex c;
  for (char ch : w) (ch == 'd' ? c.r : c.s)++;
  return c;
}

bool order_leq(ClassIndex x, ClassIndex y) {
  int k = x.r - y.r;
  return k >= 0 && x.s - y.s == k;
}

static void gen(Word& cur, int r, int s, std::vector<Word>& out) {
  if (r == 0 && s == 0) {
    out.push_back(cur);
    return;
  }
  if (s > 0) {  // 'u' sorts before 'd'
    cur.push_back('u');
    gen(cur, r, s - 1, out);
    cur.pop_back();
  }
  if (r > 0) {
    cur.push_back('d');
    gen(cur, r - 1, s, out);
    cur.pop_back();
  }
}

std::vector<Word> words_in_class(ClassIndex c, int size_limit) {
  if (c.r + c.s > size_limit) throw std::length_error("word class exceeds size limit");
  std::vector<Word> out;
  Word cur;
  gen(cur, c.r, c.s, out);
  return out;
}

}  // namespace obc
