#include "obc/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace obc {

int mp_size(const Multipartition& mu) {
  int n = 0;
  for (const auto& part : mu)
    for (int r : part) n += r;
  return n;
}

bool valid_multipartition(const Multipartition& mu, int level) {
  if ((int)mu.size() != level) return false;
  for (const auto& part : mu) {
    for (size_t i = 0; i < part.size(); ++i) {
      if (part[i] <= 0) return false;
      if (i && part[i] > part[i - 1]) return false;
    }
  }
  return true;
}

ClassIndex bipartition_class(const Bipartition& la) {
  return ClassIndex{mp_size(la.down), mp_size(la.up)};
}

Fq content(const Box& b, const Params& P) {
  const std::vector<Fq>& charges = (b.side == Side::Up) ? P.u : P.uprime;
  if (b.comp < 1 || b.comp > (int)charges.size()) throw std::out_of_range("box component");
  long offset = (b.side == Side::Up) ? (b.col - b.row) : (b.row - b.col);
  return charges[b.comp - 1] + P.fq(offset);
}

std::vector<Box> addable_boxes(const Multipartition& mu, Side side, const Params& P) {
  std::vector<Box> out;
  for (int j = 1; j <= P.level; ++j) {
    const Partition& part = mu[j - 1];
    int rows = (int)part.size();
    for (int r = 1; r <= rows + 1; ++r) {
      int col = (r <= rows ? part[r - 1] : 0) + 1;
      if (r > 1 && part[r - 2] < col) continue;
      out.push_back(Box{side, j, r, col});
    }
  }
  return out;
}

std::vector<Box> removable_boxes(const Multipartition& mu, Side side, const Params& P) {
  std::vector<Box> out;
  for (int j = 1; j <= P.level; ++j) {
    const Partition& part = mu[j - 1];
    int rows = (int)part.size();
    for (int r = 1; r <= rows; ++r) {
      if (r < rows && part[r] == part[r - 1]) continue;
      out.push_back(Box{side, j, r, part[r - 1]});
    }
  }
  return out;
}

AddRem addable_removable(const Bipartition& la, const Fq& i, const Params& P) {
  AddRem ar;
  auto filter = [&](std::vector<Box> boxes, std::vector<Box>& dst) {
    for (const auto& b : boxes)
      if (content(b, P) == i) dst.push_back(b);
  };
  filter(addable_boxes(la.up, Side::Up, P), ar.up_add);
  filter(removable_boxes(la.up, Side::Up, P), ar.up_rem);
  filter(addable_boxes(la.down, Side::Down, P), ar.down_add);
  filter(removable_boxes(la.down, Side::Down, P), ar.down_rem);
  return ar;
}

Multipartition mp_with(const Multipartition& mu, const Box& b) {
  Multipartition out = mu;
  Partition& part = out[b.comp - 1];
  if (b.row == (int)part.size() + 1)
    part.push_back(1);
  else
    part[b.row - 1] += 1;
  return out;
}

Multipartition mp_without(const Multipartition& mu, const Box& b) {
  Multipartition out = mu;
  Partition& part = out[b.comp - 1];
  part[b.row - 1] -= 1;
  if (part[b.row - 1] == 0) part.erase(part.begin() + (b.row - 1));
  return out;
}

mpz_class syt_count(const Multipartition& mu) {
  // total!  /  product of hook lengths over every box of every component
  mpz_class num = 1;
  int total = mp_size(mu);
  for (int i = 2; i <= total; ++i) num *= i;
  mpz_class den = 1;
  for (const auto& part : mu) {
    int rows = (int)part.size();
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < part[r]; ++c) {
        int arm = part[r] - c - 1;
        int leg = 0;
        for (int r2 = r + 1; r2 < rows; ++r2)
          if (part[r2] > c) ++leg;
        den *= arm + leg + 1;
      }
  }
  return num / den;
}

namespace {

// minimal number of single-box moves between two multipartitions
int box_distance(const Multipartition& a, const Multipartition& b) {
  int d = 0;
  for (size_t j = 0; j < a.size(); ++j) {
    size_t rows = std::max(a[j].size(), b[j].size());
    for (size_t r = 0; r < rows; ++r) {
      int x = r < a[j].size() ? a[j][r] : 0;
      int y = r < b[j].size() ? b[j][r] : 0;
      d += std::abs(x - y);
    }
  }
  return d;
}

void path_rec(const Bipartition& cur, const Bipartition& target, int remaining, const Params& P,
              Path& acc, std::vector<Path>& out) {
  int dist = box_distance(cur.down, target.down) + box_distance(cur.up, target.up);
  if (dist > remaining || (remaining - dist) % 2 != 0) return;
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  auto step = [&](bool is_add, const Box& b, char letter, const Bipartition& next) {
    acc.steps.push_back({is_add, b});
    acc.word.push_back(letter);
    acc.colors.push_back(content(b, P));
    path_rec(next, target, remaining - 1, P, acc, out);
    acc.steps.pop_back();
    acc.word.pop_back();
    acc.colors.pop_back();
  };
  for (const auto& b : addable_boxes(cur.up, Side::Up, P))
    step(true, b, 'u', Bipartition{cur.down, mp_with(cur.up, b)});
  for (const auto& b : removable_boxes(cur.up, Side::Up, P))
    step(false, b, 'd', Bipartition{cur.down, mp_without(cur.up, b)});
  for (const auto& b : addable_boxes(cur.down, Side::Down, P))
    step(true, b, 'd', Bipartition{mp_with(cur.down, b), cur.up});
  for (const auto& b : removable_boxes(cur.down, Side::Down, P))
    step(false, b, 'u', Bipartition{mp_without(cur.down, b), cur.up});
}

}  // namespace

std::vector<Path> paths_to(const Bipartition& la, int m, const Params& P) {
  std::vector<Path> out;
  Bipartition empty{Multipartition(P.level), Multipartition(P.level)};
  Path acc;
  path_rec(empty, la, m, P, acc, out);
  return out;
}

std::map<CharKey, long> character_std(const Bipartition& la, int maxlen, const Params& P) {
  std::map<CharKey, long> table;
  int base = mp_size(la.down) + mp_size(la.up);
  for (int m = base; m <= maxlen; m += 2)
    for (const auto& path : paths_to(la, m, P)) table[{path.word, path.colors}] += 1;
  return table;
}

namespace {

void partitions_of(int n, int maxpart, Partition& acc, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(acc);
    return;
  }
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    acc.push_back(k);
    partitions_of(n - k, k, acc, out);
    acc.pop_back();
  }
}

std::vector<Multipartition> multipartitions_of(int n, int level) {
  std::vector<Multipartition> out;
  if (level == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  for (int first = 0; first <= n; ++first) {
    Partition acc;
    std::vector<Partition> firsts;
    partitions_of(first, first ? first : 1, acc, firsts);
    if (first == 0) firsts = {Partition{}};
    auto rests = multipartitions_of(n - first, level - 1);
    for (const auto& f : firsts)
      for (const auto& rest : rests) {
        Multipartition m;
        m.push_back(f);
        m.insert(m.end(), rest.begin(), rest.end());
        out.push_back(m);
      }
  }
  return out;
}

}  // namespace

std::vector<Bipartition> bipartitions_up_to(int n, const Params& P) {
  std::vector<Bipartition> out;
  for (int total = 0; total <= n; ++total)
    for (int dsize = 0; dsize <= total; ++dsize)
      for (const auto& down : multipartitions_of(dsize, P.level))
        for (const auto& up : multipartitions_of(total - dsize, P.level))
          out.push_back(Bipartition{down, up});
  std::sort(out.begin(), out.end());
  return out;
}

std::string bipartition_json(const Bipartition& la) {
  nlohmann::json j = nlohmann::json::array();
  auto side = [](const Multipartition& mu) {
    nlohmann::json s = nlohmann::json::array();
    for (const auto& part : mu) s.push_back(part);
    return s;
  };
  j.push_back(side(la.down));
  j.push_back(side(la.up));
  return j.dump();
}

Bipartition bipartition_from_json(const std::string& text, const Params& P) {
  auto j = nlohmann::json::parse(text);
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("shape: expected [down, up]");
  Bipartition la;
  auto side = [&](const nlohmann::json& s) {
    Multipartition mu;
    for (const auto& part : s) mu.push_back(part.get<Partition>());
    // tolerate fewer components than the level: pad with empties
    while ((int)mu.size() < P.level) mu.push_back({});
    return mu;
  };
  la.down = side(j[0]);
  la.up = side(j[1]);
  if (!valid_multipartition(la.down, P.level) || !valid_multipartition(la.up, P.level))
    throw std::invalid_argument("shape: not a multipartition pair of the configured level");
  return la;
}

}  // namespace obc
