#include "obc/diagram.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace obc {

void NormalDiagram::canonicalize() {
  for (auto& s : strands)
    if (s.b < s.a) std::swap(s.a, s.b);
  std::sort(strands.begin(), strands.end(), [](const Strand& x, const Strand& y) {
    if (!(x.a == y.a)) return x.a < y.a;
    if (!(x.b == y.b)) return x.b < y.b;
    return x.dots < y.dots;
  });
}

StrandKind NormalDiagram::kind(const Strand& s) const {
  if (s.a.top && s.b.top) return StrandKind::Cup;
  if (!s.a.top && !s.b.top) return StrandKind::Cap;
  return letter(s.a) == 'u' ? StrandKind::VertUp : StrandKind::VertDown;
}

Endpoint NormalDiagram::outward_end(const Strand& s) const {
  switch (kind(s)) {
    case StrandKind::VertUp: return s.a.top ? s.a : s.b;
    case StrandKind::VertDown: return s.a.top ? s.b : s.a;
    case StrandKind::Cup: return letter(s.a) == 'u' ? s.a : s.b;
    case StrandKind::Cap: return letter(s.a) == 'd' ? s.a : s.b;
  }
  throw std::logic_error("unreachable");
}

int NormalDiagram::strand_at(const Endpoint& e) const {
  for (size_t i = 0; i < strands.size(); ++i)
    if (strands[i].a == e || strands[i].b == e) return (int)i;
  return -1;
}

bool NormalDiagram::orientation_consistent() const {
  if (2 * strands.size() != src.size() + dst.size()) return false;
  std::vector<int> seen(src.size() + dst.size(), 0);
  auto slot = [&](const Endpoint& e) { return e.top ? (int)src.size() + e.idx : e.idx; };
  for (const auto& s : strands) {
    char la = letter(s.a), lb = letter(s.b);
    bool ok;
    if (s.a.top == s.b.top)
      ok = la != lb;  // cup or cap joins one 'u' and one 'd'
    else
      ok = la == lb;  // vertical keeps its letter
    if (!ok) return false;
    if (s.dots < 0) return false;
    seen[slot(s.a)]++;
    seen[slot(s.b)]++;
  }
  for (int c : seen)
    if (c != 1) return false;
  return true;
}

bool NormalDiagram::operator==(const NormalDiagram& o) const {
  if (src != o.src || dst != o.dst || strands.size() != o.strands.size()) return false;
  for (size_t i = 0; i < strands.size(); ++i) {
    if (!(strands[i].a == o.strands[i].a) || !(strands[i].b == o.strands[i].b) ||
        strands[i].dots != o.strands[i].dots)
      return false;
  }
  return true;
}

bool NormalDiagram::operator<(const NormalDiagram& o) const {
  if (src != o.src) return src < o.src;
  if (dst != o.dst) return dst < o.dst;
  if (strands.size() != o.strands.size()) return strands.size() < o.strands.size();
  // matching first, then dot vector
  for (size_t i = 0; i < strands.size(); ++i) {
    if (!(strands[i].a == o.strands[i].a)) return strands[i].a < o.strands[i].a;
    if (!(strands[i].b == o.strands[i].b)) return strands[i].b < o.strands[i].b;
  }
  for (size_t i = 0; i < strands.size(); ++i)
    if (strands[i].dots != o.strands[i].dots) return strands[i].dots < o.strands[i].dots;
  return false;
}

NormalDiagram identity_diagram(const Word& a) {
  NormalDiagram d;
  d.src = d.dst = a;
  for (int i = 0; i < (int)a.size(); ++i)
    d.strands.push_back({Endpoint{false, i}, Endpoint{true, i}, 0});
  d.canonicalize();
  return d;
}

NormalDiagram sigma_diagram(const Word& a, const Word& b) {
  if (class_of(a) != class_of(b)) throw std::invalid_argument("sigma: words of different class");
  NormalDiagram d;
  d.src = b;
  d.dst = a;
  for (char which : {'u', 'd'}) {
    std::vector<int> bot, top;
    for (int i = 0; i < (int)b.size(); ++i)
      if (b[i] == which) bot.push_back(i);
    for (int i = 0; i < (int)a.size(); ++i)
      if (a[i] == which) top.push_back(i);
    for (size_t k = 0; k < bot.size(); ++k)
      d.strands.push_back({Endpoint{false, bot[k]}, Endpoint{true, top[k]}, 0});
  }
  d.canonicalize();
  return d;
}

NormalDiagram tau_diagram(const NormalDiagram& d) {
  NormalDiagram out;
  out.src = d.dst;
  out.dst = d.src;
  for (auto s : d.strands) {
    s.a.top = !s.a.top;
    s.b.top = !s.b.top;
    out.strands.push_back(s);
  }
  out.canonicalize();
  return out;
}

namespace {

void match_rec(const NormalDiagram& frame, std::vector<Endpoint>& points,
               std::vector<bool>& used, std::vector<std::pair<Endpoint, Endpoint>>& cur,
               std::vector<std::vector<std::pair<Endpoint, Endpoint>>>& out) {
  size_t i = 0;
  while (i < points.size() && used[i]) ++i;
  if (i == points.size()) {
    out.push_back(cur);
    return;
  }
  used[i] = true;
  for (size_t j = i + 1; j < points.size(); ++j) {
    if (used[j]) continue;
    const Endpoint &e1 = points[i], &e2 = points[j];
    char l1 = frame.letter(e1), l2 = frame.letter(e2);
    bool ok = (e1.top == e2.top) ? (l1 != l2) : (l1 == l2);
    if (!ok) continue;
    used[j] = true;
    cur.push_back({e1, e2});
    match_rec(frame, points, used, cur, out);
    cur.pop_back();
    used[j] = false;
  }
  used[i] = false;
}

}  // namespace

std::vector<NormalDiagram> enumerate_basis(const Word& src, const Word& dst, const Params& P) {
  auto cs = class_of(src), cd = class_of(dst);
  if (cs.r - cs.s != cd.r - cd.s) return {};
  NormalDiagram frame;
  frame.src = src;
  frame.dst = dst;
  std::vector<Endpoint> points;
  for (int i = 0; i < (int)src.size(); ++i) points.push_back({false, i});
  for (int i = 0; i < (int)dst.size(); ++i) points.push_back({true, i});
  std::vector<std::vector<std::pair<Endpoint, Endpoint>>> matchings;
  std::vector<bool> used(points.size(), false);
  std::vector<std::pair<Endpoint, Endpoint>> cur;
  match_rec(frame, points, used, cur, matchings);

  std::vector<NormalDiagram> out;
  int n = points.size() / 2;
  for (auto& m : matchings) {
    std::vector<int> dots(n, 0);
    while (true) {
      NormalDiagram d;
      d.src = src;
      d.dst = dst;
      for (int k = 0; k < n; ++k) d.strands.push_back({m[k].first, m[k].second, dots[k]});
      d.canonicalize();
      out.push_back(d);
      int k = n - 1;
      while (k >= 0 && dots[k] == P.level - 1) dots[k--] = 0;
      if (k < 0) break;
      dots[k]++;
    }
    if (n == 0) break;  // empty diagram emitted once
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool vertical_crossing_free(const NormalDiagram& d) {
  std::vector<std::pair<int, int>> verts;  // (bottom idx, top idx)
  for (const auto& s : d.strands) {
    auto k = d.kind(s);
    if (k == StrandKind::VertUp || k == StrandKind::VertDown) {
      int bot = s.a.top ? s.b.idx : s.a.idx;
      int top = s.a.top ? s.a.idx : s.b.idx;
      verts.push_back({bot, top});
    }
  }
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if ((verts[i].first < verts[j].first) != (verts[i].second < verts[j].second)) return false;
  return true;
}

}  // namespace

std::vector<NormalDiagram> enumerate_YHX(YHX kind, const Word& a, const Word& b, const Params& P) {
  auto all = enumerate_basis(b, a, P);
  std::vector<NormalDiagram> out;
  for (const auto& d : all) {
    bool ok = true;
    for (const auto& s : d.strands) {
      auto k = d.kind(s);
      bool vert = (k == StrandKind::VertUp || k == StrandKind::VertDown);
      switch (kind) {
        case YHX::Y:
          if (k == StrandKind::Cap || (vert && s.dots > 0)) ok = false;
          break;
        case YHX::H:
          if (!vert) ok = false;
          break;
        case YHX::X:
          if (k == StrandKind::Cup || (vert && s.dots > 0)) ok = false;
          break;
      }
      if (!ok) break;
    }
    if (ok && kind != YHX::H && !vertical_crossing_free(d)) ok = false;
    if (ok) out.push_back(d);
  }
  return out;
}

std::string NormalDiagram::json() const {
  nlohmann::json j;
  j["src"] = src;
  j["dst"] = dst;
  nlohmann::json pairs = nlohmann::json::array();
  nlohmann::json dots = nlohmann::json::array();
  for (const auto& s : strands) {
    // explicit arrays: a bare init-list of two-element lists would be parsed
    // as a json object and collide on equal keys
    auto end_a = nlohmann::json::array({s.a.top ? "T" : "B", s.a.idx});
    auto end_b = nlohmann::json::array({s.b.top ? "T" : "B", s.b.idx});
    pairs.push_back(nlohmann::json::array({end_a, end_b}));
    dots.push_back(s.dots);
  }
  j["pairs"] = pairs;
  j["dots"] = dots;
  return j.dump();
}

NormalDiagram diagram_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  NormalDiagram d;
  d.src = j.at("src").get<std::string>();
  d.dst = j.at("dst").get<std::string>();
  if (!valid_word(d.src) || !valid_word(d.dst)) throw std::invalid_argument("bad word in diagram");
  auto pairs = j.at("pairs");
  auto dots = j.at("dots");
  if (pairs.size() != dots.size()) throw std::invalid_argument("pairs/dots length mismatch");
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto pr = pairs[i];
    Strand s;
    s.a = {pr[0][0].get<std::string>() == "T", pr[0][1].get<int>()};
    s.b = {pr[1][0].get<std::string>() == "T", pr[1][1].get<int>()};
    s.dots = dots[i].get<int>();
    d.strands.push_back(s);
  }
  d.canonicalize();
  if (!d.orientation_consistent()) throw std::invalid_argument("inconsistent diagram");
  return d;
}

}  // namespace obc
