#include "obc/ktheory.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace obc {

void Weight::add_fund(const Fq& i, long n) {
  long& v = fund[i];
  v += n;
  if (v == 0) fund.erase(i);
}

void Weight::add_root(const Fq& i, long n) {
  long& v = roots[i];
  v += n;
  if (v == 0) roots.erase(i);
}

Weight Weight::operator+(const Weight& o) const {
  Weight w = *this;
  for (const auto& [k, v] : o.fund) w.add_fund(k, v);
  for (const auto& [k, v] : o.roots) w.add_root(k, v);
  return w;
}

Weight Weight::operator-(const Weight& o) const {
  Weight w = *this;
  for (const auto& [k, v] : o.fund) w.add_fund(k, -v);
  for (const auto& [k, v] : o.roots) w.add_root(k, -v);
  return w;
}

std::string Weight::json() const {
  nlohmann::json j;
  j["fund"] = nlohmann::json::object();
  j["roots"] = nlohmann::json::object();
  for (const auto& [k, v] : fund) j["fund"][k.str()] = v;
  for (const auto& [k, v] : roots) j["roots"][k.str()] = v;
  return j.dump();
}

long cartan(const Fq& i, const Fq& j, const Params& P) {
  if (i == j) return 2;
  Fq one = Fq::one(P.p);
  if (P.p == 2) return (i == j - one) ? -2 : 0;
  if (i == j - one || i == j + one) return -1;
  return 0;
}

long pairing(const Fq& i, const Weight& w, const Params& P) {
  long acc = 0;
  auto it = w.fund.find(i);
  if (it != w.fund.end()) acc += it->second;
  for (const auto& [j, n] : w.roots) acc += n * cartan(i, j, P);
  return acc;
}

std::pair<Weight, Weight> wt(const Bipartition& la, const Params& P) {
  Weight down, up;
  for (const auto& c : P.uprime) down.add_fund(c, -1);
  for (const auto& c : P.u) up.add_fund(c, 1);
  for (int j = 1; j <= P.level; ++j) {
    const Partition& dpart = la.down[j - 1];
    for (int r = 1; r <= (int)dpart.size(); ++r)
      for (int c = 1; c <= dpart[r - 1]; ++c)
        down.add_root(content(Box{Side::Down, j, r, c}, P), 1);
    const Partition& upart = la.up[j - 1];
    for (int r = 1; r <= (int)upart.size(); ++r)
      for (int c = 1; c <= upart[r - 1]; ++c)
        up.add_root(content(Box{Side::Up, j, r, c}, P), -1);
  }
  return {down, up};
}

bool inverse_dominance_leq(const std::pair<Weight, Weight>& x,
                           const std::pair<Weight, Weight>& y) {
  if (!(x.first + x.second == y.first + y.second)) return false;
  Weight diff = y.first - x.first;
  if (!diff.fund.empty()) return false;
  for (const auto& [k, v] : diff.roots)
    if (v < 0) return false;
  return true;
}

void KVector::add(const Bipartition& la, const mpq_class& c) {
  mpq_class& v = terms[la];
  v += c;
  if (v == 0) terms.erase(la);
}

std::string KVector::json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [la, c] : terms)
    arr.push_back({{"shape", nlohmann::json::parse(bipartition_json(la))},
                   {"coeff", c.get_str()}});
  return arr.dump();
}

KVector apply_op(OpKind op, Sector sector, const Fq& i, const KVector& v, int trunc,
                 const Params& P) {
  KVector out;
  out.truncated = v.truncated;
  for (const auto& [la, c] : v.terms) {
    AddRem ar = addable_removable(la, i, P);
    std::vector<Bipartition> targets;
    bool up_side = (sector == Sector::Total || sector == Sector::Up);
    bool down_side = (sector == Sector::Total || sector == Sector::Down);
    if (op == OpKind::F) {
      if (up_side)
        for (const auto& b : ar.up_add) targets.push_back({la.down, mp_with(la.up, b)});
      if (down_side)
        for (const auto& b : ar.down_rem) targets.push_back({mp_without(la.down, b), la.up});
    } else {
      if (up_side)
        for (const auto& b : ar.up_rem) targets.push_back({la.down, mp_without(la.up, b)});
      if (down_side)
        for (const auto& b : ar.down_add) targets.push_back({mp_with(la.down, b), la.up});
    }
    for (const auto& mu : targets) {
      if (mp_size(mu.down) + mp_size(mu.up) > trunc) {
        out.truncated = true;
        continue;
      }
      out.add(mu, c);
    }
  }
  return out;
}

CommutatorReport commutator_check(const Fq& i, const Fq& j, int trunc, const Params& P) {
  CommutatorReport rep;
  int inner = trunc + 2;  // intermediate shapes may grow by two boxes
  for (const auto& la : bipartitions_up_to(trunc, P)) {
    KVector unit;
    unit.add(la, 1);
    KVector ef = apply_op(OpKind::E, Sector::Total, i,
                          apply_op(OpKind::F, Sector::Total, j, unit, inner, P), inner, P);
    KVector fe = apply_op(OpKind::F, Sector::Total, j,
                          apply_op(OpKind::E, Sector::Total, i, unit, inner, P), inner, P);
    KVector diff = ef;
    for (const auto& [mu, c] : fe.terms) diff.add(mu, -c);
    KVector expect;
    if (i == j) {
      auto weights = wt(la, P);
      long h = pairing(i, weights.first + weights.second, P);
      if (h != 0) expect.add(la, h);
    }
    if (!(diff == expect)) {
      rep.ok = false;
      rep.failures.push_back("shape " + bipartition_json(la) + ": got " + diff.json() +
                             ", expected " + expect.json());
    }
  }
  return rep;
}

namespace {

bool integral_difference(const Fq& a, const Fq& b, const Params& P) {
  if (P.p > 0) return true;  // prime subfield: everything is an integer multiple of 1
  return (a - b).is_integer();
}

}  // namespace

std::string SemisimpleVerdict::json() const {
  nlohmann::json j;
  j["semisimple"] = semisimple;
  j["reasons"] = reasons;
  return j.dump(2);
}

SemisimpleVerdict semisimple_check(const Params& P) {
  SemisimpleVerdict v;
  v.semisimple = true;
  if (P.p > 0) {
    v.semisimple = false;
    v.reasons.push_back(
        "condition (1) cannot hold in characteristic p: every difference of prime-subfield "
        "charges is an integral multiple of 1");
    return v;
  }
  for (size_t i = 0; i < P.u.size(); ++i)
    for (size_t j = 0; j < P.uprime.size(); ++j)
      if (integral_difference(P.u[i], P.uprime[j], P)) {
        v.semisimple = false;
        v.reasons.push_back("condition (1) fails: u_" + std::to_string(i + 1) + " - u'_" +
                            std::to_string(j + 1) + " = " + (P.u[i] - P.uprime[j]).str() +
                            " is integral");
      }
  for (size_t i = 0; i < P.u.size(); ++i)
    for (size_t j = i + 1; j < P.u.size(); ++j)
      if (integral_difference(P.u[i], P.u[j], P)) {
        v.semisimple = false;
        v.reasons.push_back("condition (2) fails: u_" + std::to_string(i + 1) + " - u_" +
                            std::to_string(j + 1) + " = " + (P.u[i] - P.u[j]).str() +
                            " is integral");
      }
  for (size_t i = 0; i < P.uprime.size(); ++i)
    for (size_t j = i + 1; j < P.uprime.size(); ++j)
      if (integral_difference(P.uprime[i], P.uprime[j], P)) {
        v.semisimple = false;
        v.reasons.push_back("condition (2) fails: u'_" + std::to_string(i + 1) + " - u'_" +
                            std::to_string(j + 1) + " = " + (P.uprime[i] - P.uprime[j]).str() +
                            " is integral");
      }
  return v;
}

std::string Orbits::json() const {
  nlohmann::json j;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& orbit : orbits) {
    nlohmann::json o = nlohmann::json::array();
    for (const auto& c : orbit) o.push_back(c.str());
    list.push_back(o);
  }
  j["orbits"] = list;
  j["g_shape"] = g_shape;
  return j.dump(2);
}

Orbits orbit_decomposition(const Params& P) {
  std::vector<Fq> charges;
  for (const auto& c : P.u) charges.push_back(c);
  for (const auto& c : P.uprime) charges.push_back(c);
  std::sort(charges.begin(), charges.end());
  charges.erase(std::unique(charges.begin(), charges.end()), charges.end());

  Orbits out;
  std::vector<bool> placed(charges.size(), false);
  for (size_t i = 0; i < charges.size(); ++i) {
    if (placed[i]) continue;
    std::vector<Fq> orbit = {charges[i]};
    placed[i] = true;
    for (size_t j = i + 1; j < charges.size(); ++j)
      if (!placed[j] && integral_difference(charges[i], charges[j], P)) {
        orbit.push_back(charges[j]);
        placed[j] = true;
      }
    out.orbits.push_back(orbit);
  }
  std::string piece = (P.p == 0) ? "sl_infinity" : ("affine sl_" + std::to_string(P.p));
  out.g_shape = std::to_string(out.orbits.size()) + " " +
                (out.orbits.size() == 1 ? "copy" : "copies") + " of " + piece;
  return out;
}

std::vector<Fq> residue_window(const Params& P, int window) {
  std::vector<Fq> all;
  for (const auto& charges : {P.u, P.uprime})
    for (const auto& c : charges)
      for (int n = -window; n <= window; ++n) all.push_back(c + P.fq(n));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace obc
