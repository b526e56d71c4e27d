// Command line surface for the diagram category engine: deterministic
// machine-readable reports over a flat key=value configuration.
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "obc/engine.hpp"
#include "obc/hecke.hpp"
#include "obc/ktheory.hpp"
#include "obc/towers.hpp"

using namespace obc;

namespace {

struct Config {
  int level = 1;
  long characteristic = 0;
  std::vector<std::string> u = {"0"};
  std::vector<std::string> uprime = {"0"};
  int size_limit = 8;
  int truncation = 4;
  std::string output = "json";
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> parse_list(const std::string& raw) {
  std::string s = trim(raw);
  if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void load_config_file(const std::string& path, Config& cfg) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos) throw std::runtime_error("config line without '=': " + t);
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    if (key == "level")
      cfg.level = std::stoi(val);
    else if (key == "char")
      cfg.characteristic = std::stol(val);
    else if (key == "u")
      cfg.u = parse_list(val);
    else if (key == "uprime")
      cfg.uprime = parse_list(val);
    else if (key == "size-limit")
      cfg.size_limit = std::stoi(val);
    else if (key == "truncation")
      cfg.truncation = std::stoi(val);
    else if (key == "output")
      cfg.output = val;
    else
      throw std::runtime_error("unknown config key: " + key);
  }
}

Params params_of(const Config& cfg) {
  if ((int)cfg.u.size() != cfg.level || (int)cfg.uprime.size() != cfg.level)
    throw std::runtime_error("charge lists must have exactly 'level' entries");
  return make_params(cfg.level, cfg.characteristic, cfg.u, cfg.uprime);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_word(const Word& w) {
  if (!valid_word(w)) throw std::runtime_error("words use letters 'u' and 'd' only: " + w);
}

void check_size(const Config& cfg, size_t n) {
  if ((int)n > cfg.size_limit)
    throw std::runtime_error("size limit exceeded (" + std::to_string(n) + " > " +
                             std::to_string(cfg.size_limit) + " endpoints)");
}

std::string colors_field(const std::vector<Fq>& cs) {
  std::string s;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i) s += ";";
    s += cs[i].str();
  }
  return s;
}

Bipartition shape_arg(const std::string& text, const Params& P) {
  if (text == "empty")
    return Bipartition{Multipartition(P.level), Multipartition(P.level)};
  return bipartition_from_json(text, P);
}

int run(int argc, char** argv) {
  CLI::App app{"exact engine for cyclotomic oriented Brauer categories"};
  app.require_subcommand(1);

  Config cfg;
  std::string config_path;
  app.add_option("--config", config_path, "flat key=value configuration file");
  // per-flag overrides of the config file
  std::string o_level, o_char, o_u, o_uprime, o_limit, o_trunc, o_format;
  app.add_option("--level", o_level);
  app.add_option("--char", o_char);
  app.add_option("--u", o_u)->description("charges, e.g. [0, 2]");
  app.add_option("--uprime", o_uprime);
  app.add_option("--size-limit", o_limit);
  app.add_option("--truncation", o_trunc);
  app.add_option("--format", o_format)->check(CLI::IsMember({"json", "csv"}));

  Word src, dst;
  std::string layers_path, g_path, h_path, shape_text, kvec_path;
  std::string op_name, sector_name, residue_i, residue_j;
  int dots = 0, max_len = 4, hecke_r = 0, hecke_s = 0;
  bool reverse = false;
  unsigned seed = 0;

  auto* c_norm = app.add_subcommand("normalize", "evaluate a generator stack into the basis");
  c_norm->add_option("--layers", layers_path, "layer-word JSON file")->required();

  auto* c_basis = app.add_subcommand("hom-basis", "list the diagram basis of Hom(src, dst)");
  c_basis->add_option("--src", src);
  c_basis->add_option("--dst", dst);

  auto* c_dim = app.add_subcommand("hom-dim", "dimension of Hom(src, dst)");
  c_dim->add_option("--src", src);
  c_dim->add_option("--dst", dst);

  auto* c_comp = app.add_subcommand("compose", "compose two morphisms (g after h)");
  c_comp->add_option("--outer", g_path, "morphism applied second")->required();
  c_comp->add_option("--inner", h_path, "morphism applied first")->required();

  auto* c_rel = app.add_subcommand("verify-relations", "check the defining relations");
  c_rel->add_option("--seed", seed, "extra random whisker contexts (0 = none)");

  auto* c_corner = app.add_subcommand("corner", "corner algebra of a word");
  c_corner->add_option("--src", src)->required();

  auto* c_hecke = app.add_subcommand("hecke-check", "Hecke presentation inside a corner");
  c_hecke->add_option("--r", hecke_r)->required();
  c_hecke->add_option("--s", hecke_s)->required();

  auto* c_bub = app.add_subcommand("bubble", "closed loop value with the given dot count");
  c_bub->add_option("--dots", dots)->required();
  c_bub->add_flag("--reverse", reverse, "the other loop orientation");

  auto* c_eig = app.add_subcommand("eigenprofile", "joint dot eigenspace profile on Hom(src, dst)");
  c_eig->add_option("--dst", dst)->required();
  c_eig->add_option("--src", src);

  auto* c_char = app.add_subcommand("character", "path counts by type up to a length");
  c_char->add_option("--shape", shape_text)->required();
  c_char->add_option("--max-len", max_len);

  auto* c_std = app.add_subcommand("std-dim", "standard module dimension at an object");
  c_std->add_option("--shape", shape_text)->required();
  c_std->add_option("--dst", dst)->required();

  auto* c_paths = app.add_subcommand("paths", "paths from the empty shape of a fixed length");
  c_paths->add_option("--shape", shape_text)->required();
  c_paths->add_option("--max-len", max_len, "exact number of edges");

  auto* c_kap = app.add_subcommand("k-apply", "apply a raising/lowering operator to a K-vector");
  c_kap->add_option("--op", op_name)->required()->check(CLI::IsMember({"e", "f"}));
  c_kap->add_option("--sector", sector_name)
      ->required()
      ->check(CLI::IsMember({"total", "up", "down"}));
  c_kap->add_option("--residue", residue_i)->required();
  c_kap->add_option("--kvec", kvec_path, "K-vector JSON file")->required();

  auto* c_comm = app.add_subcommand("commutator-check", "e/f commutator identity");
  c_comm->add_option("--i", residue_i)->required();
  c_comm->add_option("--j", residue_j)->required();

  auto* c_ss = app.add_subcommand("semisimple-check", "semisimplicity verdict");
  auto* c_orb = app.add_subcommand("orbits", "charge orbits under integer translation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!config_path.empty()) load_config_file(config_path, cfg);
  if (!o_level.empty()) cfg.level = std::stoi(o_level);
  if (!o_char.empty()) cfg.characteristic = std::stol(o_char);
  if (!o_u.empty()) cfg.u = parse_list(o_u);
  if (!o_uprime.empty()) cfg.uprime = parse_list(o_uprime);
  if (!o_limit.empty()) cfg.size_limit = std::stoi(o_limit);
  if (!o_trunc.empty()) cfg.truncation = std::stoi(o_trunc);
  if (!o_format.empty()) cfg.output = o_format;

  Params P = params_of(cfg);
  bool csv = cfg.output == "csv";

  if (*c_norm) {
    LayerWord lw = layerword_from_json(read_file(layers_path));
    check_word(lw.src);
    check_size(cfg, lw.src.size());
    std::cout << eval(lw, P).json() << "\n";
  } else if (*c_basis || *c_dim) {
    check_word(src);
    check_word(dst);
    check_size(cfg, src.size() + dst.size());
    auto basis = enumerate_basis(src, dst, P);
    if (*c_dim) {
      std::cout << basis.size() << "\n";
    } else if (csv) {
      std::cout << "index,diagram\n";
      for (size_t i = 0; i < basis.size(); ++i)
        std::cout << i << ",\"" << basis[i].json() << "\"\n";
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& d : basis) arr.push_back(nlohmann::json::parse(d.json()));
      std::cout << arr.dump() << "\n";
    }
  } else if (*c_comp) {
    Morphism g = morphism_from_json(read_file(g_path), P);
    Morphism h = morphism_from_json(read_file(h_path), P);
    std::cout << compose(g, h, P).json() << "\n";
  } else if (*c_rel) {
    std::vector<std::pair<Word, Word>> contexts = {{"", ""}};
    for (Word w : {Word("u"), Word("d"), Word("uu"), Word("ud"), Word("du"), Word("dd")}) {
      contexts.push_back({w, ""});
      contexts.push_back({"", w});
    }
    for (Word l : {Word("u"), Word("d")})
      for (Word r : {Word("u"), Word("d")}) contexts.push_back({l, r});
    if (seed != 0) {
      std::mt19937 rng(seed);
      const char* letters = "ud";
      for (int extra = 0; extra < 5; ++extra) {
        Word l, r;
        int total = 3 + (int)(rng() % 2);
        int ln = (int)(rng() % (total + 1));
        for (int i = 0; i < ln; ++i) l.push_back(letters[rng() % 2]);
        for (int i = ln; i < total; ++i) r.push_back(letters[rng() % 2]);
        contexts.push_back({l, r});
      }
    }
    bool all = true;
    if (csv) std::cout << "relation,left,right,pass\n";
    for (const auto& id : relation_ids())
      for (const auto& [l, r] : contexts) {
        bool ok = verify_relation(id, l, r, P);
        all = all && ok;
        if (csv)
          std::cout << id << "," << l << "," << r << "," << (ok ? "true" : "false") << "\n";
        else
          std::cout << id << " left=\"" << l << "\" right=\"" << r << "\" "
                    << (ok ? "pass" : "FAIL") << "\n";
      }
    std::cout << (all ? "all relations verified" : "relation failures present") << "\n";
    return all ? 0 : 1;
  } else if (*c_corner) {
    check_word(src);
    check_size(cfg, 2 * src.size());
    CornerAlgebra alg = corner_algebra(src, P);
    nlohmann::json j;
    j["word"] = alg.word;
    j["dim"] = alg.basis.size();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : alg.basis) arr.push_back(nlohmann::json::parse(d.json()));
    j["basis"] = arr;
    std::cout << j.dump(2) << "\n";
  } else if (*c_hecke) {
    check_size(cfg, 2 * (hecke_r + hecke_s));
    HeckeReport rep = check_hecke_relations(hecke_r, hecke_s, P);
    std::cout << rep.json() << "\n";
    return rep.all_pass ? 0 : 1;
  } else if (*c_bub) {
    std::cout << (reverse ? P.deltaprime(dots) : P.delta(dots)).str() << "\n";
  } else if (*c_eig) {
    check_word(src);
    check_word(dst);
    check_size(cfg, src.size() + dst.size());
    EigenProfile prof = eigen_profile(dst, src, P);
    if (csv) {
      std::cout << "values,dim\n";
      for (const auto& [tup, d] : prof.table)
        std::cout << colors_field(tup) << "," << d << "\n";
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& [tup, d] : prof.table) {
        nlohmann::json vals = nlohmann::json::array();
        for (const auto& v : tup) vals.push_back(v.str());
        arr.push_back({{"values", vals}, {"dim", d}});
      }
      std::cout << nlohmann::json{{"word", prof.word}, {"table", arr}}.dump(2) << "\n";
    }
  } else if (*c_char) {
    Bipartition la = shape_arg(shape_text, P);
    auto table = character_std(la, max_len, P);
    if (csv) {
      std::cout << "word,colors,multiplicity\n";
      for (const auto& [key, n] : table)
        std::cout << key.first << "," << colors_field(key.second) << "," << n << "\n";
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& [key, n] : table) {
        nlohmann::json vals = nlohmann::json::array();
        for (const auto& v : key.second) vals.push_back(v.str());
        arr.push_back({{"word", key.first}, {"colors", vals}, {"multiplicity", n}});
      }
      std::cout << arr.dump(2) << "\n";
    }
  } else if (*c_std) {
    check_word(dst);
    Bipartition la = shape_arg(shape_text, P);
    std::cout << std_dim(la, dst, P).get_str() << "\n";
  } else if (*c_paths) {
    Bipartition la = shape_arg(shape_text, P);
    auto paths = paths_to(la, max_len, P);
    if (csv) {
      std::cout << "word,colors\n";
      for (const auto& p : paths) std::cout << p.word << "," << colors_field(p.colors) << "\n";
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& p : paths) {
        nlohmann::json vals = nlohmann::json::array();
        for (const auto& v : p.colors) vals.push_back(v.str());
        arr.push_back({{"word", p.word}, {"colors", vals}});
      }
      std::cout << arr.dump(2) << "\n";
    }
  } else if (*c_kap) {
    Fq res = Fq::parse(P.p, residue_i);
    KVector v;
    auto j = nlohmann::json::parse(read_file(kvec_path));
    for (const auto& term : j)
      v.add(bipartition_from_json(term.at("shape").dump(), P),
            mpq_class(term.at("coeff").get<std::string>()));
    Sector sec = sector_name == "total" ? Sector::Total
                                        : (sector_name == "up" ? Sector::Up : Sector::Down);
    KVector out = apply_op(op_name == "e" ? OpKind::E : OpKind::F, sec, res, v, cfg.truncation, P);
    nlohmann::json result;
    result["terms"] = nlohmann::json::parse(out.json());
    result["truncated"] = out.truncated;
    std::cout << result.dump(2) << "\n";
  } else if (*c_comm) {
    Fq fi = Fq::parse(P.p, residue_i);
    Fq fj = Fq::parse(P.p, residue_j);
    CommutatorReport rep = commutator_check(fi, fj, cfg.truncation, P);
    nlohmann::json j;
    j["ok"] = rep.ok;
    j["failures"] = rep.failures;
    std::cout << j.dump(2) << "\n";
    return rep.ok ? 0 : 1;
  } else if (*c_ss) {
    std::cout << semisimple_check(P).json() << "\n";
  } else if (*c_orb) {
    std::cout << orbit_decomposition(P).json() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
