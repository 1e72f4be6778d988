#pragma once

// Configured runs behind the command-line tool: one resolved JobConfig in,
// a deterministic report or table out. Every output embeds the config.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "daha/certify.hpp"
#include "daha/ddaha.hpp"
#include "daha/serialize.hpp"
#include "daha/spiral.hpp"

namespace daha {

enum ExitCode { kExitOk = 0, kExitCheckFailed = 1, kExitConfigError = 2, kExitCapHit = 3 };

struct JobConfig {
  std::string type = "A";
  int rank = 1;
  bool affine = true;
  Rational gram_scale = 1;
  std::optional<QMat> gram;
  std::optional<QVec> theta;
  std::int64_t m = 2;
  std::int64_t d = 1;
  std::vector<int> sigma;
  int radius = 3;
  int depth = 2;
  /// c_s per relative generator, in the order of the relative simples;
  /// empty means 2 for each.
  std::vector<Rational> c;
  std::optional<Rational> u;
  bool unsafe = false;
  std::optional<QVec> lambda0;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::size_t cap = 200000;
};

inline GenSet genset_of(const std::vector<int>& v) { return GenSet::of(v); }

/// "{1,3}", "1,3" or "" for the empty set.
inline std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    for (char ch : cur)
      if (ch < '0' || ch > '9') throw ParseError("bad index '" + cur + "'");
    out.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '{' || ch == '}' || ch == '[' || ch == ']') flush();
    else cur += ch;
  }
  flush();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Json to_json(const JobConfig& c) {
  Json j;
  j["type"] = c.type;
  j["rank"] = c.rank;
  j["affine"] = c.affine;
  j["gram_scale"] = to_json(c.gram_scale);
  if (c.gram) j["gram"] = to_json(*c.gram);
  if (c.theta) j["theta"] = to_json(*c.theta);
  j["m"] = c.m;
  j["d"] = c.d;
  j["sigma"] = c.sigma;
  j["radius"] = c.radius;
  j["depth"] = c.depth;
  Json cs = Json::array();
  for (const auto& x : c.c) cs.push_back(to_json(x));
  j["c"] = cs;
  if (c.u) j["u"] = to_json(*c.u);
  j["unsafe"] = c.unsafe;
  if (c.lambda0) j["lambda0"] = to_json(*c.lambda0);
  j["format"] = c.format;
  j["seed"] = c.seed;
  j["cap"] = c.cap;
  return j;
}

inline JobConfig config_from_json(const Json& j) {
  static const std::set<std::string> known = {"type", "rank",   "affine", "gram_scale", "gram",    "theta",
                                              "m",    "d",      "sigma",  "radius",     "depth",   "c",
                                              "u",    "unsafe", "lambda0", "format",    "seed",    "cap"};
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw ParseError("unknown config key \"" + k + "\"");
  JobConfig c;
  try {
    if (j.contains("type")) c.type = j["type"].get<std::string>();
    if (j.contains("rank")) c.rank = j["rank"].get<int>();
    if (j.contains("affine")) c.affine = j["affine"].get<bool>();
    if (j.contains("gram_scale")) c.gram_scale = rational_from_json(j["gram_scale"]);
    if (j.contains("gram")) {
      QMat g;
      for (const auto& row : j["gram"]) g.push_back(qvec_from_json(row));
      c.gram = g;
    }
    if (j.contains("theta")) c.theta = qvec_from_json(j["theta"]);
    if (j.contains("m")) c.m = j["m"].get<std::int64_t>();
    if (j.contains("d")) c.d = j["d"].get<std::int64_t>();
    if (j.contains("sigma"))
      c.sigma = j["sigma"].is_string() ? parse_index_list(j["sigma"].get<std::string>()) : j["sigma"].get<std::vector<int>>();
    if (j.contains("radius")) c.radius = j["radius"].get<int>();
    if (j.contains("depth")) c.depth = j["depth"].get<int>();
    if (j.contains("c"))
      for (const auto& x : j["c"]) c.c.push_back(rational_from_json(x));
    if (j.contains("u")) c.u = rational_from_json(j["u"]);
    if (j.contains("unsafe")) c.unsafe = j["unsafe"].get<bool>();
    if (j.contains("lambda0")) c.lambda0 = qvec_from_json(j["lambda0"]);
    if (j.contains("format")) c.format = j["format"].get<std::string>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("cap")) c.cap = j["cap"].get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  std::sort(c.sigma.begin(), c.sigma.end());
  c.sigma.erase(std::unique(c.sigma.begin(), c.sigma.end()), c.sigma.end());
  return c;
}

inline JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return config_from_json(j);
}

/// The group, complex and optional relative system of a config.
struct Job {
  JobConfig config;
  AffineSystemPtr system;
  WeylGroup W;
  CoxeterComplex C;
  GenSet sigma;

  static Job build(const JobConfig& cfg) {
    if (cfg.format != "json" && cfg.format != "tsv") throw InvalidParameters("format must be json or tsv");
    if (cfg.radius < 0 || cfg.depth < 0) throw InvalidParameters("radius and depth must be non-negative");
    RootType t = parse_type(cfg.type);
    FiniteRootSystem R = cfg.gram ? FiniteRootSystem::from_data(t, cfg.rank, FiniteRootSystem::build(t, cfg.rank).cartan(),
                                                                 *cfg.gram)
                                  : FiniteRootSystem::build(t, cfg.rank, cfg.gram_scale);
    auto sys = AffineRootSystem::affinize(std::move(R));
    WeylGroup W = cfg.affine ? WeylGroup::affine(sys) : WeylGroup::finite(sys);
    GenSet sigma = genset_of(cfg.sigma);
    if (!sigma.subset_of(W.generators()))
      throw InvalidParameters("Sigma " + to_string(sigma) + " is not a set of generators of " +
                              (cfg.affine ? "the affine " : "the finite ") + std::string("group"));
    if (cfg.theta && static_cast<int>(cfg.theta->size()) != cfg.rank) throw InvalidParameters("theta has the wrong rank");
    if (cfg.lambda0 && cfg.lambda0->empty()) throw InvalidParameters("lambda0 is empty");
    return Job{cfg, sys, W, CoxeterComplex(W), sigma};
  }

  HeckeParameters parameters(std::size_t ngens) const {
    HeckeParameters p = HeckeParameters::uniform(ngens, config.m, config.d);
    if (!config.c.empty()) p.c = config.c;
    p.u = config.u;
    p.unsafe = config.unsafe;
    return p;
  }

  /// The algebra on the relative group of Sigma.
  DDAHA algebra() const {
    auto R = RelativeCoxeterSystem::build(W, sigma);
    auto model = relative_model(R);
    auto p = parameters(model.gens.size());
    return DDAHA(std::move(model), p);
  }

  /// A point of E off every reflection hyperplane met in small balls.
  QVec generic_point(int n) const {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    QVec v(n);
    for (int i = 0; i < n; ++i) v[i] = make_rational(1, primes[i % 8] * 37 + i);
    return v;
  }
};

/// "WORD:TYPE", with WORD "e" or s<i> letters joined by '*', TYPE "{1,2}".
inline Facet parse_facet(const Job& job, const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("facet must be WORD:TYPE, got '" + text + "'");
  std::string word = text.substr(0, colon);
  std::vector<int> letters;
  std::string cur;
  auto flush = [&] {
    if (cur.empty() || cur == "e") {
      cur.clear();
      return;
    }
    if (cur[0] != 's' || cur.size() < 2 || cur.find_first_not_of("0123456789", 1) != std::string::npos)
      throw ParseError("bad letter '" + cur + "' in facet word");
    int s = std::stoi(cur.substr(1));
    if (!job.W.generators().contains(s)) throw ParseError("no generator s" + std::to_string(s));
    letters.push_back(s);
    cur.clear();
  };
  for (char ch : word) {
    if (ch == '*' || ch == ' ') flush();
    else cur += ch;
  }
  flush();
  return job.C.facet(job.W.from_word(letters), genset_of(parse_index_list(text.substr(colon + 1))));
}

inline std::string group_word(const WeylGroup& W, const WeylElement& g) {
  auto w = W.reduced_word(g);
  if (w.letters.empty()) return "e";
  std::string s;
  for (int k : w.letters) s += (s.empty() ? "s" : "*s") + std::to_string(k);
  return s;
}

/// Inverse of group_word.
inline WeylElement parse_group_word(const WeylGroup& W, const std::string& text) {
  std::vector<int> letters;
  std::string cur;
  auto flush = [&] {
    if (cur.empty() || cur == "e") {
      cur.clear();
      return;
    }
    if (cur[0] != 's' || cur.size() < 2 || cur.find_first_not_of("0123456789", 1) != std::string::npos)
      throw ParseError("bad letter '" + cur + "'");
    int s = std::stoi(cur.substr(1));
    if (!W.generators().contains(s)) throw ParseError("no generator s" + std::to_string(s));
    letters.push_back(s);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '*') flush();
    else cur += ch;
  }
  flush();
  return W.from_word(letters);
}

/// Rows of cells, printed as TSV or mirrored in JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct CommandOutput {
  int exit_code = kExitOk;
  std::string text;
};

inline std::string render(const JobConfig& cfg, const std::string& kind, const Table& t) {
  if (cfg.format == "tsv") {
    std::string out = "# " + kind + "\t" + to_json(cfg).dump() + "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "\t" : "") + t.columns[i];
    out += "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "\t" : "") + row[i];
      out += "\n";
    }
    return out;
  }
  Json j;
  j["kind"] = kind;
  j["config"] = to_json(cfg);
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  return j.dump(2) + "\n";
}

inline std::string render(const JobConfig& cfg, const std::string& kind, const Json& result) {
  Json j;
  j["kind"] = kind;
  j["config"] = to_json(cfg);
  j["result"] = result;
  return j.dump(2) + "\n";
}

inline std::string bool_cell(bool b) { return b ? "1" : "0"; }

// weyl-ball: index, length, word, mu (coweight translation), linear part
// rows joined by ';'.
inline Table table_weyl_ball(const Job& job) {
  Table t{{"index", "length", "word", "mu", "w"}, {}};
  auto ball = job.W.enumerate_ball(job.config.radius, std::nullopt, job.config.cap);
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const auto& g = ball[i];
    const int n = g.rank();
    std::string w;
    for (int r = 0; r < n; ++r) {
      ZVec row(g.M.begin() + r * n, g.M.begin() + (r + 1) * n);
      w += (r ? ";" : "") + to_string(row);
    }
    t.rows.push_back({std::to_string(i), std::to_string(job.W.length(g)), group_word(job.W, g), to_string(g.mu), w});
  }
  return t;
}

// facets: index, facet (WORD:TYPE), dimension, interior point, span
// equations.
inline Table table_facets(const Job& job) {
  Table t{{"index", "facet", "dimension", "interior", "span"}, {}};
  job.W.enumerate_ball(job.config.radius, std::nullopt, job.config.cap);
  auto fs = job.C.facets(job.config.radius).facets;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& f = fs[i];
    std::string span;
    for (std::size_t r = 0; r < f.span.equations.size(); ++r) span += (r ? ";" : "") + to_string(f.span.equations[r]);
    t.rows.push_back({std::to_string(i), group_word(job.W, f.rep) + ":" + to_string(f.type),
                      std::to_string(f.span.dimension()), to_string(f.interior), span});
  }
  return t;
}

// spiral: n, space ("h" or a root), degree, weight, P, L, U.
inline Table table_spiral(const Spiral& sp, std::int64_t lo, std::int64_t hi) {
  Table t{{"n", "space", "degree", "weight", "P", "L", "U"}, {}};
  for (std::int64_t n = lo; n <= hi; ++n)
    for (const auto& x : sp.datum().spaces())
      t.rows.push_back({std::to_string(n), to_string(x), std::to_string(sp.datum().degree(x)),
                        to_string(sp.weight(x)), bool_cell(sp.in_P(x, n)), bool_cell(sp.in_L(x, n)),
                        bool_cell(sp.in_U(x, n))});
  return t;
}

// relpos: nu, nu', double coset, good, relative element (or "-").
inline Table table_relpos(const Job& job) {
  Table t{{"nu", "nu_prime", "double_coset", "good", "relative_element"}, {}};
  job.W.enumerate_ball(job.config.radius, std::nullopt, job.config.cap);
  auto fs = job.C.facets(job.config.radius, job.sigma).facets;
  for (const auto& a : fs)
    for (const auto& b : fs) {
      auto p = job.C.relative_position(a, b);
      t.rows.push_back({group_word(job.W, a.rep) + ":" + to_string(a.type),
                        group_word(job.W, b.rep) + ":" + to_string(b.type), group_word(job.W, p.double_coset),
                        bool_cell(p.good), p.good ? group_word(job.W, *p.relative_element) : "-"});
    }
  return t;
}

// weights: weight, dimension, nilpotent, support (basis elements as
// algebra words joined by ';').
inline Table table_weights(const Job& job) {
  auto A = job.algebra();
  QVec l = job.config.lambda0.value_or(job.generic_point(A.nvars()));
  if (static_cast<int>(l.size()) != A.nvars())
    throw InvalidParameters("lambda0 needs " + std::to_string(A.nvars()) + " coordinates");
  auto M = A.standard_module(l, job.config.depth);
  Table t{{"weight", "dimension", "nilpotent", "support"}, {}};
  for (const auto& w : M.weights) {
    std::string support;
    for (const auto& g : w.support) support += (support.empty() ? "" : ";") + A.to_string(A.group_element(g));
    t.rows.push_back({to_string(w.weight), std::to_string(w.dimension), bool_cell(w.nilpotent_part), support});
  }
  return t;
}

inline Json to_json(const CheckResult& r) {
  Json j;
  j["name"] = r.name;
  j["status"] = to_string(r.status);
  j["cases"] = r.cases;
  j["detail"] = r.detail;
  j["counterexamples"] = r.counterexamples;
  return j;
}

/// The invariant suite for the configured system.
inline std::vector<CheckResult> certify_checks(const Job& job) {
  const auto& cfg = job.config;
  const auto& W = job.W;
  std::mt19937_64 rng(cfg.seed);
  std::vector<CheckResult> out;

  CheckResult root("root data");
  const auto& R = W.roots();
  root.expect(is_positive_definite(R.gram()), "gram matrix is not positive definite");
  root.expect(root_data_from_json(root_data_to_json(R)).cartan() == R.cartan(), "root data does not round-trip");
  for (const auto& a : R.roots())
    for (int i = 0; i < R.rank(); ++i) root.expect(R.is_root(R.reflect_simple(i, a)), "not closed under s" + std::to_string(i + 1));
  root.detail = R.label() + ", " + std::to_string(R.roots().size()) + " roots";
  out.push_back(root);

  CheckResult adm("admissibility");
  auto cert = check_admissible(W, job.sigma);
  adm.expect(cert.finite, "W_Sigma is infinite");
  if (cert.finite && !cert.admissible) {
    std::string witness = cert.witness ? group_word(W, *cert.witness) : "?";
    adm.expect(false, "w0 = " + witness + " of " + to_string(cert.violations.front()) + " moves s" +
                          std::to_string(cert.moved_generator) + " out of W_Sigma");
  }
  adm.detail = "Sigma = " + to_string(job.sigma);
  out.push_back(adm);

  auto skip_all = [&](const std::vector<std::string>& names, const std::string& why) {
    for (const auto& n : names) {
      CheckResult s(n);
      s.status = CheckStatus::Skip;
      s.detail = why;
      out.push_back(s);
    }
  };

  out.push_back(check_reflection_calculus(W, cfg.radius, 100, rng));

  std::vector<std::string> relative_checks = {"relative ball sizes", "length additivity", "exchange property",
                                              "fixed subcomplex",    "relative position", "dDAHA relations",
                                              "standard module weights"};
  if (!adm.passed()) {
    skip_all(relative_checks, "Sigma is not admissible");
  } else {
    auto Rel = RelativeCoxeterSystem::build(W, job.sigma);
    out.push_back(check_relative_ball_sizes(Rel, cfg.radius));
    out.push_back(check_length_additivity(W, Rel, std::min(cfg.depth, 3)));
    out.push_back(check_exchange(W, Rel, std::min(cfg.depth, 3)));
    if (job.sigma == W.generators()) {
      skip_all({"fixed subcomplex", "relative position"}, "Sigma is the whole generating set");
    } else {
      out.push_back(check_fixed_chambers(job.C, job.sigma, cfg.radius));
      QVec x = cfg.theta ? GradedRootDatum(job.system, *cfg.theta, cfg.m, cfg.d).grading_point()
                         : QVec(W.rank(), Rational(0));
      out.push_back(check_relative_positions(job.C, job.sigma, std::min(cfg.radius, 3), 6, x));
    }
    auto A = job.algebra();
    out.push_back(check_ddaha(A, 10, 2, 6, rng));
    QVec l = cfg.lambda0.value_or(job.generic_point(A.nvars()));
    out.push_back(check_standard_weights(A, l, cfg.depth));
  }

  if (cfg.theta && W.is_affine()) {
    GradedRootDatum g(job.system, *cfg.theta, cfg.m, cfg.d);
    out.push_back(check_spirals(g, 10, 8, std::min(cfg.radius, 2), rng));
  } else {
    skip_all({"spiral algebra"}, cfg.theta ? "spirals need the affine group" : "no grading theta configured");
  }
  return out;
}

inline CommandOutput cmd_certify(const Job& job) {
  auto checks = certify_checks(job);
  bool ok = std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.passed(); });
  if (job.config.format == "tsv") {
    Table t{{"check", "status", "cases", "detail", "counterexample"}, {}};
    for (const auto& r : checks)
      t.rows.push_back({r.name, to_string(r.status), std::to_string(r.cases), r.detail,
                        r.counterexamples.empty() ? "-" : r.counterexamples.front()});
    return {ok ? kExitOk : kExitCheckFailed, render(job.config, "certify", t)};
  }
  Json result;
  result["ok"] = ok;
  Json list = Json::array();
  for (const auto& r : checks) list.push_back(to_json(r));
  result["checks"] = list;
  return {ok ? kExitOk : kExitCheckFailed, render(job.config, "certify", result)};
}

inline CommandOutput cmd_table(const Job& job, const std::string& which, const std::optional<QVec>& lambda = {},
                               std::int64_t lo = -2, std::int64_t hi = 2) {
  Table t;
  if (which == "weyl-ball") t = table_weyl_ball(job);
  else if (which == "facets") t = table_facets(job);
  else if (which == "relpos") t = table_relpos(job);
  else if (which == "weights") t = table_weights(job);
  else if (which == "spiral") {
    if (!job.config.theta) throw InvalidParameters("the spiral table needs theta");
    GradedRootDatum g(job.system, *job.config.theta, job.config.m, job.config.d);
    Spiral sp(g, lambda.value_or(QVec(job.W.rank(), Rational(0))), g.epsilon());
    t = table_spiral(sp, lo, hi);
  } else {
    throw InvalidParameters("unknown table '" + which + "' (weyl-ball, facets, spiral, relpos, weights)");
  }
  return {kExitOk, render(job.config, "table " + which, t)};
}

inline CommandOutput cmd_root(const Job& job) {
  const auto& R = job.W.roots();
  if (job.config.format == "tsv") {
    Table t{{"index", "root", "height", "positive"}, {}};
    for (std::size_t i = 0; i < R.roots().size(); ++i) {
      const auto& a = R.roots()[i];
      std::int64_t h = 0;
      for (auto x : a) h += x;
      t.rows.push_back({std::to_string(i), to_string(a), std::to_string(h), bool_cell(h > 0)});
    }
    return {kExitOk, render(job.config, "root", t)};
  }
  Json j = root_data_to_json(R);
  Json pos = Json::array();
  for (const auto& a : R.positive_roots()) pos.push_back(to_json(a));
  j["positive_roots"] = pos;
  j["highest_root"] = to_json(R.highest_root());
  Json simples = Json::array();
  for (const auto& a : job.system->simples()) simples.push_back({{"dir", to_json(a.dir)}, {"level", a.level}});
  j["affine_simples"] = simples;
  j["alcove_vertices"] = to_json(job.system->alcove_vertices());
  return {kExitOk, render(job.config, "root", j)};
}

inline CommandOutput cmd_relative(const Job& job) {
  auto cert = check_admissible(job.W, job.sigma);
  Json j;
  j["sigma"] = job.config.sigma;
  j["admissible"] = cert.admissible;
  if (!cert.admissible) {
    Json v = Json::array();
    for (auto s : cert.violations) v.push_back(to_json(s));
    j["violations"] = v;
    if (cert.witness) j["witness"] = group_word(job.W, *cert.witness);
    j["moved_generator"] = cert.moved_generator;
    return {kExitCheckFailed, render(job.config, "relative", j)};
  }
  auto R = RelativeCoxeterSystem::build(job.W, job.sigma);
  j["sigma_complement"] = to_json(R.complement());
  Json simples = Json::array();
  for (const auto& s : R.simples())
    simples.push_back({{"s", s.s}, {"word", group_word(job.W, s.element)}, {"length", s.length},
                       {"rel_length", R.relative_length(s.element)}});
  j["simples"] = simples;
  j["coxeter_matrix"] = R.coxeter_matrix();
  auto layers = R.ball_layers(job.config.radius, job.config.cap);
  std::vector<std::size_t> sizes;
  for (const auto& l : layers) sizes.push_back(l.size());
  j["sphere_sizes"] = sizes;
  if (!R.diagnostic().empty()) j["diagnostic"] = R.diagnostic();
  return {kExitOk, render(job.config, "relative", j)};
}

inline CommandOutput cmd_complex(const Job& job, const std::string& action, const std::string& nu,
                                 const std::string& nu_prime) {
  if (action == "facets") return cmd_table(job, "facets");
  if (action == "relpos") {
    if (nu.empty() || nu_prime.empty()) throw InvalidParameters("relpos needs --nu and --nuprime");
    auto a = parse_facet(job, nu), b = parse_facet(job, nu_prime);
    auto p = job.C.relative_position(a, b);
    Json j;
    j["nu"] = to_json(job.W, a);
    j["nu_prime"] = to_json(job.W, b);
    j["double_coset"] = group_word(job.W, p.double_coset);
    j["good"] = p.good;
    if (p.good) {
      j["relative_element"] = group_word(job.W, *p.relative_element);
      j["realizing_element"] = group_word(job.W, *p.realizing_element);
    }
    return {kExitOk, render(job.config, "complex relpos", j)};
  }
  if (action == "fixed") {
    auto base = nu.empty() ? job.C.fundamental(job.sigma) : parse_facet(job, nu);
    auto fc = job.C.fixed_chambers(base, job.config.radius);
    Json j;
    j["base"] = to_json(job.W, fc.base);
    Json ch = Json::array();
    for (const auto& f : fc.chambers) ch.push_back(group_word(job.W, f.rep) + ":" + to_string(f.type));
    j["chambers"] = ch;
    j["table"] = fc.table;
    j["all_same_type"] = fc.all_same_type;
    j["single_free_orbit"] = fc.single_free_orbit;
    j["boundary_chambers"] = fc.boundary_chambers;
    j["complete"] = fc.complete;
    bool ok = fc.all_same_type && fc.single_free_orbit;
    return {ok ? kExitOk : kExitCheckFailed, render(job.config, "complex fixed", j)};
  }
  throw InvalidParameters("unknown complex action '" + action + "' (facets, relpos, fixed)");
}

inline CommandOutput cmd_spiral(const Job& job, const std::string& facet, const std::optional<QVec>& lambda,
                                std::int64_t lo, std::int64_t hi) {
  if (!job.config.theta) throw InvalidParameters("spiral needs --theta");
  if (lo > hi) throw InvalidParameters("empty window");
  GradedRootDatum g(job.system, *job.config.theta, job.config.m, job.config.d);
  if (!facet.empty()) {
    auto f = parse_facet(job, facet);
    auto fs = spiral_from_facet(g, job.C, f, std::max(std::abs(lo), std::abs(hi)));
    return {fs.independent ? kExitOk : kExitCheckFailed, render(job.config, "spiral", table_spiral(fs.spiral, lo, hi))};
  }
  Spiral sp(g, lambda.value_or(QVec(job.W.rank(), Rational(0))), g.epsilon());
  return {kExitOk, render(job.config, "spiral", table_spiral(sp, lo, hi))};
}

inline CommandOutput cmd_ddaha(const Job& job, const std::string& expr, bool weights) {
  auto A = job.algebra();
  if (!expr.empty()) {
    auto x = A.parse(expr);
    Json j;
    j["input"] = expr;
    j["normal_form"] = A.to_string(x);
    Json h = Json::array();
    for (std::size_t s = 0; s < A.rank(); ++s) h.push_back(to_json(A.h(s)));
    j["h"] = h;
    return {kExitOk, render(job.config, "ddaha", j)};
  }
  if (weights) return cmd_table(job, "weights");
  auto r = A.verify_relations(std::max(job.config.depth, 2), job.config.seed);
  Json j;
  j["model"] = A.model().name;
  Json gens = Json::array();
  for (std::size_t s = 0; s < A.rank(); ++s)
    gens.push_back({{"label", "s" + A.label(s)}, {"root", A.model().roots[s].to_string()}, {"h", to_json(A.h(s))}});
  j["generators"] = gens;
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  j["skipped"] = r.skipped;
  return {r.ok() ? kExitOk : kExitCheckFailed, render(job.config, "ddaha", j)};
}

/// Maps library errors to exit codes; the message goes to `err`.
template <class F>
int run_guarded(F&& body, std::string& err) {
  try {
    return body();
  } catch (const BallTooLarge& e) {
    err = e.what();
    return kExitCapHit;
  } catch (const ParseError& e) {
    err = e.what();
    return kExitConfigError;
  } catch (const InvalidParameters& e) {
    err = e.what();
    return kExitConfigError;
  } catch (const IllegalType& e) {
    err = e.what();
    return kExitConfigError;
  } catch (const InvalidRootData& e) {
    err = e.what();
    return kExitConfigError;
  } catch (const NotAdmissible& e) {
    err = e.what();
    return kExitConfigError;
  } catch (const TypesDiffer& e) {
    err = e.what();
    return kExitConfigError;
  } catch (const NotARoot& e) {
    err = e.what();
    return kExitConfigError;
  } catch (const Error& e) {
    err = e.what();
    return kExitCheckFailed;
  }
}

}  // namespace daha
