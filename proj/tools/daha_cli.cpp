#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "daha/jobs.hpp"

namespace {

struct Overrides {
  std::string config_path;
  std::string type;
  int rank = 0;
  bool finite = false;
  std::string gram_scale;
  std::string sigma;
  std::string theta;
  std::int64_t m = 0;
  std::int64_t d = 0;
  std::string c;
  std::string u;
  bool unsafe = false;
  std::string lambda0;
  std::string format;
  std::uint64_t seed = 0;
  int radius = -1;
  int depth = -1;
  std::size_t cap = 0;
};

std::vector<daha::Rational> parse_rational_list(const std::string& text) {
  std::vector<daha::Rational> out;
  for (const auto& q : daha::parse_qvec(text)) out.push_back(q);
  return out;
}

daha::JobConfig resolve(const Overrides& o, const CLI::App& app) {
  daha::JobConfig c = o.config_path.empty() ? daha::JobConfig{} : daha::load_config(o.config_path);
  auto given = [&](const char* name) { return app.count(name) > 0; };
  if (given("--type")) c.type = o.type;
  if (given("--rank")) c.rank = o.rank;
  if (given("--finite")) c.affine = !o.finite;
  if (given("--gram-scale")) c.gram_scale = daha::parse_rational(o.gram_scale);
  if (given("--sigma")) c.sigma = daha::parse_index_list(o.sigma);
  if (given("--theta")) c.theta = daha::parse_qvec(o.theta);
  if (given("--m")) c.m = o.m;
  if (given("--d")) c.d = o.d;
  if (given("--c")) c.c = parse_rational_list(o.c);
  if (given("--u")) c.u = daha::parse_rational(o.u);
  if (given("--unsafe")) c.unsafe = o.unsafe;
  if (given("--lambda0")) c.lambda0 = daha::parse_qvec(o.lambda0);
  if (given("--format")) c.format = o.format;
  if (given("--seed")) c.seed = o.seed;
  if (given("--radius")) c.radius = o.radius;
  if (given("--depth")) c.depth = o.depth;
  if (given("--cap")) c.cap = o.cap;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relative Coxeter groups, spirals and degenerate DAHAs"};
  app.require_subcommand(1);
  app.fallthrough();
  Overrides o;
  app.add_option("--config", o.config_path, "JSON config file; flags override its keys");
  app.add_option("--type", o.type, "root system type A-G or BC");
  app.add_option("--rank", o.rank, "rank of the finite root system");
  app.add_flag("--finite", o.finite, "use the finite Weyl group instead of the affine one");
  app.add_option("--gram-scale", o.gram_scale, "scale of the invariant form");
  app.add_option("--sigma", o.sigma, "parabolic Sigma as {1,3}");
  app.add_option("--theta", o.theta, "grading cocharacter as [a,b,...]");
  app.add_option("--m", o.m, "grading modulus");
  app.add_option("--d", o.d, "grading degree (its sign is epsilon)");
  app.add_option("--c", o.c, "Hecke parameters c_s as [2,2,...]");
  app.add_option("--u", o.u, "override of the specialization d/(2m)");
  app.add_flag("--unsafe", o.unsafe, "skip the integrality and h != 0 checks");
  app.add_option("--lambda0", o.lambda0, "base point of the standard module");
  app.add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--seed", o.seed, "seed of every random sample");
  app.add_option("--radius", o.radius, "ball radius");
  app.add_option("--depth", o.depth, "relative depth / module truncation");
  app.add_option("--cap", o.cap, "largest ball enumerated before giving up");

  auto* root = app.add_subcommand("root", "finite and affine root data");
  auto* weyl = app.add_subcommand("weyl", "elements of the Weyl group ball");
  auto* relative = app.add_subcommand("relative", "admissibility and the relative Coxeter system of Sigma");

  auto* complex = app.add_subcommand("complex", "facets, relative positions, fixed chambers");
  std::string action = "facets", nu, nu_prime;
  complex->add_option("action", action, "facets, relpos or fixed");
  complex->add_option("--nu", nu, "facet as WORD:TYPE, e.g. s1*s0:{1}");
  complex->add_option("--nuprime", nu_prime, "second facet for relpos");

  auto* spiral = app.add_subcommand("spiral", "the spiral pieces P, L, U on a window");
  std::string lambda, facet, window = "-2:2";
  spiral->add_option("--lambda", lambda, "cocharacter of the spiral");
  spiral->add_option("--facet", facet, "facet defining the spiral, WORD:TYPE");
  spiral->add_option("--window", window, "range lo:hi of n");

  auto* ddaha = app.add_subcommand("ddaha", "normal forms, relations and standard module weights");
  std::string expr;
  bool weights = false;
  ddaha->add_option("--expr", expr, "element to normalize, e.g. \"x1*s1 - s1*x1\"");
  ddaha->add_flag("--weights", weights, "weight spaces of the standard module at lambda0");

  auto* certify = app.add_subcommand("certify", "run every invariant check for the config");

  auto* table = app.add_subcommand("table", "regenerate a result table");
  std::string which;
  table->add_option("which", which, "weyl-ball, facets, spiral, relpos or weights")->required();
  table->add_option("--lambda", lambda, "cocharacter for the spiral table");
  table->add_option("--window", window, "range lo:hi for the spiral table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : daha::kExitConfigError;
  }

  std::string err;
  int code = daha::run_guarded(
      [&]() {
        auto job = daha::Job::build(resolve(o, app));
        auto window_bounds = [&]() -> std::pair<std::int64_t, std::int64_t> {
          auto colon = window.find(':');
          if (colon == std::string::npos) throw daha::ParseError("window must be lo:hi");
          try {
            return {std::stoll(window.substr(0, colon)), std::stoll(window.substr(colon + 1))};
          } catch (const std::exception&) {
            throw daha::ParseError("window must be lo:hi, got '" + window + "'");
          }
        };
        std::optional<daha::QVec> lam;
        if (!lambda.empty()) lam = daha::parse_qvec(lambda);
        daha::CommandOutput out;
        if (*root) out = daha::cmd_root(job);
        else if (*weyl) out = daha::cmd_table(job, "weyl-ball");
        else if (*relative) out = daha::cmd_relative(job);
        else if (*complex) out = daha::cmd_complex(job, action, nu, nu_prime);
        else if (*spiral) {
          auto [lo, hi] = window_bounds();
          out = daha::cmd_spiral(job, facet, lam, lo, hi);
        } else if (*ddaha) out = daha::cmd_ddaha(job, expr, weights);
        else if (*certify) out = daha::cmd_certify(job);
        else {
          auto [lo, hi] = window_bounds();
          out = daha::cmd_table(job, which, lam, lo, hi);
        }
        std::cout << out.text;
        return out.exit_code;
      },
      err);
  if (!err.empty()) std::cerr << "error: " << err << "\n";
  return code;
}
