// finitehyper command-line interface.
//
// Exit status: 0 when every check passes, 1 on any mismatch, 2 on
// configuration errors or pole exhaustion.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "finitehyper/harness.hpp"
#include "finitehyper/hyperfun.hpp"
#include "finitehyper/ozgen.hpp"
#include "finitehyper/polylog.hpp"

namespace fh = finitehyper;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitConfig = 2;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fh::ConfigError("cannot open " + path + " for writing");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  if (!out) throw fh::ConfigError("failed writing " + path);
}

bool all_equal(const std::vector<fh::VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.equal) return false;
  }
  return true;
}

bool all_pass(const std::vector<fh::LimitReport>& limits) {
  for (const auto& l : limits) {
    if (!l.pass) return false;
  }
  return true;
}

// key=value pairs from --params.
std::map<std::string, std::string> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, std::string> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw fh::ConfigError("parameter must look like key=value: " + item);
    }
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

class ParamView {
 public:
  explicit ParamView(std::map<std::string, std::string> values) : values_(std::move(values)) {}

  const std::string& text(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw fh::ConfigError("missing parameter " + key);
    return it->second;
  }
  fh::Rational rational(const std::string& key) const { return fh::Rational::parse(text(key)); }
  int integer(const std::string& key) const {
    try {
      return std::stoi(text(key));
    } catch (const std::logic_error&) {
      throw fh::ConfigError("parameter " + key + " must be an integer");
    }
  }
  std::vector<fh::Rational> list(const std::string& key) const {
    std::vector<fh::Rational> out;
    auto it = values_.find(key);
    if (it == values_.end() || it->second.empty()) return out;
    std::string rest = it->second;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      out.push_back(fh::Rational::parse(rest.substr(pos, comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return out;
  }
  bool has(const std::string& key) const { return values_.count(key) != 0; }

 private:
  std::map<std::string, std::string> values_;
};

std::string evaluate_function(const std::string& fn, const ParamView& p, int n,
                              const std::optional<std::string>& z_text, int degree) {
  auto z = [&] {
    if (!z_text) throw fh::ConfigError(fn + " needs --z");
    return fh::Rational::parse(*z_text);
  };
  const auto un = static_cast<unsigned>(n);
  if (fn == "truncated-beta") {
    return fh::truncated_beta({p.rational("a"), p.rational("b"), un}).str();
  }
  if (fn == "disc-beta-sum") {
    return fh::disc_beta_sum({p.rational("a"), p.rational("b"), un}).str();
  }
  if (fn == "pfq-bracket") {
    return fh::trunc_pFq_bracket(fh::HyperParams(p.list("upper"), p.list("lower"), z(), un))
        .str();
  }
  if (fn == "2f1-paren") {
    return fh::trunc_2F1_paren(p.rational("a"), p.rational("b"), p.rational("c"), z(), un).str();
  }
  if (fn == "1f0-closed") return fh::t1F0_closed_form(p.rational("a"), z(), un).str();
  if (fn == "thg-int-rhs") {
    return fh::tHG_int_rhs(p.rational("a"), p.rational("b"), p.rational("c"), z(), un).str();
  }
  if (fn == "pfq-at-1") {
    return fh::terminating_pFq_at_1(p.list("upper"), p.list("lower")).str();
  }
  if (fn == "mzv") return fh::truncated_mzv(fh::Index::parse(p.text("k")), n).str();
  if (fn == "msw-rhs") return fh::msw_rhs(fh::Index::parse(p.text("k")), n).str();
  if (fn == "mpl") return fh::truncated_mpl(fh::Index::parse(p.text("k")), z(), n).str();
  if (fn == "zeta") return fh::truncated_zeta(p.integer("k"), n).str();
  if (fn == "tilde-zeta") {
    return fh::tilde_zeta(fh::Index::parse(p.text("k")), p.integer("l"), n).str();
  }
  if (fn == "ak") {
    return fh::arakawa_kaneko_truncated(fh::Index::parse(p.text("k")), p.integer("l"),
                                        static_cast<std::uint64_t>(n))
        .str();
  }
  if (fn == "phi0-direct" || fn == "phi0-product" || fn == "phi0-closed") {
    const auto cfg = (z_text && *z_text == "special") ? fh::GenFunConfig::special(n, degree)
                                                      : fh::GenFunConfig::numeric(n, z(), degree);
    if (fn == "phi0-direct") return fh::render(fh::phi0_direct(cfg));
    if (fn == "phi0-product") return fh::render(fh::phi0_product_form(cfg));
    return fh::render(fh::phi0_closed_form(cfg));
  }
  if (fn == "prop54") {
    const auto s = fh::prop54_sides(p.integer("k"), p.integer("q"), p.integer("h"), n);
    return s.lhs.str() + " " + s.rhs.str();
  }
  if (fn == "reconstruct-p") {
    return fh::reconstruct_P(p.integer("k"), p.integer("q"), p.integer("h")).str();
  }
  throw fh::ConfigError("unknown function: " + fn);
}

std::vector<double> parse_grid(const std::vector<std::string>& items) {
  std::vector<double> out;
  for (const auto& s : items) {
    try {
      out.push_back(std::stod(s));
    } catch (const std::logic_error&) {
      throw fh::ConfigError("grid entries must be numbers: " + s);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of finite hypergeometric and multiple zeta identities"};
  app.require_subcommand(1);

  fh::RunConfig run;
  std::string format = "json";
  std::string out_path;
  double tol = 1e-2;
  std::vector<std::string> grid_text;

  auto* verify = app.add_subcommand("verify", "Check one identity from the catalog");
  std::string identity;
  verify->add_option("identity", identity, "Identity id")->required();
  int n_min = 0, n_max = 0, trials = 0, degree = 0, weight_max = 0;
  auto* o_nmin = verify->add_option("--n-min", n_min);
  auto* o_nmax = verify->add_option("--n-max", n_max);
  auto* o_trials = verify->add_option("--trials", trials);
  auto* o_degree = verify->add_option("--degree", degree);
  auto* o_weight = verify->add_option("--weight-max", weight_max);
  verify->add_option("--seed", run.seed);
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "md"}));
  verify->add_option("--tol", tol, "Unused for exact identities");
  verify->add_option("--out", out_path);
  verify->add_flag("--timing", run.timing, "Record elapsed milliseconds");
  verify->add_option("--bound-num", run.bounds.numerator, "Sampled numerators lie in [-B, B]");
  verify->add_option("--bound-den", run.bounds.denominator, "Sampled denominators lie in [1, B]");

  auto* eval = app.add_subcommand("eval", "Evaluate a single function exactly");
  std::string function;
  std::vector<std::string> params;
  int eval_n = 1;
  std::string eval_z;
  int eval_degree = 4;
  eval->add_option("function", function)->required();
  eval->add_option("--params", params, "key=value pairs; lists as comma-separated rationals");
  eval->add_option("--n", eval_n)->required();
  auto* o_z = eval->add_option("--z", eval_z, "p/q, or 'special' for N/(N-Y)");
  eval->add_option("--degree", eval_degree);

  auto* enumerate = app.add_subcommand("enumerate", "List an index set");
  std::string set_name;
  int ek = 0, eq = 0, er = 0, eh = 0;
  enumerate->set_help_flag("--help", "Print this help message and exit");
  enumerate->add_option("set", set_name)->required()->check(CLI::IsMember({"i0", "i0tilde"}));
  enumerate->add_option("--k", ek)->required();
  auto* o_q = enumerate->add_option("--q", eq);
  auto* o_r = enumerate->add_option("--r", er);
  enumerate->add_option("--h", eh)->required();

  auto* limits = app.add_subcommand("limits", "Floating-point limit checks");
  limits->add_option("--tol", tol);
  limits->add_option("--n-grid", grid_text);
  limits->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "md"}));
  limits->add_option("--out", out_path);

  auto* all = app.add_subcommand("all", "Run every identity and the limit suite");
  all->add_option("--seed", run.seed);
  all->add_option("--out", out_path);
  all->add_flag("--timing", run.timing);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*verify) {
      if (*o_nmin) run.n_min = n_min;
      if (*o_nmax) run.n_max = n_max;
      if (*o_trials) run.trials = trials;
      if (*o_degree) run.degree = degree;
      if (*o_weight) run.weight_max = weight_max;
      const auto reports = fh::run_identity(identity, run);
      write_output(fh::emit_report(reports, fh::parse_format(format)), out_path);
      return all_equal(reports) ? 0 : kExitMismatch;
    }
    if (*eval) {
      const ParamView view(parse_params(params));
      const std::optional<std::string> z = *o_z ? std::optional<std::string>(eval_z) : std::nullopt;
      std::cout << evaluate_function(function, view, eval_n, z, eval_degree) << '\n';
      return 0;
    }
    if (*enumerate) {
      if (set_name == "i0") {
        if (!*o_r) throw fh::ConfigError("i0 needs --r");
        for (const auto& idx : fh::enumerate_I0(ek, er, eh)) std::cout << idx.str() << '\n';
      } else {
        if (!*o_q) throw fh::ConfigError("i0tilde needs --q");
        for (const auto& e : fh::enumerate_I0_tilde(ek, eq, eh)) std::cout << e.str() << '\n';
      }
      return 0;
    }
    if (*limits) {
      const auto grid = grid_text.empty() ? fh::default_limit_grid() : parse_grid(grid_text);
      const auto results = fh::run_limits(grid, tol);
      write_output(fh::emit_limits(results, fh::parse_format(format)), out_path);
      return all_pass(results) ? 0 : kExitMismatch;
    }
    if (*all) {
      std::vector<fh::VerificationReport> reports;
      for (const auto& id : fh::identity_catalog()) {
        auto part = fh::run_identity(id, run);
        reports.insert(reports.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
      }
      const auto results = fh::run_limits(fh::default_limit_grid(), 1e-2);
      write_output(fh::emit_suite_json(reports, results), out_path);
      return all_equal(reports) && all_pass(results) ? 0 : kExitMismatch;
    }
  } catch (const fh::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
