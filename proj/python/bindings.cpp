#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "finitehyper/errors.hpp"
#include "finitehyper/harness.hpp"
#include "finitehyper/hyperfun.hpp"
#include "finitehyper/ozgen.hpp"
#include "finitehyper/polylog.hpp"

namespace py = pybind11;
namespace fh = finitehyper;

namespace pybind11::detail {

// Rational <-> fractions.Fraction. Accepts int, Fraction or "p/q" text.
template <>
struct type_caster<fh::Rational> {
  PYBIND11_TYPE_CASTER(fh::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    if (py::isinstance<py::str>(src)) {
      value = fh::Rational::parse(src.cast<std::string>());
      return true;
    }
    if (py::isinstance<py::float_>(src) || py::isinstance<py::bool_>(src)) return false;
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
    const std::string num = py::str(src.attr("numerator"));
    const std::string den = py::str(src.attr("denominator"));
    value = fh::Rational::parse(num + "/" + den);
    return true;
  }

  static handle cast(const fh::Rational& r, return_value_policy, handle) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.str()).release();
  }
};

}  // namespace pybind11::detail

namespace {

fh::Index to_index(const py::object& k) {
  if (py::isinstance<py::str>(k)) return fh::Index::parse(k.cast<std::string>());
  return fh::Index(k.cast<std::vector<int>>());
}

py::tuple sides(const fh::SidePair& s) { return py::make_tuple(s.lhs, s.rhs); }

py::dict series_dict(const fh::TruncatedSeries& s) {
  py::dict out;
  for (const auto& [m, c] : s.terms()) out[py::make_tuple(m.x, m.y, m.z)] = py::cast(c);
  return out;
}

fh::GenFunConfig gen_config(int n, const py::object& z, int degree) {
  if (z.is_none()) return fh::GenFunConfig::special(n, degree);
  return fh::GenFunConfig::numeric(n, z.cast<fh::Rational>(), degree);
}

py::dict report_dict(const fh::VerificationReport& r) {
  py::dict params;
  for (const auto& [k, v] : r.params) params[py::str(k)] = v;
  py::dict d;
  d["identity"] = r.identity;
  d["params"] = params;
  d["n"] = r.n;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["equal"] = r.equal;
  d["seed"] = r.seed;
  d["rejected"] = r.rejected;
  d["ms"] = r.ms;
  return d;
}

fh::RunConfig run_config(std::uint64_t seed, std::optional<int> n_min, std::optional<int> n_max,
                         std::optional<int> trials, std::optional<int> degree,
                         std::optional<int> weight_max) {
  fh::RunConfig cfg;
  cfg.seed = seed;
  cfg.n_min = n_min;
  cfg.n_max = n_max;
  cfg.trials = trials;
  cfg.degree = degree;
  cfg.weight_max = weight_max;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact evaluation of truncated hypergeometric and multiple zeta sums";

  auto error = py::register_exception<fh::Error>(m, "Error", PyExc_ArithmeticError);
  py::register_exception<fh::PoleError>(m, "PoleError", error);
  py::register_exception<fh::DivisionByZero>(m, "DivisionByZero", error);
  py::register_exception<fh::DegenerateArgument>(m, "DegenerateArgument", error);
  py::register_exception<fh::NotTerminating>(m, "NotTerminating", error);
  py::register_exception<fh::DivisionFailure>(m, "DivisionFailure", error);
  py::register_exception<fh::UnderdeterminedSystem>(m, "UnderdeterminedSystem", error);
  py::register_exception<fh::UnknownIdentity>(m, "UnknownIdentity", error);
  py::register_exception<fh::ConfigError>(m, "ConfigError", error);
  py::register_exception<fh::PoleExhaustion>(m, "PoleExhaustion", error);

  using R = fh::Rational;
  using Vec = std::vector<R>;
  using py::arg;

  m.def("rising_factorial", &fh::rising_factorial, arg("a"), arg("m"));

  m.def("truncated_beta", [](const R& a, const R& b, unsigned n) {
    return fh::truncated_beta({a, b, n});
  }, arg("a"), arg("b"), arg("n"));
  m.def("disc_beta_sum", [](const R& a, const R& b, unsigned n) {
    return fh::disc_beta_sum({a, b, n});
  }, arg("a"), arg("b"), arg("n"));
  m.def("multivariate_disc_beta", [](const Vec& a, unsigned n) {
    return sides(fh::multivariate_disc_beta(a, n));
  }, arg("a"), arg("n"));
  m.def("trunc_pfq_bracket", [](const Vec& upper, const Vec& lower, const R& z, unsigned n) {
    return fh::trunc_pFq_bracket(fh::HyperParams(upper, lower, z, n));
  }, arg("upper"), arg("lower"), arg("z"), arg("n"));
  m.def("trunc_2f1_paren", &fh::trunc_2F1_paren, arg("a"), arg("b"), arg("c"), arg("z"), arg("n"));
  m.def("terminating_pfq_at_1", [](const Vec& upper, const Vec& lower) {
    return fh::terminating_pFq_at_1(upper, lower);
  }, arg("upper"), arg("lower"));
  m.def("t1f0_closed_form", &fh::t1F0_closed_form, arg("a"), arg("z"), arg("n"));
  m.def("thg_int_rhs", &fh::tHG_int_rhs, arg("a"), arg("b"), arg("c"), arg("z"), arg("n"));
  m.def("gen_thg_int_rhs", [](const R& a, const Vec& up, const Vec& low, const R& b, const R& z,
                              unsigned n) { return fh::gen_tHG_int_rhs(a, up, low, b, z, n); },
        arg("a"), arg("inner_upper"), arg("inner_lower"), arg("b"), arg("z"), arg("n"));
  m.def("chain_sum_pfp", [](const Vec& upper, const Vec& lower, unsigned n) {
    return fh::chain_sum_pFp(upper, lower, n);
  }, arg("upper"), arg("lower"), arg("n"));
  m.def("finite_gauss_sides", [](const R& a, const R& b, const R& c, unsigned n) {
    return sides(fh::finite_gauss_sides(a, b, c, n));
  }, arg("a"), arg("b"), arg("c"), arg("n"));
  m.def("finite_pfaff_sides", [](const R& a, const R& b, const R& c, const R& z, unsigned n) {
    return sides(fh::finite_pfaff_sides(a, b, c, z, n));
  }, arg("a"), arg("b"), arg("c"), arg("z"), arg("n"));
  m.def("finite_euler_sides", [](const R& a, const R& b, const R& c, const R& z, unsigned n) {
    return sides(fh::finite_euler_sides(a, b, c, z, n));
  }, arg("a"), arg("b"), arg("c"), arg("z"), arg("n"));

  m.def("truncated_zeta", &fh::truncated_zeta, arg("k"), arg("n"));
  m.def("truncated_mzv", [](const py::object& k, int n) {
    return fh::truncated_mzv(to_index(k), n);
  }, arg("k"), arg("n"));
  m.def("msw_rhs", [](const py::object& k, int n) { return fh::msw_rhs(to_index(k), n); },
        arg("k"), arg("n"));
  m.def("truncated_mpl", [](const py::object& k, const R& z, int n) {
    return fh::truncated_mpl(to_index(k), z, n);
  }, arg("k"), arg("z"), arg("n"));
  m.def("hms_sides", [](const py::object& k, const Vec& x, int n) {
    const auto idx = to_index(k);
    return py::make_tuple(fh::hms_lhs(idx, x, n), fh::hms_rhs(idx, x, n));
  }, arg("k"), arg("x"), arg("n"));
  m.def("tilde_zeta", [](const py::object& k, int l, int n) {
    return fh::tilde_zeta(to_index(k), l, n);
  }, arg("k"), arg("l"), arg("n"));
  m.def("enumerate_i0", [](int k, int r, int h) {
    std::vector<std::string> out;
    for (const auto& idx : fh::enumerate_I0(k, r, h)) out.push_back(idx.str());
    return out;
  }, arg("k"), arg("r"), arg("h"));
  m.def("enumerate_i0_tilde", [](int k, int q, int h) {
    std::vector<std::string> out;
    for (const auto& e : fh::enumerate_I0_tilde(k, q, h)) out.push_back(e.str());
    return out;
  }, arg("k"), arg("q"), arg("h"));
  m.def("arakawa_kaneko_truncated", [](const py::object& k, int l, std::uint64_t p) {
    return fh::arakawa_kaneko_truncated(to_index(k), l, p);
  }, arg("k"), arg("l"), arg("p"));
  m.def("ak_congruence_sides", [](const py::object& k, int l, std::uint64_t p) {
    const auto [a, b] = fh::ak_congruence_sides(to_index(k), l, p);
    return py::make_tuple(a.value(), b.value());
  }, arg("k"), arg("l"), arg("p"));

  // z=None selects the symbolic argument N/(N-Y).
  m.def("phi0", [](int n, const py::object& z, int degree, const std::string& method) {
    const auto cfg = gen_config(n, z, degree);
    if (method == "direct") return series_dict(fh::phi0_direct(cfg));
    if (method == "product") return series_dict(fh::phi0_product_form(cfg));
    if (method == "closed") return series_dict(fh::phi0_closed_form(cfg));
    throw fh::ConfigError("method must be direct, product or closed");
  }, arg("n"), arg("z"), arg("degree"), arg("method") = "direct");
  m.def("divisibility_check", [](int n, const R& z, int degree) {
    return fh::divisibility_check(fh::GenFunConfig::numeric(n, z, degree));
  }, arg("n"), arg("z"), arg("degree"));
  m.def("toz_special_sides", [](int n, int degree) {
    const auto s = fh::tOZ_special_sides(n, degree);
    return py::make_tuple(series_dict(s.direct), series_dict(s.gamma_product),
                          series_dict(s.exp_form));
  }, arg("n"), arg("degree"));
  m.def("prop54_sides", [](int k, int q, int h, int n) {
    return sides(fh::prop54_sides(k, q, h, n));
  }, arg("k"), arg("q"), arg("h"), arg("n"));
  m.def("symmetry_check", [](int k, int q, int h, int n) {
    return sides(fh::symmetry_check(k, q, h, n));
  }, arg("k"), arg("q"), arg("h"), arg("n"));
  m.def("reconstruct_p", [](int k, int q, int h) { return fh::reconstruct_P(k, q, h).str(); },
        arg("k"), arg("q"), arg("h"));

  m.def("identity_catalog", &fh::identity_catalog);
  m.def("run_identity", [](const std::string& id, std::uint64_t seed, std::optional<int> n_min,
                           std::optional<int> n_max, std::optional<int> trials,
                           std::optional<int> degree, std::optional<int> weight_max) {
    py::list out;
    for (const auto& r : fh::run_identity(id, run_config(seed, n_min, n_max, trials, degree,
                                                         weight_max))) {
      out.append(report_dict(r));
    }
    return out;
  }, arg("identity"), arg("seed") = 42, arg("n_min") = py::none(), arg("n_max") = py::none(),
     arg("trials") = py::none(), arg("degree") = py::none(), arg("weight_max") = py::none());
  m.def("verify_report", [](const std::string& id, const std::string& format, std::uint64_t seed) {
    return fh::emit_report(fh::run_identity(id, run_config(seed, {}, {}, {}, {}, {})),
                           fh::parse_format(format));
  }, arg("identity"), arg("format") = "json", arg("seed") = 42);
  m.def("run_limits", [](const std::vector<double>& grid, double tol) {
    py::list out;
    for (const auto& l : fh::run_limits(grid, tol)) {
      py::dict d;
      d["limit"] = l.limit_id;
      py::dict params;
      for (const auto& [k, v] : l.params) params[py::str(k)] = v;
      d["params"] = params;
      d["target"] = l.limit;
      d["errors"] = [&] {
        std::vector<double> e;
        for (const auto& p : l.points) e.push_back(p.error);
        return e;
      }();
      d["pass"] = l.pass;
      out.append(d);
    }
    return out;
  }, arg("grid") = fh::default_limit_grid(), arg("tol") = 1e-2);
}
