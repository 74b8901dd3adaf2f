// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "finitehyper/harness.hpp"
#include "finitehyper/hyperfun.hpp"
#include "finitehyper/ozgen.hpp"
#include "finitehyper/polylog.hpp"

namespace fh = finitehyper;
using fh::Rational;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

using Reports = std::vector<fh::VerificationReport>;

Reports run(const std::string& id) { return fh::run_identity(id, {}); }

std::size_t failures(const Reports& rs) {
  std::size_t bad = 0;
  for (const auto& r : rs) bad += !r.equal;
  return bad;
}

// Every report equal and at least `min_count` of them.
void check_all_equal(Outcome& out, const std::string& id, const Reports& rs,
                     std::size_t min_count) {
  out.require(failures(rs) == 0, id + ": " + std::to_string(failures(rs)) + " mismatches");
  out.require(rs.size() >= min_count, id + ": only " + std::to_string(rs.size()) + " reports");
}

std::string param(const fh::VerificationReport& r, const std::string& key) {
  for (const auto& [k, v] : r.params) {
    if (k == key) return v;
  }
  return {};
}

int max_n(const Reports& rs) {
  int m = 0;
  for (const auto& r : rs) m = std::max(m, r.n);
  return m;
}

int failed = 0;

void criterion(int number, const std::string& title, double limit_s,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "took %.2f s, limit %.0f s", secs, limit_s);
    out.require(secs < limit_s, buf);
  }
  std::printf("[%s] %2d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", number, title.c_str(), secs,
              out.detail.empty() ? "" : " : ", out.detail.c_str());
  std::fflush(stdout);
  failed += !out.ok;
}

}  // namespace

int main() {
  criterion(1, "truncated MZV equals the MSW sum, all indices of weight <= 6, N <= 12", 30,
            [](Outcome& out) {
              const auto rs = run("msw");
              // 2^6 - 1 compositions of weight 1..6, twelve N each.
              check_all_equal(out, "msw", rs, 63 * 12);
              out.require(max_n(rs) == 12, "N range");
            });

  criterion(2, "HMS identity, weight <= 4, N <= 8, 20 random x per index", 60,
            [](Outcome& out) {
              const auto rs = run("hms");
              check_all_equal(out, "hms", rs, 15 * 8 * 20);
              out.require(max_n(rs) == 8, "N range");
            });

  criterion(3, "truncated beta against the discretized sum, one and several variables", 0,
            [](Outcome& out) {
              const auto one = run("disc-beta");
              check_all_equal(out, "disc-beta", one, 100);
              out.require(max_n(one) <= 20, "N range");
              const auto many = run("multivar-beta");
              std::map<std::string, int> per_d;
              for (const auto& r : many) ++per_d[param(r, "d")];
              out.require(per_d.size() == 3, "d in {2,3,4}");
              check_all_equal(out, "multivar-beta", many, 3);
              out.require(max_n(many) <= 8, "N range");
            });

  criterion(4, "1F0 closed form and the discretized integral representations", 0,
            [](Outcome& out) {
              check_all_equal(out, "t1f0", run("t1f0"), 50);
              const auto gen = run("gen-thg-int");
              std::map<std::string, int> per_shape;
              for (const auto& r : gen) ++per_shape[param(r, "p") + "," + param(r, "q")];
              out.require(per_shape.size() == 4, "four (p,q) shapes");
              for (const auto& [shape, count] : per_shape) {
                out.require(count >= 50, "shape " + shape + " has fewer than 50 trials");
              }
              check_all_equal(out, "gen-thg-int", gen, 200);
              out.require(max_n(gen) <= 10, "N range");
              const auto thg = run("thg-int");
              check_all_equal(out, "thg-int", thg, 50);
              out.require(max_n(thg) <= 15, "N range");
              const Rational a(1, 2), b(1), c(2), z(1, 2);
              const Rational rhs = fh::tHG_int_rhs(a, b, c, z, 1);
              const Rational lhs = fh::trunc_pFq_bracket(fh::HyperParams({a, b}, {c}, z, 1));
              out.require(lhs == Rational(5, 4) && rhs == Rational(5, 4),
                          "instance gives " + lhs.str() + ", " + rhs.str());
            });

  criterion(5, "finite Gauss, Pfaff, Euler, 3F2 transformation and chain sums", 0,
            [](Outcome& out) {
              for (const char* id :
                   {"finite-gauss", "finite-pfaff", "finite-euler", "3f2-transform", "chain-sum"}) {
                const auto rs = run(id);
                check_all_equal(out, id, rs, 50);
                out.require(max_n(rs) <= 10, std::string(id) + " N range");
              }
              const auto g = fh::finite_gauss_sides(Rational(1, 2), Rational(1, 2), Rational(2), 1);
              out.require(g.lhs == Rational(9, 8) && g.rhs == Rational(9, 8),
                          "Gauss instance gives " + g.lhs.str() + ", " + g.rhs.str());
              const auto p = fh::finite_pfaff_sides(Rational(1, 2), Rational(1, 2), Rational(1),
                                                    Rational(1, 2), 1);
              out.require(p.lhs == Rational(5, 4) && p.rhs == Rational(5, 4),
                          "Pfaff instance gives " + p.lhs.str() + ", " + p.rhs.str());
            });

  criterion(6, "three routes to the generating function agree, N 2..6, D = 6", 120,
            [](Outcome& out) {
              const auto rs = run("toz-threeway");
              std::map<std::string, int> per_z;
              for (const auto& r : rs) ++per_z[param(r, "z")];
              out.require(per_z.size() == 4, "four z values");
              check_all_equal(out, "toz-threeway", rs, 4 * 5);
              for (const auto& z : {Rational(1, 2), Rational(1, 3), Rational(3, 4)}) {
                for (int n = 2; n <= 6; ++n) {
                  const auto cfg = fh::GenFunConfig::numeric(n, z, 6);
                  out.require(fh::divisibility_check(cfg), "divisibility at " + z.str());
                }
              }
            });

  criterion(7, "three expressions at z = N/(N-Y), N 2..6, D = 6", 0, [](Outcome& out) {
    check_all_equal(out, "toz-special", run("toz-special"), 5);
    for (int n = 2; n <= 6; ++n) {
      const auto s = fh::tOZ_special_sides(n, 6);
      out.require(s.direct == s.gamma_product && s.gamma_product == s.exp_form,
                  "sides differ at N=" + std::to_string(n));
      out.require(s.direct.constant_term() == fh::truncated_zeta(2, n),
                  "constant term at N=" + std::to_string(n));
    }
    out.require(fh::tOZ_special_sides(3, 6).direct.constant_term() == Rational(5, 4),
                "constant term 5/4 at N=3");
  });

  criterion(8, "coefficient identity (k <= 7, N <= 6) and q <-> k-q symmetry (N <= 8)", 0,
            [](Outcome& out) {
              const auto coeff = run("prop54");
              check_all_equal(out, "prop54", coeff, 1);
              out.require(max_n(coeff) == 6, "prop54 N range");
              const auto sym = run("symmetry");
              check_all_equal(out, "symmetry", sym, 1);
              out.require(max_n(sym) == 8, "symmetry N range");
              const auto a = fh::prop54_sides(3, 1, 1, 3);
              const auto b = fh::prop54_sides(3, 2, 1, 3);
              out.require(a.lhs == Rational(9, 8) && a.rhs == Rational(9, 8), "(3,1,1) at N=3");
              out.require(b.lhs == Rational(9, 8) && b.rhs == Rational(9, 8), "(3,2,1) at N=3");
            });

  criterion(9, "N-independent polynomials P_{k,q,h}, k <= 6, checked at N 2..8", 0,
            [](Outcome& out) {
              const auto rs = run("reconstruct-p");
              check_all_equal(out, "reconstruct-p", rs, 1);
              std::map<int, int> per_n;
              for (const auto& r : rs) ++per_n[r.n];
              for (int n = 2; n <= 8; ++n) out.require(per_n[n] > 0, "no check at N=" + std::to_string(n));
              const auto p = fh::reconstruct_P(2, 1, 1).str();
              out.require(p == "Z2", "P_{2,1,1} = " + p);
            });

  criterion(10, "Arakawa-Kaneko congruence, weight <= 4, l <= 3, p in {5,7,11,13}", 0,
            [](Outcome& out) {
              const auto rs = run("ak-congruence");
              // The prime is reported in the n field.
              std::map<int, int> per_p;
              for (const auto& r : rs) ++per_p[r.n];
              for (int p : {5, 7, 11, 13}) {
                out.require(per_p[p] > 0, "no checks at p=" + std::to_string(p));
              }
              check_all_equal(out, "ak-congruence", rs, 1);
              const auto [l, r] = fh::ak_congruence_sides(fh::Index({1}), 2, 5);
              out.require(l.value() == 1 && r.value() == 1,
                          "((1); 2; 5) gives " + l.str() + ", " + r.str());
            });

  criterion(11, "limits within 1e-2 at N = 1e4, non-increasing over 1e2, 1e3, 1e4", 5,
            [](Outcome& out) {
              const auto limits = fh::run_limits(fh::default_limit_grid(), 1e-2);
              out.require(!limits.empty(), "empty limit suite");
              for (const auto& l : limits) out.require(l.pass, l.limit_id + " failed");
            });

  criterion(12, "two full runs with seed 42 give byte-identical JSON", 0, [](Outcome& out) {
    auto suite = [] {
      fh::RunConfig cfg;
      cfg.seed = 42;
      Reports all;
      for (const auto& id : fh::identity_catalog()) {
        auto part = fh::run_identity(id, cfg);
        all.insert(all.end(), part.begin(), part.end());
      }
      return fh::emit_suite_json(all, fh::run_limits(fh::default_limit_grid(), 1e-2));
    };
    const std::string first = suite();
    const std::string second = suite();
    out.require(first.size() > 2, "empty suite output");
    out.require(first == second, "outputs differ");
  });

  std::printf("%s: %d criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
