#include <functional>
#include <random>
#include <vector>

#include "doctest.h"
#include "finitehyper/hyperfun.hpp"

using namespace finitehyper;
using R = Rational;
using Vec = std::vector<Rational>;

namespace {

R rf(const R& a, unsigned m) {
  R r(1);
  for (unsigned j = 0; j < m; ++j) r *= a + R(static_cast<long>(j));
  return r;
}

R fact(unsigned m) { return rf(R(1), m); }

R q(unsigned v) { return R(static_cast<long>(v)); }

// Direct sum for a terminating series at 1, stopping at `terms`.
R pfq_at_1_oracle(const Vec& up, const Vec& lo, unsigned terms) {
  R sum;
  for (unsigned m = 0; m <= terms; ++m) {
    R t(1);
    for (const auto& a : up) t *= rf(a, m);
    for (const auto& b : lo) t /= rf(b, m);
    sum += t / fact(m);
  }
  return sum;
}

// The [N] truncation written as a terminating series at 1 with an extra
// pair (-N; 1 - N/z); independent of the library's summation.
R bracket_oracle(const Vec& up, const Vec& lo, const R& z, unsigned n) {
  Vec u = up;
  u.push_back(-q(n));
  Vec l = lo;
  l.push_back(R(1) - q(n) / z);
  return pfq_at_1_oracle(u, l, n);
}

// Brute-force sum over chains 0 = n_0 <= n_1 <= ... <= n_p = N.
R chain_oracle(const Vec& a, const Vec& b, unsigned n) {
  const std::size_t p = a.size();
  std::vector<unsigned> chain(p + 1, 0);
  R total;
  std::function<void(std::size_t)> walk = [&](std::size_t j) {
    if (j == p) {
      if (chain[p] != n) return;
      R t(1);
      for (std::size_t i = 1; i <= p; ++i) {
        const unsigned hi = chain[i], lo = chain[i - 1];
        t *= R(binomial(hi, lo)) * rf(a[i - 1], lo) * rf(b[i - 1] - a[i - 1], hi - lo) /
             rf(b[i - 1], hi);
      }
      total += t;
      return;
    }
    for (unsigned v = chain[j]; v <= n; ++v) {
      chain[j + 1] = v;
      walk(j + 1);
    }
  };
  walk(0);
  return total;
}

// Brute-force sum over compositions n_1 + ... + n_d = N.
R multivariate_oracle(const Vec& a, unsigned n) {
  const std::size_t d = a.size();
  std::vector<unsigned> parts(d, 0);
  R total;
  std::function<void(std::size_t, unsigned)> walk = [&](std::size_t i, unsigned left) {
    if (i + 1 == d) {
      parts[i] = left;
      R t(1);
      for (std::size_t j = 0; j < d; ++j) {
        // (1+n_j)_{N-n_j} / (a_j+n_j)_{N-n_j}
        t *= rf(R(1) + q(parts[j]), n - parts[j]) / rf(a[j] + q(parts[j]), n - parts[j]);
      }
      total += t;
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      parts[i] = v;
      walk(i + 1, left - v);
    }
  };
  walk(0, n);
  R scale(1);
  for (std::size_t j = 1; j < d; ++j) scale *= q(n);
  return total / scale;
}

std::vector<R> small_rationals() {
  return {R(1, 2), R(-3, 2), R(2, 3), R(5, 4), R(-7, 3), R(3), R(1, 5)};
}

}  // namespace

TEST_CASE("truncated beta examples") {
  CHECK(truncated_beta({R(1, 2), R(1, 2), 1}) == R(4));
  CHECK(truncated_beta({R(1), R(1), 2}) == R(3, 2));
  CHECK_THROWS_AS(truncated_beta({R(-1), R(1), 2}), PoleError);
  CHECK(disc_beta_sum({R(1), R(1), 2}) == R(3, 2));
  CHECK(disc_beta_sum({R(1, 2), R(1, 2), 1}) == R(4));
}

TEST_CASE("truncated beta equals its discretized sum") {
  for (const auto& a : small_rationals()) {
    for (const auto& b : small_rationals()) {
      for (unsigned n = 1; n <= 8; ++n) {
        const BetaParams p{a, b, n};
        const R closed = rf(a + b, n) * fact(n - 1) / (rf(a, n) * rf(b, n));
        CHECK(truncated_beta(p) == closed);
        CHECK(disc_beta_sum(p) == closed);
      }
    }
  }
}

TEST_CASE("multivariate discretized beta") {
  const auto s = multivariate_disc_beta(Vec{R(1), R(1), R(1)}, 1);
  CHECK(s.lhs == R(3));
  CHECK(s.rhs == R(3));
  const Vec halfs{R(1, 2), R(1, 2), R(1)};
  const auto t = multivariate_disc_beta(halfs, 2);
  CHECK(t.equal());
  CHECK(t.rhs == multivariate_oracle(halfs, 2));
  const std::vector<Vec> cases{{R(2, 3), R(-5, 2)}, {R(1, 3), R(7, 4), R(-1, 2)},
                               {R(3, 2), R(1, 7), R(5), R(-9, 4)}};
  for (const auto& a : cases) {
    for (unsigned n = 1; n <= 6; ++n) {
      const auto r = multivariate_disc_beta(a, n);
      CHECK(r.rhs == multivariate_oracle(a, n));
      CHECK(r.equal());
    }
  }
  // d = 2 is the plain truncated beta.
  const auto two = multivariate_disc_beta(Vec{R(2, 3), R(5, 4)}, 5);
  CHECK(two.lhs == truncated_beta({R(2, 3), R(5, 4), 5}));
  CHECK_THROWS_AS(multivariate_disc_beta(Vec{R(1)}, 2), ConfigError);
}

TEST_CASE("bracket truncation examples") {
  CHECK(trunc_pFq_bracket(HyperParams({R(3)}, {R(5)}, R(7), 0)) == R(1));
  CHECK(trunc_pFq_bracket(HyperParams({R(1)}, {}, R(1, 2), 2)) == R(2));
  CHECK(trunc_pFq_bracket(HyperParams({R(1, 2), R(1)}, {R(2)}, R(1, 2), 1)) == R(5, 4));
  CHECK_THROWS_AS(HyperParams({R(1)}, {}, R(0), 2), DegenerateArgument);
  CHECK_THROWS_AS(trunc_pFq_bracket(HyperParams({R(1)}, {R(-1)}, R(1, 2), 3)), PoleError);
  // w = N/z = 2 lies in {1..N}.
  CHECK_THROWS_AS(trunc_pFq_bracket(HyperParams({R(1)}, {}, R(3, 2), 3)), PoleError);
  CHECK_FALSE(HyperParams({R(1)}, {}, R(3, 2), 3).well_posed());
  CHECK(HyperParams({R(1)}, {}, R(1, 2), 3).well_posed());
}

TEST_CASE("bracket truncation against the terminating-series oracle") {
  const auto xs = small_rationals();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (unsigned n = 1; n <= 7; ++n) {
      const Vec up{xs[i], xs[(i + 2) % xs.size()]};
      const Vec lo{xs[(i + 4) % xs.size()]};
      const R z = xs[(i + 1) % xs.size()];
      const HyperParams p(up, lo, z, n);
      if (!p.well_posed()) continue;
      CHECK(trunc_pFq_bracket(p) == bracket_oracle(up, lo, z, n));
    }
  }
}

TEST_CASE("paren truncation is the bracket truncation at N-1") {
  CHECK(trunc_2F1_paren(R(3), R(4), R(5), R(2), 1) == R(1));
  CHECK(trunc_2F1_paren(R(1, 2), R(1, 2), R(1), R(1, 2), 2) == R(13, 12));
  CHECK(trunc_pFq_bracket(HyperParams({R(1, 2), R(1, 2)}, {R(1)}, R(1, 4), 1)) == R(13, 12));
  for (const auto& a : small_rationals()) {
    for (unsigned n = 2; n <= 7; ++n) {
      const R b(2, 7), c(9, 4), z(-5, 3);
      const R zp = q(n - 1) * z / q(n);
      CHECK(trunc_2F1_paren(a, b, c, z, n) ==
            trunc_pFq_bracket(HyperParams({a, b}, {c}, zp, n - 1)));
    }
  }
}

TEST_CASE("terminating series at 1") {
  CHECK(terminating_pFq_at_1(Vec{R(0), R(3)}, Vec{R(2)}) == R(1));
  CHECK_THROWS_AS(terminating_pFq_at_1(Vec{R(1, 2)}, Vec{R(2)}), NotTerminating);
  // Chu-Vandermonde: 2F1(a, -N; b; 1) = (b-a)_N/(b)_N.
  for (const auto& a : small_rationals()) {
    for (unsigned n = 0; n <= 8; ++n) {
      const R b(11, 3);
      CHECK(terminating_pFq_at_1(Vec{a, -q(n)}, Vec{b}) == rf(b - a, n) / rf(b, n));
    }
  }
  // 3F2(a, b, -N; c, 1 - N/z; 1) is the bracket truncation.
  const R a(1, 3), b(-5, 2), c(7, 4), z(3, 5);
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(terminating_pFq_at_1(Vec{a, b, -q(n)}, Vec{c, R(1) - q(n) / z}) ==
          trunc_pFq_bracket(HyperParams({a, b}, {c}, z, n)));
  }
}

TEST_CASE("1F0 closed form") {
  CHECK(t1F0_closed_form(R(1), R(1, 2), 2) == R(2));
  CHECK(t1F0_closed_form(R(5, 3), R(7), 0) == R(1));
  for (const auto& z : small_rationals()) {
    for (unsigned n = 1; n <= 9; ++n) {
      const R a(-4, 7);
      const HyperParams p({a}, {}, z, n);
      if (!p.well_posed()) {
        // (w-N)_N vanishes whenever N/z is one of 1..N.
        CHECK_THROWS_AS(t1F0_closed_form(R(0), z, n), PoleError);
        continue;
      }
      CHECK(t1F0_closed_form(R(0), z, n) == R(1));
      CHECK(t1F0_closed_form(a, z, n) == trunc_pFq_bracket(p));
      CHECK(t1F0_closed_form(a, z, n) == bracket_oracle({a}, {}, z, n));
    }
  }
}

TEST_CASE("discretized integral for the generalized family") {
  CHECK(gen_tHG_int_rhs(R(3), {}, {}, R(5), R(2), 0) == R(1));
  // (p,q) = (0,0) with a=1, b=2, z=1, N=1: w = 1 puts both sides on a pole.
  CHECK_THROWS_AS(trunc_pFq_bracket(HyperParams({R(1)}, {R(2)}, R(1), 1)), PoleError);
  CHECK_THROWS_AS(gen_tHG_int_rhs(R(1), {}, {}, R(2), R(1), 1), PoleError);
  const Vec inner_up{R(2, 3), R(-1, 4)};
  const Vec inner_lo{R(5, 2)};
  for (std::size_t p = 0; p <= 2; ++p) {
    for (std::size_t qn = 0; qn <= 1; ++qn) {
      const Vec up(inner_up.begin(), inner_up.begin() + static_cast<long>(p));
      const Vec lo(inner_lo.begin(), inner_lo.begin() + static_cast<long>(qn));
      for (unsigned n = 1; n <= 6; ++n) {
        const R a(3, 4), b(-7, 5), z(2, 9);
        Vec outer_up{a};
        outer_up.insert(outer_up.end(), up.begin(), up.end());
        Vec outer_lo{b};
        outer_lo.insert(outer_lo.end(), lo.begin(), lo.end());
        CHECK(gen_tHG_int_rhs(a, up, lo, b, z, n) == bracket_oracle(outer_up, outer_lo, z, n));
      }
    }
  }
}

TEST_CASE("discretized integral for 2F1") {
  CHECK(tHG_int_rhs(R(1, 2), R(1), R(2), R(1, 2), 1) == R(5, 4));
  CHECK(tHG_int_rhs(R(1, 3), R(1), R(2), R(1, 2), 0) == R(1));
  for (const auto& a : small_rationals()) {
    for (unsigned n = 1; n <= 8; ++n) {
      const R b(5, 6), c(13, 3), z(-3, 7);
      CHECK(tHG_int_rhs(a, b, c, z, n) == bracket_oracle({a, b}, {c}, z, n));
      CHECK(tHG_int_rhs(a, b, c, z, n) == gen_tHG_int_rhs(a, Vec{b}, Vec{}, c, z, n));
    }
  }
}

TEST_CASE("chain sums") {
  CHECK(chain_sum_pFp(Vec{R(3)}, Vec{R(4)}, 0) == R(1));
  for (unsigned n = 0; n <= 6; ++n) {
    const R a(2, 5), b(-7, 3);
    CHECK(chain_sum_pFp(Vec{a}, Vec{b}, n) == rf(b - a, n) / rf(b, n));
  }
  const std::vector<std::pair<Vec, Vec>> cases{
      {{R(1, 2), R(-3, 4)}, {R(5, 3), R(7, 2)}},
      {{R(2), R(1, 3), R(-5, 2)}, {R(9, 4), R(-1, 3), R(11, 5)}}};
  for (const auto& [a, b] : cases) {
    for (unsigned n = 0; n <= 6; ++n) {
      Vec up = a;
      up.push_back(-q(n));
      CHECK(chain_sum_pFp(a, b, n) == chain_oracle(a, b, n));
      CHECK(chain_sum_pFp(a, b, n) == pfq_at_1_oracle(up, b, n));
    }
  }
}

TEST_CASE("3F2 transformation") {
  const R a(1, 3), b(5, 2), d(-7, 4), e(2, 9);
  for (unsigned n = 1; n <= 7; ++n) {
    const auto s = transform_3F2_sides(a, b, d, e, n);
    CHECK(s.lhs == pfq_at_1_oracle({a, b, -q(n)}, {d, e}, n));
    CHECK(s.equal());
  }
}

TEST_CASE("finite Gauss sum") {
  const auto s = finite_gauss_sides(R(1, 2), R(1, 2), R(2), 1);
  CHECK(s.lhs == R(9, 8));
  CHECK(s.rhs == R(9, 8));
  for (unsigned n = 0; n <= 6; ++n) {
    const auto t = finite_gauss_sides(R(0), R(3, 7), R(5, 2), n);
    CHECK(t.lhs == R(1));
    CHECK(t.rhs == R(1));
  }
  for (const auto& a : small_rationals()) {
    for (unsigned n = 1; n <= 7; ++n) {
      const R b(-2, 9), c(17, 4);
      const auto t = finite_gauss_sides(a, b, c, n);
      CHECK(t.equal());
      CHECK(t.rhs == rf(c - a, n) * rf(c - b, n) / (rf(c, n) * rf(c - a - b, n)));
    }
  }
}

TEST_CASE("finite Pfaff and Euler transformations") {
  const auto s = finite_pfaff_sides(R(1, 2), R(1, 2), R(1), R(1, 2), 1);
  CHECK(s.lhs == R(5, 4));
  CHECK(s.rhs == R(5, 4));
  const auto zero_b = finite_pfaff_sides(R(2, 3), R(0), R(7, 2), R(-4, 5), 5);
  CHECK(zero_b.lhs == R(1));
  CHECK(zero_b.rhs == R(1));
  const auto empty = finite_euler_sides(R(2, 3), R(1, 9), R(7, 2), R(-4, 5), 0);
  CHECK(empty.lhs == R(1));
  CHECK(empty.rhs == R(1));
  for (const auto& a : small_rationals()) {
    for (unsigned n = 1; n <= 7; ++n) {
      const R b(4, 11), c(-13, 6), z(5, 8);
      const auto p = finite_pfaff_sides(a, b, c, z, n);
      CHECK(p.equal());
      CHECK(p.lhs == bracket_oracle({a, b}, {c}, z, n));
      CHECK(finite_euler_sides(a, b, c, z, n).equal());
    }
  }
  // a = c: the left side is a 1F0 truncation.
  const auto ac = finite_euler_sides(R(3, 4), R(2, 5), R(3, 4), R(1, 3), 5);
  CHECK(ac.lhs == t1F0_closed_form(R(2, 5), R(1, 3), 5));
  CHECK(ac.equal());
}

TEST_CASE("degenerate transformed arguments") {
  // N + c - a - b = 0.
  CHECK_THROWS_AS(finite_gauss_sides(R(2), R(1), R(1), 2), DegenerateArgument);
  // w + a + b - c = 0 with w = 2.
  CHECK_THROWS_AS(finite_euler_sides(R(1), R(1), R(4), R(1), 2), DegenerateArgument);
}
