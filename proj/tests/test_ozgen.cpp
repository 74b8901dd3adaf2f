#include <functional>
#include <vector>

#include "doctest.h"
#include "finitehyper/ozgen.hpp"
#include "finitehyper/polylog.hpp"

using namespace finitehyper;
using R = Rational;
using S = TruncatedSeries;

namespace {

R rf(const R& a, long m) {
  R r(1);
  for (long j = 0; j < m; ++j) r *= a + R(j);
  return r;
}

// Brute-force truncated polylog sum over every composition of weight k with
// the given depth and height.
R g0_oracle(int k, int r, int h, const R& z, int n) {
  const R w = R(n) / z;
  R total;
  std::vector<int> parts;
  std::function<void(int)> extend = [&](int left) {
    if (left == 0) {
      const Index idx(parts);
      if (idx.depth() != r || idx.height() != h || !idx.admissible()) return;
      std::vector<int> m(static_cast<std::size_t>(r));
      std::function<void(int, int)> walk = [&](int i, int lo) {
        if (i == r) {
          R t(1);
          for (int j = 0; j < r; ++j) {
            for (int e = 0; e < parts[static_cast<std::size_t>(j)]; ++e) {
              t /= R(m[static_cast<std::size_t>(j)]);
            }
          }
          const long top = m.back();
          total += t * rf(R(n - top), top) / rf(w - R(top), top);
          return;
        }
        for (int v = lo; v < n; ++v) {
          m[static_cast<std::size_t>(i)] = v;
          walk(i + 1, v + 1);
        }
      };
      walk(0, 1);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      parts.push_back(p);
      extend(left - p);
      parts.pop_back();
    }
  };
  extend(k);
  return total;
}

}  // namespace

TEST_CASE("configuration") {
  CHECK_THROWS_AS(GenFunConfig::numeric(3, R(0), 2), DegenerateArgument);
  CHECK_THROWS_AS(GenFunConfig::numeric(0, R(1), 2), ConfigError);
  CHECK_THROWS_AS(GenFunConfig::special(3, -1), ConfigError);
  CHECK_THROWS_AS(GenFunConfig::special(3, 2).z(), ConfigError);
  CHECK(GenFunConfig::numeric(3, R(1, 2), 2).with_degree(5).degree() == 5);
}

TEST_CASE("small generating function values") {
  for (auto f : {phi0_direct, phi0_product_form, phi0_closed_form}) {
    const S s = f(GenFunConfig::numeric(2, R(1, 2), 0));
    CHECK(s.constant_term() == R(1, 3));
    CHECK(f(GenFunConfig::numeric(1, R(5, 7), 3)).is_zero());
  }
  CHECK(divisibility_check(GenFunConfig::numeric(1, R(1, 2), 3)));
}

TEST_CASE("direct generating function against brute force") {
  const int degree = 3;
  for (const auto& z : {R(1, 2), R(-2, 3), R(3, 4)}) {
    for (int n = 1; n <= 5; ++n) {
      const S s = phi0_direct(GenFunConfig::numeric(n, z, degree));
      for (int h = 1; h <= degree + 1; ++h) {
        for (int k = 2 * h; k - h - 1 <= degree; ++k) {
          for (int r = h; r <= k - h; ++r) {
            CHECK(s.coefficient({k - r - h, r - h, h - 1}) == g0_oracle(k, r, h, z, n));
          }
        }
      }
      CHECK(s.constant_term() == truncated_mpl(Index({2}), z, n));
    }
  }
}

TEST_CASE("three generating function routes agree") {
  for (const auto& z : {R(1, 2), R(1, 3), R(3, 4), R(-5, 2)}) {
    for (int n = 1; n <= 5; ++n) {
      const auto cfg = GenFunConfig::numeric(n, z, 4);
      const S direct = phi0_direct(cfg);
      CHECK(direct == phi0_product_form(cfg));
      CHECK(direct == phi0_closed_form(cfg));
      CHECK(divisibility_check(cfg));
    }
  }
}

TEST_CASE("poles in the argument are reported by every route") {
  // N/z = 1 makes (N/z - 1)_1 vanish.
  const auto cfg = GenFunConfig::numeric(2, R(2), 3);
  CHECK_THROWS_AS(phi0_direct(cfg), PoleError);
  CHECK_THROWS_AS(phi0_product_form(cfg), PoleError);
  CHECK_THROWS_AS(phi0_closed_form(cfg), PoleError);
  CHECK_THROWS_AS(divisibility_check(cfg), PoleError);
}

TEST_CASE("exact division by Z - XY") {
  const int bound = 5;
  const S zxy = S::Z(bound) - S::X(bound) * S::Y(bound);
  S q(bound);
  q.add_term({}, R(2));
  q.add_term({1, 0, 0}, R(-1, 3));
  q.add_term({0, 1, 1}, R(5));
  q.add_term({2, 1, 0}, R(7, 2));
  const auto back = divide_by_z_minus_xy(zxy * q, bound - 2);
  CHECK(back.exact);
  CHECK(back.quotient == q.truncated(bound - 2));
  S not_multiple = zxy * q;
  not_multiple.add_term({1, 1, 0}, R(1));
  CHECK_FALSE(divide_by_z_minus_xy(not_multiple, bound - 2).exact);
  CHECK_THROWS_AS(divide_by_z_minus_xy(zxy, bound - 1), BoundMismatch);
}

TEST_CASE("symbolic argument N/(N-Y)") {
  // At N = 2 the generating function is 1/((1-X)(1-Y)).
  const S s = phi0_direct(GenFunConfig::special(2, 4));
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; a + b <= 4; ++b) {
      for (int c = 0; a + b + c <= 4; ++c) {
        CHECK(s.coefficient({a, b, c}) == R(c == 0 ? 1 : 0));
      }
    }
  }
  const S disc = disc_factor(GenFunConfig::special(4, 3), 2, 3);
  // (1 - Y/3)^{-1} (1 - Y/2)^{-1}
  CHECK(disc.coefficient({0, 1, 0}) == R(5, 6));
  CHECK(disc_factor(GenFunConfig::special(4, 3), 4, 3).is_zero());
}

TEST_CASE("three expressions at the special argument") {
  for (int n = 2; n <= 5; ++n) {
    const auto s = tOZ_special_sides(n, 4);
    CHECK(s.direct == s.gamma_product);
    CHECK(s.gamma_product == s.exp_form);
    CHECK(s.direct.constant_term() == truncated_zeta(2, n));
    CHECK(s.gamma_product.swapped_xy() == s.gamma_product);
    CHECK(s.exp_form.swapped_xy() == s.exp_form);
  }
  CHECK(tOZ_special_sides(3, 2).direct.constant_term() == R(5, 4));
  CHECK_THROWS_AS(tOZ_special_sides(1, 2), ConfigError);
}

TEST_CASE("coefficient identity and symmetry") {
  const auto a = prop54_sides(3, 1, 1, 3);
  CHECK(a.lhs == R(9, 8));
  CHECK(a.rhs == R(9, 8));
  const auto b = prop54_sides(3, 2, 1, 3);
  CHECK(b.lhs == R(9, 8));
  CHECK(b.rhs == R(9, 8));
  for (int n = 1; n <= 5; ++n) {
    CHECK(prop54_sides(2, 1, 1, n).lhs == truncated_zeta(2, n));
    CHECK(prop54_sides(2, 1, 1, n).equal());
  }
  const auto s = symmetry_check(3, 1, 1, 3);
  CHECK(s.lhs == R(9, 8));
  CHECK(s.rhs == R(9, 8));
  CHECK(symmetry_check(4, 1, 1, 5).equal());
  CHECK(symmetry_check(4, 2, 1, 6).equal());
  CHECK(tilde_index_sum(3, 2, 1, 3) ==
        truncated_mzv(Index({1, 2}), 3) + tilde_zeta(Index({2}), 1, 3));
  CHECK_THROWS_AS(prop54_sides(3, 3, 1, 3), ConfigError);
  CHECK_FALSE(valid_weight_triple(3, 0, 1));
  CHECK(valid_weight_triple(4, 2, 2));
}

TEST_CASE("polynomial reconstruction") {
  CHECK(reconstruct_P(2, 1, 1).str() == "Z2");
  CHECK(reconstruct_P(3, 1, 1).str() == "Z3");
  CHECK(reconstruct_P(3, 2, 1).str() == "Z3");
  const std::vector<int> samples{2, 3, 4, 5, 6, 7, 8};
  for (int k = 2; k <= 5; ++k) {
    for (int h = 1; 2 * h <= k; ++h) {
      for (int q = h; q <= k - h; ++q) {
        const auto rec = reconstruct_P(k, q, h, samples);
        CHECK(rec.valid());
        for (const auto& [e, c] : rec.polynomial.terms()) CHECK(ZetaPoly::weight(e) == k);
        // Symmetry of the sums carries over to the polynomials.
        CHECK(rec.polynomial == reconstruct_P(k, k - q, h));
      }
    }
  }
  const std::vector<int> too_few{3, 4};
  CHECK_THROWS_AS(fit_P_from_samples(6, 2, 1, too_few), UnderdeterminedSystem);
}
