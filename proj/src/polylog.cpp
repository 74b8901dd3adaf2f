#include "finitehyper/polylog.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace finitehyper {

namespace {

int parse_int(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("malformed integer: '" + std::string(text) + "'");
  }
  return value;
}

Rational inv_pow(long m, int k) {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(m),
                static_cast<unsigned long>(k));
  return Rational(BigInt(1), den);
}

void require_positive_n(int n) {
  if (n < 1) throw ConfigError("truncation order N must be >= 1");
}

/// weights[m] for the nested sum 0 < m_1 < ... < m_depth = m < n with
/// per-level factors factor(i, m). factor is only evaluated at reachable
/// (i, m), so pole screening inside it sees exactly the terms of the sum.
std::vector<Rational> nested_weights(int depth, int n,
                                     const std::function<Rational(int, int)>& factor) {
  std::vector<Rational> cur(static_cast<std::size_t>(std::max(n, 1)));
  if (depth > n - 1) return cur;
  for (int m = 1; m <= n - depth; ++m) cur[m] = factor(0, m);
  for (int i = 1; i < depth; ++i) {
    std::vector<Rational> next(cur.size());
    Rational prefix;
    for (int m = i + 1; m <= n - depth + i; ++m) {
      prefix += cur[m - 1];
      next[m] = factor(i, m) * prefix;
    }
    cur = std::move(next);
  }
  return cur;
}

/// Sum over chains of blocks; head(i, s) weights the first entry of block i.
Rational block_chain_sum(const Index& k, int n,
                         const std::function<Rational(int, int)>& head) {
  const int depth = k.depth();
  if (depth > n - 1) return Rational();
  // ends[e]: total weight of the blocks so far with last entry e; e = 0 is
  // the empty start.
  std::vector<Rational> ends(static_cast<std::size_t>(n));
  ends[0] = Rational(1);
  for (int i = 0; i < depth; ++i) {
    std::vector<Rational> block(ends.size());
    Rational prefix;
    const int first = i + 1;
    const int last = n - depth + i;
    for (int s = 1; s <= last; ++s) {
      prefix += ends[s - 1];
      if (s >= first) block[s] = head(i, s) * prefix;
    }
    // Remaining entries: nondecreasing, each contributes 1/n_{i,j}.
    for (int j = 1; j < k.parts()[i]; ++j) {
      Rational running;
      for (int v = 1; v < n; ++v) {
        running += block[v];
        block[v] = running * Rational(1, v);
      }
    }
    ends = std::move(block);
  }
  return std::accumulate(ends.begin(), ends.end(), Rational());
}

/// h_l(v_1, ..., v_m) for m = 0..n-1, with v_j = value(j).
std::vector<Rational> complete_homogeneous(int l, int n,
                                           const std::function<Rational(int)>& value) {
  std::vector<Rational> h(static_cast<std::size_t>(std::max(n, 1)), Rational(1));
  for (int level = 1; level <= l; ++level) {
    std::vector<Rational> next(h.size());
    for (int m = 1; m < n; ++m) next[m] = next[m - 1] + h[m] * value(m);
    h = std::move(next);
  }
  return h;
}

void require_x_size(const Index& k, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != k.depth()) {
    throw ConfigError("need one x value per index part");
  }
}

}  // namespace

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ConfigError("index must have at least one part");
  for (int p : parts_) {
    if (p < 1) throw ConfigError("index parts must be positive");
  }
}

Index Index::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(parse_int(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Index(std::move(parts));
}

int Index::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Index::height() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                        [](int p) { return p > 1; }));
}

std::string Index::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

ExtendedIndex ExtendedIndex::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) return {Index::parse(text), 0};
  const int l = parse_int(text.substr(semi + 1));
  if (l < 0) throw ConfigError("l must be non-negative");
  return {Index::parse(text.substr(0, semi)), l};
}

std::string ExtendedIndex::str() const { return index.str() + ";" + std::to_string(l); }

std::vector<Rational> mzv_tail_weights(const Index& k, int n) {
  require_positive_n(n);
  return nested_weights(k.depth(), n, [&](int i, int m) { return inv_pow(m, k.parts()[i]); });
}

Rational truncated_mzv(const Index& k, int n) {
  const auto w = mzv_tail_weights(k, n);
  return std::accumulate(w.begin(), w.end(), Rational());
}

Rational msw_rhs(const Index& k, int n) {
  require_positive_n(n);
  return block_chain_sum(k, n, [n](int, int s) { return Rational(1, n - s); });
}

Rational truncated_mpl(const Index& k, const Rational& z, int n) {
  require_positive_n(n);
  if (z.is_zero()) throw DegenerateArgument("argument z must be nonzero");
  const Rational w = Rational(n) / z;
  const auto tail = mzv_tail_weights(k, n);
  Rational sum;
  for (int m = k.depth(); m < n; ++m) {
    const Rational base = w - Rational(m);
    if (rising_factorial_is_zero(base, static_cast<unsigned>(m))) {
      throw PoleError("(N/z-m)_m with N/z=" + w.str() + ", m=" + std::to_string(m));
    }
    sum += tail[m] * rising_factorial(Rational(n - m), static_cast<unsigned>(m)) /
           rising_factorial(base, static_cast<unsigned>(m));
  }
  return sum;
}

Rational hms_lhs(const Index& k, std::span<const Rational> x, int n) {
  require_positive_n(n);
  require_x_size(k, x);
  const int depth = k.depth();
  const auto w = nested_weights(depth, n, [&](int i, int m) {
    const Rational nx = Rational(n) * x[i];
    const Rational nx_next = i + 1 < depth ? Rational(n) * x[i + 1] : Rational(n);
    const auto mu = static_cast<unsigned>(m);
    if (rising_factorial_is_zero(nx - Rational(m), mu)) {
      throw PoleError("(N*x_" + std::to_string(i + 1) + "-m)_m with N*x=" + nx.str() +
                      ", m=" + std::to_string(m));
    }
    return inv_pow(m, k.parts()[i]) * rising_factorial(nx_next - Rational(m), mu) /
           rising_factorial(nx - Rational(m), mu);
  });
  return std::accumulate(w.begin(), w.end(), Rational());
}

Rational hms_rhs(const Index& k, std::span<const Rational> x, int n) {
  require_positive_n(n);
  require_x_size(k, x);
  return block_chain_sum(k, n, [&](int i, int s) {
    const Rational den = Rational(n) * x[i] - Rational(s);
    if (den.is_zero()) {
      throw PoleError("N*x_" + std::to_string(i + 1) + "-n = 0 at n=" + std::to_string(s));
    }
    return den.inverse();
  });
}

Rational truncated_zeta(int k, int n) {
  require_positive_n(n);
  if (k < 1) throw ConfigError("zeta exponent must be >= 1");
  Rational sum;
  for (int m = 1; m < n; ++m) sum += inv_pow(m, k);
  return sum;
}

Rational tilde_zeta(const Index& k, int l, int n) {
  if (l < 0) throw ConfigError("l must be non-negative");
  const auto tail = mzv_tail_weights(k, n);
  const auto h = complete_homogeneous(l, n, [n](int j) { return Rational(1, n - j); });
  Rational sum;
  for (int m = 1; m < n; ++m) sum += tail[m] * h[m];
  return sum;
}

std::vector<Index> enumerate_I0(int k, int r, int h) {
  std::vector<Index> out;
  if (r < 1 || h < 1 || k < r + h || r < h) return out;
  std::vector<int> parts;
  std::function<void(int, int)> extend = [&](int remaining, int tall) {
    const int placed = static_cast<int>(parts.size());
    if (placed == r - 1) {
      // Last part must be >= 2 and therefore counts toward the height.
      if (remaining >= 2 && tall + 1 == h) {
        parts.push_back(remaining);
        out.emplace_back(parts);
        parts.pop_back();
      }
      return;
    }
    const int slots_after = r - placed - 1;
    // Later parts need at least one each, plus one extra for the last.
    for (int part = 1; part <= remaining - slots_after - 1; ++part) {
      const int next_tall = tall + (part > 1 ? 1 : 0);
      if (next_tall + 1 > h) continue;
      parts.push_back(part);
      extend(remaining - part, next_tall);
      parts.pop_back();
    }
  };
  extend(k, 0);
  return out;
}

std::vector<ExtendedIndex> enumerate_I0_tilde(int k, int q, int h) {
  std::vector<ExtendedIndex> out;
  for (int l = 0; l < q; ++l) {
    for (auto& idx : enumerate_I0(k - l, q - l, h)) out.push_back({std::move(idx), l});
  }
  return out;
}

Rational arakawa_kaneko_truncated(const Index& k, int l, std::uint64_t p) {
  if (l < 1) throw ConfigError("Arakawa-Kaneko value needs l >= 1");
  if (p < 2 || p > 1'000'000) throw ConfigError("p out of range");
  const int n = static_cast<int>(p);
  auto raised = k.parts();
  raised.back() += 1;
  const auto tail = mzv_tail_weights(Index(std::move(raised)), n);
  const auto h = complete_homogeneous(l - 1, n, [](int j) { return Rational(1, j); });
  Rational sum;
  for (int m = 1; m < n; ++m) sum += tail[m] * h[m];
  return sum;
}

std::pair<ResidueClass, ResidueClass> ak_congruence_sides(const Index& k, int l,
                                                          std::uint64_t p) {
  const Rational xi = arakawa_kaneko_truncated(k, l, p);
  auto raised = k.parts();
  raised.back() += 1;
  Rational tilde = tilde_zeta(Index(std::move(raised)), l - 1, static_cast<int>(p));
  if ((l - 1) % 2 == 1) tilde = -tilde;
  return {reduce_mod_p(xi, p), reduce_mod_p(tilde, p)};
}

}  // namespace finitehyper
