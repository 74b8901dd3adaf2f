#include "finitehyper/harness.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <limits>
#include <optional>

#include "finitehyper/hyperfun.hpp"
#include "finitehyper/ozgen.hpp"
#include "finitehyper/polylog.hpp"

namespace finitehyper {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

long SeedStream::uniform(long lo, long hi) {
  if (hi < lo) throw ConfigError("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = next();
  while (draw >= limit) draw = next();
  return lo + static_cast<long>(draw % span);
}

double SeedStream::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Rational sample_rational(const SampleBounds& bounds, SeedStream& stream) {
  if (bounds.numerator < 1 || bounds.denominator < 1) {
    throw ConfigError("sampling bounds must be at least 1");
  }
  const long num = stream.uniform(-bounds.numerator, bounds.numerator);
  const long den = stream.uniform(1, bounds.denominator);
  return Rational(num, den);
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

struct Outcome {
  Params params;
  int n = 0;
  std::string lhs;
  std::string rhs;
  bool equal = false;
};

Outcome from_pair(Params params, int n, const SidePair& s) {
  return {std::move(params), n, s.lhs.str(), s.rhs.str(), s.equal()};
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string join(const std::vector<Rational>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += xs[i].str();
  }
  return out;
}

std::vector<Rational> sample_vector(std::size_t len, const SampleBounds& b, SeedStream& s) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(sample_rational(b, s));
  return out;
}

// Every composition of w into positive parts, in lexicographic order.
std::vector<Index> compositions(int w) {
  std::vector<Index> out;
  std::vector<int> parts;
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      parts.push_back(p);
      extend(remaining - p);
      parts.pop_back();
    }
  };
  extend(w);
  return out;
}

std::vector<std::array<int, 3>> weight_triples(int k_max) {
  std::vector<std::array<int, 3>> out;
  for (int k = 2; k <= k_max; ++k) {
    for (int h = 1; h + h <= k; ++h) {
      for (int q = h; q <= k - h; ++q) out.push_back({k, q, h});
    }
  }
  return out;
}

class Runner {
 public:
  Runner(std::string id, const RunConfig& cfg) : id_(std::move(id)), cfg_(cfg) {
    base_ = splitmix64(cfg.seed ^ fnv1a(id_));
  }

  int n_min(int fallback) const { return cfg_.n_min.value_or(fallback); }
  int n_max(int fallback) const { return cfg_.n_max.value_or(fallback); }
  int trials(int fallback) const { return cfg_.trials.value_or(fallback); }
  int degree(int fallback) const { return cfg_.degree.value_or(fallback); }
  int weight_max(int fallback) const { return cfg_.weight_max.value_or(fallback); }
  const SampleBounds& bounds() const { return cfg_.bounds; }

  void check_range(int lo, int hi, int floor) const {
    if (lo < floor || hi < lo) {
      throw ConfigError(id_ + ": invalid N range [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
    }
  }

  // Draws until `body` succeeds; poles and degenerate arguments are resampled
  // within a budget of 10x the requested trials.
  void random_trials(int count, const std::function<Outcome(SeedStream&)>& body) {
    if (count < 1) throw ConfigError(id_ + ": trials must be positive");
    budget_ += 10L * count;
    for (int t = 0; t < count; ++t) {
      const std::uint64_t seed = splitmix64(base_ + static_cast<std::uint64_t>(trial_++));
      SeedStream stream(seed);
      int rejected = 0;
      const auto start = std::chrono::steady_clock::now();
      for (;;) {
        try {
          push(body(stream), seed, rejected, start);
          break;
        } catch (const PoleError&) {
        } catch (const DegenerateArgument&) {
        }
        ++rejected;
        if (++rejected_total_ > budget_) {
          throw PoleExhaustion(id_ + ": more than " + std::to_string(budget_) +
                               " rejected samples");
        }
      }
    }
  }

  void grid_point(const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    push(body(), cfg_.seed, 0, start);
  }

  std::vector<VerificationReport> take() { return std::move(reports_); }

 private:
  void push(Outcome o, std::uint64_t seed, int rejected,
            std::chrono::steady_clock::time_point start) {
    VerificationReport r;
    r.identity = id_;
    r.params = std::move(o.params);
    r.n = o.n;
    r.lhs = std::move(o.lhs);
    r.rhs = std::move(o.rhs);
    r.equal = o.equal;
    r.seed = seed;
    r.rejected = rejected;
    if (cfg_.timing) {
      r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
    }
    reports_.push_back(std::move(r));
  }

  std::string id_;
  const RunConfig& cfg_;
  std::uint64_t base_ = 0;
  long trial_ = 0;
  long budget_ = 0;
  long rejected_total_ = 0;
  std::vector<VerificationReport> reports_;
};

// Series result or a pole marker; grid identities compare pole behavior too.
struct SeriesOrPole {
  std::optional<TruncatedSeries> value;
  std::string pole;

  std::string text() const { return value ? series_digest(*value) : "pole"; }
};

SeriesOrPole try_series(const std::function<TruncatedSeries()>& f) {
  try {
    return {f(), ""};
  } catch (const PoleError& e) {
    return {std::nullopt, e.location()};
  }
}

bool same(const SeriesOrPole& a, const SeriesOrPole& b) {
  if (!a.value || !b.value) return !a.value && !b.value;
  return *a.value == *b.value;
}

Outcome series_outcome(Params params, int n, const SeriesOrPole& a, const SeriesOrPole& b) {
  return {std::move(params), n, a.text(), b.text(), same(a, b)};
}

using Handler = std::function<void(Runner&)>;

void run_msw(Runner& r) {
  const int lo = r.n_min(1), hi = r.n_max(12);
  r.check_range(lo, hi, 1);
  for (int w = 1; w <= r.weight_max(6); ++w) {
    for (const auto& k : compositions(w)) {
      for (int n = lo; n <= hi; ++n) {
        r.grid_point([&] {
          return from_pair({{"k", k.str()}}, n, {truncated_mzv(k, n), msw_rhs(k, n)});
        });
      }
    }
  }
}

void run_hms(Runner& r) {
  const int lo = r.n_min(1), hi = r.n_max(8);
  r.check_range(lo, hi, 1);
  for (int w = 1; w <= r.weight_max(4); ++w) {
    for (const auto& k : compositions(w)) {
      for (int n = lo; n <= hi; ++n) {
        r.random_trials(r.trials(20), [&](SeedStream& s) {
          const auto x = sample_vector(k.parts().size(), r.bounds(), s);
          return from_pair({{"k", k.str()}, {"x", join(x)}}, n,
                           {hms_lhs(k, x, n), hms_rhs(k, x, n)});
        });
      }
    }
  }
}

void run_disc_beta(Runner& r) {
  const int lo = r.n_min(1), hi = r.n_max(20);
  r.check_range(lo, hi, 1);
  r.random_trials(r.trials(100), [&](SeedStream& s) {
    const Rational a = sample_rational(r.bounds(), s);
    const Rational b = sample_rational(r.bounds(), s);
    const auto n = static_cast<unsigned>(s.uniform(lo, hi));
    const BetaParams p{a, b, n};
    return from_pair({{"a", a.str()}, {"b", b.str()}}, static_cast<int>(n),
                     {truncated_beta(p), disc_beta_sum(p)});
  });
}

void run_multivar_beta(Runner& r) {
  const int lo = r.n_min(1), hi = r.n_max(8);
  r.check_range(lo, hi, 1);
  for (std::size_t d = 2; d <= 4; ++d) {
    r.random_trials(r.trials(50), [&](SeedStream& s) {
      const auto a = sample_vector(d, r.bounds(), s);
      const auto n = static_cast<unsigned>(s.uniform(lo, hi));
      return from_pair({{"d", std::to_string(d)}, {"a", join(a)}}, static_cast<int>(n),
                       multivariate_disc_beta(a, n));
    });
  }
}

void run_t1f0(Runner& r) {
  const int lo = r.n_min(1), hi = r.n_max(15);
  r.check_range(lo, hi, 1);
  r.random_trials(r.trials(50), [&](SeedStream& s) {
    const Rational a = sample_rational(r.bounds(), s);
    const Rational z = sample_rational(r.bounds(), s);
    const auto n = static_cast<unsigned>(s.uniform(lo, hi));
    const Rational lhs = trunc_pFq_bracket(HyperParams({a}, {}, z, n));
    return from_pair({{"a", a.str()}, {"z", z.str()}}, static_cast<int>(n),
                     {lhs, t1F0_closed_form(a, z, n)});
  });
}

void run_gen_thg_int(Runner& r) {
  const int lo = r.n_min(1), hi = r.n_max(10);
  r.check_range(lo, hi, 1);
  const std::array<std::pair<std::size_t, std::size_t>, 4> shapes{
      {{0, 0}, {1, 0}, {1, 1}, {2, 1}}};
  for (const auto& [p, q] : shapes) {
    r.random_trials(r.trials(50), [&, p = p, q = q](SeedStream& s) {
      const Rational a = sample_rational(r.bounds(), s);
      const Rational b = sample_rational(r.bounds(), s);
      const Rational z = sample_rational(r.bounds(), s);
      const auto up = sample_vector(p, r.bounds(), s);
      const auto low = sample_vector(q, r.bounds(), s);
      const auto n = static_cast<unsigned>(s.uniform(lo, hi));
      std::vector<Rational> outer_up{a};
      outer_up.insert(outer_up.end(), up.begin(), up.end());
      std::vector<Rational> outer_low{b};
      outer_low.insert(outer_low.end(), low.begin(), low.end());
      const Rational lhs = trunc_pFq_bracket(HyperParams(outer_up, outer_low, z, n));
      const Rational rhs = gen_tHG_int_rhs(a, up, low, b, z, n);
      return from_pair({{"p", std::to_string(p)},
                        {"q", std::to_string(q)},
                        {"a", a.str()},
                        {"b", b.str()},
                        {"upper", join(up)},
                        {"lower", join(low)},
                        {"z", z.str()}},
                       static_cast<int>(n), {lhs, rhs});
    });
  }
}

void run_thg_int(Runner& r) {
  const int lo = r.n_min(1), hi = r.n_max(15);
  r.check_range(lo, hi, 1);
  r.random_trials(r.trials(50), [&](SeedStream& s) {
    const Rational a = sample_rational(r.bounds(), s);
    const Rational b = sample_rational(r.bounds(), s);
    const Rational c = sample_rational(r.bounds(), s);
    const Rational z = sample_rational(r.bounds(), s);
    const auto n = static_cast<unsigned>(s.uniform(lo, hi));
    const Rational lhs = trunc_pFq_bracket(HyperParams({a, b}, {c}, z, n));
    return from_pair({{"a", a.str()}, {"b", b.str()}, {"c", c.str()}, {"z", z.str()}},
                     static_cast<int>(n), {lhs, tHG_int_rhs(a, b, c, z, n)});
  });
}

void run_chain_sum(Runner& r) {
  const int lo = r.n_min(1), hi = r.n_max(10);
  r.check_range(lo, hi, 0);
  r.random_trials(r.trials(50), [&](SeedStream& s) {
    const auto p = static_cast<std::size_t>(s.uniform(1, 3));
    const auto up = sample_vector(p, r.bounds(), s);
    const auto low = sample_vector(p, r.bounds(), s);
    const auto n = static_cast<unsigned>(s.uniform(lo, hi));
    auto terminating = up;
    terminating.push_back(-Rational(static_cast<long>(n)));
    return from_pair({{"upper", join(up)}, {"lower", join(low)}}, static_cast<int>(n),
                     {chain_sum_pFp(up, low, n), terminating_pFq_at_1(terminating, low)});
  });
}

void run_3f2_transform(Runner& r) {
  const int lo = r.n_min(1), hi = r.n_max(10);
  r.check_range(lo, hi, 0);
  r.random_trials(r.trials(50), [&](SeedStream& s) {
    const auto v = sample_vector(4, r.bounds(), s);
    const auto n = static_cast<unsigned>(s.uniform(lo, hi));
    return from_pair({{"a", v[0].str()}, {"b", v[1].str()}, {"d", v[2].str()}, {"e", v[3].str()}},
                     static_cast<int>(n), transform_3F2_sides(v[0], v[1], v[2], v[3], n));
  });
}

void run_finite_gauss(Runner& r) {
  const int lo = r.n_min(1), hi = r.n_max(10);
  r.check_range(lo, hi, 0);
  r.random_trials(r.trials(50), [&](SeedStream& s) {
    const auto v = sample_vector(3, r.bounds(), s);
    const auto n = static_cast<unsigned>(s.uniform(lo, hi));
    return from_pair({{"a", v[0].str()}, {"b", v[1].str()}, {"c", v[2].str()}},
                     static_cast<int>(n), finite_gauss_sides(v[0], v[1], v[2], n));
  });
}

template <SidePair (*Sides)(const Rational&, const Rational&, const Rational&, const Rational&,
                            unsigned)>
void run_transformation(Runner& r) {
  const int lo = r.n_min(1), hi = r.n_max(10);
  r.check_range(lo, hi, 0);
  r.random_trials(r.trials(50), [&](SeedStream& s) {
    const auto v = sample_vector(4, r.bounds(), s);
    const auto n = static_cast<unsigned>(s.uniform(lo, hi));
    return from_pair({{"a", v[0].str()}, {"b", v[1].str()}, {"c", v[2].str()}, {"z", v[3].str()}},
                     static_cast<int>(n), Sides(v[0], v[1], v[2], v[3], n));
  });
}

void run_toz_threeway(Runner& r) {
  const int lo = r.n_min(2), hi = r.n_max(6);
  r.check_range(lo, hi, 1);
  const int degree = r.degree(6);
  const std::array<Rational, 4> zs{Rational(1, 2), Rational(1, 3), Rational(2), Rational(3, 4)};
  for (int n = lo; n <= hi; ++n) {
    for (const auto& z : zs) {
      const auto cfg = GenFunConfig::numeric(n, z, degree);
      const Params base{{"z", z.str()}, {"D", std::to_string(degree)}};
      const auto direct = try_series([&] { return phi0_direct(cfg); });
      const auto product = try_series([&] { return phi0_product_form(cfg); });
      const auto closed = try_series([&] { return phi0_closed_form(cfg); });
      auto tagged = [&](const char* pair) {
        Params p = base;
        p.emplace_back("pair", pair);
        return p;
      };
      r.grid_point([&] { return series_outcome(tagged("direct/product"), n, direct, product); });
      r.grid_point([&] { return series_outcome(tagged("product/closed"), n, product, closed); });
      r.grid_point([&] {
        SeriesOrPole quotient;
        bool exact = false;
        try {
          auto q = divide_by_z_minus_xy(oz_hypergeometric_numerator(cfg), degree);
          exact = q.exact;
          quotient.value = std::move(q.quotient);
        } catch (const PoleError& e) {
          quotient.pole = e.location();
        }
        Outcome o = series_outcome(tagged("quotient/closed"), n, quotient, closed);
        if (quotient.value) o.equal = o.equal && exact;
        return o;
      });
    }
  }
}

void run_toz_special(Runner& r) {
  const int lo = r.n_min(2), hi = r.n_max(6);
  r.check_range(lo, hi, 2);
  const int degree = r.degree(6);
  for (int n = lo; n <= hi; ++n) {
    const auto sides = tOZ_special_sides(n, degree);
    const Params base{{"D", std::to_string(degree)}};
    auto tagged = [&](const char* what) {
      Params p = base;
      p.emplace_back("check", what);
      return p;
    };
    auto series_pair = [&](const char* what, const TruncatedSeries& a, const TruncatedSeries& b) {
      r.grid_point([&] {
        return Outcome{tagged(what), n, series_digest(a), series_digest(b), a == b};
      });
    };
    series_pair("s1/s2", sides.direct, sides.gamma_product);
    series_pair("s2/s3", sides.gamma_product, sides.exp_form);
    series_pair("s3/swapped", sides.exp_form, sides.exp_form.swapped_xy());
    r.grid_point([&] {
      return from_pair(tagged("constant/zeta2"), n,
                       {sides.direct.constant_term(), truncated_zeta(2, n)});
    });
  }
}

void run_prop54(Runner& r) {
  const int lo = r.n_min(1), hi = r.n_max(6);
  r.check_range(lo, hi, 1);
  const int k_max = r.weight_max(7);
  const auto triples = weight_triples(k_max);
  for (int n = lo; n <= hi; ++n) {
    const auto phi0 = phi0_direct(GenFunConfig::special(n, std::max(k_max - 2, 0)));
    for (const auto& [k, q, h] : triples) {
      r.grid_point([&, k = k, q = q, h = h] {
        return from_pair({{"k", std::to_string(k)}, {"q", std::to_string(q)},
                          {"h", std::to_string(h)}},
                         n, prop54_sides(phi0, k, q, h, n));
      });
    }
  }
}

void run_symmetry(Runner& r) {
  const int lo = r.n_min(1), hi = r.n_max(8);
  r.check_range(lo, hi, 1);
  const auto triples = weight_triples(r.weight_max(7));
  for (int n = lo; n <= hi; ++n) {
    for (const auto& [k, q, h] : triples) {
      r.grid_point([&, k = k, q = q, h = h] {
        return from_pair({{"k", std::to_string(k)}, {"q", std::to_string(q)},
                          {"h", std::to_string(h)}},
                         n, symmetry_check(k, q, h, n));
      });
    }
  }
}

void run_reconstruct_p(Runner& r) {
  const int lo = r.n_min(2), hi = r.n_max(8);
  r.check_range(lo, hi, 1);
  std::vector<int> samples;
  for (int n = lo; n <= hi; ++n) samples.push_back(n);
  for (const auto& [k, q, h] : weight_triples(r.weight_max(6))) {
    const auto rec = reconstruct_P(k, q, h, samples);
    const Params params{{"k", std::to_string(k)}, {"q", std::to_string(q)},
                        {"h", std::to_string(h)}};
    r.grid_point([&] {
      Params p = params;
      p.emplace_back("check", "symbolic/fitted");
      return Outcome{std::move(p), 0, rec.polynomial.str(), rec.fitted.str(),
                     rec.polynomial == rec.fitted};
    });
    for (std::size_t i = 0; i < samples.size(); ++i) {
      r.grid_point([&] {
        Params p = params;
        p.emplace_back("check", "substitution");
        p.emplace_back("P", rec.polynomial.str());
        return from_pair(std::move(p), samples[i], rec.checks[i]);
      });
    }
  }
}

void run_ak_congruence(Runner& r) {
  const int lo = r.n_min(5), hi = r.n_max(13);
  r.check_range(lo, hi, 2);
  for (int w = 2; w <= r.weight_max(4); ++w) {
    for (const auto& k : compositions(w)) {
      if (!k.admissible()) continue;
      for (int l = 1; l <= 3; ++l) {
        for (int p = lo; p <= hi; ++p) {
          if (!is_prime(static_cast<std::uint64_t>(p))) continue;
          r.grid_point([&] {
            const auto [lhs, rhs] = ak_congruence_sides(k, l, static_cast<std::uint64_t>(p));
            return Outcome{{{"k", k.str()}, {"l", std::to_string(l)}},
                           p,
                           lhs.str(),
                           rhs.str(),
                           lhs == rhs};
          });
        }
      }
    }
  }
}

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table{
      {"msw", run_msw},
      {"hms", run_hms},
      {"disc-beta", run_disc_beta},
      {"multivar-beta", run_multivar_beta},
      {"t1f0", run_t1f0},
      {"gen-thg-int", run_gen_thg_int},
      {"thg-int", run_thg_int},
      {"chain-sum", run_chain_sum},
      {"3f2-transform", run_3f2_transform},
      {"finite-gauss", run_finite_gauss},
      {"finite-pfaff", run_transformation<finite_pfaff_sides>},
      {"finite-euler", run_transformation<finite_euler_sides>},
      {"toz-threeway", run_toz_threeway},
      {"toz-special", run_toz_special},
      {"prop54", run_prop54},
      {"symmetry", run_symmetry},
      {"reconstruct-p", run_reconstruct_p},
      {"ak-congruence", run_ak_congruence},
  };
  return table;
}

}  // namespace

std::string series_digest(const TruncatedSeries& s) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a(render(s));
  std::string digits(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) digits[static_cast<std::size_t>(i)] = hex[h & 0xf];
  return "series[" + std::to_string(s.terms().size()) + " terms]:" + digits;
}

const std::vector<std::string>& identity_catalog() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, _] : handlers()) out.push_back(id);
    return out;
  }();
  return ids;
}

std::vector<VerificationReport> run_identity(const std::string& id, const RunConfig& cfg) {
  for (const auto& [name, handler] : handlers()) {
    if (name != id) continue;
    Runner runner(id, cfg);
    handler(runner);
    return runner.take();
  }
  throw UnknownIdentity("unknown identity: " + id);
}

}  // namespace finitehyper
