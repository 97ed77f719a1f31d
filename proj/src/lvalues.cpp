#include "mahler/lvalues.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <string>

#include <gmpxx.h>

#include "mahler/errors.hpp"
#include "mahler/measures.hpp"

namespace mahler {

namespace {

const char* const kCacheHeader[] = {
    "# a_n of y^2 + xy = x^3 + x (conductor 21)",
    "# bad primes 3, 7: a_p = p - #E_ns(F_p)",
};

long mod(long x, long p) { return ((x % p) + p) % p; }

// F(x, y) = y^2 + xy - x^3 - x.
long curve_value(long x, long y, long p) { return mod(y * y + x * y - x * x % p * x - x, p); }

bool is_singular(long x, long y, long p) {
  return curve_value(x, y, p) == 0 && mod(2 * y + x, p) == 0 && mod(y - 3 * x * x - 1, p) == 0;
}

long affine_count(long p) {
  if (p == 2) {
    long n = 0;
    for (long x = 0; x < 2; ++x)
      for (long y = 0; y < 2; ++y) n += curve_value(x, y, 2) == 0;
    return n;
  }
  // y^2 + xy - (x^3 + x) = 0 has 1 + chi(x^2 + 4x^3 + 4x) roots in y.
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (long y = 1; y < p; ++y) chi[y * y % p] = 1;
  long n = 0;
  for (long x = 0; x < p; ++x) {
    long disc = mod(x * x + 4 * (x * x % p * x + x), p);
    n += 1 + chi[disc];
  }
  return n;
}

std::vector<long> smallest_prime_factors(long n) {
  std::vector<long> spf(n + 1, 0);
  for (long i = 2; i <= n; ++i) {
    if (spf[i]) continue;
    for (long j = i; j <= n; j += i)
      if (!spf[j]) spf[j] = i;
  }
  return spf;
}

// Bernoulli numbers B_0..B_m from sum_{k<=m} C(m+1, k) B_k = 0.
std::vector<mpq_class> bernoulli_numbers(int m) {
  std::vector<mpq_class> b(m + 1);
  b[0] = 1;
  for (int n = 1; n <= m; ++n) {
    mpq_class s = 0;
    mpz_class binom = 1;  // C(n+1, k)
    for (int k = 0; k < n; ++k) {
      s += binom * b[k];
      binom = binom * (n + 1 - k) / (k + 1);
    }
    b[n] = -s / (n + 1);
  }
  return b;
}

Real from_mpq(const mpq_class& q, long bits) {
  Real r(bits);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real scale_A(const PrecisionContext& ctx) { return sqrt(ctx.real(kConductor)) / (2 * ctx.pi()); }

}  // namespace

long ap_point_count(long p) {
  if (p < 2) throw DomainError("ap_point_count requires a prime");
  long affine = affine_count(p);
  if (kConductor % p != 0) return p - affine;
  long singular = 0;
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y) singular += is_singular(x, y, p);
  long nonsingular = affine - singular + 1;  // + the point at infinity
  return p - nonsingular;
}

CoefficientTable build_coefficients(long n_max) {
  if (n_max < 1) throw DomainError("build_coefficients requires N >= 1");
  auto spf = smallest_prime_factors(n_max);
  CoefficientTable t;
  t.a.assign(n_max + 1, 0);
  t.a[1] = 1;
  for (long n = 2; n <= n_max; ++n) {
    long p = spf[n];
    long m = n, pk = 1;
    while (m % p == 0) {
      m /= p;
      pk *= p;
    }
    if (m > 1) {
      t.a[n] = t.a[m] * t.a[pk];
    } else if (pk == p) {
      t.a[n] = ap_point_count(p);
    } else if (kConductor % p == 0) {
      t.a[n] = t.a[p] * t.a[pk / p];
    } else {
      t.a[n] = t.a[p] * t.a[pk / p] - p * t.a[pk / p / p];
    }
  }
  return t;
}

void save_coefficients(const CoefficientTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write coefficient cache " + path.string());
  for (const char* line : kCacheHeader) out << line << "\n";
  out << "# N " << table.size() << "\n";
  for (long n = 1; n <= table.size(); ++n) out << n << " " << table[n] << "\n";
}

std::optional<CoefficientTable> load_coefficients(const std::filesystem::path& path, long n_max) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  for (const char* want : kCacheHeader)
    if (!std::getline(in, line) || line != want) return std::nullopt;
  if (!std::getline(in, line)) return std::nullopt;
  CoefficientTable t;
  t.a.push_back(0);
  long n, an;
  while (in >> n >> an) {
    if (n != t.size() + 1) return std::nullopt;
    t.a.push_back(an);
  }
  if (t.size() < n_max) return std::nullopt;
  t.a.resize(n_max + 1);
  return t;
}

CoefficientTable cached_coefficients(long n_max,
                                     const std::optional<std::filesystem::path>& cache) {
  if (cache)
    if (auto t = load_coefficients(*cache, n_max)) return *t;
  CoefficientTable t = build_coefficients(n_max);
  if (cache) save_coefficients(t, *cache);
  return t;
}

long smoothed_terms_needed(const Real& lambda, const PrecisionContext& ctx) {
  double l = lambda.to_double();
  if (!(l > 0)) throw DomainError("smoothing split must be positive");
  double r = std::min(l, 1 / l) * 2 * M_PI / std::sqrt(double(kConductor));
  double log_tol = -(ctx.target_digits() + 4) * std::log(10.0);
  // Tail bound with |a_n| <= n: sum_{n > N} n (1 + r n) e^{-r n} <= N^2 (1 + r N) e^{-r N}/(1 - e^{-r}).
  for (long n = 1;; ++n) {
    double x = double(n);
    double log_tail = 2 * std::log(x) + std::log1p(r * x) - r * x - std::log1p(-std::exp(-r));
    if (log_tail < log_tol) return n;
  }
}

Real L_f21_smoothed(const CoefficientTable& table, int eps, const Real& lambda,
                    const PrecisionContext& ctx) {
  long n_max = smoothed_terms_needed(lambda, ctx);
  if (table.size() < n_max)
    throw NonConvergence("L-series needs " + std::to_string(n_max) + " coefficients, have " +
                         std::to_string(table.size()));
  long bits = ctx.work_bits();
  Real lam = lambda.at_precision(bits);
  Real A = scale_A(ctx);
  Real direct(0L, bits), dual(0L, bits);
  for (long n = 1; n <= n_max; ++n) {
    if (table[n] == 0) continue;
    Real x = n * lam / A;
    direct += table[n] * ((1L + x) * exp(-x)) / (n * n);
    dual += table[n] * expint_e1(n / (lam * A));
  }
  return direct + eps * dual / square(A);
}

RootNumberTest root_number_self_test(const PrecisionContext& ctx) {
  Real l1 = ctx.real(1L), l2 = ctx.ratio(6, 5);
  CoefficientTable t = build_coefficients(smoothed_terms_needed(l2, ctx));
  RootNumberTest out{abs(L_f21_smoothed(t, 1, l1, ctx) - L_f21_smoothed(t, 1, l2, ctx)),
                     abs(L_f21_smoothed(t, -1, l1, ctx) - L_f21_smoothed(t, -1, l2, ctx)), 0};
  Real tol = ctx.tolerance();
  bool plus = out.spread_plus <= tol, minus = out.spread_minus <= tol;
  if (plus != minus) out.selected = plus ? 1 : -1;
  return out;
}

Real L_f21_at_2(const PrecisionContext& ctx, const CoefficientTable* table) {
  Real lambda = ctx.real(1L);
  if (table) return L_f21_smoothed(*table, kRootNumber, lambda, ctx);
  return L_f21_smoothed(build_coefficients(smoothed_terms_needed(lambda, ctx)), kRootNumber,
                        lambda, ctx);
}

Real Lprime_f21_at_0(const PrecisionContext& ctx, const CoefficientTable* table) {
  return kConductor * L_f21_at_2(ctx, table) / (4 * square(ctx.pi()));
}

Real zeta(const Real& s_in, const PrecisionContext& ctx) {
  constexpr int kCorrections = 20;
  static const std::vector<mpq_class> bern = bernoulli_numbers(2 * kCorrections);
  long bits = ctx.work_bits();
  Real s = s_in.at_precision(bits);
  if (s == 1L) throw DomainError("zeta has a pole at s = 1");
  // Remainder after 20 corrections is about 1e18 / N^43 for s near 2.
  double digits = bits * std::log10(2.0);
  long N = std::max(10L, static_cast<long>(std::ceil(std::pow(10.0, (digits + 18) / 43)))) + 1;
  Real sum(0L, bits);
  for (long n = 1; n < N; ++n) sum += pow(Real(n, bits), -s);
  Real nn(N, bits);
  Real n_pow = pow(nn, -s);  // N^-s
  sum += nn * n_pow / (s - 1L) + n_pow / 2;
  Real poch = s;                 // s (s+1) ... (s + 2k - 2)
  Real n_term = n_pow / nn;      // N^(-s-2k+1)
  mpz_class fact = 2;            // (2k)!
  for (int k = 1; k <= kCorrections; ++k) {
    sum += from_mpq(bern[2 * k] / fact, bits) * poch * n_term;
    poch *= (s + (2L * k - 1)) * (s + 2L * k);
    n_term /= square(nn);
    fact *= (2 * k + 1) * (2 * k + 2);
  }
  return sum;
}

EisensteinLValue L_g_at_2(const PrecisionContext& ctx) {
  // The prefactor vanishes linearly at s = 2 against the pole of zeta(s - 1).
  // A symmetric difference at s = 2 +- delta has error O(delta^2); the
  // extra digits absorb the cancellation in the prefactor.
  int half = ctx.target_digits() / 2 + 3;
  PrecisionContext wide(ctx.target_digits() + half + 8, ctx.guard_bits());
  Real delta = pow10(-half, wide.work_bits());
  auto F = [&](const Real& s) {
    Real pre = -1L + pow(wide.real(3L), 1L - s) + 49 * pow(wide.real(7L), -s) -
               147 * pow(wide.real(21L), -s);
    return -24 * pre * zeta(s - 1L, wide) * zeta(s, wide);
  };
  Real two = wide.real(2L);
  Real numeric = (F(two + delta) + F(two - delta)) / 2;
  Real closed = 8 * square(ctx.pi()) * log(ctx.real(7L)) / 3;
  return {numeric.at_precision(ctx.work_bits()), closed};
}

Theorem3Check theorem3_check(const PrecisionContext& ctx, const CoefficientTable* table) {
  FamilyParams p = FamilyParams::normalized(sqrt(ctx.real(7L)), ctx.real(3L));
  Real L2 = L_f21_at_2(ctx, table);
  Real Lp = kConductor * L2 / (4 * square(ctx.pi()));
  Real log7 = log(ctx.real(7L));
  Real Lf = 21 * L2 / 4 + 9 * L_g_at_2(ctx).numeric / 32;
  return {mahler_minus(p, ctx),
          Lp / 2 + 3 * log7 / 8,
          Lf / (2 * square(ctx.pi())),
          mahler_plus(p, ctx),
          -Lp / 2 + log7 / 8,
          log7 / 2};
}

Real regulator_p_estimate(const Real& a_in, const PrecisionContext& ctx) {
  Real a = a_in.at_precision(ctx.work_bits());
  if (!(a > 1L)) throw DomainError("regulator_p_estimate requires a > 1");
  BoydParams b = boyd_params(a);
  Real m_minus = mahler_minus(FamilyParams::normalized(a, b.c), ctx);
  Real m_boyd = mahler_full(FamilyParams{ctx.real(1L), ctx.real(1L), b.k}, ctx);
  return (m_minus - m_boyd / 4) / log(a);
}

}  // namespace mahler
