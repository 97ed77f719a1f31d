#include "mahler/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "mahler/curve.hpp"
#include "mahler/elliptic.hpp"
#include "mahler/errors.hpp"
#include "mahler/lvalues.hpp"
#include "mahler/modular.hpp"

namespace mahler {

namespace {

struct Outcome {
  Real lhs;
  std::optional<Real> rhs;  // absent: reported only, never asserted
  Real tol;
};

struct Task {
  std::string id;
  std::function<Outcome()> run;
};

using TaskList = std::vector<Task>;

struct Env {
  const SuiteConfig& config;
  PrecisionContext ctx;
  Real tol;    // 10^-(digits - 5)
  Real loose;  // 10^-(digits - 10)
};

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

Real exact_count(long n, const PrecisionContext& ctx) { return ctx.real(n); }

// Largest coordinate difference, or 1 when exactly one point is at infinity.
Real point_distance(const CurvePoint& p, const CurvePoint& q, const PrecisionContext& ctx) {
  if (p.is_infinity() || q.is_infinity())
    return ctx.real(p.is_infinity() == q.is_infinity() ? 0L : 1L);
  return std::max(abs(p.X() - q.X()), abs(p.Y() - q.Y()));
}

// Uniform doubles from the raw 64-bit stream, identical on every standard library.
double unit_uniform(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

std::mutex coeff_mutex;

CoefficientTable coefficients_for(const Env& env) {
  long n = smoothed_terms_needed(env.ctx.real(1L), env.ctx);
  std::lock_guard<std::mutex> lock(coeff_mutex);
  return cached_coefficients(n, env.config.coeff_cache);
}

TaskList trivial_region(const Env& env) {
  const auto& ctx = env.ctx;
  std::vector<FamilyParams> samples;
  samples.push_back({sqrt(ctx.real(7L)), ctx.real(1L), ctx.real(3L)});
  samples.push_back({ctx.real(5L), ctx.real(2L), ctx.real(6L)});
  for (double a : {2.0, 2.5, 3.0, -3.5, 5.0}) {
    for (auto [b, f] : {std::pair{1.0, 0.0}, {0.5, 0.4}, {-1.5, 0.8}, {1.0, 0.95}}) {
      double c = f * 2 * std::abs(std::abs(a) - std::abs(b));
      samples.push_back({ctx.real(a), ctx.real(b), ctx.real(c)});
    }
  }
  TaskList tasks;
  for (const auto& p : samples) {
    std::string tag = "(" + fmt(p.a.to_double()) + "," + fmt(p.b.to_double()) + "," +
                      fmt(p.c.to_double()) + ")";
    tasks.push_back({"trivial-region.quad." + tag, [&env, p] {
                       auto value = trivial_region_value(p);
                       if (!value) throw DomainError("outside the trivial region");
                       return Outcome{mahler_full(p, env.ctx), *value, env.tol};
                     }});
    tasks.push_back({"trivial-region.oracle." + tag, [&env, p] {
                       Real want = *trivial_region_value(p);
                       return Outcome{brute_force_mahler_oracle(p, 512).at_precision(want.precision()),
                                      want, env.ctx.real(1e-3)};
                     }});
  }
  tasks.push_back({"trivial-region.oracle.(2,1,0).grid=256", [&env] {
                     FamilyParams p{env.ctx.real(2L), env.ctx.real(1L), env.ctx.real(0L)};
                     return Outcome{brute_force_mahler_oracle(p, 256).at_precision(env.ctx.work_bits()),
                                    log(env.ctx.real(2L)), env.ctx.real(1e-3)};
                   }});
  tasks.push_back({"trivial-region.absent.(1,1,3)", [&env] {
                     FamilyParams p{env.ctx.real(1L), env.ctx.real(1L), env.ctx.real(3L)};
                     return Outcome{exact_count(trivial_region_value(p).has_value(), env.ctx),
                                    env.ctx.real(0L), env.ctx.real(0L)};
                   }});
  return tasks;
}

TaskList jensen_split(const Env& env) {
  const auto& ctx = env.ctx;
  std::vector<std::pair<Real, Real>> samples{{sqrt(ctx.real(7L)), ctx.real(3L)},
                                             {ctx.real(2L), ctx.real(1L)},
                                             {ctx.real(3L), ctx.real(2.5)},
                                             {ctx.real(1.5), ctx.real(0.8)},
                                             {ctx.real(1L), ctx.real(3L)},
                                             {ctx.real(1.2), ctx.real(2.5)}};
  TaskList tasks;
  for (const auto& [a, c] : samples) {
    std::string tag = "(" + fmt(a.to_double()) + "," + fmt(c.to_double()) + ")";
    FamilyParams p = FamilyParams::normalized(a, c);
    tasks.push_back({"jensen-split.decomposition." + tag, [&env, p] {
                       return Outcome{mahler_full(p, env.ctx),
                                      mahler_minus(p, env.ctx) + mahler_plus(p, env.ctx), env.tol};
                     }});
    if (a >= 1L + c / 2) {
      tasks.push_back({"jensen-split.log-a." + tag, [&env, p] {
                         return Outcome{mahler_minus(p, env.ctx) + mahler_plus(p, env.ctx),
                                        log(p.a), env.tol};
                       }});
    }
  }
  tasks.push_back({"jensen-split.oracle.(1,1,3)", [&env] {
                     FamilyParams p{env.ctx.real(1L), env.ctx.real(1L), env.ctx.real(3L)};
                     return Outcome{brute_force_mahler_oracle(p, 512).at_precision(env.ctx.work_bits()),
                                    mahler_full(p, env.ctx), env.ctx.real(1e-2)};
                   }});
  return tasks;
}

TaskList theorem2(const Env& env) {
  TaskList tasks;
  for (double k : env.config.k_grid) {
    tasks.push_back({"theorem2.k=" + fmt(k), [&env, k] {
                       const auto& ctx = env.ctx;
                       Real kk = ctx.real(k);
                       Real full = mahler_full(FamilyParams{ctx.real(1L), ctx.real(1L), kk}, ctx);
                       if (k >= 4) return Outcome{full, std::nullopt, env.tol};
                       Real a = boyd_a_from_k(kk);
                       FamilyParams p = FamilyParams::normalized(a, boyd_params(a).c);
                       return Outcome{full, mahler_minus(p, ctx) - 3 * mahler_plus(p, ctx), env.tol};
                     }});
  }
  return tasks;
}

TaskList theorem3(const Env& env) {
  auto lp = [&env] {
    CoefficientTable t = coefficients_for(env);
    return Lprime_f21_at_0(env.ctx, &t);
  };
  auto params = [&env] { return FamilyParams::normalized(sqrt(env.ctx.real(7L)), env.ctx.real(3L)); };
  auto log7 = [&env] { return log(env.ctx.real(7L)); };
  TaskList tasks;
  tasks.push_back({"theorem3.minus", [=, &env] {
                     return Outcome{mahler_minus(params(), env.ctx), lp() / 2 + 3 * log7() / 8, env.tol};
                   }});
  tasks.push_back({"theorem3.plus", [=, &env] {
                     return Outcome{mahler_plus(params(), env.ctx), -lp() / 2 + log7() / 8, env.tol};
                   }});
  tasks.push_back({"theorem3.sum", [=, &env] {
                     auto p = params();
                     return Outcome{mahler_minus(p, env.ctx) + mahler_plus(p, env.ctx), log7() / 2,
                                    env.tol};
                   }});
  tasks.push_back({"theorem3.decomposition", [=, &env] {
                     // L(f, 2)/(2 pi^2) with f = (21/4) f21 + (9/32) g.
                     CoefficientTable t = coefficients_for(env);
                     Real pi2 = square(env.ctx.pi());
                     Real Lf = 21 * L_f21_at_2(env.ctx, &t) / 4 + 9 * L_g_at_2(env.ctx).numeric / 32;
                     return Outcome{Lf / (2 * pi2), lp() / 2 + 3 * log7() / 8, env.tol};
                   }});
  return tasks;
}

TaskList boyd21(const Env& env) {
  return {{"boyd21.k=3", [&env] {
             const auto& ctx = env.ctx;
             CoefficientTable t = coefficients_for(env);
             Real m = mahler_full(FamilyParams{ctx.real(1L), ctx.real(1L), ctx.real(3L)}, ctx);
             return Outcome{m, 2 * Lprime_f21_at_0(ctx, &t), env.tol};
           }}};
}

Real central_difference(const std::function<Real(const Real&)>& f, const Real& x, const Real& h) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

TaskList elliptic_lemmas(const Env& env) {
  TaskList tasks;
  for (double v : env.config.v_grid) {
    tasks.push_back({"elliptic-lemmas.weighted-period.v=" + fmt(v), [&env, v] {
                       return Outcome{lemma_EI2_check(env.ctx.real(v), env.ctx),
                                      3 * env.ctx.pi() / 2, env.tol};
                     }});
    tasks.push_back({"elliptic-lemmas.two-quadratures.v=" + fmt(v), [&env, v] {
                       auto [l, r] = lemma_EI1_check(env.ctx.real(v), env.ctx);
                       return Outcome{l, r, env.tol};
                     }});
  }
  tasks.push_back({"elliptic-lemmas.legendre-form.v=1.25", [&env] {
                     auto s = SubstitutionParams::from_v(env.ctx.real(1.25), env.ctx);
                     return Outcome{legendre_form(s.r, env.ctx), 3 * env.ctx.pi() / 2, env.tol};
                   }});
  for (double z : {0.1, 0.25, 0.37, 0.5, 0.7}) {
    tasks.push_back({"elliptic-lemmas.quadratic-transformation.z=" + fmt(z), [&env, z] {
                       const auto& ctx = env.ctx;
                       Real zz = ctx.real(z);
                       return Outcome{hyp2f1_half(4 * zz / square(1L + zz), ctx),
                                      (1L + zz) * hyp2f1_half(square(zz), ctx), env.tol};
                     }});
  }
  Real fd_tol = env.ctx.real(1e-8);
  auto fd = [&](std::string id, std::function<Real()> exact,
                std::function<Real(const Real&)> f, double at) {
    tasks.push_back({"elliptic-lemmas.derivative." + id, [&env, exact, f, at, fd_tol] {
                       Real h = pow10(-10, env.ctx.work_bits());
                       return Outcome{exact(), central_difference(f, env.ctx.real(at), h), fd_tol};
                     }});
  };
  const PrecisionContext& ctx = env.ctx;
  for (double z : {0.3, 0.6}) {
    fd("dK/dz.z=" + fmt(z), [&ctx, z] { return dK_dz(ctx.real(z), ctx); },
       [&ctx](const Real& x) { return ellint_K(x, ctx); }, z);
  }
  fd("dPi/dn.(0.2,0.4)", [&ctx] { return dPi_dn(ctx.real(0.2), ctx.real(0.4), ctx); },
     [&ctx](const Real& x) { return ellint_Pi(x, ctx.real(0.4), ctx); }, 0.2);
  fd("dPi/dz.(0.2,0.4)", [&ctx] { return dPi_dz(ctx.real(0.2), ctx.real(0.4), ctx); },
     [&ctx](const Real& x) { return ellint_Pi(ctx.real(0.2), x, ctx); }, 0.4);
  fd("df/dr.r=0.45", [&ctx] { return legendre_f_prime(ctx.real(0.45)); },
     [](const Real& x) { return legendre_f(x); }, 0.45);
  for (double r : {0.1, 0.5, 0.9}) {
    tasks.push_back({"elliptic-lemmas.legendre-form-stationary.r=" + fmt(r), [&env, r] {
                       return Outcome{legendre_form_derivative(env.ctx.real(r), env.ctx),
                                      env.ctx.real(0L), env.tol};
                     }});
  }
  for (double u : env.config.u_grid) {
    tasks.push_back({"elliptic-lemmas.period-derivative.u=" + fmt(u), [&env, u] {
                       Periods p = periods_IJK(env.ctx.real(u), env.ctx);
                       auto [l, r] = derivative_identity_sides(env.ctx.real(u), p);
                       return Outcome{l, r, env.tol};
                     }});
  }
  return tasks;
}

Real order_or_zero(const CurvePoint& p, const WeierstrassCurve& e, const PrecisionContext& ctx) {
  auto n = torsion_order(p, e, ctx);
  return ctx.real(static_cast<long>(n.value_or(0)));
}

std::vector<std::pair<std::string, double>> c0_family() {
  return {{"sqrt3", std::sqrt(3.0)}, {"sqrt7", std::sqrt(7.0)}, {"2", 2.0}};
}

Real exact_a(const std::string& name, const PrecisionContext& ctx) {
  if (name == "sqrt2") return sqrt(ctx.real(2L));
  if (name == "sqrt3") return sqrt(ctx.real(3L));
  if (name == "sqrt7") return sqrt(ctx.real(7L));
  return ctx.real(std::stol(name));
}

TaskList curve_torsion(const Env& env) {
  TaskList tasks;
  for (const auto& [name, unused] : c0_family()) {
    (void)unused;
    for (const char* which : {"S+", "S-", "T+", "T-"}) {
      std::string w = which;
      tasks.push_back({"curve-torsion.c0.a=" + name + "." + w, [&env, name, w] {
                         const auto& ctx = env.ctx;
                         Real a = exact_a(name, ctx);
                         Real c = c0_value(a);
                         auto e = WeierstrassCurve::from_family(a, c);
                         auto np = named_points(a, c, ctx);
                         if (!np.T_plus) throw RegionError("T points absent");
                         const CurvePoint& p = w == "S+"   ? np.S_plus
                                               : w == "S-" ? np.S_minus
                                               : w == "T+" ? *np.T_plus
                                                           : *np.T_minus;
                         return Outcome{order_or_zero(p, e, ctx), ctx.real(8L), ctx.real(0L)};
                       }});
    }
  }
  for (long a : {2L, 3L}) {
    tasks.push_back({"curve-torsion.P.c=a^2-1.a=" + std::to_string(a), [&env, a] {
                       const auto& ctx = env.ctx;
                       Real c = ctx.real(a * a - 1);
                       auto e = WeierstrassCurve::from_family(ctx.real(a), c);
                       CurvePoint P = CurvePoint::affine(ctx.real(1L), c / 2);
                       return Outcome{order_or_zero(P, e, ctx), ctx.real(3L), ctx.real(0L)};
                     }});
  }
  return tasks;
}

TaskList isogeny(const Env& env) {
  TaskList tasks;
  for (const auto& [name, unused] : c0_family()) {
    (void)unused;
    auto setup = [&env, name = name] {
      const auto& ctx = env.ctx;
      Real a = exact_a(name, ctx);
      Real k = 4 * (square(a) - 1L) / (square(a) + 1L);
      return std::tuple{a, named_points(a, c0_value(a), ctx), named_points(ctx.real(1L), k, ctx),
                        WeierstrassCurve::isogeny_target(a)};
    };
    std::string base = "isogeny.a=" + name + ".";
    tasks.push_back({base + "image-residual", [&env, setup] {
                       auto [a, np, npb, target] = setup();
                       if (!np.T_plus) throw RegionError("T points absent");
                       Real worst = env.ctx.real(0L);
                       for (const CurvePoint* p : {&np.P, &np.Q, &np.S_plus, &np.S_minus,
                                                   &*np.T_plus, &*np.T_minus}) {
                         CurvePoint img = isogeny_phi(*p, a);
                         worst = std::max(worst, target.residual(img.X(), img.Y()));
                       }
                       return Outcome{worst, env.ctx.real(0L), env.tol};
                     }});
    auto image_check = [&](std::string id, auto pick) {
      tasks.push_back({base + id, [&env, setup, pick] {
                         auto [a, np, npb, target] = setup();
                         if (!np.T_plus) throw RegionError("T points absent");
                         auto [lhs, rhs] = pick(a, np, npb, target);
                         return Outcome{point_distance(lhs, rhs, env.ctx), env.ctx.real(0L), env.tol};
                       }});
    };
    image_check("phi(P)=P'", [](auto& a, auto& np, auto& npb, auto&) {
      return std::pair{isogeny_phi(np.P, a), npb.P};
    });
    image_check("phi(Q)=P'", [](auto& a, auto& np, auto& npb, auto&) {
      return std::pair{isogeny_phi(np.Q, a), npb.P};
    });
    image_check("phi(S+)=S'+", [](auto& a, auto& np, auto& npb, auto&) {
      return std::pair{isogeny_phi(np.S_plus, a), npb.S_plus};
    });
    image_check("phi(T-)=S'+", [](auto& a, auto& np, auto& npb, auto&) {
      return std::pair{isogeny_phi(*np.T_minus, a), npb.S_plus};
    });
    image_check("phi(S-)=S'-", [](auto& a, auto& np, auto& npb, auto&) {
      return std::pair{isogeny_phi(np.S_minus, a), npb.S_minus};
    });
    image_check("phi(T+)=S'-", [](auto& a, auto& np, auto& npb, auto&) {
      return std::pair{isogeny_phi(*np.T_plus, a), npb.S_minus};
    });
  }
  tasks.push_back({"isogeny.a=sqrt7.homomorphism", [&env] {
                     const auto& ctx = env.ctx;
                     Real a = sqrt(ctx.real(7L));
                     auto e = WeierstrassCurve::from_family(a, c0_value(a));
                     auto target = WeierstrassCurve::isogeny_target(a);
                     std::mt19937_64 rng(2027);
                     auto random_point = [&] {
                       Complex X(ctx.real(6 * unit_uniform(rng) - 3), ctx.real(6 * unit_uniform(rng) - 3));
                       return CurvePoint::affine(X, sqrt(e.rhs(X)));
                     };
                     Real worst = ctx.real(0L);
                     for (int i = 0; i < 20; ++i) {
                       CurvePoint p = random_point(), q = random_point();
                       CurvePoint lhs = isogeny_phi(add(p, q, e, ctx), a);
                       CurvePoint rhs = add(isogeny_phi(p, a), isogeny_phi(q, a), target, ctx);
                       worst = std::max(worst, point_distance(lhs, rhs, ctx));
                     }
                     return Outcome{worst, ctx.real(0L), env.tol};
                   }});
  return tasks;
}

TaskList tame_symbols(const Env& env) {
  static const char* const kLabels[] = {"P", "-Q", "P+Q", "O"};
  TaskList tasks;
  for (int i = 0; i < 4; ++i) {
    tasks.push_back({std::string("tame-symbols.a=sqrt7.") + kLabels[i], [&env, i] {
                       const auto& ctx = env.ctx;
                       Real a = sqrt(ctx.real(7L));
                       auto s = tame_symbol_magnitudes(a, ctx.real(3L), ctx);
                       Real want = i < 2 ? 1L / a : a;
                       Real err = std::max(abs(s[i].numeric - want), abs(s[i].expected - want));
                       return Outcome{err, ctx.real(0L), ctx.real(1e-10)};
                     }});
    tasks.push_back({std::string("tame-symbols.x0.") + kLabels[i], [&env, i] {
                       const auto& ctx = env.ctx;
                       Real a = sqrt(ctx.real(7L));
                       auto s = tame_symbol_magnitudes(a, ctx.real(3L), ctx, a);
                       static const long kNum[] = {1, 1, 1, 7}, kDen[] = {7, 1, 1, 1};
                       Real want = ctx.ratio(kNum[i], kDen[i]);
                       Real err = std::max(abs(s[i].numeric - want), abs(s[i].expected - want));
                       return Outcome{err, ctx.real(0L), ctx.real(1e-10)};
                     }});
  }
  return tasks;
}

long nonzero_terms(const QSeries& s) {
  return std::count_if(s.coeffs().begin(), s.coeffs().end(), [](const mpq_class& c) { return c != 0; });
}

TaskList ramanujan68(const Env& env) {
  TaskList tasks;
  for (int order : {50, 100, 200}) {
    tasks.push_back({"ramanujan68.entry.order=" + std::to_string(order), [&env, order] {
                       QSeries r = ramanujan_entry68_residual(order);
                       if (r.order() < order) throw NonConvergence("residual lost precision");
                       return Outcome{exact_count(nonzero_terms(r), env.ctx), env.ctx.real(0L),
                                      env.ctx.real(0L)};
                     }});
  }
  tasks.push_back({"ramanujan68.curve-series.order=100", [&env] {
                     QSeries r = curve_residual_series(100);
                     return Outcome{exact_count(nonzero_terms(r), env.ctx), env.ctx.real(0L),
                                    env.ctx.real(0L)};
                   }});
  return tasks;
}

std::vector<Complex> tau_sample(int n, const PrecisionContext& ctx) {
  std::vector<Complex> out;
  for (int j = 0; j < n; ++j) {
    Real re = ctx.ratio(-45, 100) + ctx.ratio(90, 100) * j / std::max(1, n - 1);
    Real im = ctx.ratio(5, 100) + ctx.ratio(95, 100) * ((7 * j) % n) / n;
    out.emplace_back(re, im);
  }
  return out;
}

TaskList parametrization(const Env& env) {
  TaskList tasks;
  int n = env.config.tau_samples;
  for (int j = 0; j < n; ++j) {
    tasks.push_back({"parametrization.residual.tau" + std::to_string(j), [&env, j, n] {
                       Complex tau = tau_sample(n, env.ctx)[j];
                       return Outcome{abs(parametrization_residual(tau, env.ctx)), env.ctx.real(0L),
                                      env.tol};
                     }});
  }
  tasks.push_back({"parametrization.units.x0", [&env] {
                     return Outcome{exact_count(nonzero_terms(x0_series(100) - x0_from_units(100)), env.ctx),
                                    env.ctx.real(0L), env.ctx.real(0L)};
                   }});
  tasks.push_back({"parametrization.units.y", [&env] {
                     QSeries d = y_tilde_series(100) - y_tilde_from_units(100);
                     return Outcome{exact_count(nonzero_terms(d), env.ctx), env.ctx.real(0L),
                                    env.ctx.real(0L)};
                   }});
  for (int i = 0; i < 4; ++i) {
    static const char* const kNames[] = {"S+", "S-", "T+", "T-"};
    tasks.push_back({std::string("parametrization.cm-image.") + kNames[i], [&env, i] {
                       auto r = cm_image_checks(env.ctx);
                       return Outcome{r[i].value, env.ctx.real(0L), env.loose};
                     }});
  }
  return tasks;
}

TaskList atkin_lehner(const Env& env) {
  TaskList tasks;
  tasks.push_back({"atkin-lehner.matrices", [&env] {
                     Real worst = env.ctx.real(0L);
                     for (const auto& r : atkin_lehner_matrix_checks(env.ctx)) worst = std::max(worst, r.value);
                     return Outcome{worst, env.ctx.real(0L), env.tol};
                   }});
  const int kSamples = 5;
  for (int j = 0; j < kSamples; ++j) {
    tasks.push_back({"atkin-lehner.geodesic" + std::to_string(j), [&env, j] {
                       const auto& ctx = env.ctx;
                       Complex tau = geodesic_samples(kSamples, ctx)[j];
                       Real worst = ctx.real(0L);
                       for (const auto& r : atkin_lehner_checks(tau, ctx)) worst = std::max(worst, r.value);
                       worst = std::max(worst, abs(abs(x_tilde(tau, ctx)) - 1L));
                       worst = std::max(worst, abs(y_tilde(tau, ctx).im()));
                       return Outcome{worst, ctx.real(0L), env.loose};
                     }});
  }
  tasks.push_back({"atkin-lehner.midpoint.|x|=1", [&env] {
                     Complex tau(env.ctx.real(0L), 1L / sqrt(env.ctx.real(21L)));
                     return Outcome{abs(x_tilde(tau, env.ctx)), env.ctx.real(1L), env.loose};
                   }});
  tasks.push_back({"atkin-lehner.midpoint.|y|<1", [&env] {
                     Complex tau(env.ctx.real(0L), 1L / sqrt(env.ctx.real(21L)));
                     bool inside = abs(y_tilde(tau, env.ctx)) < 1L;
                     return Outcome{exact_count(inside, env.ctx), env.ctx.real(1L), env.ctx.real(0L)};
                   }});
  return tasks;
}

TaskList lvalue_eisenstein(const Env& env) {
  TaskList tasks;
  tasks.push_back({"lvalue-eisenstein.L(g,2)", [&env] {
                     auto v = L_g_at_2(env.ctx);
                     return Outcome{v.numeric, v.closed_form, env.loose};
                   }});
  static const long kPrefix[] = {12, 15, 12, 42};
  static const long kF21[] = {1, -1, 1, -1};
  for (int n = 1; n <= 4; ++n) {
    tasks.push_back({"lvalue-eisenstein.f21.q^" + std::to_string(n), [&env, n] {
                       CoefficientTable t = build_coefficients(4);
                       return Outcome{env.ctx.real(t[n]), env.ctx.real(kF21[n - 1]), env.ctx.real(0L)};
                     }});
    tasks.push_back({"lvalue-eisenstein.f.q^" + std::to_string(n), [&env, n] {
                       CoefficientTable t = build_coefficients(4);
                       QSeries f = lemma_f_series({t.a.begin() + 1, t.a.end()}, 5);
                       mpq_class c = f.coeff(n);
                       if (c.get_den() != 1) throw DomainError("non-integral coefficient");
                       return Outcome{env.ctx.real(c.get_num().get_si()), env.ctx.real(kPrefix[n - 1]),
                                      env.ctx.real(0L)};
                     }});
  }
  return tasks;
}

TaskList regulator_p(const Env& env) {
  TaskList tasks;
  for (const auto& [name, unused] : c0_family()) {
    (void)unused;
    tasks.push_back({"regulator-p.a=" + name, [&env, name = name] {
                       return Outcome{regulator_p_estimate(exact_a(name, env.ctx), env.ctx),
                                      env.ctx.ratio(3, 4), env.tol};
                     }});
    tasks.push_back({"regulator-p.a=" + name + ".eighths", [&env, name = name] {
                       Real p = regulator_p_estimate(exact_a(name, env.ctx), env.ctx);
                       return Outcome{round(p * 8L), env.ctx.real(6L), env.ctx.real(0L)};
                     }});
  }
  return tasks;
}

TaskList conclusion_family(const Env& env) {
  TaskList tasks;
  for (std::string name : {"sqrt2", "2"}) {
    tasks.push_back({"conclusion-family.a=" + name, [&env, name] {
                       const auto& ctx = env.ctx;
                       Real a = exact_a(name, ctx);
                       Real rhs = 3 * mahler_full(FamilyParams{a, ctx.real(1L), square(a) - 1L}, ctx) / 2 -
                                  log(a);
                       return Outcome{mahler_conclusion_family(a, ctx), rhs, env.loose};
                     }});
  }
  return tasks;
}

struct SuiteEntry {
  SuiteInfo info;
  TaskList (*build)(const Env&);
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries{
      {{"trivial-region", "m(P_{a,b,c}) = log max(|a|, |b|) when |c| <= 2||a| - |b||"}, trivial_region},
      {{"jensen-split", "m = m^- + m^+, and m^- + m^+ = log a when a >= 1 + c/2"}, jensen_split},
      {{"theorem2", "m(P_{1,k}) = m^-(P_{a,c}) - 3 m^+(P_{a,c}) for 0 < k < 4"}, theorem2},
      {{"theorem3", "m^-(P_{sqrt7,3}) = L'(f21,0)/2 + (3/8) log 7, with its companion"}, theorem3},
      {{"boyd21", "m(x + 1/x + y + 1/y + 3) = 2 L'(f21, 0)"}, boyd21},
      {{"elliptic-lemmas", "period identities, quadratic transformation, K and Pi derivatives"},
       elliptic_lemmas},
      {{"curve-torsion", "S, T of order 8 when 2P = 2Q; P of order 3 when c = a^2 - 1"}, curve_torsion},
      {{"isogeny", "the 2-isogeny to the Boyd curve: images and homomorphism"}, isogeny},
      {{"tame-symbols", "tame symbol magnitudes at P, -Q, P+Q, O"}, tame_symbols},
      {{"ramanujan68", "eta-quotient identity behind the modular parametrization"}, ramanujan68},
      {{"parametrization", "(x~, y~)(tau) lies on the sqrt7, 3 curve; CM points map to S, T"},
       parametrization},
      {{"atkin-lehner", "W21 and W7 act on x~, y~ and fix the geodesic |tau|^2 = 1/21"}, atkin_lehner},
      {{"lvalue-eisenstein", "L(g, 2) = (8 pi^2/3) log 7 and the f expansion 12, 15, 12, 42"},
       lvalue_eisenstein},
      {{"regulator-p", "the rational in the regulator relation is 3/4"}, regulator_p},
      {{"conclusion-family", "m((1+x)(1+y)(x+y) - (a^2-1)xy) = (3/2) m(P_{a,a^2-1}) - log a"},
       conclusion_family},
  };
  return entries;
}

const SuiteEntry& find_suite(const std::string& name) {
  for (const auto& e : registry())
    if (e.info.name == name) return e;
  throw UnknownSuite("unknown suite '" + name + "'");
}

CheckResult execute(const Task& task, const Env& env) {
  CheckResult r;
  r.check_id = task.id;
  auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = task.run();
    r.lhs = to_decimal(o.lhs, env.ctx.target_digits() + 5);
    r.tolerance = to_decimal(o.tol, 3);
    if (!o.rhs) {
      r.status = CheckStatus::skipped;
    } else {
      Real d = abs(o.lhs - *o.rhs);
      r.rhs = to_decimal(*o.rhs, env.ctx.target_digits() + 5);
      r.abs_diff = to_decimal(d, 6);
      r.status = d <= o.tol ? CheckStatus::pass : CheckStatus::fail;
    }
  } catch (const std::exception& e) {
    r.lhs = std::string("error: ") + e.what();
    r.status = CheckStatus::fail;
  }
  r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return r;
}

Env make_env(const SuiteConfig& config) {
  config.validate();
  PrecisionContext ctx(config.digits);
  return {config, ctx, pow10(-(config.digits - 5), ctx.work_bits()),
          pow10(-(config.digits - 10), ctx.work_bits())};
}

std::vector<CheckResult> run_tasks(const TaskList& tasks, const Env& env, int threads) {
  std::vector<CheckResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) results[i] = execute(tasks[i], env);
  };
  int n = threads > 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<int>(n, static_cast<int>(tasks.size()));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
  return results;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "fail";
}

void SuiteConfig::validate() const {
  if (digits < 10) throw DomainError("digits must be at least 10");
  if (tau_samples < 1) throw DomainError("tau sample count must be positive");
  for (double k : k_grid)
    if (!(k > 0)) throw DomainError("k-grid values must be positive");
  for (double v : v_grid)
    if (!(v > 1 && v < std::sqrt(2.0))) throw DomainError("v-grid values must lie in (1, sqrt 2)");
  for (double u : u_grid)
    if (!(u > 1 + std::sqrt(2.0))) throw DomainError("u-grid values must exceed 1 + sqrt 2");
  for (const auto& s : suites) find_suite(s);
}

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteConfig& config) {
  const SuiteEntry& entry = find_suite(name);
  Env env = make_env(config);
  return run_tasks(entry.build(env), env, config.threads);
}

std::vector<CheckResult> run_suites(const SuiteConfig& config) {
  Env env = make_env(config);
  TaskList all;
  for (const auto& e : registry()) {
    if (!config.suites.empty() &&
        std::find(config.suites.begin(), config.suites.end(), e.info.name) == config.suites.end())
      continue;
    for (auto& t : e.build(env)) all.push_back(std::move(t));
  }
  return run_tasks(all, env, config.threads);
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const CheckResult& r) { return r.status == CheckStatus::fail; });
}

nlohmann::json report_json(const std::vector<CheckResult>& results, const SuiteConfig& config,
                           bool timing) {
  nlohmann::json cfg{{"digits", config.digits},
                     {"suites", config.suites},
                     {"k_grid", config.k_grid},
                     {"v_grid", config.v_grid},
                     {"u_grid", config.u_grid},
                     {"tau_samples", config.tau_samples},
                     {"coeff_cache", config.coeff_cache ? config.coeff_cache->string() : ""}};
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : results) {
    rows.push_back({{"check_id", r.check_id},
                    {"lhs", r.lhs},
                    {"rhs", r.rhs},
                    {"abs_diff", r.abs_diff},
                    {"tolerance", r.tolerance},
                    {"status", to_string(r.status)},
                    {"wall_time_ms", timing ? r.wall_time_ms : 0}});
  }
  return {{"config", cfg}, {"results", rows}};
}

Real brute_force_mahler_oracle(const FamilyParams& p, int grid) {
  if (grid < 64) throw DomainError("brute-force oracle needs grid >= 64");
  double a = p.a.to_double(), b = p.b.to_double(), c = p.c.to_double();
  std::vector<double> cosines(grid);
  for (int j = 0; j < grid; ++j) cosines[j] = 2 * std::cos(2 * M_PI * (j + 0.5) / grid);
  double sum = 0;
  for (int i = 0; i < grid; ++i) {
    double row = a * cosines[i] + c;
    for (int j = 0; j < grid; ++j) {
      double v = std::abs(row + b * cosines[j]);
      if (v < 1e-300) throw SingularNode("lattice node on a zero of P; change the grid");
      sum += std::log(v);
    }
  }
  return Real(sum / (double(grid) * grid), 64);
}

}  // namespace mahler
