#include "fgl/young.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace fgl {

namespace {

constexpr double kCapMax = 1e150;

bool overflowed(double v, double sentinel) { return !std::isfinite(v) || v >= sentinel; }

void require_nonneg(double t, const char* what) {
  if (!(t >= 0.0)) throw Error(std::string(what) + ": negative or NaN argument");
}

}  // namespace

double compute_domain_cap(const ScalarFn& G_raw, double sentinel) {
  double lo = 0.0, hi = 1.0;
  while (!overflowed(G_raw(hi), sentinel)) {
    lo = hi;
    hi *= 2.0;
    if (hi >= kCapMax) return kCapMax;
  }
  for (int i = 0; i < 200 && (hi - lo) > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (overflowed(G_raw(mid), sentinel))
      hi = mid;
    else
      lo = mid;
  }
  return lo;
}

double eval_G(const YoungFunction& Y, double t) {
  require_nonneg(t, "eval_G");
  if (t > Y.domain_cap)
    throw OverflowDomain(Y.name + ": G(" + std::to_string(t) + ") exceeds domain cap " +
                         std::to_string(Y.domain_cap));
  return Y.G(t);
}

double eval_g(const YoungFunction& Y, double t) {
  require_nonneg(t, "eval_g");
  if (t > Y.domain_cap)
    throw OverflowDomain(Y.name + ": g(" + std::to_string(t) + ") exceeds domain cap");
  return Y.g(t);
}

double eval_g_inv(const YoungFunction& Y, double tau) {
  require_nonneg(tau, "eval_g_inv");
  if (tau == 0.0) return 0.0;
  if (Y.has_g_inv()) return Y.g_inv(tau);

  // Bracket by geometric growth, then bisect toward inf{t : g(t) >= tau}.
  double lo = 0.0, hi = 1.0;
  while (Y.g(hi) < tau) {
    lo = hi;
    hi *= 2.0;
    if (hi > Y.domain_cap) {
      if (Y.g(Y.domain_cap) >= tau) {
        hi = Y.domain_cap;
        break;
      }
      throw BracketFailure(Y.name + ": g cannot bracket " + std::to_string(tau) +
                           " below domain cap");
    }
  }
  for (int i = 0; i < 200 && (hi - lo) > 1e-15 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (Y.g(mid) < tau)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

double eval_g_prime(const YoungFunction& Y, double t) {
  require_nonneg(t, "eval_g_prime");
  if (Y.has_g_prime()) return Y.g_prime(t);
  const double h = std::max(1e-6, 1e-6 * t);
  const double lo = std::max(0.0, t - h);
  return (Y.g(t + h) - Y.g(lo)) / (t + h - lo);
}

double adaptive_simpson(const ScalarFn& f, double a, double b, double abs_tol, long budget) {
  if (b <= a) return 0.0;
  long evals = 0;
  auto ev = [&](double x) {
    ++evals;
    return f(x);
  };
  struct Seg {
    double a, b, fa, fm, fb, S;
    double tol;
  };
  auto simpson = [](double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  };
  const double m0 = 0.5 * (a + b);
  const double fa0 = ev(a), fm0 = ev(m0), fb0 = ev(b);
  std::vector<Seg> stack{{a, b, fa0, fm0, fb0, simpson(a, b, fa0, fm0, fb0), abs_tol}};
  double total = 0.0;
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (evals > budget)
      throw QuadratureNonConvergence("adaptive_simpson: evaluation budget exhausted");
    const double m = 0.5 * (s.a + s.b);
    const double lm = 0.5 * (s.a + m), rm = 0.5 * (m + s.b);
    const double flm = ev(lm), frm = ev(rm);
    const double Sl = simpson(s.a, m, s.fa, flm, s.fm);
    const double Sr = simpson(m, s.b, s.fm, frm, s.fb);
    const double S2 = Sl + Sr;
    const double err = S2 - s.S;
    if (std::abs(err) <= 15.0 * s.tol || (s.b - s.a) < 1e-15 * (b - a)) {
      total += S2 + err / 15.0;
    } else {
      stack.push_back({s.a, m, s.fa, flm, s.fm, Sl, 0.5 * s.tol});
      stack.push_back({m, s.b, s.fm, frm, s.fb, Sr, 0.5 * s.tol});
    }
  }
  return total;
}

double conjugate_by_quadrature(const YoungFunction& Y, double t) {
  require_nonneg(t, "eval_conjugate");
  if (t == 0.0) return 0.0;
  auto ginv = [&](double tau) { return eval_g_inv(Y, tau); };
  // Absolute tolerance 1e-10, relaxed proportionally for large values.
  const double rough = t * ginv(t);
  const double tol = std::max(1e-10, 1e-12 * rough);
  return adaptive_simpson(ginv, 0.0, t, tol);
}

double eval_conjugate(const YoungFunction& Y, double t) {
  require_nonneg(t, "eval_conjugate");
  if (Y.has_conjugate_closed_form()) return Y.conj_closed_form(t);
  return conjugate_by_quadrature(Y, t);
}

YoungFunction conjugate_function(const YoungFunction& Y) {
  YoungFunction C;
  C.name = Y.name + "~";
  if (Y.has_conjugate_closed_form()) {
    C.G = Y.conj_closed_form;
  } else {
    YoungFunction base = Y;  // copy captured by value; closures stay valid
    C.G = [base](double t) { return conjugate_by_quadrature(base, t); };
  }
  if (Y.has_g_inv()) {
    C.g = Y.g_inv;
  } else {
    YoungFunction base = Y;
    C.g = [base](double tau) { return eval_g_inv(base, tau); };
  }
  C.g_inv = Y.g;  // inverse of g~ is g itself
  C.conj_closed_form = Y.G;
  C.domain_cap = compute_domain_cap([&C](double t) {
    try {
      return C.G(t);
    } catch (const Error&) {
      return std::numeric_limits<double>::infinity();
    }
  });
  return C;
}

GrowthReport growth_indices(const YoungFunction& Y, double t_lo, double t_hi, int samples) {
  if (!(t_lo > 0.0) || !(t_hi > t_lo) || samples < 2)
    throw Error("growth_indices: need 0 < t_lo < t_hi and samples >= 2");
  if (t_hi > Y.domain_cap) throw OverflowDomain(Y.name + ": growth sample range exceeds cap");

  std::vector<double> ratio(samples);
  const double log_ratio = std::log(t_hi / t_lo);
  for (int k = 0; k < samples; ++k) {
    const double t = t_lo * std::exp(log_ratio * k / (samples - 1));
    ratio[k] = t * Y.g(t) / Y.G(t);
  }
  GrowthReport rep;
  rep.p_minus_est = *std::min_element(ratio.begin(), ratio.end());
  rep.p_plus_est = *std::max_element(ratio.begin(), ratio.end());
  rep.sample_range = {t_lo, t_hi};

  // Doubling verdict: the ratio must stay bounded, i.e. not keep climbing
  // through the top decile of the sampled range.
  const int head = std::max(samples - std::max(3, samples / 10), 0);
  bool increasing = true;
  for (int k = head; k + 1 < samples; ++k)
    if (ratio[k + 1] <= ratio[k] * (1.0 + 1e-9)) increasing = false;
  rep.delta2_holds_numeric = std::isfinite(rep.p_plus_est) && !increasing;
  return rep;
}

YoungFunction sobolev_conjugate(const YoungFunction& Y, double s, int n) {
  if (!(s > 0.0 && s < 1.0)) throw Error("sobolev_conjugate: s must lie in (0,1)");
  if (n < 1) throw Error("sobolev_conjugate: dimension must be >= 1");
  const double expo = s / (n - s);
  YoungFunction base = Y;
  auto psi = [base, expo](double tau) { return std::pow(tau / base.G(tau), expo); };

  // Dyadic decay scan of the integral near 0. Level ratios >= ~1 mean the
  // lower integral in the structural condition diverges.
  const int levels = 46;
  std::vector<double> I(levels);
  for (int k = 0; k < levels; ++k) {
    const double b = std::pow(2.0, -k), a = 0.5 * b;
    I[k] = adaptive_simpson(psi, a, b, 1e-14, 40000);
  }
  double ratio_acc = 0.0;
  const int tail_n = 8;
  for (int k = levels - tail_n; k < levels; ++k) ratio_acc += I[k] / I[k - 1];
  const double mean_ratio = ratio_acc / tail_n;
  if (!(mean_ratio < 0.999))
    throw ConditionViolated(Y.name + ": lower integral of (t/G(t))^{s/(n-s)} diverges at 0" +
                            " (dyadic level ratio " + std::to_string(mean_ratio) + ")");
  const double floor_t = std::pow(2.0, -levels);
  const double below_floor = I[levels - 1] * mean_ratio / (1.0 - mean_ratio);

  // I(t) = ∫₀ᵗ psi, integrated in log coordinates above the dyadic floor.
  auto lower_integral = [psi, floor_t, below_floor](double t) {
    if (t <= floor_t) return below_floor * std::pow(t / floor_t, 0.5);  // crude but tiny
    auto f = [&](double u) {
      const double tau = std::exp(u);
      return psi(tau) * tau;
    };
    const double val = adaptive_simpson(f, std::log(floor_t), std::log(t), 1e-12, 400000);
    return below_floor + val;
  };
  const double ns_over_n = (n - s) / n;
  auto H = [lower_integral, ns_over_n](double t) {
    return std::pow(lower_integral(t), ns_over_n);
  };
  const double t_probe_max = std::min(Y.domain_cap, 1e12);
  const double H_max = H(t_probe_max);
  auto H_inv = [H, floor_t, t_probe_max, H_max](double y) {
    if (y <= 0.0) return 0.0;
    if (y >= H_max)
      throw OverflowDomain("sobolev_conjugate: argument beyond representable range of H");
    double lo = 0.0, hi = std::min(1.0, t_probe_max);
    while (H(hi) < y) {
      lo = hi;
      hi = std::min(hi * 2.0, t_probe_max);
      if (hi == t_probe_max) break;
    }
    for (int i = 0; i < 120 && (hi - lo) > 1e-14 * std::max(1.0, hi); ++i) {
      const double mid = 0.5 * (lo + hi);
      if (H(mid) < y)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };

  YoungFunction star;
  star.name = Y.name + "*";
  star.G = [base, H_inv](double t) { return base.G(H_inv(t)); };
  star.g = [base, H_inv, lower_integral, ns_over_n, expo, s, n](double t) {
    if (t <= 0.0) return 0.0;
    const double v = H_inv(t);
    const double Hp = ns_over_n * std::pow(lower_integral(v), -s / static_cast<double>(n)) *
                      std::pow(v / base.G(v), expo);
    return base.g(v) / Hp;
  };
  star.domain_cap = H_max * (1.0 - 1e-12);
  return star;
}

bool grows_essentially_slower(const YoungFunction& A, const YoungFunction& B,
                              const std::vector<double>& betas, double t_max) {
  if (betas.empty()) throw Error("grows_essentially_slower: betas must be nonempty");
  const double beta_max = *std::max_element(betas.begin(), betas.end());
  if (t_max > A.domain_cap || beta_max * t_max > B.domain_cap)
    throw OverflowDomain("grows_essentially_slower: t_max exceeds domain caps");

  const int m = 16;
  for (double beta : betas) {
    std::vector<double> r(m);
    for (int k = 0; k < m; ++k) {
      const double t = (t_max / 10.0) * std::pow(10.0, static_cast<double>(k) / (m - 1));
      r[k] = A.G(t) / B.G(beta * t);
    }
    bool nonincreasing = true;
    for (int k = 0; k + 1 < m; ++k)
      if (r[k + 1] > r[k] * (1.0 + 1e-12)) nonincreasing = false;
    if (!nonincreasing || !(r[m - 1] <= 0.7 * r[0])) return false;
  }
  return true;
}

AssociatedH associated_h(const YoungFunction& Y) {
  YoungFunction base = Y;
  AssociatedH out;
  out.h.name = "t*g[" + Y.name + "]";
  out.h.G = [base](double t) { return t * base.g(t); };
  out.h.g = [base](double t) { return base.g(t) + t * eval_g_prime(base, t); };
  out.h.domain_cap = compute_domain_cap([base](double t) {
    const double v = t <= base.domain_cap ? t * base.g(t)
                                          : std::numeric_limits<double>::infinity();
    return v;
  });

  const double t_hi = std::min({20.0, 0.5 * out.h.domain_cap, 0.5 * Y.domain_cap});
  const int m = 401;
  const double dt = t_hi / (m - 1);
  bool convex = true;
  double prev = 0.0, cur = 0.0, next = 0.0;
  for (int k = 1; k + 1 < m; ++k) {
    const double t = k * dt;
    prev = (t - dt) * Y.g(t - dt);
    cur = t * Y.g(t);
    next = (t + dt) * Y.g(t + dt);
    const double second = prev + next - 2.0 * cur;
    if (second < -1e-9 * std::max(1.0, std::abs(cur))) convex = false;
  }
  out.convex = convex;
  return out;
}

namespace {

std::vector<double> parse_params(const std::string& text, const std::string& spec) {
  std::vector<double> params;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t comma = text.find(',', pos);
    const std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                        : comma - pos);
    double v = 0.0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw ConfigError("bad Young-function parameter in '" + spec + "'");
    params.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return params;
}

YoungFunction make_power(double p) {
  if (!(p > 1.0)) throw ConfigError("power:p requires p > 1");
  YoungFunction Y;
  Y.name = "power:" + std::to_string(p);
  Y.G = [p](double t) { return std::pow(t, p) / p; };
  Y.g = [p](double t) { return std::pow(t, p - 1.0); };
  Y.g_inv = [p](double tau) { return std::pow(tau, 1.0 / (p - 1.0)); };
  Y.g_prime = [p](double t) {
    if (t == 0.0) return p > 2.0 ? 0.0 : (p == 2.0 ? 1.0 : std::numeric_limits<double>::infinity());
    return (p - 1.0) * std::pow(t, p - 2.0);
  };
  const double pc = p / (p - 1.0);
  Y.conj_closed_form = [pc](double t) { return std::pow(t, pc) / pc; };
  Y.domain_cap = std::min(std::pow(p * kOverflowSentinel, 1.0 / p), kCapMax);
  return Y;
}

YoungFunction make_exp_m() {
  YoungFunction Y;
  Y.name = "exp_m";
  Y.G = [](double t) { return std::expm1(t) - t; };
  Y.g = [](double t) { return std::expm1(t); };
  Y.g_inv = [](double tau) { return std::log1p(tau); };
  Y.g_prime = [](double t) { return std::exp(t); };
  Y.conj_closed_form = [](double t) { return (1.0 + t) * std::log1p(t) - t; };
  Y.domain_cap = std::log(kOverflowSentinel);
  return Y;
}

YoungFunction make_exp_gamma(double gamma) {
  if (!(gamma > 1.0)) throw ConfigError("exp_gamma:g requires g > 1");
  YoungFunction Y;
  Y.name = "exp_gamma:" + std::to_string(gamma);
  Y.G = [gamma](double t) { return std::expm1(std::pow(t, gamma)); };
  Y.g = [gamma](double t) {
    if (t == 0.0) return 0.0;
    return gamma * std::pow(t, gamma - 1.0) * std::exp(std::pow(t, gamma));
  };
  Y.g_prime = [gamma](double t) {
    if (t == 0.0) return gamma == 2.0 ? 2.0 : (gamma > 2.0 ? 0.0 : std::numeric_limits<double>::infinity());
    const double x = std::pow(t, gamma);
    return gamma * std::exp(x) *
           ((gamma - 1.0) * std::pow(t, gamma - 2.0) + gamma * std::pow(t, 2.0 * gamma - 2.0));
  };
  Y.domain_cap = std::pow(std::log(kOverflowSentinel), 1.0 / gamma);
  return Y;
}

YoungFunction make_mix(double tau, double p) {
  if (!(tau > 0.0 && tau < 1.0)) throw ConfigError("mix:tau,p requires tau in (0,1)");
  if (!(p > 1.0)) throw ConfigError("mix:tau,p requires p > 1");
  YoungFunction Y;
  Y.name = "mix:" + std::to_string(tau) + "," + std::to_string(p);
  Y.G = [tau, p](double t) {
    return tau * (std::expm1(t) - t) + (1.0 - tau) * std::pow(t, p) / p;
  };
  Y.g = [tau, p](double t) { return tau * std::expm1(t) + (1.0 - tau) * std::pow(t, p - 1.0); };
  Y.g_prime = [tau, p](double t) {
    const double pw = t == 0.0 ? (p > 2.0 ? 0.0 : (p == 2.0 ? 1.0 : std::numeric_limits<double>::infinity()))
                               : (p - 1.0) * std::pow(t, p - 2.0);
    return tau * std::exp(t) + (1.0 - tau) * pw;
  };
  auto raw = Y.G;
  Y.domain_cap = compute_domain_cap(raw);
  return Y;
}

}  // namespace

YoungFunction parse_young(const std::string& spec) {
  const size_t colon = spec.find(':');
  const std::string ident = spec.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string::npos) params = parse_params(spec.substr(colon + 1), spec);

  if (ident == "power") {
    if (params.size() != 1) throw ConfigError("power expects one parameter: power:p");
    return make_power(params[0]);
  }
  if (ident == "exp_m") {
    if (!params.empty()) throw ConfigError("exp_m takes no parameters");
    return make_exp_m();
  }
  if (ident == "exp_gamma") {
    if (params.size() != 1) throw ConfigError("exp_gamma expects one parameter: exp_gamma:g");
    return make_exp_gamma(params[0]);
  }
  if (ident == "mix") {
    if (params.size() != 2) throw ConfigError("mix expects two parameters: mix:tau,p");
    return make_mix(params[0], params[1]);
  }
  throw ConfigError("unknown Young function '" + spec + "'");
}

}  // namespace fgl
