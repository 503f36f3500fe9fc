#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fgl/errors.hpp"

namespace fgl {

using ScalarFn = std::function<double(double)>;

/// A Young function G together with its right-continuous density g,
/// G(t) = ∫₀ᵗ g(τ)dτ. Optional closed forms (inverse density, conjugate,
/// density derivative) are used when present; numeric fallbacks otherwise.
///
/// Values are immutable after construction; all evaluation entry points are
/// pure and safe to call concurrently.
struct YoungFunction {
  std::string name;
  ScalarFn G;                 ///< G : [0, domain_cap] -> [0, inf)
  ScalarFn g;                 ///< density, g(0)=0, nondecreasing
  ScalarFn g_inv;             ///< optional closed-form inverse of g
  ScalarFn g_prime;           ///< optional derivative of g
  ScalarFn conj_closed_form;  ///< optional closed-form conjugate
  double domain_cap = 0.0;    ///< largest t with G(t) below the overflow sentinel

  bool has_g_inv() const { return static_cast<bool>(g_inv); }
  bool has_conjugate_closed_form() const { return static_cast<bool>(conj_closed_form); }
  bool has_g_prime() const { return static_cast<bool>(g_prime); }
};

/// Sampled growth diagnostics: estimates of the indices p⁻, p⁺ bounding
/// t·g(t)/G(t), plus a doubling-condition verdict. The verdict is a
/// finite-sample diagnostic over sample_range, never a proof.
struct GrowthReport {
  double p_minus_est = 0.0;
  double p_plus_est = 0.0;
  bool delta2_holds_numeric = false;
  std::pair<double, double> sample_range{0.0, 0.0};
};

/// Result of associated_h: the function t ↦ t·g(t) and a sampled
/// second-difference convexity verdict.
struct AssociatedH {
  YoungFunction h;
  bool convex = false;
};

// Overflow sentinel used when computing domain caps.
inline constexpr double kOverflowSentinel = 1e100;

/// Largest t with G_raw(t) < sentinel, found by guarded doubling + bisection.
/// Non-finite evaluations count as overflow.
double compute_domain_cap(const ScalarFn& G_raw, double sentinel = kOverflowSentinel);

double eval_G(const YoungFunction& Y, double t);
double eval_g(const YoungFunction& Y, double t);

/// g⁻¹(tau): closed form when available, else monotone bisection with
/// geometric bracket growth. Flat segments of g resolve to the left endpoint
/// of the preimage interval.
double eval_g_inv(const YoungFunction& Y, double tau);

/// dg/dt, closed form when available, else a central difference.
double eval_g_prime(const YoungFunction& Y, double t);

/// Conjugate G̃(t) = ∫₀ᵗ g⁻¹; uses the closed form when present.
double eval_conjugate(const YoungFunction& Y, double t);

/// Conjugate forced through adaptive quadrature of g⁻¹ (ignores any closed form).
double conjugate_by_quadrature(const YoungFunction& Y, double t);

/// Builds the conjugate as a full YoungFunction (G̃ with density g⁻¹).
YoungFunction conjugate_function(const YoungFunction& Y);

/// Samples t·g(t)/G(t) at log-spaced points of [t_lo, t_hi].
GrowthReport growth_indices(const YoungFunction& Y, double t_lo, double t_hi, int samples);

/// Critical (Sobolev-conjugate) function G∗(t) = G(H⁻¹(t)) with
/// H(t) = (∫₀ᵗ (τ/G(τ))^{s/(n−s)} dτ)^{(n−s)/n}. Throws ConditionViolated if
/// the integral diverges numerically at 0.
YoungFunction sobolev_conjugate(const YoungFunction& Y, double s, int n);

/// True iff A(t)/B(β t) decreases toward 0 over the top decade below t_max,
/// for every β in betas.
bool grows_essentially_slower(const YoungFunction& A, const YoungFunction& B,
                              const std::vector<double>& betas, double t_max);

/// The function H(t) = t·g(t) with a convexity verdict.
AssociatedH associated_h(const YoungFunction& Y);

/// Catalog lookup: "power:p", "exp_gamma:g", "exp_m", "mix:tau,p".
/// Grammar is strict: identifier, colon, comma-separated decimals.
YoungFunction parse_young(const std::string& spec);

/// Adaptive Simpson quadrature of f over [a, b]. Tolerance is absolute;
/// throws QuadratureNonConvergence past the evaluation budget.
double adaptive_simpson(const ScalarFn& f, double a, double b, double abs_tol,
                        long budget = 1000000);

}  // namespace fgl
