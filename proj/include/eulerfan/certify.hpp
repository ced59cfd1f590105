#pragma once

#include <array>
#include <string>
#include <vector>

#include "eulerfan/fan.hpp"
#include "eulerfan/interval.hpp"

namespace eulerfan {

/// The six unknowns perturbed by the existence certificate:
/// (alpha_N, beta_N, delta_N, rho_N, nu_+, nu_{N-1}).
template <class T>
struct GammaPoint {
  T alpha{}, beta{}, delta{}, rho{}, nu{}, nu_tilde{};

  std::array<T, 6> as_array() const { return {alpha, beta, delta, rho, nu, nu_tilde}; }
};

/// The constants held fixed while the six unknowns move.
template <class T>
struct GammaParams {
  T rho_Nm1{}, alpha_Nm1{}, beta_Nm1{}, gamma_Nm1{}, delta_Nm1{}, deps_Nm1{}, C_Nm1{};
  T gamma_N{}, deps_N{}, C_N{};
  T rho_plus{}, v_plus1{}, v_plus2{}, deps_plus{};
};

/// Residual map of the last two interfaces (interior N-1 and right), as a
/// function of the six perturbed unknowns; components are RHS - LHS of the
/// corresponding jump equations, with pressure substituted as rho^2 eps'.
template <class T>
std::array<T, 6> gamma_map(const GammaPoint<T>& x, const GammaParams<T>& p) {
  T half = T(1) / T(2);
  const T& al = x.alpha;
  const T& be = x.beta;
  const T& dl = x.delta;
  const T& ro = x.rho;
  const T& nu = x.nu;
  const T& nt = x.nu_tilde;
  std::array<T, 6> g;
  g[0] = p.rho_Nm1 * p.beta_Nm1 - ro * be - nt * (p.rho_Nm1 - ro);
  g[1] = p.rho_Nm1 * p.delta_Nm1 - ro * dl - nt * (p.rho_Nm1 * p.alpha_Nm1 - ro * al);
  g[2] = -p.rho_Nm1 * p.gamma_Nm1 + ro * p.gamma_N + p.rho_Nm1 * p.rho_Nm1 * p.deps_Nm1 -
         ro * ro * p.deps_N + p.rho_Nm1 * p.C_Nm1 * half - ro * p.C_N * half -
         nt * (p.rho_Nm1 * p.beta_Nm1 - ro * be);
  g[3] = ro * be - p.rho_plus * p.v_plus2 - nu * (ro - p.rho_plus);
  g[4] = ro * dl - p.rho_plus * p.v_plus1 * p.v_plus2 - nu * (ro * al - p.rho_plus * p.v_plus1);
  g[5] = -ro * p.gamma_N - p.rho_plus * p.v_plus2 * p.v_plus2 + ro * ro * p.deps_N -
         p.rho_plus * p.rho_plus * p.deps_plus + ro * p.C_N * half -
         nu * (ro * be - p.rho_plus * p.v_plus2);
  return g;
}

/// Jacobian of gamma_map with respect to (alpha, beta, delta, rho, nu, nu~).
template <class T>
std::array<std::array<T, 6>, 6> gamma_jacobian(const GammaPoint<T>& x,
                                               const GammaParams<T>& p) {
  T half = T(1) / T(2);
  const T& al = x.alpha;
  const T& be = x.beta;
  const T& dl = x.delta;
  const T& ro = x.rho;
  const T& nu = x.nu;
  const T& nt = x.nu_tilde;
  T zero = T(0);
  std::array<std::array<T, 6>, 6> J;
  J[0] = {zero, -ro, zero, -be + nt, zero, -(p.rho_Nm1 - ro)};
  J[1] = {ro * nt, zero, -ro, -dl + al * nt, zero, -(p.rho_Nm1 * p.alpha_Nm1 - ro * al)};
  J[2] = {zero, nt * ro, zero,
          p.gamma_N - T(2) * ro * p.deps_N - p.C_N * half + be * nt, zero,
          -(p.rho_Nm1 * p.beta_Nm1 - ro * be)};
  J[3] = {zero, ro, zero, be - nu, -(ro - p.rho_plus), zero};
  J[4] = {-nu * ro, zero, ro, dl - nu * al, -(ro * al - p.rho_plus * p.v_plus1), zero};
  J[5] = {zero, -nu * ro, zero,
          -p.gamma_N + T(2) * ro * p.deps_N + p.C_N * half - nu * be,
          -(ro * be - p.rho_plus * p.v_plus2), zero};
  return J;
}

/// The six perturbed coordinates / fixed constants, read off a
/// configuration with N >= 2 waves.
GammaPoint<Rational> gamma_point_from(const FanConfiguration<Rational>& cfg);
GammaParams<Rational> gamma_params_from(const FanConfiguration<Rational>& cfg);

using Mat6 = std::array<std::array<Rational, 6>, 6>;

/// Exact certificate that sigma_min(M) >= c: checks that M^T M - c^2 Id is
/// positive semidefinite by a pivoted rational LDL^T decomposition. A true
/// answer is a proof; false may be returned at exact equality only.
bool sigma_min_at_least(const Mat6& M, const Rational& c);

/// Upper bound A on |d^2 gamma_k / dx_i dx_j| over the box
/// |x - center|_inf <= radius, from interval evaluation of the (affine)
/// second partials: constants, single coordinates, and 2 eps'_N.
Rational hessian_bound(const GammaParams<Rational>& p, const GammaPoint<Rational>& center,
                       const Rational& radius);

/// The explicit constants D1 = 1/(4 n^2 A), D2 = 1/(8 n^2 A).
std::pair<Rational, Rational> ift_constants(int n, const Rational& A);

struct MarginSurvival {
  std::string label;
  Rational margin;     // exact margin at the center configuration
  Rational lipschitz;  // certified bound on the gradient w.r.t. the six unknowns
  bool ok;             // lipschitz * radius * sqrt(6) < margin
};

/// For every strict-inequality margin, a certified check that perturbing
/// the six unknowns within Euclidean distance `radius` cannot destroy it.
/// Margins not involving the perturbed coordinates come out with a zero
/// Lipschitz bound and survive trivially.
std::vector<MarginSurvival> margin_survival(const FanConfiguration<Rational>& cfg,
                                            const Rational& radius);

struct CertifyOptions {
  std::vector<Rational> r_grid;  // singular-value targets, tried in order
  Rational ball_radius = Rational(1);
  CertifyOptions();
};

struct IFTCertificate {
  int n = 6;
  Rational r;                  // certified lower bound on sigma_min at the point
  Rational A;                  // second-derivative bound over the ball
  Rational D1, D2;
  Rational residual_norm_sq;   // ||gamma||_2^2, exact
  Rational residual_norm;      // rational upper bound on ||gamma||_2
  Rational root_distance;      // (2/r) * residual_norm
  bool sigma_certified = false;
  bool residual_within_bound = false;  // residual_norm_sq <= (D2 r^2)^2
  std::vector<MarginSurvival> margins;
  bool margins_survive = false;
  bool verdict = false;
  GammaPoint<Rational> point;
  GammaParams<Rational> params;
  std::array<Rational, 6> gamma_values;
};

/// Builds the existence certificate for a corrected configuration: if the
/// verdict is true, an exact solution of the last two interfaces' equations
/// exists within root_distance of the stored point (in the six perturbed
/// coordinates), all other equations stay exactly satisfied, and every
/// strict inequality survives. Throws if the configuration has not been
/// corrected (left / first interior interfaces not exactly zero).
IFTCertificate certify_existence(const FanConfiguration<Rational>& cfg,
                                 const CertifyOptions& opts = CertifyOptions());

/// Recomputes every certified quantity of `cert` from its stored point and
/// parameters; returns false if anything fails to reproduce.
bool recheck_certificate(const IFTCertificate& cert, const FanConfiguration<Rational>& cfg);

}  // namespace eulerfan
