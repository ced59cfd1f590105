#include "eulerfan/certify.hpp"

#include <stdexcept>
#include <utility>

#include "eulerfan/dual.hpp"
#include "eulerfan/system.hpp"

namespace eulerfan {

namespace {

void require_corrected(const FanConfiguration<Rational>& cfg) {
  const int n = cfg.n_waves();
  if (n < 2)
    throw std::invalid_argument("existence certificate needs at least two wave regions");
  auto res = equality_residuals(cfg);
  // left interface + interior interfaces 1..N-2 must be exactly zero
  for (int k = 0; k <= n - 2; ++k)
    for (int c = 0; c < 3; ++c)
      if (!res[3 * k + c].is_zero())
        throw std::invalid_argument(
            "configuration does not satisfy the corrected interface equations exactly; "
            "run correction first");
}

Rational sqrt6_upper() {
  static const Rational u = Rational::sqrt_upper(Rational(6));
  return u;
}

}  // namespace

GammaPoint<Rational> gamma_point_from(const FanConfiguration<Rational>& cfg) {
  cfg.validate();
  const int n = cfg.n_waves();
  if (n < 2)
    throw std::invalid_argument("gamma point needs at least two wave regions");
  const auto& sN = cfg.states[n - 1];
  GammaPoint<Rational> x;
  x.alpha = sN.alpha;
  x.beta = sN.beta;
  x.delta = sN.delta;
  x.rho = sN.rho;
  x.nu = cfg.speeds[n];
  x.nu_tilde = cfg.speeds[n - 1];
  return x;
}

GammaParams<Rational> gamma_params_from(const FanConfiguration<Rational>& cfg) {
  cfg.validate();
  const int n = cfg.n_waves();
  if (n < 2)
    throw std::invalid_argument("gamma params need at least two wave regions");
  const auto& sm = cfg.states[n - 2];
  const auto& sN = cfg.states[n - 1];
  GammaParams<Rational> p;
  p.rho_Nm1 = sm.rho;
  p.alpha_Nm1 = sm.alpha;
  p.beta_Nm1 = sm.beta;
  p.gamma_Nm1 = sm.gamma;
  p.delta_Nm1 = sm.delta;
  p.deps_Nm1 = cfg.thermo.deps[n - 2];
  p.C_Nm1 = sm.C;
  p.gamma_N = sN.gamma;
  p.deps_N = cfg.thermo.deps[n - 1];
  p.C_N = sN.C;
  p.rho_plus = cfg.datum.rho_plus;
  p.v_plus1 = cfg.datum.v_plus.v1;
  p.v_plus2 = cfg.datum.v_plus.v2;
  p.deps_plus = cfg.thermo.deps_plus;
  return p;
}

bool sigma_min_at_least(const Mat6& M, const Rational& c) {
  if (c.sign() < 0) throw std::invalid_argument("sigma_min_at_least needs c >= 0");
  // S = M^T M - c^2 Id
  Rational c2 = c * c;
  std::array<std::array<Rational, 6>, 6> S;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      Rational s;
      for (int k = 0; k < 6; ++k) s += M[k][i] * M[k][j];
      if (i == j) s -= c2;
      S[i][j] = std::move(s);
    }
  // pivoted LDL^T positive-semidefiniteness test, exact
  for (int k = 0; k < 6; ++k) {
    int piv = k;
    for (int i = k + 1; i < 6; ++i)
      if (S[i][i] > S[piv][piv]) piv = i;
    if (S[piv][piv].sign() < 0) return false;
    if (S[piv][piv].is_zero()) {
      for (int i = k; i < 6; ++i)
        for (int j = k; j < 6; ++j)
          if (!S[i][j].is_zero()) return false;
      return true;
    }
    if (piv != k) {
      std::swap(S[piv], S[k]);
      for (int i = 0; i < 6; ++i) std::swap(S[i][piv], S[i][k]);
    }
    for (int i = k + 1; i < 6; ++i) {
      Rational f = S[i][k] / S[k][k];
      for (int j = k; j < 6; ++j) S[i][j] -= f * S[k][j];
    }
  }
  return true;
}

Rational hessian_bound(const GammaParams<Rational>& p, const GammaPoint<Rational>& center,
                       const Rational& radius) {
  if (radius.sign() < 0) throw std::invalid_argument("hessian_bound needs radius >= 0");
  auto box = [&](const Rational& c) { return Interval(c - radius, c + radius); };
  // The nonzero second partials of gamma are +-1, the single coordinates
  // nu~, nu, alpha, beta, rho, and +-2 eps'_N; all evaluated over the box.
  Interval two_depsN = Interval(2) * Interval(p.deps_N);
  Rational a = Interval(1).mag();
  for (const Interval& e : {box(center.nu_tilde), box(center.nu), box(center.alpha),
                            box(center.beta), box(center.rho), two_depsN}) {
    Rational m = e.mag();
    if (a < m) a = m;
  }
  return a;
}

std::pair<Rational, Rational> ift_constants(int n, const Rational& A) {
  if (n < 1) throw std::invalid_argument("ift_constants needs n >= 1");
  if (!(A > Rational(0))) throw std::invalid_argument("ift_constants needs A > 0");
  Rational n2(static_cast<long>(n) * n);
  Rational d1 = Rational(1) / (Rational(4) * n2 * A);
  Rational d2 = Rational(1) / (Rational(8) * n2 * A);
  return {d1, d2};
}

std::vector<MarginSurvival> margin_survival(const FanConfiguration<Rational>& cfg,
                                            const Rational& radius) {
  if (radius.sign() < 0) throw std::invalid_argument("margin_survival needs radius >= 0");
  cfg.validate();
  const int n = cfg.n_waves();
  if (n < 2)
    throw std::invalid_argument("margin survival needs at least two wave regions");
  const bool include_plus = resolve_include_plus(cfg, ConvexityMode::Auto);

  std::vector<Rational> exact;
  inequality_margins_into(cfg, include_plus, exact);

  // Dual configuration: every field a constant, except the six perturbed
  // coordinates seeded with the box [x - radius, x + radius].
  FanConfiguration<Dual6> dcfg = config_from_rational<Dual6>(cfg);
  auto seed = [&](Dual6& slot, const Rational& c, int k) {
    slot = Dual6::seeded(Interval(c - radius, c + radius), k);
  };
  auto& sN = dcfg.states[n - 1];
  seed(sN.alpha, cfg.states[n - 1].alpha, 0);
  seed(sN.beta, cfg.states[n - 1].beta, 1);
  seed(sN.delta, cfg.states[n - 1].delta, 2);
  seed(sN.rho, cfg.states[n - 1].rho, 3);
  seed(dcfg.speeds[n], cfg.speeds[n], 4);
  seed(dcfg.speeds[n - 1], cfg.speeds[n - 1], 5);

  std::vector<Dual6> dual;
  inequality_margins_into(dcfg, include_plus, dual);

  auto labels = margin_schema(n, include_plus).labels();
  const Rational s6 = sqrt6_upper();
  std::vector<MarginSurvival> out;
  out.reserve(exact.size());
  for (size_t k = 0; k < exact.size(); ++k) {
    Rational lip;
    for (const Interval& g : dual[k].d) {
      Rational m = g.mag();
      if (lip < m) lip = m;
    }
    bool ok = exact[k] > Rational(0) && lip * radius * s6 < exact[k];
    out.push_back({labels[k], exact[k], lip, ok});
  }
  return out;
}

CertifyOptions::CertifyOptions() {
  Rational c(2);
  for (int i = 0; i < 8; ++i) {
    r_grid.push_back(c);
    c = c / Rational(2);
  }
}

IFTCertificate certify_existence(const FanConfiguration<Rational>& cfg,
                                 const CertifyOptions& opts) {
  require_corrected(cfg);
  IFTCertificate cert;
  cert.point = gamma_point_from(cfg);
  cert.params = gamma_params_from(cfg);
  cert.gamma_values = gamma_map(cert.point, cert.params);

  cert.residual_norm_sq = Rational(0);
  for (const Rational& g : cert.gamma_values) cert.residual_norm_sq += g * g;
  cert.residual_norm = Rational::sqrt_upper(cert.residual_norm_sq);

  Mat6 J = gamma_jacobian(cert.point, cert.params);
  for (const Rational& c : opts.r_grid) {
    if (sigma_min_at_least(J, c)) {
      cert.r = c;
      cert.sigma_certified = true;
      break;
    }
  }

  cert.A = hessian_bound(cert.params, cert.point, opts.ball_radius);
  auto [d1, d2] = ift_constants(cert.n, cert.A);
  cert.D1 = d1;
  cert.D2 = d2;

  if (cert.sigma_certified) {
    Rational bound = cert.D2 * cert.r * cert.r;
    cert.residual_within_bound = cert.residual_norm_sq <= bound * bound;
    cert.root_distance = Rational(2) / cert.r * cert.residual_norm;
    cert.margins = margin_survival(cfg, cert.root_distance);
    cert.margins_survive = true;
    for (const auto& m : cert.margins)
      if (!m.ok) cert.margins_survive = false;
  }
  cert.verdict = cert.sigma_certified && cert.residual_within_bound && cert.margins_survive;
  return cert;
}

bool recheck_certificate(const IFTCertificate& cert, const FanConfiguration<Rational>& cfg) {
  try {
    auto point = gamma_point_from(cfg);
    auto params = gamma_params_from(cfg);
    if (!(point.as_array() == cert.point.as_array())) return false;

    auto g = gamma_map(point, params);
    Rational sq;
    for (const Rational& v : g) sq += v * v;
    if (sq != cert.residual_norm_sq) return false;
    if (cert.residual_norm * cert.residual_norm < sq) return false;

    Mat6 J = gamma_jacobian(point, params);
    if (!sigma_min_at_least(J, cert.r)) return false;

    if (hessian_bound(params, point, Rational(1)) > cert.A) return false;
    auto [d1, d2] = ift_constants(cert.n, cert.A);
    if (d1 != cert.D1 || d2 != cert.D2) return false;

    Rational bound = cert.D2 * cert.r * cert.r;
    if (cert.residual_within_bound && sq > bound * bound) return false;
    if (Rational(2) / cert.r * cert.residual_norm != cert.root_distance) return false;

    auto surv = margin_survival(cfg, cert.root_distance);
    if (surv.size() != cert.margins.size()) return false;
    for (size_t i = 0; i < surv.size(); ++i)
      if (surv[i].ok != cert.margins[i].ok || surv[i].margin != cert.margins[i].margin)
        return false;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace eulerfan
