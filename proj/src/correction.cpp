#include "eulerfan/correction.hpp"

#include <stdexcept>

namespace eulerfan {

namespace {

const Rational& arg(const std::map<std::string, Rational>& m, const std::string& key) {
  auto it = m.find(key);
  if (it == m.end())
    throw std::invalid_argument("closed_form_solve: missing known '" + key + "'");
  return it->second;
}

Rational half(const Rational& x) { return x / Rational(2); }

// nu_- (rho_- - rho_1) = rho_- v_-2 - rho_1 beta_1
Rational solve_nu_minus(const Rational& rho_m, const Rational& rho_1, const Rational& v_m2,
                        const Rational& beta_1) {
  Rational coeff = rho_m - rho_1;
  if (coeff.is_zero()) throw std::domain_error("left interface density collision");
  return (rho_m * v_m2 - rho_1 * beta_1) / coeff;
}

// nu_- (rho_- v_-1 - rho_1 alpha_1) = rho_- v_-1 v_-2 - rho_1 delta_1
Rational solve_delta_1(const Rational& nu_m, const Rational& rho_m, const Rational& rho_1,
                       const Rational& v_m1, const Rational& v_m2, const Rational& alpha_1) {
  if (rho_1.is_zero()) throw std::domain_error("zero density in wave region 1");
  return (rho_m * v_m1 * v_m2 - nu_m * (rho_m * v_m1 - rho_1 * alpha_1)) / rho_1;
}

// nu_- (rho_- v_-2 - rho_1 beta_1)
//   = rho_- v_-2^2 + rho_1 gamma_1 + rho_-^2 eps'_- - rho_1^2 eps'_1 - rho_1 C_1/2
Rational solve_deps_1(const Rational& nu_m, const Rational& rho_m, const Rational& rho_1,
                      const Rational& v_m2, const Rational& beta_1, const Rational& gamma_1,
                      const Rational& deps_m, const Rational& C_1) {
  if (rho_1.is_zero()) throw std::domain_error("zero density in wave region 1");
  Rational rhs_known = rho_m * v_m2 * v_m2 + rho_1 * gamma_1 + rho_m * rho_m * deps_m -
                       rho_1 * half(C_1);
  return (rhs_known - nu_m * (rho_m * v_m2 - rho_1 * beta_1)) / (rho_1 * rho_1);
}

// nu_i (rho_i - rho_{i+1}) = rho_i beta_i - rho_{i+1} beta_{i+1}
Rational solve_nu_i(const Rational& rho_i, const Rational& rho_ip1, const Rational& beta_i,
                    const Rational& beta_ip1, int i) {
  Rational coeff = rho_i - rho_ip1;
  if (coeff.is_zero())
    throw std::domain_error("density collision at interface " + std::to_string(i) +
                            " (regions " + std::to_string(i) + " and " + std::to_string(i + 1) +
                            ")");
  return (rho_i * beta_i - rho_ip1 * beta_ip1) / coeff;
}

// nu_i (rho_i alpha_i - rho_{i+1} alpha_{i+1}) = rho_i delta_i - rho_{i+1} delta_{i+1}
Rational solve_delta_ip1(const Rational& nu_i, const Rational& rho_i, const Rational& rho_ip1,
                         const Rational& alpha_i, const Rational& alpha_ip1,
                         const Rational& delta_i, int i) {
  if (rho_ip1.is_zero())
    throw std::domain_error("zero density in wave region " + std::to_string(i + 1));
  return (rho_i * delta_i - nu_i * (rho_i * alpha_i - rho_ip1 * alpha_ip1)) / rho_ip1;
}

// nu_i (rho_i beta_i - rho_{i+1} beta_{i+1})
//   = -rho_i gamma_i + rho_{i+1} gamma_{i+1} + rho_i^2 eps'_i - rho_{i+1}^2 eps'_{i+1}
//     + rho_i C_i/2 - rho_{i+1} C_{i+1}/2
Rational solve_deps_ip1(const Rational& nu_i, const Rational& rho_i, const Rational& rho_ip1,
                        const Rational& beta_i, const Rational& beta_ip1,
                        const Rational& gamma_i, const Rational& gamma_ip1,
                        const Rational& deps_i, const Rational& C_i, const Rational& C_ip1,
                        int i) {
  if (rho_ip1.is_zero())
    throw std::domain_error("zero density in wave region " + std::to_string(i + 1));
  Rational rhs_known = -rho_i * gamma_i + rho_ip1 * gamma_ip1 + rho_i * rho_i * deps_i +
                       rho_i * half(C_i) - rho_ip1 * half(C_ip1);
  return (rhs_known - nu_i * (rho_i * beta_i - rho_ip1 * beta_ip1)) / (rho_ip1 * rho_ip1);
}

}  // namespace

Rational closed_form_solve(Equation eq, const std::map<std::string, Rational>& k) {
  switch (eq) {
    case Equation::LeftMass:
      return solve_nu_minus(arg(k, "rho_minus"), arg(k, "rho_1"), arg(k, "v_minus2"),
                            arg(k, "beta_1"));
    case Equation::LeftMom1:
      return solve_delta_1(arg(k, "nu_minus"), arg(k, "rho_minus"), arg(k, "rho_1"),
                           arg(k, "v_minus1"), arg(k, "v_minus2"), arg(k, "alpha_1"));
    case Equation::LeftMom2:
      return solve_deps_1(arg(k, "nu_minus"), arg(k, "rho_minus"), arg(k, "rho_1"),
                          arg(k, "v_minus2"), arg(k, "beta_1"), arg(k, "gamma_1"),
                          arg(k, "deps_minus"), arg(k, "C_1"));
    case Equation::InteriorMass:
      return solve_nu_i(arg(k, "rho_i"), arg(k, "rho_ip1"), arg(k, "beta_i"),
                        arg(k, "beta_ip1"), 0);
    case Equation::InteriorMom1:
      return solve_delta_ip1(arg(k, "nu_i"), arg(k, "rho_i"), arg(k, "rho_ip1"),
                             arg(k, "alpha_i"), arg(k, "alpha_ip1"), arg(k, "delta_i"), 0);
    case Equation::InteriorMom2:
      return solve_deps_ip1(arg(k, "nu_i"), arg(k, "rho_i"), arg(k, "rho_ip1"),
                            arg(k, "beta_i"), arg(k, "beta_ip1"), arg(k, "gamma_i"),
                            arg(k, "gamma_ip1"), arg(k, "deps_i"), arg(k, "C_i"),
                            arg(k, "C_ip1"), 0);
  }
  throw std::invalid_argument("unknown equation id");
}

FanConfiguration<Rational> correct(const FanConfiguration<Rational>& tilde) {
  tilde.validate();
  FanConfiguration<Rational> hat = tilde;
  const int n = hat.n_waves();

  hat.speeds[0] = solve_nu_minus(hat.datum.rho_minus, hat.states[0].rho,
                                 hat.datum.v_minus.v2, hat.states[0].beta);
  hat.states[0].delta =
      solve_delta_1(hat.speeds[0], hat.datum.rho_minus, hat.states[0].rho,
                    hat.datum.v_minus.v1, hat.datum.v_minus.v2, hat.states[0].alpha);
  hat.thermo.deps[0] =
      solve_deps_1(hat.speeds[0], hat.datum.rho_minus, hat.states[0].rho,
                   hat.datum.v_minus.v2, hat.states[0].beta, hat.states[0].gamma,
                   hat.thermo.deps_minus, hat.states[0].C);

  // interior interfaces 1..N-2, each consuming the values corrected so far
  for (int i = 1; i <= n - 2; ++i) {
    const auto& si = hat.states[i - 1];
    auto& sip1 = hat.states[i];
    hat.speeds[i] = solve_nu_i(si.rho, sip1.rho, si.beta, sip1.beta, i);
    sip1.delta = solve_delta_ip1(hat.speeds[i], si.rho, sip1.rho, si.alpha, sip1.alpha,
                                 si.delta, i);
    hat.thermo.deps[i] =
        solve_deps_ip1(hat.speeds[i], si.rho, sip1.rho, si.beta, sip1.beta, si.gamma,
                       sip1.gamma, hat.thermo.deps[i - 1], si.C, sip1.C, i);
  }
  return hat;
}

FanConfiguration<Rational> correct(const FanConfiguration<double>& tilde) {
  return correct(exact_config(tilde));
}

}  // namespace eulerfan
