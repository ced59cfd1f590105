#pragma once

#include <map>
#include <string>

#include "eulerfan/fan.hpp"

namespace eulerfan {

/// Identifies one jump equation and which unknown it is solved for.
enum class Equation {
  LeftMass,       // solves for nu_-
  LeftMom1,       // solves for delta_1
  LeftMom2,       // solves for eps'_1
  InteriorMass,   // solves for nu_i
  InteriorMom1,   // solves for delta_{i+1}
  InteriorMom2,   // solves for eps'_{i+1}
};

/// Exact closed-form solution of one jump equation for its designated
/// unknown. Keys (all required, by equation):
///   LeftMass:      rho_minus, rho_1, v_minus2, beta_1
///   LeftMom1:      nu_minus, rho_minus, rho_1, v_minus1, v_minus2, alpha_1
///   LeftMom2:      nu_minus, rho_minus, rho_1, v_minus2, beta_1, gamma_1,
///                  deps_minus, C_1
///   InteriorMass:  rho_i, rho_ip1, beta_i, beta_ip1
///   InteriorMom1:  nu_i, rho_i, rho_ip1, alpha_i, alpha_ip1, delta_i
///   InteriorMom2:  nu_i, rho_i, rho_ip1, beta_i, beta_ip1, gamma_i,
///                  gamma_ip1, deps_i, C_i, C_ip1
/// Throws std::domain_error when the unknown's coefficient vanishes.
Rational closed_form_solve(Equation eq, const std::map<std::string, Rational>& knowns);

/// The exact correction: replaces nu_-, delta_1, eps'_1 and, for each
/// interior interface i = 1..N-2, nu_i, delta_{i+1}, eps'_{i+1} by the
/// closed-form solutions of the corresponding equations, substituting
/// previously corrected values as it goes. Afterwards those 3(N-1)
/// equations hold with residual exactly zero; every other field is
/// unchanged. Requires rho_- != rho_1 and rho_i != rho_{i+1} for
/// i <= N-2.
FanConfiguration<Rational> correct(const FanConfiguration<Rational>& tilde);

/// Same, for a float configuration: all inputs are first converted to
/// rationals exactly, then corrected.
FanConfiguration<Rational> correct(const FanConfiguration<double>& tilde);

}  // namespace eulerfan
