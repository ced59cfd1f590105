#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerfan/rational.hpp"

namespace eulerfan {

template <class T>
struct Vec2 {
  T v1{}, v2{};
};

/// The two constant initial states of the Riemann problem, separated by
/// the line x2 = 0.
template <class T>
struct RiemannDatum {
  T rho_minus{}, rho_plus{};
  Vec2<T> v_minus, v_plus;
};

/// Constants describing one intermediate wave region: density, velocity
/// (alpha, beta), the traceless symmetric matrix [[gamma, delta], [delta,
/// -gamma]], and the kinetic bound C.
template <class T>
struct WaveState {
  T rho{}, alpha{}, beta{}, gamma{}, delta{}, C{};
};

/// Internal-energy values and derivatives attached to each region's
/// density. Stored as free constants, not as evaluations of a function;
/// the function itself only exists once the convex interpolant is built.
template <class T>
struct ThermoTable {
  T eps_minus{}, eps_plus{}, deps_minus{}, deps_plus{};
  std::vector<T> eps, deps;  // one entry per wave region
};

/// A candidate fan subsolution: Riemann datum, N+1 interface speeds
/// (strictly increasing when feasible), N wave states, and the
/// thermodynamic table.
template <class T>
struct FanConfiguration {
  RiemannDatum<T> datum;
  std::vector<T> speeds;
  std::vector<WaveState<T>> states;
  ThermoTable<T> thermo;

  int n_waves() const { return static_cast<int>(states.size()); }

  void validate() const {
    const auto n = states.size();
    if (n < 1) throw std::invalid_argument("fan configuration needs at least one wave");
    if (speeds.size() != n + 1)
      throw std::invalid_argument("fan configuration needs n_waves+1 interface speeds");
    if (thermo.eps.size() != n || thermo.deps.size() != n)
      throw std::invalid_argument("thermo table length must equal n_waves");
  }
};

/// Symmetric 2x2 matrix (single off-diagonal entry).
template <class T>
struct StressMatrix {
  T r11{}, r12{}, r22{};
  T trace() const { return r11 + r22; }
  T det() const { return r11 * r22 - r12 * r12; }
};

/// Reynolds stress of a wave state: how far the state is from being a
/// genuine solution. Positive definite iff the strict subsolution
/// inequalities hold.
template <class T>
StressMatrix<T> reynolds_stress(const WaveState<T>& s) {
  StressMatrix<T> r;
  T half_C = s.C / T(2);
  r.r11 = s.gamma - s.alpha * s.alpha + half_C;
  r.r12 = s.delta - s.alpha * s.beta;
  r.r22 = -s.gamma - s.beta * s.beta + half_C;
  return r;
}

/// The degenerate state carried by the outer regions: u = v (x) v - |v|^2/2 Id,
/// C = |v|^2. Its Reynolds stress vanishes identically.
template <class T>
WaveState<T> ghost_state(const Vec2<T>& v, const T& rho) {
  if (!(rho > T(0))) throw std::domain_error("ghost state needs positive density");
  WaveState<T> s;
  s.rho = rho;
  s.alpha = v.v1;
  s.beta = v.v2;
  s.gamma = (v.v1 * v.v1 - v.v2 * v.v2) / T(2);
  s.delta = v.v1 * v.v2;
  s.C = v.v1 * v.v1 + v.v2 * v.v2;
  return s;
}

/// Region of the point (x2, t) in the fan partition with the given
/// interface speeds. Returns 0 for the left outer region, 1..N for the
/// wave regions, N+1 for the right outer region. Points on an interface
/// report the lower-indexed region.
template <class T>
int region_of(const T& x2, const T& t, std::span<const T> speeds) {
  if (!(t > T(0))) throw std::domain_error("region_of needs t > 0");
  for (size_t i = 1; i < speeds.size(); ++i)
    if (!(speeds[i - 1] < speeds[i]))
      throw std::invalid_argument("interface speeds must be strictly increasing");
  int region = 0;
  for (const T& nu : speeds)
    if (nu * t < x2) ++region;
  return region;
}

inline std::string region_label(int region, int n_waves) {
  if (region == 0) return "-";
  if (region == n_waves + 1) return "+";
  return std::to_string(region);
}

// ---- scalar and configuration conversions ----------------------------------

template <class To>
To scalar_from_rational(const Rational& r);

template <>
inline Rational scalar_from_rational<Rational>(const Rational& r) {
  return r;
}
template <>
inline double scalar_from_rational<double>(const Rational& r) {
  return r.to_double();
}

/// Exact embedding of a float configuration into rationals.
FanConfiguration<Rational> exact_config(const FanConfiguration<double>& in);

/// Rational configuration converted to scalar kind To (nearest for double).
template <class To>
FanConfiguration<To> config_from_rational(const FanConfiguration<Rational>& in) {
  FanConfiguration<To> out;
  auto c = [](const Rational& r) { return scalar_from_rational<To>(r); };
  out.datum.rho_minus = c(in.datum.rho_minus);
  out.datum.rho_plus = c(in.datum.rho_plus);
  out.datum.v_minus = {c(in.datum.v_minus.v1), c(in.datum.v_minus.v2)};
  out.datum.v_plus = {c(in.datum.v_plus.v1), c(in.datum.v_plus.v2)};
  for (const auto& nu : in.speeds) out.speeds.push_back(c(nu));
  for (const auto& s : in.states)
    out.states.push_back({c(s.rho), c(s.alpha), c(s.beta), c(s.gamma), c(s.delta), c(s.C)});
  out.thermo.eps_minus = c(in.thermo.eps_minus);
  out.thermo.eps_plus = c(in.thermo.eps_plus);
  out.thermo.deps_minus = c(in.thermo.deps_minus);
  out.thermo.deps_plus = c(in.thermo.deps_plus);
  for (const auto& e : in.thermo.eps) out.thermo.eps.push_back(c(e));
  for (const auto& e : in.thermo.deps) out.thermo.deps.push_back(c(e));
  return out;
}

inline FanConfiguration<Rational> exact_config(const FanConfiguration<double>& in) {
  FanConfiguration<Rational> out;
  auto c = [](double x) { return Rational::from_double(x); };
  out.datum.rho_minus = c(in.datum.rho_minus);
  out.datum.rho_plus = c(in.datum.rho_plus);
  out.datum.v_minus = {c(in.datum.v_minus.v1), c(in.datum.v_minus.v2)};
  out.datum.v_plus = {c(in.datum.v_plus.v1), c(in.datum.v_plus.v2)};
  for (double nu : in.speeds) out.speeds.push_back(c(nu));
  for (const auto& s : in.states)
    out.states.push_back({c(s.rho), c(s.alpha), c(s.beta), c(s.gamma), c(s.delta), c(s.C)});
  out.thermo.eps_minus = c(in.thermo.eps_minus);
  out.thermo.eps_plus = c(in.thermo.eps_plus);
  out.thermo.deps_minus = c(in.thermo.deps_minus);
  out.thermo.deps_plus = c(in.thermo.deps_plus);
  for (double e : in.thermo.eps) out.thermo.eps.push_back(c(e));
  for (double e : in.thermo.deps) out.thermo.deps.push_back(c(e));
  return out;
}

}  // namespace eulerfan
