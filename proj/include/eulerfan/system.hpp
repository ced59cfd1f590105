#pragma once

#include <string>
#include <vector>

#include "eulerfan/fan.hpp"

namespace eulerfan {

// How convexity pairs treat the right outer state. The paper's witness has
// identical (rho, eps, eps') on both sides, so the '+' index collapses into
// '-'; general Riemann data keeps it separate.
enum class ConvexityMode { Auto, MergePlus, IncludePlus };

struct MarginId {
  enum Kind {
    Kinetic,           // C_i - |v_i|^2, per wave region
    StressDet,         // det of the Reynolds stress, per wave region
    EntropyLeft,       // energy-flux jump inequality at the left interface
    EntropyInterface,  // ... at interior interface i
    EntropyRight,      // ... at the right interface
    SpeedOrder,        // nu_i - nu_{i-1}
    RhoPositive,
    DepsPositive,
    Convexity,  // eps_j - eps_i - eps'_i (rho_j - rho_i) over region pairs
  };
  Kind kind;
  int i = 0, j = 0;  // region indices: 0 = '-', 1..N = waves, N+1 = '+'

  std::string str(int n_waves) const;
};

struct MarginSchema {
  int n_waves = 0;
  bool include_plus = false;
  std::vector<MarginId> ids;
  std::vector<std::string> labels() const;
};

MarginSchema margin_schema(int n_waves, bool include_plus);

std::vector<std::string> equality_labels(int n_waves);

template <class T>
bool thermo_plus_merged(const FanConfiguration<T>& cfg) {
  return cfg.datum.rho_plus == cfg.datum.rho_minus &&
         cfg.thermo.eps_plus == cfg.thermo.eps_minus &&
         cfg.thermo.deps_plus == cfg.thermo.deps_minus;
}

template <class T>
bool resolve_include_plus(const FanConfiguration<T>& cfg, ConvexityMode mode) {
  switch (mode) {
    case ConvexityMode::MergePlus: return false;
    case ConvexityMode::IncludePlus: return true;
    default: return !thermo_plus_merged(cfg);
  }
}

// ---- core evaluations (allocation-light `_into` forms for hot loops) -------

namespace detail {

// Wave-state view of every region, outer regions replaced by their ghost
// states (whose fluxes reproduce the Euler fluxes exactly), with the
// thermo entries alongside.
template <class T>
struct ExtRegion {
  WaveState<T> s;
  T eps, deps;
};

template <class T>
void extended_regions(const FanConfiguration<T>& cfg, std::vector<ExtRegion<T>>& out) {
  const int n = cfg.n_waves();
  out.clear();
  out.reserve(n + 2);
  out.push_back({ghost_state(cfg.datum.v_minus, cfg.datum.rho_minus), cfg.thermo.eps_minus,
                 cfg.thermo.deps_minus});
  for (int i = 0; i < n; ++i)
    out.push_back({cfg.states[i], cfg.thermo.eps[i], cfg.thermo.deps[i]});
  out.push_back({ghost_state(cfg.datum.v_plus, cfg.datum.rho_plus), cfg.thermo.eps_plus,
                 cfg.thermo.deps_plus});
}

template <class T>
T pressure_of(const ExtRegion<T>& r) {
  return r.s.rho * r.s.rho * r.deps;
}

}  // namespace detail

/// Residuals (LHS - RHS) of the 3(N+1) jump equations, ordered by interface
/// (left, interior 1..N-1, right), within each interface (mass, momentum-1,
/// momentum-2). Exact when T is Rational.
template <class T>
void equality_residuals_into(const FanConfiguration<T>& cfg, std::vector<T>& out) {
  cfg.validate();
  const int n = cfg.n_waves();
  std::vector<detail::ExtRegion<T>> ext;
  detail::extended_regions(cfg, ext);
  out.clear();
  out.reserve(3 * (n + 1));
  for (int k = 0; k <= n; ++k) {
    const auto& L = ext[k];
    const auto& R = ext[k + 1];
    const T& nu = cfg.speeds[k];
    T half = T(1) / T(2);
    // mass
    out.push_back(nu * (L.s.rho - R.s.rho) - (L.s.rho * L.s.beta - R.s.rho * R.s.beta));
    // momentum along x1
    out.push_back(nu * (L.s.rho * L.s.alpha - R.s.rho * R.s.alpha) -
                  (L.s.rho * L.s.delta - R.s.rho * R.s.delta));
    // momentum along x2; pressure enters as rho^2 * eps'
    T fL = -L.s.rho * L.s.gamma + detail::pressure_of(L) + L.s.rho * L.s.C * half;
    T fR = -R.s.rho * R.s.gamma + detail::pressure_of(R) + R.s.rho * R.s.C * half;
    out.push_back(nu * (L.s.rho * L.s.beta - R.s.rho * R.s.beta) - (fL - fR));
  }
}

template <class T>
std::vector<T> equality_residuals(const FanConfiguration<T>& cfg) {
  std::vector<T> out;
  equality_residuals_into(cfg, out);
  return out;
}

/// Convexity margins eps_j - eps_i - eps'_i (rho_j - rho_i) for all ordered
/// pairs i != j of the given points.
template <class T>
std::vector<T> convexity_margins(const std::vector<T>& rho, const std::vector<T>& eps,
                                 const std::vector<T>& deps) {
  std::vector<T> out;
  const size_t n = rho.size();
  out.reserve(n * (n - 1));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j) out.push_back(eps[j] - eps[i] - deps[i] * (rho[j] - rho[i]));
  return out;
}

/// All strict-inequality margins in schema order; margin > 0 means the
/// inequality holds strictly. Covers the subsolution conditions, the
/// entropy (admissibility) inequalities, speed ordering, positivity of
/// densities and eps', and the convex-position inequalities.
template <class T>
void inequality_margins_into(const FanConfiguration<T>& cfg, bool include_plus,
                             std::vector<T>& out) {
  cfg.validate();
  const int n = cfg.n_waves();
  std::vector<detail::ExtRegion<T>> ext;
  detail::extended_regions(cfg, ext);
  out.clear();
  T half = T(1) / T(2);

  for (int i = 0; i < n; ++i) {
    const auto& s = cfg.states[i];
    out.push_back(s.C - s.alpha * s.alpha - s.beta * s.beta);
  }
  for (int i = 0; i < n; ++i) {
    const auto& s = cfg.states[i];
    T a = s.C * half - s.alpha * s.alpha + s.gamma;
    T b = s.C * half - s.beta * s.beta - s.gamma;
    T c = s.delta - s.alpha * s.beta;
    out.push_back(a * b - c * c);
  }
  // entropy inequalities: margin = (flux jump) - nu * (density jump)
  for (int k = 0; k <= n; ++k) {
    const auto& L = ext[k];
    const auto& R = ext[k + 1];
    const T& nu = cfg.speeds[k];
    T qL = L.s.rho * L.eps + L.s.rho * L.s.C * half;
    T qR = R.s.rho * R.eps + R.s.rho * R.s.C * half;
    T fL = (L.s.rho * L.eps + detail::pressure_of(L)) * L.s.beta + L.s.rho * L.s.beta * L.s.C * half;
    T fR = (R.s.rho * R.eps + detail::pressure_of(R)) * R.s.beta + R.s.rho * R.s.beta * R.s.C * half;
    out.push_back((fL - fR) - nu * (qL - qR));
  }
  for (int k = 0; k < n; ++k) out.push_back(cfg.speeds[k + 1] - cfg.speeds[k]);
  for (const auto& r : ext) out.push_back(r.s.rho);
  for (const auto& r : ext) out.push_back(r.deps);
  // convexity over {-, 1..N} plus optionally '+'
  {
    std::vector<T> rho, eps, deps;
    const int last = include_plus ? n + 1 : n;
    for (int k = 0; k <= last; ++k) {
      rho.push_back(ext[k].s.rho);
      eps.push_back(ext[k].eps);
      deps.push_back(ext[k].deps);
    }
    for (auto& m : convexity_margins(rho, eps, deps)) out.push_back(std::move(m));
  }
}

template <class T>
std::vector<T> inequality_margins(const FanConfiguration<T>& cfg,
                                  ConvexityMode mode = ConvexityMode::Auto) {
  std::vector<T> out;
  inequality_margins_into(cfg, resolve_include_plus(cfg, mode), out);
  return out;
}

/// Per-equation residuals and per-inequality margins, plus the aggregate
/// verdict: "exact-feasible" iff every residual is exactly zero and every
/// margin exceeds the floor.
template <class T>
struct ResidualReport {
  int n_waves = 0;
  bool include_plus = false;
  std::vector<T> equalities;
  std::vector<T> margins;
  T max_abs_residual{};
  T min_margin{};
  T margin_floor{};
  bool all_equalities_zero = false;
  bool all_margins_above_floor = false;
  bool exact_feasible = false;

  std::vector<std::string> equality_label_list() const { return equality_labels(n_waves); }
  MarginSchema schema() const { return margin_schema(n_waves, include_plus); }
};

template <class T>
T generic_abs(const T& x) {
  return x < T(0) ? -x : x;
}

template <class T>
ResidualReport<T> evaluate(const FanConfiguration<T>& cfg, const T& margin_floor,
                           ConvexityMode mode = ConvexityMode::Auto) {
  ResidualReport<T> rep;
  rep.n_waves = cfg.n_waves();
  rep.include_plus = resolve_include_plus(cfg, mode);
  rep.margin_floor = margin_floor;
  equality_residuals_into(cfg, rep.equalities);
  inequality_margins_into(cfg, rep.include_plus, rep.margins);
  rep.all_equalities_zero = true;
  rep.max_abs_residual = T(0);
  for (const T& r : rep.equalities) {
    T a = generic_abs(r);
    if (rep.max_abs_residual < a) rep.max_abs_residual = a;
    if (!(r == T(0))) rep.all_equalities_zero = false;
  }
  rep.all_margins_above_floor = true;
  rep.min_margin = rep.margins.empty() ? T(0) : rep.margins.front();
  for (const T& m : rep.margins) {
    if (m < rep.min_margin) rep.min_margin = m;
    if (!(m > margin_floor)) rep.all_margins_above_floor = false;
  }
  rep.exact_feasible = rep.all_equalities_zero && rep.all_margins_above_floor;
  return rep;
}

// ---- magnitude bounds table -------------------------------------------------

struct BoundsTable {
  long v = 59;
  long alpha = 59;
  long beta = 19;
  long gamma = 1531;
  long delta = 1046;
  long nu = 34;
  long C = 3714;
  long rho = 13;
  long eps = 2308;
  long deps = 7;
};

struct BoundCheck {
  std::string name;
  bool pass;
};

template <class T>
std::vector<BoundCheck> bounds_check(const FanConfiguration<T>& cfg,
                                     const BoundsTable& b = {}) {
  cfg.validate();
  auto leq = [](std::initializer_list<T> vals, long lim) {
    for (const T& v : vals)
      if (generic_abs(v) > T(lim)) return false;
    return true;
  };
  auto all_leq = [&](const std::vector<T>& vals, long lim) {
    for (const T& v : vals)
      if (generic_abs(v) > T(lim)) return false;
    return true;
  };
  std::vector<T> alphas, betas, gammas, deltas, Cs, rhos, epss, depss;
  for (const auto& s : cfg.states) {
    alphas.push_back(s.alpha);
    betas.push_back(s.beta);
    gammas.push_back(s.gamma);
    deltas.push_back(s.delta);
    Cs.push_back(s.C);
    rhos.push_back(s.rho);
  }
  rhos.push_back(cfg.datum.rho_minus);
  rhos.push_back(cfg.datum.rho_plus);
  epss = cfg.thermo.eps;
  epss.push_back(cfg.thermo.eps_minus);
  epss.push_back(cfg.thermo.eps_plus);
  depss = cfg.thermo.deps;
  depss.push_back(cfg.thermo.deps_minus);
  depss.push_back(cfg.thermo.deps_plus);

  std::vector<BoundCheck> out;
  out.push_back({"v", leq({cfg.datum.v_minus.v1, cfg.datum.v_minus.v2, cfg.datum.v_plus.v1,
                           cfg.datum.v_plus.v2},
                          b.v)});
  out.push_back({"alpha", all_leq(alphas, b.alpha)});
  out.push_back({"beta", all_leq(betas, b.beta)});
  out.push_back({"gamma", all_leq(gammas, b.gamma)});
  out.push_back({"delta", all_leq(deltas, b.delta)});
  out.push_back({"nu", all_leq(cfg.speeds, b.nu)});
  out.push_back({"C", all_leq(Cs, b.C)});
  out.push_back({"rho", all_leq(rhos, b.rho)});
  out.push_back({"eps", all_leq(epss, b.eps)});
  out.push_back({"deps", all_leq(depss, b.deps)});
  return out;
}

}  // namespace eulerfan
