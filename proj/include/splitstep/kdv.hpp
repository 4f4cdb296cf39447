#ifndef SPLITSTEP_KDV_HPP
#define SPLITSTEP_KDV_HPP

#include "splitstep/scheme.hpp"
#include "splitstep/state.hpp"

namespace splitstep {

// KdV equation u_t + u_xxx + u u_x = 0 on a periodic interval, split as
// A = -d^3/dx^3 (exact Fourier multiplier e^{i sigma k^3}) and the frozen
// advection b(u*) w = -u*(x) w_x, d = 0. The sign makes b(u)u = -u u_x
// consistent with the equation above.
enum class KdVInitial { Soliton, Schwartzian };

struct KdVConfig {
    Interval domain{-20.0, 20.0};
    int n = 1 << 10;
    double inner_tol = 1e-12;
    KdVInitial initial = KdVInitial::Soliton;

    static KdVConfig soliton(int n = 1 << 10);
    static KdVConfig schwartzian(int n = 1 << 11);
};

// e^{sigma A}. Unimodular (hence unconditionally stable) for real sigma.
// Requires real sigma: complex composition coefficients are not supported
// for the dispersive flow.
State kdv_linear_propagate(const KdVConfig& config, Complex sigma, const State& state);

// Frozen advection w' = -u*(x) w_x integrated over [0, sigma] with an
// adaptive embedded Dormand-Prince 5(4) pair at tolerance config.inner_tol
// (absolute and relative); the spatial derivative is spectral. Counts as the
// exact partial flow for splitting purposes. Throws ErrorKind::FlowFailure
// on step-size underflow.
State kdv_nonlinear_propagate(const KdVConfig& config, Complex sigma, const State& frozen,
                              const State& state, double tol);

// Soliton: u0(x) = 12 / cosh^2(x).
// Schwartzian: u0(x) = 12 x tanh|x| / (|x| cosh^2 x), u0(0) = 0 by continuity.
State kdv_initial(const KdVConfig& config, const GridPtr& grid);

// Exact soliton solution u(t,x) = u0(x - 4t) with periodic wrap.
State kdv_soliton_exact(double t, const GridPtr& grid);

GridPtr kdv_grid(const KdVConfig& config);

SplitProblem make_kdv_problem(const KdVConfig& config);

}  // namespace splitstep

#endif
