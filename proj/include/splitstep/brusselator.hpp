#ifndef SPLITSTEP_BRUSSELATOR_HPP
#define SPLITSTEP_BRUSSELATOR_HPP

#include "splitstep/scheme.hpp"
#include "splitstep/state.hpp"

namespace splitstep {

// 2-D reaction-diffusion system on [0,1)^2 with periodic boundaries:
//   u_t = alpha Lap u + (uv - beta) u + delta
//   v_t = alpha Lap v - u^2 v + gamma u
// split as A [u;v] = [alpha Lap u; alpha Lap v] and the frozen-coefficient
// reaction b(u*,v*) = [[u* v* - beta, 0], [gamma, -u*^2]], d = [delta; 0].
struct BrusselatorParams {
    double alpha = 1e-2;
    double beta = 4.4;
    double gamma = 3.4;
    double delta = 1.0;
    // Backward diffusion guard: abort with Unstable once the amplification
    // exponent -Re(sigma)*alpha*|k|^2_max of a substep exceeds this.
    double backward_log_amp_guard = 40.0;
};

// e^{sigma A}: Fourier multiplier e^{-sigma alpha |k|^2} per component.
// Throws ErrorKind::Unstable for backward real parts beyond the guard.
State brusselator_linear_propagate(const BrusselatorParams& params, Complex sigma,
                                   const State& state);

// phi_sigma^{b(u*)} including the inhomogeneity: pointwise closed form of the
// lower-triangular 2x2 system w' = M w + d via e^{sigma M} and phi_1(sigma M)
// with cancellation-free divided differences for nearly confluent eigenvalues.
State brusselator_nonlinear_propagate(const BrusselatorParams& params, Complex sigma,
                                      const State& frozen, const State& state);

// u0 = 22 y (1-y)^{3/2} (1 + cos(10 pi x)),
// v0 = 27 x (1-x)^{3/2} (1 + sin(10 pi x)).
State brusselator_initial(const GridPtr& grid);

SplitProblem make_brusselator_problem(const BrusselatorParams& params);

}  // namespace splitstep

#endif
