#ifndef SPLITSTEP_TOY_ODE_HPP
#define SPLITSTEP_TOY_ODE_HPP

#include "splitstep/scheme.hpp"
#include "splitstep/state.hpp"

namespace splitstep {

// Scalar Riccati toy u' = u^2 carried on a small constant grid: A = 0,
// b(u*) w = u* .* w pointwise, d = 0, so both partial flows are exact closed
// forms. Backward steps are safe, which makes this the testbed for the
// symmetry-defect and iterate-limit measurements.
GridPtr toy_grid();
State toy_initial(double value = 1.0);
SplitProblem make_toy_problem();

}  // namespace splitstep

#endif
