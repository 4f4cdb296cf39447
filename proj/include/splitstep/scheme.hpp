#ifndef SPLITSTEP_SCHEME_HPP
#define SPLITSTEP_SCHEME_HPP

#include <array>
#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "splitstep/state.hpp"

namespace splitstep {

// The two exactly solvable partial flows of u' = Au + b(u)u + d.
//
//   linear_propagate(sigma, u)              -> e^{sigma A} u
//   nonlinear_propagate(sigma, u*, u, tol)  -> phi_sigma^{b(u*)}(u), i.e. the
//       solution at time sigma of w' = b(u*) w + d with w(0) = u and the
//       coefficient frozen at u*.
//
// Both must reduce to the identity at sigma = 0, and the frozen flow must
// satisfy the semigroup property in sigma (same u*) to within tol.
struct SplitProblem {
    std::function<State(Complex sigma, const State& u)> linear_propagate;
    std::function<State(Complex sigma, const State& frozen, const State& u, double tol)>
        nonlinear_propagate;
    // Advisory Lipschitz bound for b; only used for step-size warnings.
    std::optional<double> lipschitz_hint;
    // Real-valued problems get the explicit real projection once per macro
    // step when integrated with complex composition coefficients.
    bool real_valued = true;
};

struct StepDiagnostics {
    std::vector<double> fixed_point_increments;  // ||v^(k+1) - v^(k)||
    long iterations_used = 0;
    std::vector<std::string> warnings;

    // Aggregation across substeps: concatenates increments, sums iterations.
    void merge(const StepDiagnostics& other);
    // Largest consecutive-increment ratio, or 0 if fewer than two increments.
    double worst_contraction_ratio() const;
};

enum class GammaMode { Real, Complex };

// Coefficients of the three-fold composition Phi_{g3 tau} o Phi_{g2 tau} o
// Phi_{g1 tau} raising a method of even order p to order p+2:
//   g1 + g2 + g3 = 1,  g1^{p+1} + g2^{p+1} + g3^{p+1} = 0.
// Real mode returns g1 = g3 = 1/(2 - 2^{1/(p+1)}), g2 = -2^{1/(p+1)} g1
// (one backward substep). Complex mode replaces 2^{1/(p+1)} by
// 2^{1/(p+1)} w with w the primitive (p+1)-th root of unity of smallest
// positive argument for which all three real parts are positive.
std::array<Complex, 3> triple_jump_coefficients(int p, GammaMode mode);

class SchemeSpec {
  public:
    enum class Kind { Lie, Strang, IteratedStrang, Composition };

    static SchemeSpec lie();
    static SchemeSpec strang();
    static SchemeSpec iterated_strang(int iterations);
    // gammas must sum to 1 within 1e-14.
    static SchemeSpec composition(SchemeSpec base, std::vector<Complex> gammas);

    Kind kind = Kind::Strang;
    int iterations = 1;                     // IteratedStrang only
    std::shared_ptr<const SchemeSpec> base; // Composition only
    std::vector<Complex> gammas;            // Composition only

    // 0 means exactly `iterations` fixed-point evaluations, no early exit.
    double fixed_point_tol = 0.0;
    // Tolerance handed to nonlinear_propagate.
    double inner_tol = 1e-12;

    bool uses_complex_coefficients() const;
    std::string name() const;
};

// One-step maps. tau may be complex (composition substeps).
State lie_step(const SplitProblem& problem, Complex tau, const State& u0, double inner_tol);
State strang_step(const SplitProblem& problem, Complex tau, const State& u0, double inner_tol);

// Iterated almost-symmetric Strang step: computes the half-point
// u_half = phi_{tau/2}^{b(u0)}(e^{(tau/2)A} u0) once, then the fixed-point
// iterates v^(1) = e^{(tau/2)A} phi_{tau/2}^{b(u_half)}(u_half) and
// v^(k+1) = F(v^(k)) with F(v) = e^{(tau/2)A} phi_{tau/2}^{b(v)}(u_half).
// Records ||v^(k+1) - v^(k)|| in diag; throws ErrorKind::Divergence when the
// increments grow over two consecutive iterations.
State iterated_strang_step(const SplitProblem& problem, Complex tau, const State& u0,
                           int iterations, double fixed_point_tol, double inner_tol,
                           StepDiagnostics& diag);

// Applies the base step sequentially with substeps gamma_j * tau (zero
// gammas are skipped); diagnostics are aggregated across substeps.
State compose_step(const SplitProblem& problem, const SchemeSpec& base,
                   std::span<const Complex> gammas, Complex tau, const State& u0,
                   StepDiagnostics& diag);

// Dispatch on spec.kind.
State scheme_step(const SplitProblem& problem, const SchemeSpec& spec, Complex tau,
                  const State& u0, StepDiagnostics& diag);

// || Phi_{-tau}(Phi_tau(u0)) - u0 || in the given norm; the round-trip
// restatement of the adjoint defect. Only meaningful for problems that
// tolerate backward substeps.
double symmetry_defect(const SplitProblem& problem, const SchemeSpec& spec, double tau,
                       const State& u0, NormKind kind = NormKind::DiscreteL2);

}  // namespace splitstep

#endif
