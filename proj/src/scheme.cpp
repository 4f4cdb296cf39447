#include "splitstep/scheme.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "splitstep/errors.hpp"

namespace splitstep {

namespace {

// Increments at or below this scale are roundoff jitter, not growth.
double increment_floor(const State& v) {
    return 1e-13 * std::max(1.0, norm(v, NormKind::DiscreteL2));
}

int gcd_int(int a, int b) { return std::gcd(a, b); }

}  // namespace

void StepDiagnostics::merge(const StepDiagnostics& other) {
    fixed_point_increments.insert(fixed_point_increments.end(),
                                  other.fixed_point_increments.begin(),
                                  other.fixed_point_increments.end());
    iterations_used += other.iterations_used;
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

double StepDiagnostics::worst_contraction_ratio() const {
    double worst = 0.0;
    for (std::size_t k = 1; k < fixed_point_increments.size(); ++k) {
        if (fixed_point_increments[k - 1] > 0.0)
            worst = std::max(worst, fixed_point_increments[k] / fixed_point_increments[k - 1]);
    }
    return worst;
}

std::array<Complex, 3> triple_jump_coefficients(int p, GammaMode mode) {
    if (p < 2 || p % 2 != 0)
        throw SplitError(ErrorKind::Config,
                         "triple jump needs an even base order p >= 2, got " + std::to_string(p));

    const double root = std::pow(2.0, 1.0 / (p + 1));
    if (mode == GammaMode::Real) {
        const double g1 = 1.0 / (2.0 - root);
        return {Complex(g1), Complex(-root * g1), Complex(g1)};
    }

    // Primitive (p+1)-th roots of unity in order of increasing argument; the
    // first that renders all real parts positive wins.
    for (int j = 1; j <= p; ++j) {
        if (gcd_int(j, p + 1) != 1) continue;
        const double arg = 2.0 * M_PI * j / (p + 1);
        const Complex omega = std::polar(1.0, arg);
        const Complex g1 = 1.0 / (2.0 - root * omega);
        const Complex g2 = -root * omega * g1;
        if (g1.real() > 0.0 && g2.real() > 0.0) return {g1, g2, g1};
    }
    throw SplitError(ErrorKind::Config,
                     "no complex composition coefficients with positive real part for p = " +
                         std::to_string(p));
}

SchemeSpec SchemeSpec::lie() {
    SchemeSpec s;
    s.kind = Kind::Lie;
    return s;
}

SchemeSpec SchemeSpec::strang() {
    SchemeSpec s;
    s.kind = Kind::Strang;
    return s;
}

SchemeSpec SchemeSpec::iterated_strang(int iterations) {
    if (iterations < 1)
        throw SplitError(ErrorKind::Config, "iterated Strang needs at least one iteration");
    SchemeSpec s;
    s.kind = Kind::IteratedStrang;
    s.iterations = iterations;
    return s;
}

SchemeSpec SchemeSpec::composition(SchemeSpec base, std::vector<Complex> gammas) {
    if (gammas.empty())
        throw SplitError(ErrorKind::Config, "composition needs at least one coefficient");
    Complex sum = 0.0;
    for (const Complex& g : gammas) sum += g;
    if (std::abs(sum - 1.0) > 1e-14)
        throw SplitError(ErrorKind::Config, "composition coefficients must sum to 1");
    SchemeSpec s;
    s.kind = Kind::Composition;
    s.inner_tol = base.inner_tol;
    s.fixed_point_tol = base.fixed_point_tol;
    s.base = std::make_shared<const SchemeSpec>(std::move(base));
    s.gammas = std::move(gammas);
    return s;
}

bool SchemeSpec::uses_complex_coefficients() const {
    for (const Complex& g : gammas)
        if (g.imag() != 0.0) return true;
    return base && base->uses_complex_coefficients();
}

std::string SchemeSpec::name() const {
    switch (kind) {
        case Kind::Lie: return "lie";
        case Kind::Strang: return "strang";
        case Kind::IteratedStrang: return "iter-strang(" + std::to_string(iterations) + ")";
        case Kind::Composition: {
            std::ostringstream os;
            os << "triple-jump[" << base->name() << ","
               << (uses_complex_coefficients() ? "complex" : "real") << "]";
            return os.str();
        }
    }
    return "unknown";
}

State lie_step(const SplitProblem& problem, Complex tau, const State& u0, double inner_tol) {
    State w = problem.linear_propagate(tau, u0);
    return problem.nonlinear_propagate(tau, u0, w, inner_tol);
}

State strang_step(const SplitProblem& problem, Complex tau, const State& u0, double inner_tol) {
    const Complex half = 0.5 * tau;
    State w = problem.linear_propagate(half, u0);
    State u_half = problem.nonlinear_propagate(half, u0, w, inner_tol);
    State inner = problem.nonlinear_propagate(tau, u_half, w, inner_tol);
    return problem.linear_propagate(half, inner);
}

State iterated_strang_step(const SplitProblem& problem, Complex tau, const State& u0,
                           int iterations, double fixed_point_tol, double inner_tol,
                           StepDiagnostics& diag) {
    if (iterations < 1)
        throw SplitError(ErrorKind::Config, "iterated Strang needs at least one iteration");

    if (problem.lipschitz_hint && *problem.lipschitz_hint * std::abs(tau) >= 1.0)
        diag.warnings.push_back("L*tau >= 1: fixed-point iteration may not contract");

    const Complex half = 0.5 * tau;
    State w = problem.linear_propagate(half, u0);
    State u_half = problem.nonlinear_propagate(half, u0, w, inner_tol);

    // v^(1) = F(u_half), F(v) = e^{(tau/2)A} phi_{tau/2}^{b(v)}(u_half)
    State v = problem.linear_propagate(half,
                                       problem.nonlinear_propagate(half, u_half, u_half, inner_tol));
    diag.iterations_used += 1;

    double prev_inc = std::numeric_limits<double>::infinity();
    int growth_streak = 0;
    for (int k = 2; k <= iterations; ++k) {
        State next = problem.linear_propagate(
            half, problem.nonlinear_propagate(half, v, u_half, inner_tol));
        const double inc = norm_difference(next, v, NormKind::DiscreteL2);
        diag.fixed_point_increments.push_back(inc);
        diag.iterations_used += 1;
        v = std::move(next);

        if (inc > prev_inc && inc > increment_floor(v))
            ++growth_streak;
        else
            growth_streak = 0;
        if (growth_streak >= 2) {
            std::ostringstream os;
            os << "fixed-point iteration diverges at |tau| = " << std::abs(tau)
               << " (increments";
            for (double d : diag.fixed_point_increments) os << " " << d;
            os << ")";
            throw SplitError(ErrorKind::Divergence, os.str());
        }
        prev_inc = inc;

        if (fixed_point_tol > 0.0 && inc <= fixed_point_tol) break;
    }
    return v;
}

State compose_step(const SplitProblem& problem, const SchemeSpec& base,
                   std::span<const Complex> gammas, Complex tau, const State& u0,
                   StepDiagnostics& diag) {
    State u = u0;
    for (const Complex& g : gammas) {
        if (g == Complex(0.0, 0.0)) continue;
        u = scheme_step(problem, base, g * tau, u, diag);
    }
    return u;
}

State scheme_step(const SplitProblem& problem, const SchemeSpec& spec, Complex tau,
                  const State& u0, StepDiagnostics& diag) {
    switch (spec.kind) {
        case SchemeSpec::Kind::Lie:
            return lie_step(problem, tau, u0, spec.inner_tol);
        case SchemeSpec::Kind::Strang:
            return strang_step(problem, tau, u0, spec.inner_tol);
        case SchemeSpec::Kind::IteratedStrang:
            return iterated_strang_step(problem, tau, u0, spec.iterations, spec.fixed_point_tol,
                                        spec.inner_tol, diag);
        case SchemeSpec::Kind::Composition: {
            SchemeSpec sub = *spec.base;
            sub.fixed_point_tol = spec.fixed_point_tol;
            sub.inner_tol = spec.inner_tol;
            return compose_step(problem, sub, spec.gammas, tau, u0, diag);
        }
    }
    throw SplitError(ErrorKind::Config, "unknown scheme kind");
}

double symmetry_defect(const SplitProblem& problem, const SchemeSpec& spec, double tau,
                       const State& u0, NormKind kind) {
    StepDiagnostics diag;
    State forward = scheme_step(problem, spec, Complex(tau, 0.0), u0, diag);
    State round_trip = scheme_step(problem, spec, Complex(-tau, 0.0), forward, diag);
    return norm_difference(round_trip, u0, kind);
}

}  // namespace splitstep
