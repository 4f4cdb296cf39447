#ifndef SPLITSTEP_STUDY_HPP
#define SPLITSTEP_STUDY_HPP

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "splitstep/scheme.hpp"
#include "splitstep/state.hpp"

namespace splitstep {

// A problem instance ready for time integration: the split flows, the
// initial state, and (when available) the exact solution map.
struct ProblemSetup {
    std::string name;
    SplitProblem problem;
    State initial;
    // Empty unless the problem has a closed-form solution (KdV soliton).
    std::function<State(double t)> exact_solution;
    // Coefficient family used for composition-based reference schemes.
    GammaMode gamma_mode = GammaMode::Real;
};

struct ReferenceSpec {
    enum class Kind { ExactSolution, SelfReference };
    Kind kind = Kind::SelfReference;
    int factor = 20;  // tau_ref = min(tau_list) / factor
    // Self-check bound: the tau_ref and tau_ref/2 runs must agree this well.
    double max_floor = 1e-6;
};

struct StudyConfig {
    ProblemSetup setup;
    SchemeSpec scheme;
    double T = 1.0;
    std::vector<double> tau_list;  // decreasing; every entry divides T
    NormKind norm = NormKind::DiscreteL2;
    ReferenceSpec reference;
    std::string out_path;     // empty: no CSV written
    int threads = 0;          // concurrent trajectories; 0 = hardware
    double fit_floor_factor = 1e2;  // fit window floor = factor * ref_floor
    double fit_ceiling = 1e-2;      // fit window ceiling (absolute error)
    std::string ref_cache_path;     // empty: no reference caching
};

struct StudyRow {
    double tau = 0;
    double error = 0;
    double wall_time_s = 0;
    long iterations = 0;  // total fixed-point iterations over the trajectory
};

struct StudyResult {
    std::string problem_name;
    std::string scheme_name;
    NormKind norm = NormKind::DiscreteL2;
    std::vector<StudyRow> rows;          // ordered as config.tau_list
    double fitted_order = 0;
    std::vector<std::size_t> fit_window; // row indices used for the fit
    double ref_floor = 0;                // estimated reference accuracy
};

// Applies the one-step map T/tau times. Complex-coefficient schemes on
// real-valued problems get the real projection once per macro step. Failures
// from any step are rethrown with the step index attached.
State integrate(const SplitProblem& problem, const SchemeSpec& scheme, double tau, double T,
                const State& u0, StepDiagnostics* aggregate = nullptr);

struct ReferenceResult {
    State state;
    double eps_ref = 0;  // 0 for exact references
    double tau_ref = 0;
};

// ExactSolution: calls setup.exact_solution(T). SelfReference: integrates the
// iterated triple jump (base IteratedStrang(4), setup.gamma_mode) at
// tau_ref = tau_min/factor and self-checks against a tau_ref/2 re-run.
ReferenceResult reference_solution(const ProblemSetup& setup, double T, const ReferenceSpec& ref,
                                   double tau_min, double inner_tol, NormKind norm_kind);

struct OrderFit {
    double slope = 0;
    std::vector<std::size_t> window;
};

// Least-squares slope of log(error) vs log(tau) over rows with
// floor <= error <= ceiling; throws ErrorKind::Config if fewer than 3 remain.
OrderFit fit_order(std::span<const double> taus, std::span<const double> errors, double floor,
                   double ceiling);

StudyResult run_study(const StudyConfig& config);

// CSV: header tau,error,wall_time_s,iterations,scheme,problem,norm; one row
// per tau with 17 significant digits; trailing comment lines
// "# fitted_order=..." and "# ref_floor=...".
void write_csv(const StudyResult& result, std::ostream& os);
void write_csv(const StudyResult& result, const std::string& path);
std::vector<StudyRow> read_csv_rows(std::istream& is);

// Companion gnuplot script: log-log axes, one series per CSV, guide lines
// with the fitted orders. Cosmetic output for eyeballing the order plots.
void write_plot_script(std::span<const StudyResult> results,
                       std::span<const std::string> csv_paths, const std::string& path);

// tau_max / 2^j for j = 0..count-1.
std::vector<double> dyadic_taus(double tau_max, int count);

const char* norm_name(NormKind kind);

}  // namespace splitstep

#endif
