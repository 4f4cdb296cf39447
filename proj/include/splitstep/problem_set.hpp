#ifndef SPLITSTEP_PROBLEM_SET_HPP
#define SPLITSTEP_PROBLEM_SET_HPP

#include <optional>
#include <string>

#include "splitstep/brusselator.hpp"
#include "splitstep/kdv.hpp"
#include "splitstep/study.hpp"
#include "splitstep/toy_ode.hpp"

namespace splitstep {

enum class ProblemId { Brusselator, KdVSoliton, KdVSchwartz, ToyOde };

std::optional<ProblemId> parse_problem_id(const std::string& name);

struct ProblemOptions {
    int grid_n = 0;          // 0: per-problem default
    double inner_tol = 1e-12;
    BrusselatorParams brusselator{};
};

ProblemSetup make_problem_setup(ProblemId id, const ProblemOptions& opts = {});

// Default study settings per problem (final time, norm, grid size,
// coefficient family, dyadic sweep, reference choice).
struct StudyDefaults {
    double T = 1.0;
    NormKind norm = NormKind::DiscreteL2;
    GammaMode coeffs = GammaMode::Real;
    int grid_n = 8;
    double tau_max = 0.25;
    int tau_count = 6;
    ReferenceSpec reference;
};

StudyDefaults study_defaults(ProblemId id);

}  // namespace splitstep

#endif
