#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "slicereg/functionals.hpp"
#include "slicereg/series.hpp"

namespace slicereg {

// Radii at which the theorem suites evaluate the functionals, and the proxy
// radius standing in for the r -> 1 normalization limit.
inline constexpr double kCheckGrid[] = {0.1, 0.3, 0.5, 0.7, 0.9};
inline constexpr double kNormalizationRadius = 0.99;

// Equality detection is looser than the inequality tolerance: the optimizer
// only underestimates, which biases the two tests differently.
inline constexpr double kEqualityTol = 1e-4;

struct EnsembleSpec {
  int count = 100;
  int degree = 5;
  double coefficient_scale = 1.0;
  std::uint64_t seed = 42;
};

struct TheoremVerdict {
  std::string theorem_id;
  int trials = 0;
  int violations = 0;
  double worst_margin = 0.0;  // smallest slack observed; negative means violated
  nlohmann::json witness;
  bool pass = true;
};

// Coefficients with independent coordinates uniform in [-scale, scale];
// deterministic per (spec.seed, index). Requires 0 <= index < spec.count.
RegularSeries random_series(const EnsembleSpec& spec, int index);

// Ensemble member used by the suites: every tenth member is truncated to an
// affine function (with a first coefficient of usable size), the rest are the
// raw random draws.
RegularSeries ensemble_member(const EnsembleSpec& spec, int index);
bool ensemble_member_is_affine(int index);

// Landau-Toeplitz inequalities for the regular diameter, normalized at the
// proxy radius: d2(f(rB)) <= 2r/rho + tol on the grid, |d_c f(0)| <= 1/rho + tol,
// equality points trigger the affinity detector. Requires nonconstant f.
TheoremVerdict check_landau_toeplitz_2(const RegularSeries& f, const OptimizerConfig& cfg);

// Odd-part Schwarz bounds under the same normalization.
TheoremVerdict check_schwarz_odd(const RegularSeries& f, const OptimizerConfig& cfg);

// d_n chain for n in {2,3,4}: dn <= d2 pointwise on the grid, plus the
// normalized Landau-Toeplitz inequality per n. Equality observations for
// n > 2 are recorded in the witness without pass/fail semantics.
TheoremVerdict check_dn_chain(const RegularSeries& f, const OptimizerConfig& cfg);

// Slice 3-diameter inequalities, affinity at equality, and the strict
// increase of phi_hat_3 for clearly nonaffine inputs.
TheoremVerdict check_slice3(const RegularSeries& f, const OptimizerConfig& cfg);

// d4 of the ball strictly exceeds d4 of a slice disc; the gap must top 0.04.
TheoremVerdict check_d4_gap(const OptimizerConfig& cfg);

// Algebraic identity suites over spec.count seeded trials each.
TheoremVerdict check_star_transform(const EnsembleSpec& spec, const OptimizerConfig& cfg,
                                    double star_coeff_perturb = 0.0);
TheoremVerdict check_representation(const EnsembleSpec& spec, const OptimizerConfig& cfg);
TheoremVerdict check_splitting(const EnsembleSpec& spec, const OptimizerConfig& cfg);
TheoremVerdict check_composition(const EnsembleSpec& spec, const OptimizerConfig& cfg);

// Test hook: lets the suite run with a deliberately corrupted star product to
// prove the star-transform verdict catches it.
struct FaultInjection {
  double star_coeff_perturb = 0.0;
};

const std::set<std::string>& all_theorem_ids();

// Executes the selected checks (theorem suites over the ensemble, identity
// suites over spec.count trials); verdicts ordered by theorem id. An unknown
// id throws std::invalid_argument.
std::vector<TheoremVerdict> run_suite(const EnsembleSpec& spec, const OptimizerConfig& cfg,
                                      const std::set<std::string>& selection,
                                      const FaultInjection& fault = {});

nlohmann::json verdict_to_json(const TheoremVerdict& v);
nlohmann::json verdicts_to_json(const std::vector<TheoremVerdict>& vs);

}  // namespace slicereg
