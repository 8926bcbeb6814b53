#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slicereg/exec.hpp"
#include "slicereg/quaternion.hpp"
#include "slicereg/series.hpp"

namespace slicereg {

// Governs every maximization. All searches are deterministic functions of
// (inputs, config); seeds feed an explicit generator, never global state.
struct OptimizerConfig {
  int sphere_grid = 24;            // points per sphere sweep
  int radial_grid = 3;             // shells per closed-ball variable
  int multistarts = 6;             // refined starts / random restarts
  int refinement_iterations = 60;  // pattern-search sweep budget per start
  double refine_step_decay = 0.55; // in (0, 1)
  double tolerance = 1e-6;
  std::uint64_t seed = 1;
  Exec exec = Exec::openmp;

  void validate() const;  // throws std::invalid_argument
};

// Witness of a slice-search maximum: slice unit I, disc points w and the
// evaluation point z as complex coordinates of L_I.
struct SliceWitness {
  ImaginaryUnit I;
  std::array<std::complex<double>, 3> w{};
  std::complex<double> z;
};

// Result of one functional evaluation. `value` is a lower bound of the true
// supremum, reproduced by re-evaluating the matching *_objective at the
// stored witnesses.
struct FunctionalReport {
  double value = 0.0;
  std::vector<Quaternion> vars;  // u, v or w_1..w_n of the ball search
  Quaternion q;                  // evaluation point, |q| <= r
  std::optional<SliceWitness> slice;
  long long evaluations = 0;
  std::string method;
};

struct RadialProfile {
  std::vector<double> r_values;
  std::vector<double> values;
  std::string functional;  // "phi" or "phi_hat"
  int n = 2;
};

// |f_u(q) - f_v(q)|.
double regular_diameter_objective(const RegularSeries& f, const Quaternion& u,
                                  const Quaternion& v, const Quaternion& q);

// |*-prod over lex pairs (j,k) of (f_{w_k} - f_{w_j})|^{2/(n(n-1))} at q.
double regular_n_diameter_objective(const RegularSeries& f,
                                    const std::vector<Quaternion>& ws,
                                    const Quaternion& q);

// |ghat_{w1,w2,w3}(z)|^{1/3} on the slice L_I, built from the coefficients of
// normalize_hat(f - f(0)).
double slice_3_diameter_objective(const RegularSeries& f, const ImaginaryUnit& I,
                                  const std::array<std::complex<double>, 3>& w,
                                  std::complex<double> z);

// The series z -> ghat_{w1,w2,w3}(z) with the slice unit baked into the
// coefficients; evaluating it on L_I reproduces the slice-3 objective.
RegularSeries slice3_ghat_series(const RegularSeries& f, const ImaginaryUnit& I,
                                 const std::array<std::complex<double>, 3>& w);

// Extra starting tuple for the ball search; evaluated verbatim, so any value
// it certifies is a floor for the reported maximum.
struct SeedTuple {
  std::vector<Quaternion> vars;
  Quaternion q;
};

// Estimate of max_{u,v in closed B} max_{|q| <= r} |f_u(q) - f_v(q)|.
// The q-search runs on |q| = r; carried witnesses may sit inside the ball.
FunctionalReport regular_diameter(const RegularSeries& f, double r,
                                  const OptimizerConfig& cfg,
                                  const FunctionalReport* carry = nullptr,
                                  const std::vector<SeedTuple>& extra_seeds = {});

// Estimate of the regular n-diameter of f(rB), 2 <= n <= 5.
FunctionalReport regular_n_diameter(const RegularSeries& f, int n, double r,
                                    const OptimizerConfig& cfg,
                                    const FunctionalReport* carry = nullptr,
                                    const std::vector<SeedTuple>& extra_seeds = {});

// Estimate of the slice 3-diameter of f(rB). Constant f reports value 0;
// the identically-zero series is a degenerate input.
FunctionalReport slice_3_diameter(const RegularSeries& f, double r,
                                  const OptimizerConfig& cfg,
                                  const FunctionalReport* carry = nullptr);

// Slice-3 search restricted to one slice; the full functional is the maximum
// of this quantity over sampled slices.
FunctionalReport slice_3_diameter_on_slice(const RegularSeries& f, double r,
                                           const ImaginaryUnit& I,
                                           const OptimizerConfig& cfg);

// phi_n(r) = regular n-diameter of f(rB) divided by d_n(B) r, per r.
// Witnesses chain across the grid, so the profile is nondecreasing by
// construction whenever the true functional is. n in {2, 3, 4}.
RadialProfile phi_profile(const RegularSeries& f, int n,
                          const std::vector<double>& r_values,
                          const OptimizerConfig& cfg);

// phi_hat_3(r) = slice 3-diameter of f(rB) divided by sqrt(3) r.
RadialProfile phi_hat_3_profile(const RegularSeries& f,
                                const std::vector<double>& r_values,
                                const OptimizerConfig& cfg);

}  // namespace slicereg
