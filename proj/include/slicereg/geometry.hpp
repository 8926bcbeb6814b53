#pragma once

#include <cstdint>
#include <vector>

#include "slicereg/exec.hpp"
#include "slicereg/quaternion.hpp"

namespace slicereg {

struct OptimizerConfig;  // functionals.hpp

// Exhaustive subset scans are refused above this many combinations.
inline constexpr double kCombinationGuard = 1e7;

struct PointCloud {
  std::vector<Quaternion> points;
};

struct NDiameterResult {
  enum class Method { exact, exchange };
  double value = 0.0;
  std::vector<Quaternion> witnesses;
  Method method = Method::exact;
};

// Max pairwise distance over all pairs. Requires a nonempty cloud.
NDiameterResult diameter(const PointCloud& cloud, Exec exec = Exec::openmp);

// max over n-subsets of (prod_{j<k} |w_k - w_j|)^{2/(n(n-1))}, exact.
// Requires cloud size >= n and C(size, n) <= kCombinationGuard.
NDiameterResult n_diameter_exact(const PointCloud& cloud, int n, Exec exec = Exec::openmp);

// Multistarted steepest single-point exchange; a lower bound of the exact
// value. n = 2 scans all pairs, which the exchange neighborhood spans anyway.
NDiameterResult n_diameter_exchange(const PointCloud& cloud, int n, const OptimizerConfig& cfg);

// n-diameter of the closed unit disc: n^{1/(n-1)}, attained at n-th roots of
// unity. Requires n >= 2.
double disc_n_diameter(int n);

// n-diameter of the closed unit ball of H for n in {2, 3, 4}:
// 2, sqrt(3), sqrt(8/3). No analytic value is asserted beyond n = 4.
double ball_n_diameter(int n);

// The three points u e^{2 pi j I / 3}, j = 1, 2, 3. Requires |u| = 1.
PointCloud cube_roots_config(const ImaginaryUnit& I, const Quaternion& u);

enum class FeketeDomain { ball, slice_disc };

// Maximizes the pairwise-distance product of n free points over the closed
// unit ball of H, or over the closed unit disc of one slice. Multistart
// pattern search; returns the configuration and its n-diameter value.
NDiameterResult fekete_maximize(int n, FeketeDomain domain, const OptimizerConfig& cfg);

}  // namespace slicereg
