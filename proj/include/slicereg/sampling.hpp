#pragma once

#include <cmath>

#include "slicereg/quaternion.hpp"
#include "slicereg/rng.hpp"

namespace slicereg {

inline constexpr double kPi = 3.14159265358979323846;

// Uniform on the 2-sphere of imaginary units; deterministic per generator state.
inline ImaginaryUnit random_unit_imaginary(Rng& rng) {
  double x, y, z, n2;
  do {
    x = rng.gaussian();
    y = rng.gaussian();
    z = rng.gaussian();
    n2 = x * x + y * y + z * z;
  } while (n2 == 0.0);
  const double n = std::sqrt(n2);
  return ImaginaryUnit{x / n, y / n, z / n};
}

// Uniform on the unit 3-sphere of H.
inline Quaternion random_unit_quaternion(Rng& rng) {
  double w, x, y, z, n2;
  do {
    w = rng.gaussian();
    x = rng.gaussian();
    y = rng.gaussian();
    z = rng.gaussian();
    n2 = w * w + x * x + y * y + z * z;
  } while (n2 == 0.0);
  const double n = std::sqrt(n2);
  return Quaternion{w / n, x / n, y / n, z / n};
}

// Uniform in the closed unit ball of H.
inline Quaternion random_in_ball(Rng& rng) {
  const Quaternion dir = random_unit_quaternion(rng);
  return dir * std::pow(rng.uniform(), 0.25);
}

// Point m of an M-point spherical Fibonacci spiral on the 2-sphere.
inline ImaginaryUnit fibonacci_sphere_point(int m, int M) {
  const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - (2.0 * m + 1.0) / M;
  const double rho = std::sqrt(1.0 - std::fmin(1.0, z * z));
  const double phi = golden_angle * m;
  return ImaginaryUnit{rho * std::cos(phi), rho * std::sin(phi), z};
}

// Point m of an M-point low-discrepancy set on the unit 3-sphere, via Hopf
// coordinates driven by a Kronecker sequence. sin^2(eta) is sampled uniformly
// so the set is asymptotically equidistributed for the round measure.
inline Quaternion hopf_s3_point(int m, int M) {
  // additive recurrences with pairwise-independent irrationals
  const double a1 = 0.6180339887498949;   // 1/phi
  const double a2 = 0.5545497447511978;   // sqrt(2)-0.859... (frac of sqrt 2 scaled)
  const double a3 = 0.3247179572447460;   // plastic-number based
  const double t = (m + 0.5) / M;
  const double s1 = t;
  const double s2 = std::fmod(0.5 + (m + 1) * a1, 1.0);
  const double s3 = std::fmod(0.25 + (m + 1) * (a2 + a3), 1.0);
  const double eta = std::asin(std::sqrt(s1));
  const double th1 = 2.0 * kPi * s2;
  const double th2 = 2.0 * kPi * s3;
  return Quaternion{std::cos(eta) * std::cos(th1), std::cos(eta) * std::sin(th1),
                    std::sin(eta) * std::cos(th2), std::sin(eta) * std::sin(th2)};
}

}  // namespace slicereg
