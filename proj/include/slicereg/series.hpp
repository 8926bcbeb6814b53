#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "slicereg/quaternion.hpp"

namespace slicereg {

// Degree cap for iterated star products; guards accidental blowup.
inline constexpr std::size_t kStarDegreeCap = 64;

// Coefficients below this threshold count as vanishing when locating the
// first nonzero coefficient.
inline constexpr double kZeroCoeffTol = 1e-14;

// Truncated power series sum_n q^n a_n with quaternionic right coefficients:
// the representation of a slice regular function on the ball |q| < radius.
// Values are immutable in spirit: every operation returns a new series.
struct RegularSeries {
  std::vector<Quaternion> coeffs;  // coeffs[n] multiplies q^n
  double radius = 1.0;

  RegularSeries() = default;
  explicit RegularSeries(std::vector<Quaternion> c, double r = 1.0)
      : coeffs(std::move(c)), radius(r) {}

  int truncation_degree() const { return static_cast<int>(coeffs.size()) - 1; }

  // Largest index with a coefficient above kZeroCoeffTol; -1 for the zero series.
  int degree() const;

  Quaternion coeff(std::size_t n) const {
    return n < coeffs.size() ? coeffs[n] : Quaternion::zero();
  }

  bool is_zero(double tol = kZeroCoeffTol) const { return degree_above(tol) < 0; }
  int degree_above(double tol) const;
};

// Index of the first coefficient with |a_n| > kZeroCoeffTol; -1 if none.
int first_nonzero_index(const RegularSeries& f);

// sum q^n a_n by left-nested accumulation a_0 + q(a_1 + q(a_2 + ...)).
// Requires |q| < f.radius.
Quaternion evaluate(const RegularSeries& f, const Quaternion& q);

// Slice (Cullen) derivative: coefficients (n+1) a_{n+1}.
RegularSeries slice_derivative(const RegularSeries& f);

// Star product: Cauchy convolution c_n = sum_k a_k b_{n-k}. The result degree
// is the sum of the operand truncation degrees; exceeding the cap throws.
RegularSeries star_product(const RegularSeries& f, const RegularSeries& g,
                           std::size_t degree_cap = kStarDegreeCap);

// T_f(q) = f(q)^{-1} q f(q); lies on the same 2-sphere Re(q) + |Im(q)| S.
Quaternion transform_point(const RegularSeries& f, const Quaternion& q);

// Regular composition with q -> qu: coefficients u^n a_n. For |u| > 1 the
// convergence radius shrinks; the result's radius is rescaled accordingly.
RegularSeries regular_compose_unit(const RegularSeries& f, const Quaternion& u);

// Auxiliary series (1/2) q^{-1} (f_u - f_v): coefficients
// (1/2)(u^{n+1} - v^{n+1}) a_{n+1}. Its value at 0 is (1/2)(u - v) a_1.
RegularSeries aux_g(const RegularSeries& f, const Quaternion& u, const Quaternion& v);

// (f(q) - f(-q))/2: even-degree coefficients zeroed.
RegularSeries odd_part(const RegularSeries& f);

// Coefficientwise splitting a_n = b_n + c_n J with b_n, c_n in L_I.
// F and G are complex identified with L_I via x + yI <-> x + iy.
struct SplitPair {
  std::vector<std::complex<double>> F_coeffs;
  std::vector<std::complex<double>> G_coeffs;
  ImaginaryUnit I;
  ImaginaryUnit J;
};

// Requires <I, J> = 0 within 1e-10.
SplitPair split(const RegularSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J);

// F(z) + G(z) J as a quaternion, z a point of the disc of L_I.
Quaternion split_reconstruct(const SplitPair& sp, std::complex<double> z);

// (1/2)[f(x+yJ) + f(x-yJ)] + I (1/2)[J [f(x-yJ) - f(x+yJ)]].
// Requires x^2 + y^2 < radius^2.
Quaternion representation_eval(const RegularSeries& f, double x, double y,
                               const ImaginaryUnit& I, const ImaginaryUnit& J);

// Right-multiplies every coefficient by a_N^{-1} |a_N|, N the first index with
// a nonvanishing coefficient; coefficient N of the result is the real |a_N|.
// Throws on the identically-zero series.
RegularSeries normalize_hat(const RegularSeries& f);

}  // namespace slicereg
