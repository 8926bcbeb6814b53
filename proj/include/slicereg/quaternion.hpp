#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace slicereg {

// Element of the real quaternion algebra H, coordinates along {1, i, j, k}.
// Plain value record; no operation normalizes its operands implicitly.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}

  static constexpr Quaternion real(double a) { return {a, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion zero() { return {}; }
  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }

  constexpr Quaternion operator+(const Quaternion& o) const {
    return {w + o.w, x + o.x, y + o.y, z + o.z};
  }
  constexpr Quaternion operator-(const Quaternion& o) const {
    return {w - o.w, x - o.x, y - o.y, z - o.z};
  }
  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  // Hamilton product: i^2 = j^2 = k^2 = -1, ij = k. Noncommutative.
  constexpr Quaternion operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }

  constexpr Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
  constexpr Quaternion operator/(double s) const { return {w / s, x / s, y / s, z / s}; }

  Quaternion& operator+=(const Quaternion& o) { *this = *this + o; return *this; }
  Quaternion& operator-=(const Quaternion& o) { *this = *this - o; return *this; }
  Quaternion& operator*=(const Quaternion& o) { *this = *this * o; return *this; }
  Quaternion& operator*=(double s) { *this = *this * s; return *this; }

  constexpr bool operator==(const Quaternion& o) const = default;

  constexpr double re() const { return w; }
  constexpr Quaternion im() const { return {0.0, x, y, z}; }
  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }
};

inline constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

inline constexpr Quaternion conj(const Quaternion& q) { return q.conj(); }
inline double norm(const Quaternion& q) { return q.norm(); }

// q^{-1} = conj(q) / |q|^2.
inline Quaternion inverse(const Quaternion& q) {
  const double n2 = q.norm_sq();
  if (n2 == 0.0) throw std::domain_error("inverse of zero quaternion");
  return q.conj() / n2;
}

inline constexpr double dot(const Quaternion& p, const Quaternion& q) {
  return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

// Total order on coordinates, used only for deterministic tie-breaking.
inline constexpr bool lex_less(const Quaternion& a, const Quaternion& b) {
  if (a.w != b.w) return a.w < b.w;
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

// Point of S, the unit 2-sphere of purely imaginary quaternions.
// Invariant: x^2 + y^2 + z^2 = 1; the real part is identically zero.
struct ImaginaryUnit {
  double x = 1.0;
  double y = 0.0;
  double z = 0.0;

  static constexpr ImaginaryUnit i() { return {1.0, 0.0, 0.0}; }
  static constexpr ImaginaryUnit j() { return {0.0, 1.0, 0.0}; }
  static constexpr ImaginaryUnit k() { return {0.0, 0.0, 1.0}; }

  // Normalizes the direction (x, y, z); the zero vector has no direction.
  static ImaginaryUnit from_components(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (n == 0.0) throw std::invalid_argument("imaginary unit from zero vector");
    return {x / n, y / n, z / n};
  }

  constexpr Quaternion as_quaternion() const { return {0.0, x, y, z}; }
  constexpr double dot(const ImaginaryUnit& o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr ImaginaryUnit operator-() const { return {-x, -y, -z}; }
};

// <w, I> = -Re(w I), the imaginary component of w along I.
inline constexpr double im_component_along(const Quaternion& w, const ImaginaryUnit& I) {
  return w.x * I.x + w.y * I.y + w.z * I.z;
}

// x + y I as a quaternion point of the slice L_I.
inline constexpr Quaternion slice_point(double x, double y, const ImaginaryUnit& I) {
  return {x, y * I.x, y * I.y, y * I.z};
}

inline Quaternion slice_point(std::complex<double> zc, const ImaginaryUnit& I) {
  return slice_point(zc.real(), zc.imag(), I);
}

// Deterministic unit orthogonal to I (completes I to an orthonormal pair).
inline ImaginaryUnit orthogonal_unit(const ImaginaryUnit& I) {
  // start from the axis least aligned with I, then Gram-Schmidt
  double ax = std::fabs(I.x), ay = std::fabs(I.y), az = std::fabs(I.z);
  double vx = 0.0, vy = 0.0, vz = 0.0;
  if (ax <= ay && ax <= az) vx = 1.0;
  else if (ay <= az) vy = 1.0;
  else vz = 1.0;
  const double d = vx * I.x + vy * I.y + vz * I.z;
  return ImaginaryUnit::from_components(vx - d * I.x, vy - d * I.y, vz - d * I.z);
}

// Decomposition q = x + y I_q with y >= 0. For real q the slice unit is not
// determined; is_real_axis is set and `unit` holds the caller's default.
struct SliceCoordinates {
  double x = 0.0;
  double y = 0.0;
  ImaginaryUnit unit;
  bool is_real_axis = false;

  constexpr Quaternion recompose() const { return slice_point(x, y, unit); }
};

inline SliceCoordinates slice_coordinates(const Quaternion& q,
                                          const ImaginaryUnit& real_axis_default = ImaginaryUnit::i()) {
  SliceCoordinates sc;
  sc.x = q.w;
  const double yn = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  if (yn == 0.0) {
    sc.y = 0.0;
    sc.unit = real_axis_default;
    sc.is_real_axis = true;
  } else {
    sc.y = yn;
    sc.unit = ImaginaryUnit{q.x / yn, q.y / yn, q.z / yn};
    sc.is_real_axis = false;
  }
  return sc;
}

}  // namespace slicereg
