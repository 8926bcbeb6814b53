#include "slicereg/series.hpp"

#include <cmath>
#include <stdexcept>

namespace slicereg {

int RegularSeries::degree_above(double tol) const {
  for (int n = static_cast<int>(coeffs.size()) - 1; n >= 0; --n) {
    if (coeffs[n].norm() > tol) return n;
  }
  return -1;
}

int RegularSeries::degree() const { return degree_above(kZeroCoeffTol); }

int first_nonzero_index(const RegularSeries& f) {
  for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
    if (f.coeffs[n].norm() > kZeroCoeffTol) return static_cast<int>(n);
  }
  return -1;
}

Quaternion evaluate(const RegularSeries& f, const Quaternion& q) {
  if (q.norm() >= f.radius) {
    throw std::domain_error("evaluation outside the series domain radius");
  }
  if (f.coeffs.empty()) return Quaternion::zero();
  // q^n a_n = q (q^{n-1} a_n), so the left-nested form reproduces the sum.
  Quaternion acc = f.coeffs.back();
  for (int n = static_cast<int>(f.coeffs.size()) - 2; n >= 0; --n) {
    acc = f.coeffs[n] + q * acc;
  }
  return acc;
}

RegularSeries slice_derivative(const RegularSeries& f) {
  RegularSeries d;
  d.radius = f.radius;
  if (f.coeffs.size() > 1) {
    d.coeffs.resize(f.coeffs.size() - 1);
    for (std::size_t n = 0; n + 1 < f.coeffs.size(); ++n) {
      d.coeffs[n] = f.coeffs[n + 1] * static_cast<double>(n + 1);
    }
  }
  return d;
}

RegularSeries star_product(const RegularSeries& f, const RegularSeries& g,
                           std::size_t degree_cap) {
  RegularSeries p;
  p.radius = std::fmin(f.radius, g.radius);
  if (f.coeffs.empty() || g.coeffs.empty()) return p;
  const std::size_t out = f.coeffs.size() + g.coeffs.size() - 1;
  if (out - 1 > degree_cap) {
    throw std::length_error("star product exceeds the truncation degree cap");
  }
  p.coeffs.assign(out, Quaternion::zero());
  for (std::size_t a = 0; a < f.coeffs.size(); ++a) {
    for (std::size_t b = 0; b < g.coeffs.size(); ++b) {
      p.coeffs[a + b] += f.coeffs[a] * g.coeffs[b];
    }
  }
  return p;
}

Quaternion transform_point(const RegularSeries& f, const Quaternion& q) {
  const Quaternion fq = evaluate(f, q);
  if (fq.norm_sq() == 0.0) {
    throw std::domain_error("transform point at a zero of f");
  }
  return inverse(fq) * q * fq;
}

RegularSeries regular_compose_unit(const RegularSeries& f, const Quaternion& u) {
  RegularSeries r;
  const double un = u.norm();
  r.radius = un > 1.0 ? f.radius / un : f.radius;
  r.coeffs.resize(f.coeffs.size());
  Quaternion upow = Quaternion::one();
  for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
    r.coeffs[n] = upow * f.coeffs[n];
    upow = upow * u;
  }
  return r;
}

RegularSeries aux_g(const RegularSeries& f, const Quaternion& u, const Quaternion& v) {
  RegularSeries g;
  g.radius = f.radius;
  if (f.coeffs.size() > 1) {
    g.coeffs.resize(f.coeffs.size() - 1);
    Quaternion upow = u;  // u^{n+1} at index n
    Quaternion vpow = v;
    for (std::size_t n = 0; n + 1 < f.coeffs.size(); ++n) {
      g.coeffs[n] = (upow - vpow) * f.coeffs[n + 1] * 0.5;
      upow = upow * u;
      vpow = vpow * v;
    }
  }
  return g;
}

RegularSeries odd_part(const RegularSeries& f) {
  RegularSeries o;
  o.radius = f.radius;
  o.coeffs.assign(f.coeffs.size(), Quaternion::zero());
  for (std::size_t n = 1; n < f.coeffs.size(); n += 2) o.coeffs[n] = f.coeffs[n];
  return o;
}

SplitPair split(const RegularSeries& f, const ImaginaryUnit& I, const ImaginaryUnit& J) {
  if (std::fabs(I.dot(J)) > 1e-10) {
    throw std::invalid_argument("split requires orthogonal imaginary units");
  }
  SplitPair sp;
  sp.I = I;
  sp.J = J;
  sp.F_coeffs.resize(f.coeffs.size());
  sp.G_coeffs.resize(f.coeffs.size());
  const Quaternion Jq = J.as_quaternion();
  for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
    const Quaternion& a = f.coeffs[n];
    const double br = a.re();
    const double bi = im_component_along(a, I);
    sp.F_coeffs[n] = {br, bi};
    // a - b lies in span(J, IJ); right-multiplying by -J sends it to L_I
    const Quaternion c = -((a - slice_point(br, bi, I)) * Jq);
    sp.G_coeffs[n] = {c.re(), im_component_along(c, I)};
  }
  return sp;
}

namespace {

std::complex<double> horner_c(const std::vector<std::complex<double>>& c,
                              std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = *it + z * acc;
  return acc;
}

}  // namespace

Quaternion split_reconstruct(const SplitPair& sp, std::complex<double> z) {
  const std::complex<double> F = horner_c(sp.F_coeffs, z);
  const std::complex<double> G = horner_c(sp.G_coeffs, z);
  return slice_point(F, sp.I) + slice_point(G, sp.I) * sp.J.as_quaternion();
}

Quaternion representation_eval(const RegularSeries& f, double x, double y,
                               const ImaginaryUnit& I, const ImaginaryUnit& J) {
  const Quaternion fp = evaluate(f, slice_point(x, y, J));
  const Quaternion fm = evaluate(f, slice_point(x, -y, J));
  const Quaternion Iq = I.as_quaternion();
  const Quaternion Jq = J.as_quaternion();
  return (fp + fm) * 0.5 + Iq * (Jq * (fm - fp)) * 0.5;
}

RegularSeries normalize_hat(const RegularSeries& f) {
  const int N = first_nonzero_index(f);
  if (N < 0) throw std::invalid_argument("normalize_hat of the identically-zero series");
  const Quaternion& aN = f.coeffs[static_cast<std::size_t>(N)];
  const Quaternion unit = inverse(aN) * aN.norm();
  RegularSeries h;
  h.radius = f.radius;
  h.coeffs.resize(f.coeffs.size());
  for (std::size_t n = 0; n < f.coeffs.size(); ++n) h.coeffs[n] = f.coeffs[n] * unit;
  return h;
}

}  // namespace slicereg
