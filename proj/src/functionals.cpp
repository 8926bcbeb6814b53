#include "slicereg/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "slicereg/geometry.hpp"
#include "slicereg/rng.hpp"
#include "slicereg/sampling.hpp"

namespace slicereg {

void OptimizerConfig::validate() const {
  if (sphere_grid < 1 || radial_grid < 1 || multistarts < 1 || refinement_iterations < 1) {
    throw std::invalid_argument("optimizer config counts must be >= 1");
  }
  if (!(tolerance > 0.0)) throw std::invalid_argument("optimizer tolerance must be positive");
  if (!(refine_step_decay > 0.0 && refine_step_decay < 1.0)) {
    throw std::invalid_argument("refine_step_decay must lie in (0, 1)");
  }
}

namespace {

Quaternion horner(const std::vector<Quaternion>& c, const Quaternion& q) {
  if (c.empty()) return Quaternion::zero();
  Quaternion acc = c.back();
  for (int n = static_cast<int>(c.size()) - 2; n >= 0; --n) acc = c[static_cast<std::size_t>(n)] + q * acc;
  return acc;
}

// Coefficients of f_u - f_v: (u^n - v^n) a_n.
std::vector<Quaternion> pair_diff_coeffs(const RegularSeries& f, const Quaternion& u,
                                         const Quaternion& v) {
  std::vector<Quaternion> d(f.coeffs.size(), Quaternion::zero());
  Quaternion up = Quaternion::one();
  Quaternion vp = Quaternion::one();
  for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
    d[n] = (up - vp) * f.coeffs[n];
    up = up * u;
    vp = vp * v;
  }
  return d;
}

// Star product over lex pairs (j,k), j < k, of (f_{w_k} - f_{w_j}).
std::vector<Quaternion> nprod_coeffs(const RegularSeries& f, const std::vector<Quaternion>& ws,
                                     std::size_t degree_cap) {
  const int n = static_cast<int>(ws.size());
  const std::size_t D = f.coeffs.size();
  // power tables w_i^t, t = 0..D-1
  std::vector<std::vector<Quaternion>> pw(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& tab = pw[static_cast<std::size_t>(i)];
    tab.resize(D);
    Quaternion p = Quaternion::one();
    for (std::size_t t = 0; t < D; ++t) {
      tab[t] = p;
      p = p * ws[static_cast<std::size_t>(i)];
    }
  }
  std::vector<Quaternion> prod{Quaternion::one()};
  std::vector<Quaternion> factor(D);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      for (std::size_t t = 0; t < D; ++t) {
        factor[t] = (pw[static_cast<std::size_t>(k)][t] - pw[static_cast<std::size_t>(j)][t]) * f.coeffs[t];
      }
      if (prod.size() + factor.size() - 1 > degree_cap + 1) {
        throw std::length_error("star product exceeds the truncation degree cap");
      }
      std::vector<Quaternion> next(prod.size() + factor.size() - 1, Quaternion::zero());
      for (std::size_t a = 0; a < prod.size(); ++a) {
        for (std::size_t b = 0; b < factor.size(); ++b) next[a + b] += prod[a] * factor[b];
      }
      prod.swap(next);
    }
  }
  return prod;
}

double pair_exponent(int n) { return 2.0 / (static_cast<double>(n) * (n - 1)); }

// ---------------------------------------------------------------------------
// Ball search engine: maximize an objective over nvars quaternions in the
// closed unit ball and an evaluation point q with |q| <= r (searched on the
// sphere |q| = r; carried candidates may sit inside). Deterministic: fixed
// candidate order, (value, index) reduction, seeded restarts.
// ---------------------------------------------------------------------------

struct PairDiffObjective {
  const RegularSeries* f = nullptr;
  std::vector<Quaternion> diff;
  void set_vars(const std::vector<Quaternion>& vars) {
    diff = pair_diff_coeffs(*f, vars[0], vars[1]);
  }
  double eval(const Quaternion& q) const { return horner(diff, q).norm(); }
};

struct NProdObjective {
  const RegularSeries* f = nullptr;
  std::size_t cap = kStarDegreeCap;
  std::vector<Quaternion> prod;
  void set_vars(const std::vector<Quaternion>& vars) { prod = nprod_coeffs(*f, vars, cap); }
  double eval(const Quaternion& q) const { return horner(prod, q).norm(); }
};

struct BallOutcome {
  double raw = -1.0;
  std::vector<Quaternion> vars;
  Quaternion q;
  long long evals = 0;
};

void offer(BallOutcome& best, double raw, const std::vector<Quaternion>& vars,
           const Quaternion& q) {
  if (raw > best.raw) {
    best.raw = raw;
    best.vars = vars;
    best.q = q;
  }
}

Quaternion clamp_ball(const Quaternion& p) {
  const double n = p.norm();
  return n > 1.0 ? p / n : p;
}

Quaternion on_sphere(const Quaternion& p, double r) {
  const double n = p.norm();
  if (n == 0.0) return Quaternion::real(r);
  return p * (r / n);
}

// n-th roots of unity in the slice of I, rotated by `phase`.
std::vector<Quaternion> roots_config(int n, const ImaginaryUnit& I, double phase) {
  std::vector<Quaternion> v;
  for (int t = 0; t < n; ++t) {
    const double th = phase + 2.0 * kPi * t / n;
    v.push_back(slice_point(std::cos(th), std::sin(th), I));
  }
  return v;
}

std::vector<std::vector<Quaternion>> structured_var_seeds(int nvars) {
  std::vector<std::vector<Quaternion>> seeds;
  const ImaginaryUnit slices[4] = {
      ImaginaryUnit::i(), ImaginaryUnit::j(), ImaginaryUnit::k(),
      ImaginaryUnit::from_components(1.0, 1.0, 1.0)};
  for (const auto& I : slices) {
    seeds.push_back(roots_config(nvars, I, 0.0));
    seeds.push_back(roots_config(nvars, I, kPi / (2.0 * nvars)));
  }
  if (nvars == 2) {
    seeds.push_back({Quaternion::one(), Quaternion::zero()});
    const Quaternion h{0.5, 0.5, 0.5, 0.5};
    seeds.push_back({h, -h});
  }
  if (nvars == 4) {
    const double s = 1.0 / std::sqrt(3.0);
    auto axis = [](int t) {
      Quaternion q;
      (t == 0 ? q.w : t == 1 ? q.x : t == 2 ? q.y : q.z) = 1.0;
      return q;
    };
    auto tetra = [&](int a, int b, int c) {
      std::vector<Quaternion> v;
      v.push_back((axis(a) + axis(b) + axis(c)) * s);
      v.push_back((axis(a) - axis(b) - axis(c)) * s);
      v.push_back((-1.0 * axis(a) + axis(b) - axis(c)) * s);
      v.push_back((-1.0 * axis(a) - axis(b) + axis(c)) * s);
      return v;
    };
    seeds.push_back(tetra(1, 2, 3));
    seeds.push_back(tetra(0, 1, 2));
    seeds.push_back(tetra(0, 2, 3));
    seeds.push_back(tetra(0, 1, 3));
  }
  return seeds;
}

template <class Obj>
BallOutcome refine_ball(Obj obj, BallOutcome start, double r, const OptimizerConfig& cfg) {
  BallOutcome cur = std::move(start);
  obj.set_vars(cur.vars);
  // track the on-sphere point separately; the carried interior value stays as
  // the floor recorded in cur
  Quaternion q = on_sphere(cur.q, r);
  double val = obj.eval(q);
  ++cur.evals;
  std::vector<Quaternion> vars = cur.vars;
  offer(cur, val, vars, q);
  double vstep = 0.3;
  double qstep = 0.3;
  const int nvars = static_cast<int>(vars.size());
  for (int sweep = 0; sweep < cfg.refinement_iterations; ++sweep) {
    if (vstep < 1e-9 && qstep < 1e-9) break;
    bool improved = false;
    for (int vi = 0; vi < nvars; ++vi) {
      const Quaternion saved = vars[static_cast<std::size_t>(vi)];
      Quaternion best_pt = saved;
      double best_val = val;
      for (int d = 0; d < 4; ++d) {
        for (double sign : {1.0, -1.0}) {
          Quaternion cand = saved;
          (d == 0 ? cand.w : d == 1 ? cand.x : d == 2 ? cand.y : cand.z) += sign * vstep;
          cand = clamp_ball(cand);
          vars[static_cast<std::size_t>(vi)] = cand;
          obj.set_vars(vars);
          const double v = obj.eval(q);
          ++cur.evals;
          if (v > best_val) {
            best_val = v;
            best_pt = cand;
          }
        }
      }
      vars[static_cast<std::size_t>(vi)] = best_pt;
      obj.set_vars(vars);
      if (best_val > val) {
        val = best_val;
        improved = true;
        offer(cur, val, vars, q);
      }
    }
    {
      Quaternion best_q = q;
      double best_val = val;
      for (int d = 0; d < 4; ++d) {
        for (double sign : {1.0, -1.0}) {
          Quaternion cand = q;
          (d == 0 ? cand.w : d == 1 ? cand.x : d == 2 ? cand.y : cand.z) += sign * qstep * r;
          cand = on_sphere(cand, r);
          const double v = obj.eval(cand);
          ++cur.evals;
          if (v > best_val) {
            best_val = v;
            best_q = cand;
          }
        }
      }
      if (best_val > val) {
        val = best_val;
        q = best_q;
        improved = true;
        offer(cur, val, vars, q);
      }
    }
    if (!improved) {
      vstep *= cfg.refine_step_decay;
      qstep *= cfg.refine_step_decay;
    }
  }
  return cur;
}

template <class ObjFactory>
BallOutcome maximize_ball(ObjFactory make_obj, int nvars, double r, const OptimizerConfig& cfg,
                          const std::vector<SeedTuple>& carried, std::uint64_t salt) {
  // stage 0: candidate variable tuples
  std::vector<std::vector<Quaternion>> cands = structured_var_seeds(nvars);
  for (const auto& c : carried) {
    if (static_cast<int>(c.vars.size()) == nvars) cands.push_back(c.vars);
  }
  {
    Rng rng(cfg.seed, salt);
    for (int s = 0; s < cfg.multistarts; ++s) {
      std::vector<Quaternion> v;
      for (int t = 0; t < nvars; ++t) v.push_back(random_in_ball(rng));
      cands.push_back(std::move(v));
    }
  }
  {
    // per-variable shell x sphere grid, enumerated as a capped product
    const int h = nvars <= 2 ? std::min(cfg.sphere_grid, 16)
                             : (nvars == 3 ? std::min(cfg.sphere_grid, 8)
                                           : std::min(cfg.sphere_grid, 6));
    std::vector<Quaternion> pset{Quaternion::zero()};
    for (int t = 1; t <= cfg.radial_grid; ++t) {
      const double rho = static_cast<double>(t) / cfg.radial_grid;
      for (int m = 0; m < h; ++m) pset.push_back(hopf_s3_point(m, h) * rho);
    }
    const double total = std::pow(static_cast<double>(pset.size()), nvars);
    if (total <= 4096.0) {
      std::vector<std::size_t> idx(static_cast<std::size_t>(nvars), 0);
      for (;;) {
        std::vector<Quaternion> v;
        for (int t = 0; t < nvars; ++t) v.push_back(pset[idx[static_cast<std::size_t>(t)]]);
        cands.push_back(std::move(v));
        int t = nvars - 1;
        while (t >= 0 && ++idx[static_cast<std::size_t>(t)] == pset.size()) {
          idx[static_cast<std::size_t>(t)] = 0;
          --t;
        }
        if (t < 0) break;
      }
    } else {
      static constexpr std::size_t kStride[6] = {1, 7, 13, 19, 29, 37};
      for (std::size_t t = 0; t < 2048; ++t) {
        std::vector<Quaternion> v;
        for (int d = 0; d < nvars; ++d) {
          v.push_back(pset[((t + 1) * kStride[d % 6] + 3 * static_cast<std::size_t>(d)) % pset.size()]);
        }
        cands.push_back(std::move(v));
      }
    }
  }

  // stage 1: q sweep per candidate tuple
  std::vector<Quaternion> qgrid;
  for (int m = 0; m < cfg.sphere_grid; ++m) qgrid.push_back(hopf_s3_point(m, cfg.sphere_grid) * r);
  qgrid.push_back(Quaternion::real(r));
  qgrid.push_back(Quaternion::real(-r));

  const int C = static_cast<int>(cands.size());
  std::vector<BallOutcome> stage1(static_cast<std::size_t>(C));
#pragma omp parallel if (cfg.exec == Exec::openmp)
  {
    auto obj = make_obj();
#pragma omp for schedule(dynamic, 8)
    for (int c = 0; c < C; ++c) {
      BallOutcome& out = stage1[static_cast<std::size_t>(c)];
      obj.set_vars(cands[static_cast<std::size_t>(c)]);
      for (const auto& q : qgrid) {
        const double v = obj.eval(q);
        ++out.evals;
        offer(out, v, cands[static_cast<std::size_t>(c)], q);
      }
    }
  }
  // carried tuples are re-evaluated verbatim at their own q
  long long extra_evals = 0;
  std::vector<BallOutcome> carried_out;
  {
    auto obj = make_obj();
    for (const auto& c : carried) {
      if (static_cast<int>(c.vars.size()) != nvars) continue;
      if (c.q.norm() > r * (1.0 + 1e-12)) continue;
      obj.set_vars(c.vars);
      BallOutcome out;
      offer(out, obj.eval(c.q), c.vars, c.q);
      ++extra_evals;
      carried_out.push_back(std::move(out));
    }
  }

  // stage 2: pattern-search refinement of the best starts (plus carried)
  std::vector<int> order(static_cast<std::size_t>(C));
  for (int c = 0; c < C; ++c) order[static_cast<std::size_t>(c)] = c;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return stage1[static_cast<std::size_t>(a)].raw > stage1[static_cast<std::size_t>(b)].raw;
  });
  std::vector<BallOutcome> starts;
  const int K = std::min(C, cfg.multistarts);
  for (int t = 0; t < K; ++t) starts.push_back(stage1[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])]);
  for (const auto& c : carried_out) starts.push_back(c);

  const int S = static_cast<int>(starts.size());
  std::vector<BallOutcome> refined(static_cast<std::size_t>(S));
#pragma omp parallel if (cfg.exec == Exec::openmp)
  {
    auto obj = make_obj();
#pragma omp for schedule(dynamic)
    for (int s = 0; s < S; ++s) {
      refined[static_cast<std::size_t>(s)] = refine_ball(obj, starts[static_cast<std::size_t>(s)], r, cfg);
    }
  }

  BallOutcome best;
  long long evals = extra_evals;
  for (const auto& o : stage1) {
    evals += o.evals;
    if (o.raw > best.raw) best = o;
  }
  for (const auto& o : carried_out) {
    if (o.raw > best.raw) best = o;
  }
  for (const auto& o : refined) {
    evals += o.evals;
    if (o.raw > best.raw) best = o;
  }
  best.evals = evals;
  return best;
}

std::vector<SeedTuple> gather_seeds(const FunctionalReport* carry,
                                    const std::vector<SeedTuple>& extra) {
  std::vector<SeedTuple> seeds = extra;
  if (carry != nullptr && !carry->vars.empty()) {
    seeds.push_back(SeedTuple{carry->vars, carry->q});
  }
  return seeds;
}

}  // namespace

double regular_diameter_objective(const RegularSeries& f, const Quaternion& u,
                                  const Quaternion& v, const Quaternion& q) {
  return horner(pair_diff_coeffs(f, u, v), q).norm();
}

double regular_n_diameter_objective(const RegularSeries& f, const std::vector<Quaternion>& ws,
                                    const Quaternion& q) {
  const int n = static_cast<int>(ws.size());
  const double raw = horner(nprod_coeffs(f, ws, kStarDegreeCap), q).norm();
  return std::pow(raw, pair_exponent(n));
}

FunctionalReport regular_diameter(const RegularSeries& f, double r, const OptimizerConfig& cfg,
                                  const FunctionalReport* carry,
                                  const std::vector<SeedTuple>& extra_seeds) {
  cfg.validate();
  if (!(r > 0.0 && r < f.radius)) throw std::domain_error("radius outside (0, domain radius)");
  auto factory = [&f] {
    PairDiffObjective o;
    o.f = &f;
    return o;
  };
  const BallOutcome out = maximize_ball(factory, 2, r, cfg, gather_seeds(carry, extra_seeds), 0x2d17ULL);
  FunctionalReport rep;
  rep.value = std::max(out.raw, 0.0);
  rep.vars = out.vars;
  rep.q = out.q;
  rep.evaluations = out.evals;
  rep.method = "ball-search/pattern n=2";
  return rep;
}

FunctionalReport regular_n_diameter(const RegularSeries& f, int n, double r,
                                    const OptimizerConfig& cfg, const FunctionalReport* carry,
                                    const std::vector<SeedTuple>& extra_seeds) {
  cfg.validate();
  if (n < 2 || n > 5) throw std::invalid_argument("regular n-diameter supports 2 <= n <= 5");
  if (!(r > 0.0 && r < f.radius)) throw std::domain_error("radius outside (0, domain radius)");
  const int pairs = n * (n - 1) / 2;
  const int tdeg = f.truncation_degree();
  if (tdeg > 0 && static_cast<std::size_t>(pairs) * static_cast<std::size_t>(tdeg) > kStarDegreeCap) {
    throw std::length_error("star product exceeds the truncation degree cap");
  }
  auto factory = [&f] {
    NProdObjective o;
    o.f = &f;
    return o;
  };
  const BallOutcome out =
      maximize_ball(factory, n, r, cfg, gather_seeds(carry, extra_seeds), 0x3500ULL + static_cast<std::uint64_t>(n));
  FunctionalReport rep;
  rep.value = out.raw > 0.0 ? std::pow(out.raw, pair_exponent(n)) : 0.0;
  rep.vars = out.vars;
  rep.q = out.q;
  rep.evaluations = out.evals;
  rep.method = "ball-search/pattern n=" + std::to_string(n);
  return rep;
}

// ---------------------------------------------------------------------------
// Slice 3-diameter
// ---------------------------------------------------------------------------

namespace {

struct Slice3Prepared {
  RegularSeries fhat;           // normalize_hat(f - f(0))
  int N = 0;                    // truncation degree of fhat
  std::vector<Quaternion> B;    // b_a b_b b_c for 1 <= a,b,c <= N
  bool constant = false;

  std::size_t bidx(int a, int b, int c) const {
    const std::size_t n = static_cast<std::size_t>(N);
    return ((static_cast<std::size_t>(a) - 1) * n + (static_cast<std::size_t>(b) - 1)) * n +
           (static_cast<std::size_t>(c) - 1);
  }
};

Slice3Prepared slice3_prepare(const RegularSeries& f) {
  Slice3Prepared p;
  RegularSeries g = f;
  if (!g.coeffs.empty()) g.coeffs[0] = Quaternion::zero();  // translation f - f(0)
  if (first_nonzero_index(g) < 0) {
    if (first_nonzero_index(f) < 0) {
      throw std::invalid_argument("slice 3-diameter of the identically-zero series");
    }
    p.constant = true;  // nonzero constant: the functional vanishes
    return p;
  }
  p.fhat = normalize_hat(g);
  p.N = p.fhat.truncation_degree();
  const int N = p.N;
  p.B.assign(static_cast<std::size_t>(N) * N * N, Quaternion::zero());
  for (int a = 1; a <= N; ++a) {
    for (int b = 1; b <= N; ++b) {
      const Quaternion ab = p.fhat.coeffs[static_cast<std::size_t>(a)] * p.fhat.coeffs[static_cast<std::size_t>(b)];
      for (int c = 1; c <= N; ++c) {
        p.B[p.bidx(a, b, c)] = ab * p.fhat.coeffs[static_cast<std::size_t>(c)];
      }
    }
  }
  return p;
}

// ghat_{w1,w2,w3} as a series in z with the slice unit baked in.
std::vector<Quaternion> ghat_coeffs(const Slice3Prepared& p, const ImaginaryUnit& I,
                                    const std::array<std::complex<double>, 3>& w) {
  const int N = p.N;
  std::vector<Quaternion> c(static_cast<std::size_t>(3 * N) + 1, Quaternion::zero());
  if (N == 0) return c;
  // complex power tables
  std::array<std::vector<std::complex<double>>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    pw[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(N) + 1);
    std::complex<double> z = 1.0;
    for (int t = 0; t <= N; ++t) {
      pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] = z;
      z *= w[static_cast<std::size_t>(i)];
    }
  }
  for (int a = 1; a <= N; ++a) {
    const std::complex<double> f1 = pw[1][static_cast<std::size_t>(a)] - pw[0][static_cast<std::size_t>(a)];
    for (int b = 1; b <= N; ++b) {
      const std::complex<double> f12 = f1 * (pw[2][static_cast<std::size_t>(b)] - pw[0][static_cast<std::size_t>(b)]);
      for (int cc = 1; cc <= N; ++cc) {
        const std::complex<double> C = f12 * (pw[2][static_cast<std::size_t>(cc)] - pw[1][static_cast<std::size_t>(cc)]);
        c[static_cast<std::size_t>(a + b + cc)] += slice_point(C, I) * p.B[p.bidx(a, b, cc)];
      }
    }
  }
  return c;
}

struct Slice3Objective {
  const Slice3Prepared* p = nullptr;
  ImaginaryUnit I;
  std::array<std::complex<double>, 3> w{};
  std::vector<Quaternion> c;

  void rebuild() { c = ghat_coeffs(*p, I, w); }
  void set_slice(const ImaginaryUnit& I_) {
    I = I_;
    rebuild();
  }
  void set_w(const std::array<std::complex<double>, 3>& w_) {
    w = w_;
    rebuild();
  }
  // |ghat(z)|^{1/3}
  double eval(std::complex<double> z) const {
    return std::cbrt(horner(c, slice_point(z, I)).norm());
  }
};

struct SliceOutcome {
  double value = -1.0;
  ImaginaryUnit I;
  std::array<std::complex<double>, 3> w{};
  std::complex<double> z;
  long long evals = 0;
};

void offer_slice(SliceOutcome& best, double v, const ImaginaryUnit& I,
                 const std::array<std::complex<double>, 3>& w, std::complex<double> z) {
  if (v > best.value) {
    best.value = v;
    best.I = I;
    best.w = w;
    best.z = z;
  }
}

std::complex<double> clamp_disc(std::complex<double> w) {
  const double n = std::abs(w);
  return n > 1.0 ? w / n : w;
}

// Pattern search over (w1, w2, w3, theta) inside one slice; z = r e^{I theta}.
SliceOutcome refine_in_slice(Slice3Objective& obj, SliceOutcome start, double r,
                             const OptimizerConfig& cfg) {
  SliceOutcome cur = start;
  obj.set_w(cur.w);
  double theta = std::arg(cur.z == 0.0 ? std::complex<double>(1.0, 0.0) : cur.z);
  auto zof = [&](double th) { return std::polar(r, th); };
  double val = obj.eval(zof(theta));
  ++cur.evals;
  offer_slice(cur, val, obj.I, obj.w, zof(theta));
  double wstep = 0.3;
  double tstep = 0.5;
  for (int sweep = 0; sweep < cfg.refinement_iterations; ++sweep) {
    if (wstep < 1e-9 && tstep < 1e-9) break;
    bool improved = false;
    for (int wi = 0; wi < 3; ++wi) {
      const std::complex<double> saved = obj.w[static_cast<std::size_t>(wi)];
      std::complex<double> best_w = saved;
      double best_val = val;
      for (int d = 0; d < 2; ++d) {
        for (double sign : {1.0, -1.0}) {
          std::complex<double> cand = saved + (d == 0 ? std::complex<double>(sign * wstep, 0.0)
                                                      : std::complex<double>(0.0, sign * wstep));
          cand = clamp_disc(cand);
          auto wnew = obj.w;
          wnew[static_cast<std::size_t>(wi)] = cand;
          obj.set_w(wnew);
          const double v = obj.eval(zof(theta));
          ++cur.evals;
          if (v > best_val) {
            best_val = v;
            best_w = cand;
          }
        }
      }
      auto wnew = obj.w;
      wnew[static_cast<std::size_t>(wi)] = best_w;
      obj.set_w(wnew);
      if (best_val > val) {
        val = best_val;
        improved = true;
        offer_slice(cur, val, obj.I, obj.w, zof(theta));
      }
    }
    {
      double best_th = theta;
      double best_val = val;
      for (double sign : {1.0, -1.0}) {
        const double th = theta + sign * tstep;
        const double v = obj.eval(zof(th));
        ++cur.evals;
        if (v > best_val) {
          best_val = v;
          best_th = th;
        }
      }
      if (best_val > val) {
        val = best_val;
        theta = best_th;
        improved = true;
        offer_slice(cur, val, obj.I, obj.w, zof(theta));
      }
    }
    if (!improved) {
      wstep *= cfg.refine_step_decay;
      tstep *= cfg.refine_step_decay;
    }
  }
  return cur;
}

SliceOutcome search_slice(const Slice3Prepared& prep, const ImaginaryUnit& I, double r,
                          const OptimizerConfig& cfg, const SliceWitness* carried,
                          std::uint64_t salt) {
  Slice3Objective obj;
  obj.p = &prep;
  obj.I = I;

  std::vector<std::array<std::complex<double>, 3>> wseeds;
  for (double phase : {0.0, kPi / 9.0, 2.0 * kPi / 9.0}) {
    std::array<std::complex<double>, 3> w;
    for (int t = 0; t < 3; ++t) w[static_cast<std::size_t>(t)] = std::polar(1.0, phase + 2.0 * kPi * t / 3.0);
    wseeds.push_back(w);
  }
  if (carried != nullptr) wseeds.push_back(carried->w);
  {
    Rng rng(cfg.seed, salt);
    for (int s = 0; s < 2; ++s) {
      std::array<std::complex<double>, 3> w;
      for (int t = 0; t < 3; ++t) {
        w[static_cast<std::size_t>(t)] = std::polar(std::sqrt(rng.uniform()), rng.uniform(0.0, 2.0 * kPi));
      }
      wseeds.push_back(w);
    }
  }

  const int tgrid = std::max(8, cfg.sphere_grid / 2);
  SliceOutcome best;
  for (const auto& w : wseeds) {
    obj.set_w(w);
    for (int t = 0; t < tgrid; ++t) {
      const double th = 2.0 * kPi * t / tgrid;
      const double v = obj.eval(std::polar(r, th));
      ++best.evals;
      offer_slice(best, v, I, w, std::polar(r, th));
    }
    if (carried != nullptr && std::abs(carried->z) <= r * (1.0 + 1e-12)) {
      const double v = obj.eval(carried->z);
      ++best.evals;
      offer_slice(best, v, I, w, carried->z);
    }
  }
  obj.set_w(best.w);
  SliceOutcome refined = refine_in_slice(obj, best, r, cfg);
  if (refined.value > best.value) {
    refined.evals += best.evals;
    return refined;
  }
  best.evals += refined.evals;
  return best;
}

FunctionalReport slice3_report(const SliceOutcome& out, double r) {
  FunctionalReport rep;
  rep.value = std::max(out.value, 0.0);
  SliceWitness sw;
  sw.I = out.I;
  sw.w = out.w;
  sw.z = out.z;
  rep.slice = sw;
  rep.q = slice_point(out.z, out.I);
  rep.evaluations = out.evals;
  rep.method = "slice-sweep/pattern";
  (void)r;
  return rep;
}

}  // namespace

RegularSeries slice3_ghat_series(const RegularSeries& f, const ImaginaryUnit& I,
                                 const std::array<std::complex<double>, 3>& w) {
  const Slice3Prepared prep = slice3_prepare(f);
  RegularSeries g;
  g.radius = f.radius;
  if (!prep.constant) g.coeffs = ghat_coeffs(prep, I, w);
  return g;
}

double slice_3_diameter_objective(const RegularSeries& f, const ImaginaryUnit& I,
                                  const std::array<std::complex<double>, 3>& w,
                                  std::complex<double> z) {
  const Slice3Prepared prep = slice3_prepare(f);
  if (prep.constant) return 0.0;
  Slice3Objective obj;
  obj.p = &prep;
  obj.I = I;
  obj.set_w(w);
  return obj.eval(z);
}

FunctionalReport slice_3_diameter_on_slice(const RegularSeries& f, double r,
                                           const ImaginaryUnit& I, const OptimizerConfig& cfg) {
  cfg.validate();
  if (!(r > 0.0 && r < f.radius)) throw std::domain_error("radius outside (0, domain radius)");
  const Slice3Prepared prep = slice3_prepare(f);
  if (prep.constant) return FunctionalReport{};
  return slice3_report(search_slice(prep, I, r, cfg, nullptr, 0x51edULL), r);
}

FunctionalReport slice_3_diameter(const RegularSeries& f, double r, const OptimizerConfig& cfg,
                                  const FunctionalReport* carry) {
  cfg.validate();
  if (!(r > 0.0 && r < f.radius)) throw std::domain_error("radius outside (0, domain radius)");
  const Slice3Prepared prep = slice3_prepare(f);
  if (prep.constant) {
    FunctionalReport rep;
    rep.method = "constant input";
    return rep;
  }
  const SliceWitness* carried = (carry != nullptr && carry->slice.has_value()) ? &*carry->slice : nullptr;

  std::vector<ImaginaryUnit> slices;
  for (int m = 0; m < cfg.sphere_grid; ++m) slices.push_back(fibonacci_sphere_point(m, cfg.sphere_grid));
  if (carried != nullptr) slices.push_back(carried->I);

  const int S = static_cast<int>(slices.size());
  std::vector<SliceOutcome> per_slice(static_cast<std::size_t>(S));
#pragma omp parallel for schedule(dynamic) if (cfg.exec == Exec::openmp)
  for (int s = 0; s < S; ++s) {
    per_slice[static_cast<std::size_t>(s)] =
        search_slice(prep, slices[static_cast<std::size_t>(s)], r, cfg, carried,
                     0x511ce0ULL + static_cast<std::uint64_t>(s));
  }
  SliceOutcome best;
  long long evals = 0;
  for (const auto& o : per_slice) {
    evals += o.evals;
    if (o.value > best.value) {
      best.value = o.value;
      best.I = o.I;
      best.w = o.w;
      best.z = o.z;
    }
  }

  // joint refinement across the slice unit: tangent moves on S, re-running a
  // short in-slice pattern search at each accepted step
  {
    Slice3Objective obj;
    obj.p = &prep;
    double istep = 0.4;
    OptimizerConfig inner = cfg;
    inner.refinement_iterations = std::max(8, cfg.refinement_iterations / 4);
    while (istep > 1e-7) {
      bool improved = false;
      const ImaginaryUnit I0 = best.I;
      const ImaginaryUnit t1 = orthogonal_unit(I0);
      const ImaginaryUnit t2 = ImaginaryUnit::from_components(
          I0.y * t1.z - I0.z * t1.y, I0.z * t1.x - I0.x * t1.z, I0.x * t1.y - I0.y * t1.x);
      for (const ImaginaryUnit* tan : {&t1, &t2}) {
        for (double sign : {1.0, -1.0}) {
          const ImaginaryUnit cand = ImaginaryUnit::from_components(
              I0.x + sign * istep * tan->x, I0.y + sign * istep * tan->y,
              I0.z + sign * istep * tan->z);
          obj.set_slice(cand);
          obj.set_w(best.w);
          SliceOutcome probe;
          probe.I = cand;
          probe.w = best.w;
          probe.z = best.z;
          probe.value = obj.eval(best.z);
          ++evals;
          SliceOutcome ref = refine_in_slice(obj, probe, r, inner);
          evals += ref.evals;
          if (ref.value > best.value) {
            best = ref;
            best.evals = 0;
            improved = true;
          }
        }
        if (improved) break;
      }
      if (!improved) istep *= cfg.refine_step_decay;
    }
  }

  best.evals = evals;
  return slice3_report(best, r);
}

RadialProfile phi_profile(const RegularSeries& f, int n, const std::vector<double>& r_values,
                          const OptimizerConfig& cfg) {
  const double dn = ball_n_diameter(n);  // throws outside {2,3,4}
  for (std::size_t t = 0; t + 1 < r_values.size(); ++t) {
    if (!(r_values[t] < r_values[t + 1])) {
      throw std::invalid_argument("profile radii must increase");
    }
  }
  RadialProfile prof;
  prof.functional = "phi";
  prof.n = n;
  FunctionalReport carry;
  bool have_carry = false;
  for (double r : r_values) {
    const FunctionalReport rep =
        n == 2 ? regular_diameter(f, r, cfg, have_carry ? &carry : nullptr)
               : regular_n_diameter(f, n, r, cfg, have_carry ? &carry : nullptr);
    prof.r_values.push_back(r);
    prof.values.push_back(rep.value / (dn * r));
    carry = rep;
    have_carry = true;
  }
  return prof;
}

RadialProfile phi_hat_3_profile(const RegularSeries& f, const std::vector<double>& r_values,
                                const OptimizerConfig& cfg) {
  for (std::size_t t = 0; t + 1 < r_values.size(); ++t) {
    if (!(r_values[t] < r_values[t + 1])) {
      throw std::invalid_argument("profile radii must increase");
    }
  }
  const double d3 = std::sqrt(3.0);
  RadialProfile prof;
  prof.functional = "phi_hat";
  prof.n = 3;
  FunctionalReport carry;
  bool have_carry = false;
  for (double r : r_values) {
    const FunctionalReport rep = slice_3_diameter(f, r, cfg, have_carry ? &carry : nullptr);
    prof.r_values.push_back(r);
    prof.values.push_back(rep.value / (d3 * r));
    carry = rep;
    have_carry = true;
  }
  return prof;
}

}  // namespace slicereg
