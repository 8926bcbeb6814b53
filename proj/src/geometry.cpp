#include "slicereg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "slicereg/functionals.hpp"
#include "slicereg/rng.hpp"
#include "slicereg/sampling.hpp"

namespace slicereg {

namespace {

bool witnesses_lex_less(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t t = 0; t < n; ++t) {
    if (a[t] == b[t]) continue;
    return lex_less(a[t], b[t]);
  }
  return a.size() < b.size();
}

// log of the pairwise-distance product; -inf when two points coincide.
double log_pair_product(const std::vector<Quaternion>& pts) {
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
    for (std::size_t k = j + 1; k < pts.size(); ++k) {
      const double d = (pts[k] - pts[j]).norm();
      if (d == 0.0) return -std::numeric_limits<double>::infinity();
      acc += std::log(d);
    }
  }
  return acc;
}

double value_from_log(double logprod, int n) {
  if (logprod == -std::numeric_limits<double>::infinity()) return 0.0;
  return std::exp(logprod * 2.0 / (static_cast<double>(n) * (n - 1)));
}

double binomial_estimate(std::size_t m, int n) {
  double c = 1.0;
  for (int t = 0; t < n; ++t) c *= static_cast<double>(m - t) / (t + 1);
  return c;
}

struct SubsetBest {
  double logprod = -std::numeric_limits<double>::infinity();
  std::vector<Quaternion> witnesses;

  void offer(double lp, const std::vector<Quaternion>& pts) {
    if (lp > logprod || (lp == logprod && witnesses_lex_less(pts, witnesses))) {
      logprod = lp;
      witnesses = pts;
    }
  }
  void merge(const SubsetBest& o) {
    if (o.logprod > logprod ||
        (o.logprod == logprod && witnesses_lex_less(o.witnesses, witnesses))) {
      *this = o;
    }
  }
};

// Walks all n-subsets with the given first index fixed.
void scan_subsets_from(const std::vector<Quaternion>& pts, int n, std::size_t first,
                       SubsetBest& best) {
  const std::size_t m = pts.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(n));
  idx[0] = first;
  for (int t = 1; t < n; ++t) idx[static_cast<std::size_t>(t)] = first + static_cast<std::size_t>(t);
  if (idx.back() >= m) return;
  std::vector<Quaternion> sel(static_cast<std::size_t>(n));
  for (;;) {
    for (int t = 0; t < n; ++t) sel[static_cast<std::size_t>(t)] = pts[idx[static_cast<std::size_t>(t)]];
    best.offer(log_pair_product(sel), sel);
    // advance indices 1..n-1 (index 0 stays fixed)
    int t = n - 1;
    while (t >= 1 && idx[static_cast<std::size_t>(t)] == m - static_cast<std::size_t>(n - t)) --t;
    if (t < 1) break;
    ++idx[static_cast<std::size_t>(t)];
    for (int s = t + 1; s < n; ++s) idx[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(s - 1)] + 1;
  }
}

}  // namespace

NDiameterResult diameter(const PointCloud& cloud, Exec exec) {
  const auto& pts = cloud.points;
  if (pts.empty()) throw std::invalid_argument("diameter of an empty cloud");
  NDiameterResult res;
  res.method = NDiameterResult::Method::exact;
  if (pts.size() == 1) {
    res.value = 0.0;
    res.witnesses = {pts[0], pts[0]};
    return res;
  }
  const int m = static_cast<int>(pts.size());
  std::vector<SubsetBest> rows(static_cast<std::size_t>(m));
#pragma omp parallel for schedule(static) if (exec == Exec::openmp)
  for (int i = 0; i < m; ++i) {
    SubsetBest local;
    for (int j = i + 1; j < m; ++j) {
      const double d = (pts[static_cast<std::size_t>(j)] - pts[static_cast<std::size_t>(i)]).norm();
      const double lp = d == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(d);
      local.offer(lp, {pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]});
    }
    rows[static_cast<std::size_t>(i)] = std::move(local);
  }
  SubsetBest best;
  for (const auto& row : rows) best.merge(row);
  res.value = value_from_log(best.logprod, 2);
  res.witnesses = best.witnesses;
  return res;
}

NDiameterResult n_diameter_exact(const PointCloud& cloud, int n, Exec exec) {
  const auto& pts = cloud.points;
  if (n < 2) throw std::invalid_argument("n-diameter requires n >= 2");
  if (pts.size() < static_cast<std::size_t>(n)) {
    throw std::invalid_argument("cloud smaller than n");
  }
  if (binomial_estimate(pts.size(), n) > kCombinationGuard) {
    throw std::length_error("combinatorial budget exceeded for exact n-diameter");
  }
  const int m = static_cast<int>(pts.size());
  NDiameterResult res;
  res.method = NDiameterResult::Method::exact;
  if (exec == Exec::serial) {
    SubsetBest best;
    for (int first = 0; first + n <= m; ++first) scan_subsets_from(pts, n, static_cast<std::size_t>(first), best);
    res.value = value_from_log(best.logprod, n);
    res.witnesses = best.witnesses;
    return res;
  }
  std::vector<SubsetBest> rows(static_cast<std::size_t>(m));
#pragma omp parallel for schedule(dynamic)
  for (int first = 0; first < m; ++first) {
    if (first + n <= m) scan_subsets_from(pts, n, static_cast<std::size_t>(first), rows[static_cast<std::size_t>(first)]);
  }
  SubsetBest best;
  for (const auto& row : rows) best.merge(row);
  res.value = value_from_log(best.logprod, n);
  res.witnesses = best.witnesses;
  return res;
}

NDiameterResult n_diameter_exchange(const PointCloud& cloud, int n, const OptimizerConfig& cfg) {
  cfg.validate();
  const auto& pts = cloud.points;
  if (n < 2) throw std::invalid_argument("n-diameter requires n >= 2");
  if (pts.size() < static_cast<std::size_t>(n)) {
    throw std::invalid_argument("cloud smaller than n");
  }
  NDiameterResult res;
  res.method = NDiameterResult::Method::exchange;
  if (n == 2) {
    // the exchange neighborhood at n = 2 spans all pairs; scan them directly
    NDiameterResult d = diameter(cloud, cfg.exec);
    res.value = d.value;
    res.witnesses = d.witnesses;
    return res;
  }
  const std::size_t m = pts.size();
  const int starts = cfg.multistarts;
  std::vector<SubsetBest> results(static_cast<std::size_t>(starts));
#pragma omp parallel for schedule(dynamic) if (cfg.exec == Exec::openmp)
  for (int s = 0; s < starts; ++s) {
    Rng rng(cfg.seed, 0x9d1a5ULL + static_cast<std::uint64_t>(s));
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    // partial Fisher-Yates draw of n distinct indices
    for (int t = 0; t < n; ++t) {
      const std::size_t pick = static_cast<std::size_t>(t) +
          static_cast<std::size_t>(rng.next_u64() % (m - static_cast<std::size_t>(t)));
      std::swap(idx[static_cast<std::size_t>(t)], idx[pick]);
    }
    std::vector<Quaternion> sel(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) sel[static_cast<std::size_t>(t)] = pts[idx[static_cast<std::size_t>(t)]];
    double cur = log_pair_product(sel);
    for (int iter = 0; iter < cfg.refinement_iterations; ++iter) {
      double best_gain = 0.0;
      int best_slot = -1;
      std::size_t best_cand = 0;
      for (int slot = 0; slot < n; ++slot) {
        const Quaternion saved = sel[static_cast<std::size_t>(slot)];
        for (std::size_t c = 0; c < m; ++c) {
          sel[static_cast<std::size_t>(slot)] = pts[c];
          const double lp = log_pair_product(sel);
          if (lp - cur > best_gain) {
            best_gain = lp - cur;
            best_slot = slot;
            best_cand = c;
          }
        }
        sel[static_cast<std::size_t>(slot)] = saved;
      }
      if (best_slot < 0) break;
      sel[static_cast<std::size_t>(best_slot)] = pts[best_cand];
      cur += best_gain;
      cur = log_pair_product(sel);  // refresh to avoid drift
    }
    results[static_cast<std::size_t>(s)].offer(cur, sel);
  }
  SubsetBest best;
  for (const auto& r : results) best.merge(r);
  res.value = value_from_log(best.logprod, n);
  res.witnesses = best.witnesses;
  return res;
}

double disc_n_diameter(int n) {
  if (n < 2) throw std::invalid_argument("disc n-diameter requires n >= 2");
  return std::pow(static_cast<double>(n), 1.0 / (n - 1));
}

double ball_n_diameter(int n) {
  switch (n) {
    case 2: return 2.0;
    case 3: return std::sqrt(3.0);
    case 4: return std::sqrt(8.0 / 3.0);  // regular tetrahedron edge in the unit 2-sphere
    default:
      throw std::invalid_argument("ball n-diameter has no asserted value for this n");
  }
}

PointCloud cube_roots_config(const ImaginaryUnit& I, const Quaternion& u) {
  if (std::fabs(u.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("cube_roots_config requires |u| = 1");
  }
  PointCloud out;
  for (int j = 1; j <= 3; ++j) {
    const double th = 2.0 * kPi * j / 3.0;
    const Quaternion e = slice_point(std::cos(th), std::sin(th), I);
    out.points.push_back(u * e);
  }
  return out;
}

namespace {

Quaternion clamp_ball(const Quaternion& p) {
  const double n = p.norm();
  return n > 1.0 ? p / n : p;
}

// Structured starting configurations with known large products.
std::vector<std::vector<Quaternion>> fekete_seeds(int n, FeketeDomain domain) {
  std::vector<std::vector<Quaternion>> seeds;
  auto roots = [](int n_, const ImaginaryUnit& I, double phase) {
    std::vector<Quaternion> v;
    for (int t = 0; t < n_; ++t) {
      const double th = phase + 2.0 * kPi * t / n_;
      v.push_back(slice_point(std::cos(th), std::sin(th), I));
    }
    return v;
  };
  if (domain == FeketeDomain::slice_disc) {
    seeds.push_back(roots(n, ImaginaryUnit::i(), 0.0));
    seeds.push_back(roots(n, ImaginaryUnit::i(), kPi / n));
    return seeds;
  }
  seeds.push_back(roots(n, ImaginaryUnit::i(), 0.0));
  seeds.push_back(roots(n, ImaginaryUnit::j(), 0.3));
  if (n == 4) {
    // regular tetrahedra in 3-dimensional subspaces through the origin
    const double s = 1.0 / std::sqrt(3.0);
    auto tetra = [&](int a, int b, int c) {
      auto axis = [&](int t, double v) {
        Quaternion q;
        (t == 0 ? q.w : t == 1 ? q.x : t == 2 ? q.y : q.z) = v;
        return q;
      };
      std::vector<Quaternion> v;
      v.push_back((axis(a, 1) + axis(b, 1) + axis(c, 1)) * s);
      v.push_back((axis(a, 1) - axis(b, 1) - axis(c, 1)) * s);
      v.push_back((-1.0 * axis(a, 1) + axis(b, 1) - axis(c, 1)) * s);
      v.push_back((-1.0 * axis(a, 1) - axis(b, 1) + axis(c, 1)) * s);
      return v;
    };
    seeds.push_back(tetra(1, 2, 3));
    seeds.push_back(tetra(0, 1, 2));
    seeds.push_back(tetra(0, 2, 3));
  }
  return seeds;
}

}  // namespace

NDiameterResult fekete_maximize(int n, FeketeDomain domain, const OptimizerConfig& cfg) {
  cfg.validate();
  if (n < 2) throw std::invalid_argument("fekete_maximize requires n >= 2");
  const ImaginaryUnit I = ImaginaryUnit::i();
  auto project = [&](const Quaternion& p) {
    if (domain == FeketeDomain::ball) return clamp_ball(p);
    // slice disc: drop components off L_I, then clamp
    const Quaternion flat = slice_point(p.w, im_component_along(p, I), I);
    return clamp_ball(flat);
  };

  std::vector<std::vector<Quaternion>> starts = fekete_seeds(n, domain);
  for (int s = 0; s < cfg.multistarts; ++s) {
    Rng rng(cfg.seed, 0xfe3e7eULL + static_cast<std::uint64_t>(s));
    std::vector<Quaternion> v;
    for (int t = 0; t < n; ++t) v.push_back(project(random_in_ball(rng)));
    starts.push_back(std::move(v));
  }

  const int S = static_cast<int>(starts.size());
  std::vector<SubsetBest> results(static_cast<std::size_t>(S));
#pragma omp parallel for schedule(dynamic) if (cfg.exec == Exec::openmp)
  for (int s = 0; s < S; ++s) {
    std::vector<Quaternion> pts = starts[static_cast<std::size_t>(s)];
    double cur = log_pair_product(pts);
    double step = 0.35;
    const double floor = 1e-10;
    for (int sweep = 0; sweep < cfg.refinement_iterations && step > floor; ++sweep) {
      bool improved = false;
      for (int t = 0; t < n; ++t) {
        const Quaternion saved = pts[static_cast<std::size_t>(t)];
        Quaternion best_pt = saved;
        double best_val = cur;
        for (int d = 0; d < 4; ++d) {
          for (double sign : {1.0, -1.0}) {
            Quaternion cand = saved;
            (d == 0 ? cand.w : d == 1 ? cand.x : d == 2 ? cand.y : cand.z) += sign * step;
            cand = project(cand);
            pts[static_cast<std::size_t>(t)] = cand;
            const double lp = log_pair_product(pts);
            if (lp > best_val) {
              best_val = lp;
              best_pt = cand;
            }
          }
        }
        pts[static_cast<std::size_t>(t)] = best_pt;
        if (best_val > cur) {
          cur = best_val;
          improved = true;
        }
      }
      if (!improved) step *= cfg.refine_step_decay;
    }
    results[static_cast<std::size_t>(s)].offer(cur, pts);
  }
  SubsetBest best;
  for (const auto& r : results) best.merge(r);
  NDiameterResult res;
  res.method = NDiameterResult::Method::exchange;
  res.value = value_from_log(best.logprod, n);
  res.witnesses = best.witnesses;
  return res;
}

}  // namespace slicereg
