#include "rmspace/luecking.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rmspace {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::int64_t wrap(std::int64_t j, std::int64_t m) { return ((j % m) + m) % m; }

double arg_01(Complex z) {
  double a = std::arg(z);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

}  // namespace

RegionGeometry region_geometry(LueckingIndex idx) {
  const double w = kTwoPi / std::ldexp(1.0, idx.n);
  return {1.0 - std::ldexp(1.0, -idx.n), 1.0 - std::ldexp(1.0, -(idx.n + 1)), idx.j * w,
          (idx.j + 1) * w};
}

LueckingIndex region_of(Complex z, int L) {
  const double r = std::abs(z);
  if (!(r < 1.0 - std::ldexp(1.0, -L))) {
    throw std::invalid_argument("region_of: |z| reaches beyond the decomposition depth");
  }
  int n = 0;
  while (n + 1 < L && r >= 1.0 - std::ldexp(1.0, -(n + 1))) ++n;
  const std::int64_t count = std::int64_t{1} << n;
  auto j = static_cast<std::int64_t>(std::floor(arg_01(z) / (kTwoPi / count)));
  j = std::clamp<std::int64_t>(j, 0, count - 1);
  return {n, j};
}

double region_area(LueckingIndex idx) {
  return std::numbers::pi * std::ldexp(1.0, -2 * idx.n) * (1.0 - 3.0 * std::ldexp(1.0, -(idx.n + 2)));
}

std::vector<LueckingIndex> neighbors(LueckingIndex idx, int L) {
  if (idx.n >= L - 1) throw std::invalid_argument("neighbors: decomposition depth exhausted");
  const int n = idx.n;
  const std::int64_t j = idx.j;
  const std::int64_t ring = std::int64_t{1} << n;
  std::vector<LueckingIndex> out;
  out.push_back(idx);
  out.push_back({n, wrap(j - 1, ring)});
  out.push_back({n, wrap(j + 1, ring)});
  if (n >= 1) {
    const std::int64_t inner = ring >> 1;
    const std::int64_t parent = j >> 1;
    out.push_back({n - 1, parent});
    // corner contact on the inner circle at the parent's far sector wall
    out.push_back({n - 1, wrap((j % 2 == 0) ? parent - 1 : parent + 1, inner)});
  }
  const std::int64_t outer = ring << 1;
  out.push_back({n + 1, wrap(2 * j, outer)});
  out.push_back({n + 1, wrap(2 * j + 1, outer)});
  out.push_back({n + 1, wrap(2 * j - 1, outer)});
  out.push_back({n + 1, wrap(2 * j + 2, outer)});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int nc_count(LueckingIndex idx) {
  return static_cast<int>(neighbors(idx, idx.n + 2).size());
}

bool disc_inclusion_check(Complex z, int L, int samples) {
  const LueckingIndex home = region_of(z, L);
  const std::vector<LueckingIndex> nbrs = neighbors(home, L);
  const double rad = 0.5 * (1.0 - std::abs(z));
  for (int s = 0; s < samples; ++s) {
    const double phi = kTwoPi * s / samples;
    const Complex w = z + std::polar(rad, phi);
    const LueckingIndex at = region_of(w, L);
    if (!std::binary_search(nbrs.begin(), nbrs.end(), at)) return false;
  }
  return true;
}

RegionField::RegionField(int depth) : depth_(depth) {
  if (depth < 1) throw std::invalid_argument("RegionField: depth must be >= 1");
  rings_.resize(depth);
  for (int n = 0; n < depth; ++n) rings_[n].assign(std::size_t{1} << n, 0.0);
}

double& RegionField::at(LueckingIndex idx) {
  return rings_.at(idx.n).at(static_cast<std::size_t>(idx.j));
}

double RegionField::at(LueckingIndex idx) const {
  return rings_.at(idx.n).at(static_cast<std::size_t>(idx.j));
}

double RegionField::operator()(Complex z) const {
  if (!(std::abs(z) < 1.0 - std::ldexp(1.0, -depth_))) return 0.0;
  return at(region_of(z, depth_));
}

std::vector<std::vector<double>> region_integrals(const AbsField& f, const DiscGrid& grid, int L) {
  const int m = grid.nodes_per_panel();
  ArrayXd xs, ws;
  gauss_legendre(m, xs, ws);
  std::vector<std::vector<double>> integrals(L);
  ArrayXd rn(m), rw(m), tn(m);
  for (int n = 0; n < L; ++n) {
    integrals[n].assign(std::size_t{1} << n, 0.0);
    const double r_lo = 1.0 - std::ldexp(1.0, -n);
    const double r_hi = 1.0 - std::ldexp(1.0, -(n + 1));
    const double rc = 0.5 * (r_lo + r_hi), rh = 0.5 * (r_hi - r_lo);
    for (int i = 0; i < m; ++i) {
      rn[i] = rc + rh * xs[i];
      rw[i] = rh * ws[i];
    }
    const double sector = kTwoPi / std::ldexp(1.0, n);
    const std::int64_t count = std::int64_t{1} << n;
    for (std::int64_t j = 0; j < count; ++j) {
      const double t_lo = j * sector;
      const double tc = t_lo + 0.5 * sector, th = 0.5 * sector;
      double acc = 0.0;
      for (int k = 0; k < m; ++k) {
        tn[k] = tc + th * xs[k];
        const double wt = th * ws[k];
        for (int i = 0; i < m; ++i) acc += rw[i] * wt * rn[i] * f(rn[i], tn[k]);
      }
      integrals[n][static_cast<std::size_t>(j)] = acc;
    }
  }
  return integrals;
}

RegionField maximal_R(const AbsField& f, const DiscGrid& grid, int L) {
  const auto integrals = region_integrals(f, grid, L);
  RegionField field(L);
  for (int n = 0; n < L; ++n) {
    const std::int64_t count = std::int64_t{1} << n;
    for (std::int64_t j = 0; j < count; ++j) {
      const LueckingIndex idx{n, j};
      field.at(idx) = integrals[n][static_cast<std::size_t>(j)] / region_area(idx);
    }
  }
  return field;
}

RegionField maximal_Rtilde(const AbsField& f, const DiscGrid& grid, int L) {
  // Expanded regions reach one ring deeper than their base region, so the
  // returned field stops at depth L-1 while the integrals go to depth L.
  if (L < 2) throw std::invalid_argument("maximal_Rtilde: depth must be >= 2");
  const auto integrals = region_integrals(f, grid, L);
  RegionField field(L - 1);
  for (int n = 0; n < L - 1; ++n) {
    const std::int64_t count = std::int64_t{1} << n;
    for (std::int64_t j = 0; j < count; ++j) {
      const LueckingIndex idx{n, j};
      double mass = 0.0, area = 0.0;
      for (const LueckingIndex& nb : neighbors(idx, L)) {
        mass += integrals[nb.n][static_cast<std::size_t>(nb.j)];
        area += region_area(nb);
      }
      field.at(idx) = mass / area;
    }
  }
  return field;
}

double expanded_area(LueckingIndex idx, int L) {
  double area = 0.0;
  for (const LueckingIndex& nb : neighbors(idx, L)) area += region_area(nb);
  return area;
}

double maximal_D_at(const AbsField& f, Complex z) {
  constexpr int kOrder = 16;
  const double R = 0.5 * (1.0 - std::abs(z));
  ArrayXd xs, ws;
  gauss_legendre(kOrder, xs, ws);
  double acc = 0.0;
  for (int a = 0; a < kOrder; ++a) {
    const double phi = kTwoPi * a / kOrder;
    for (int i = 0; i < kOrder; ++i) {
      const double rho = 0.5 * R * (1.0 + xs[i]);
      const Complex w = z + std::polar(rho, phi);
      acc += (0.5 * R * ws[i]) * (kTwoPi / kOrder) * rho * f(std::abs(w), arg_01(w));
    }
  }
  return acc / (std::numbers::pi * R * R);
}

bool maximal_range_covered(MaximalOperator op, PQPair pq) {
  const bool p_inf = pq.p.is_inf(), q_inf = pq.q.is_inf();
  const bool p_le_q_fin = !q_inf && !p_inf && pq.p.value() <= pq.q.value();  // 1 <= p <= q < inf
  if (op == MaximalOperator::R) return p_le_q_fin;
  const bool q_gt_1 = q_inf || pq.q.value() > 1.0;
  const bool q_le_p = p_inf || (!q_inf && pq.q.value() <= pq.p.value());
  return p_le_q_fin || (q_gt_1 && q_le_p);  // or 1 < q <= p <= inf
}

MaximalExperiment maximal_bound_experiment(const std::vector<FunctionSpec>& corpus, PQPair pq,
                                           const DiscGrid& grid, int L, MaximalOperator op,
                                           bool experimental) {
  if (!maximal_range_covered(op, pq) && !experimental) {
    throw std::invalid_argument(
        "maximal_bound_experiment: (p,q) outside the operator's covered range; pass --experimental");
  }
  MaximalExperiment out;
  for (const FunctionSpec& f : corpus) {
    const AbsField base = abs_field(f);
    double num = 0.0;
    if (op == MaximalOperator::D) {
      num = rho_raw([&base](double r, double th) { return maximal_D_at(base, std::polar(r, th)); },
                    pq, grid);
    } else {
      const RegionField field =
          (op == MaximalOperator::R) ? maximal_R(base, grid, L) : maximal_Rtilde(base, grid, L);
      num = rho_raw([&field](double r, double th) { return field(std::polar(r, th)); }, pq, grid);
    }
    const double den = rho_raw(base, pq, grid);
    const double ratio = (den == 0.0) ? 0.0 : num / den;
    out.ratios.push_back(ratio);
    out.sup_ratio = std::max(out.sup_ratio, ratio);
  }
  return out;
}

bool mean_value_box_check(double c, Complex z, double lambda, int samples) {
  if (!(c > 0.0 && c < 0.5)) throw std::invalid_argument("mean_value_box_check: c must lie in (0, 1/2)");
  const double r = std::abs(z);
  if (!(r >= 0.5 && r < 1.0)) throw std::invalid_argument("mean_value_box_check: |z| must lie in [1/2, 1)");
  if (!(lambda > 0.0 && lambda < 1.0 / std::sqrt(4.0 + c * c))) {
    throw std::invalid_argument("mean_value_box_check: lambda out of range (0, 1/sqrt(4+c^2))");
  }
  const double theta = std::arg(z);
  const double half = c * (1.0 - r);
  const double rad = lambda * half;
  for (int s = 0; s < samples; ++s) {
    const Complex w = z + std::polar(rad, kTwoPi * s / samples);
    const double rw = std::abs(w);
    if (rw < r - half || rw > r + half) return false;
    double dth = std::remainder(std::arg(w) - theta, kTwoPi);
    if (std::abs(dth) > half) return false;
  }
  return true;
}

}  // namespace rmspace
