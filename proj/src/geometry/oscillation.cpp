#include "lipkit/geometry/oscillation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lipkit/simd/ops.hpp"

namespace lipkit {

namespace {

// Power-of-two stride so coarser center families nest inside finer ones.
int pow2_stride(double r, double h, int div) {
  int s = 1;
  while (2.0 * s <= r / (div * h)) s *= 2;
  return s;
}

// Samples within distance r of center, written into idx. Uses index windows
// when the field is a lattice, a full scan otherwise.
void gather(const ScanField& f, const Point& c, double r, std::vector<int>& idx) {
  idx.clear();
  const double slack = 1e-12 * (1.0 + r);
  if (f.grid_dims[0] > 0 && f.period[0] == 0.0 &&
      (f.d == 1 || (f.d == 2 && f.grid_dims[1] > 0 && f.period[1] == 0.0))) {
    int lo[2] = {0, 0}, hi[2] = {-1, -1};
    for (int ax = 0; ax < f.d; ++ax) {
      double t0 = (c[ax] - r - f.grid_origin[ax]) / f.h - 0.5;
      double t1 = (c[ax] + r - f.grid_origin[ax]) / f.h - 0.5;
      lo[ax] = std::max(0, int(std::ceil(t0 - 1e-9)));
      hi[ax] = std::min(f.grid_dims[size_t(ax)] - 1, int(std::floor(t1 + 1e-9)));
    }
    if (f.d == 1) {
      for (int i = lo[0]; i <= hi[0]; ++i) idx.push_back(i);
      return;
    }
    int ny = f.grid_dims[1];
    for (int i = lo[0]; i <= hi[0]; ++i)
      for (int j = lo[1]; j <= hi[1]; ++j) {
        int k = i * ny + j;
        if (f.dist(f.pos[size_t(k)], c) <= r + slack) idx.push_back(k);
      }
    return;
  }
  for (size_t k = 0; k < f.pos.size(); ++k)
    if (f.dist(f.pos[k], c) <= r + slack) idx.push_back(int(k));
}

std::vector<int> strided_centers(const ScanField& f, int stride) {
  std::vector<int> out;
  if (f.d == 2 && f.grid_dims[1] > 0) {
    for (int i = 0; i < f.grid_dims[0]; i += stride)
      for (int j = 0; j < f.grid_dims[1]; j += stride)
        out.push_back(i * f.grid_dims[1] + j);
    return out;
  }
  for (int k = 0; k < int(f.pos.size()); k += stride) out.push_back(k);
  return out;
}

bool weights_uniform(const ScanField& f) {
  for (double w : f.w)
    if (w != f.w[0]) return false;
  return true;
}

// Weighted mean deviation from the ball mean over the gathered samples.
double mean_deviation(const ScanField& f, const std::vector<int>& idx,
                      bool uniform) {
  size_t k = idx.size();
  if (k < 2) return 0.0;
  if (uniform && f.uniform_1d() && size_t(idx.back() - idx.front()) + 1 == k) {
    const double* v = f.val.data() + idx.front();
    const auto& t = simd::ops();
    double mean = t.sum(v, k) / double(k);
    return t.abs_dev_sum(v, k, mean) / double(k);
  }
  double W = 0.0, S = 0.0;
  for (int i : idx) {
    W += f.w[size_t(i)];
    S += f.w[size_t(i)] * f.val[size_t(i)];
  }
  double mean = S / W;
  double dev = 0.0;
  for (int i : idx) dev += f.w[size_t(i)] * std::abs(f.val[size_t(i)] - mean);
  return dev / W;
}

// Weighted double mean of |v_i - v_j| via the sorted prefix formula.
double double_mean(const ScanField& f, std::vector<int>& idx,
                   std::vector<std::pair<double, double>>& scratch) {
  size_t k = idx.size();
  if (k < 2) return 0.0;
  scratch.clear();
  double W = 0.0;
  for (int i : idx) {
    scratch.emplace_back(f.val[size_t(i)], f.w[size_t(i)]);
    W += f.w[size_t(i)];
  }
  std::sort(scratch.begin(), scratch.end());
  double C = 0.0, S = 0.0, total = 0.0;
  for (auto& [v, w] : scratch) {
    total += w * (v * C - S);
    C += w;
    S += w * v;
  }
  return 2.0 * total / (W * W);
}

std::vector<double> dyadic_radii(const ScanField& f) {
  if (f.pos.empty()) throw std::domain_error("oscillation scan: empty region");
  std::vector<double> radii;
  double ext = f.extent();
  for (double r = 2.0 * f.h; r <= ext || radii.empty(); r *= 2.0) {
    radii.push_back(r);
    if (r > ext) break;
  }
  return radii;
}

}  // namespace

BmoResult bmo_seminorm(const ScanField& f, int stride_div) {
  BmoResult res;
  bool uniform = weights_uniform(f);
  std::vector<int> idx;
  for (double r : dyadic_radii(f)) {
    int stride = pow2_stride(r, f.h, stride_div);
    double sup_r = 0.0;
    for (int cidx : strided_centers(f, stride)) {
      gather(f, f.pos[size_t(cidx)], r, idx);
      double dev = mean_deviation(f, idx, uniform);
      if (dev > sup_r) sup_r = dev;
      if (dev > res.sup) {
        res.sup = dev;
        res.arg_radius = r;
        res.arg_center = f.pos[size_t(cidx)];
      }
    }
    res.per_radius.emplace_back(r, sup_r);
  }
  return res;
}

std::vector<OscPoint> infinitesimal_oscillation(const ScanField& f,
                                                const std::vector<double>& eps_ladder,
                                                int stride_div) {
  if (f.pos.empty()) throw std::domain_error("oscillation scan: empty region");
  for (size_t i = 0; i + 1 < eps_ladder.size(); ++i)
    if (eps_ladder[i] <= eps_ladder[i + 1])
      throw std::invalid_argument("eps ladder must be strictly decreasing");
  if (eps_ladder.empty() || eps_ladder.back() < 2.0 * f.h)
    throw std::domain_error("eps ladder below grid resolution 2h");

  std::vector<OscPoint> out;
  std::vector<int> idx;
  std::vector<std::pair<double, double>> scratch;
  for (double eps : eps_ladder) {
    int stride = pow2_stride(eps, f.h, stride_div);
    double sup = 0.0;
    for (int cidx : strided_centers(f, stride)) {
      gather(f, f.pos[size_t(cidx)], eps, idx);
      sup = std::max(sup, double_mean(f, idx, scratch));
    }
    out.push_back({eps, sup});
  }
  return out;
}

BmoResult vector_bmo(const std::vector<const ScanField*>& comps, int stride_div) {
  const ScanField& f = *comps.at(0);
  if (f.pos.empty()) throw std::domain_error("oscillation scan: empty region");
  BmoResult res;
  std::vector<int> idx;
  for (double r : dyadic_radii(f)) {
    int stride = pow2_stride(r, f.h, stride_div);
    double sup_r = 0.0;
    for (int cidx : strided_centers(f, stride)) {
      gather(f, f.pos[size_t(cidx)], r, idx);
      if (idx.size() < 2) continue;
      double W = 0.0;
      double mean[3] = {0, 0, 0};
      for (int i : idx) {
        W += f.w[size_t(i)];
        for (size_t c = 0; c < comps.size(); ++c)
          mean[c] += f.w[size_t(i)] * comps[c]->val[size_t(i)];
      }
      for (size_t c = 0; c < comps.size(); ++c) mean[c] /= W;
      double dev = 0.0;
      for (int i : idx) {
        double s2 = 0.0;
        for (size_t c = 0; c < comps.size(); ++c) {
          double d = comps[c]->val[size_t(i)] - mean[c];
          s2 += d * d;
        }
        dev += f.w[size_t(i)] * std::sqrt(s2);
      }
      dev /= W;
      if (dev > sup_r) sup_r = dev;
      if (dev > res.sup) {
        res.sup = dev;
        res.arg_radius = r;
        res.arg_center = f.pos[size_t(cidx)];
      }
    }
    res.per_radius.emplace_back(r, sup_r);
  }
  return res;
}

std::vector<OscPoint> vector_oscillation(const std::vector<const ScanField*>& comps,
                                         const std::vector<double>& eps_ladder,
                                         int stride_div) {
  const ScanField& f = *comps.at(0);
  if (f.pos.empty()) throw std::domain_error("oscillation scan: empty region");
  if (eps_ladder.empty() || eps_ladder.back() < 2.0 * f.h)
    throw std::domain_error("eps ladder below grid resolution 2h");
  std::vector<OscPoint> out;
  std::vector<int> idx;
  for (double eps : eps_ladder) {
    int stride = pow2_stride(eps, f.h, stride_div);
    double sup = 0.0;
    for (int cidx : strided_centers(f, stride)) {
      gather(f, f.pos[size_t(cidx)], eps, idx);
      size_t k = idx.size();
      if (k < 2) continue;
      double W = 0.0, total = 0.0;
      for (int i : idx) W += f.w[size_t(i)];
      for (size_t a = 0; a < k; ++a)
        for (size_t b = a + 1; b < k; ++b) {
          double s2 = 0.0;
          for (size_t c = 0; c < comps.size(); ++c) {
            double d = comps[c]->val[size_t(idx[a])] - comps[c]->val[size_t(idx[b])];
            s2 += d * d;
          }
          total += 2.0 * f.w[size_t(idx[a])] * f.w[size_t(idx[b])] * std::sqrt(s2);
        }
      sup = std::max(sup, total / (W * W));
    }
    out.push_back({eps, sup});
  }
  return out;
}

}  // namespace lipkit
