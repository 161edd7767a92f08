#pragma once
#include <cstdint>
#include <functional>
#include <vector>

#include "lipkit/common/point.hpp"
#include "lipkit/common/rng.hpp"
#include "lipkit/spaces/grid_function.hpp"

namespace lipkit {

// Tensor discretization of a half-space window for empirical operator
// norms: uniform cells across a periodic-free horizontal window and
// geometrically graded levels in the wall distance, so a modest cell budget
// spans several decades of x_n (the region that drives the weighted-norm
// blowup as s -> 0 or s -> 1).
struct HalfSpaceGrid {
  int n = 2;            // ambient dimension (2 or 3)
  double window = 1.0;  // horizontal extent [0, window)^{n-1}
  int columns = 96;     // cells per horizontal axis
  double y_lo = 5e-4;   // bottom edge of the lowest level
  double y_hi = 0.5;    // top edge of the highest level
  int levels = 48;      // geometric levels between y_lo and y_hi

  void validate() const;  // throws std::invalid_argument on bad shape
  long horizontal_cells() const;
  long cells() const { return horizontal_cells() * levels; }
  double hx() const { return window / columns; }
  double level_edge(int l) const;    // l in [0, levels]
  double level_center(int l) const;  // l in [0, levels)
  double level_height(int l) const;
  double cell_measure(int l) const;  // level_height(l) * hx^{n-1}
  // Compact cell index: level-major, then row-major over horizontal axes.
  Point cell_point(long i) const;
  double cell_measure_at(long i) const;
};

// Kernels on the half-space whose norms the module estimates.  All of them
// are invariant under horizontal translations, which is what makes the
// level-block Toeplitz assembly below exact.
enum class HalfSpaceKernelKind {
  reflected_inverse,  // k(x,y) = |x - ybar|^{-n}
  reflected_log,      // k(x,y) = log(|x-y|/x_n + 2) |x - ybar|^{-n}
  dilation,           // k(x,y) = x_n^{-n} q((y - x)/x_n)
  oscillation,        // k(x,y) = |b(x_n) - b(y_n)| |x - ybar|^{-n}
};

struct HalfSpaceKernelSpec {
  HalfSpaceKernelKind kind = HalfSpaceKernelKind::reflected_inverse;
  // dilation only; defaults to default_dilation_profile(n) when empty.
  std::function<double(const Point&)> profile;
  // oscillation only: vertical profile b(x_n).
  std::function<double(double)> vertical_b;
};

// log(|z| + 2) / (1 + |z|^2)^{n/2}: integrable, strictly positive, with the
// slow logarithmic tail that makes the dilation bound nontrivial.
std::function<double(const Point&)> default_dilation_profile(int n);
// Profiles that rewrite the reflected kernels in dilation form
// k(x,y) = x_n^{-n} q((y-x)/x_n), used for their analytic norm bounds:
//   reflected_inverse_profile: (|z'|^2 + (2 + z_n)^2)^{-n/2}
//   reflected_log_profile:     log(|z| + 2) * (|z'|^2 + (2 + z_n)^2)^{-n/2}
std::function<double(const Point&)> reflected_inverse_profile(int n);
std::function<double(const Point&)> reflected_log_profile(int n);

// Pointwise kernel value k(x, y) for a spec (pure evaluator).
double halfspace_kernel_value(int n, const HalfSpaceKernelSpec& spec,
                              const Point& x, const Point& y);

// Explicitly assembled kernel matrix on a HalfSpaceGrid.  Horizontal
// translation invariance makes the matrix block-Toeplitz across columns, so
// the assembly stores every distinct entry once per level pair (the full
// dense matrix at the 4*10^4-cell cap would not fit in memory, and every
// stored value is exactly the entry a dense assembly would hold).  Assembly
// is parallel over level-pair rows; the matrix is immutable afterwards.
class StructuredKernelMatrix {
 public:
  // Throws std::invalid_argument when grid.cells() exceeds the 4*10^4 cap.
  StructuredKernelMatrix(const HalfSpaceGrid& grid, const HalfSpaceKernelSpec& spec);

  const HalfSpaceGrid& grid() const { return grid_; }
  long cells() const { return grid_.cells(); }
  // Raw kernel entry k(x_i, x_j).
  double entry(long i, long j) const;
  // g_i = sum_j k(x_i, x_j) f_j (no measure factors).
  void apply_raw(const double* f, double* g) const;
  // g_j = sum_i k(x_i, x_j) f_i.
  void apply_raw_transpose(const double* f, double* g) const;
  // Quadrature apply: g_i = sum_j k(x_i, x_j) mu_j f_j.
  std::vector<double> apply(const std::vector<double>& f) const;
  // True when every assembled entry is exactly zero (e.g. the oscillation
  // kernel of a constant profile); norm estimates are then exactly 0.
  bool zero_kernel() const { return zero_; }

 private:
  HalfSpaceGrid grid_;
  int L_ = 0, M_ = 0;
  // Per level pair (l, k): kernel values over horizontal offsets, stored
  // forward (offset-major) and reversed so both applies reduce to
  // contiguous dot products.
  std::vector<std::vector<double>> fwd_, rev_;
  std::vector<double> mu_;
  bool zero_ = true;
};

// Empirical weighted operator norm on L_p(R^n_+, x_n^{ap} dx), estimated on
// the discretized kernel by a fixed-point power iteration for the L_p norm
// (nonnegative kernels: the iterate value is nondecreasing toward the
// discrete norm) plus random-probe lower bounds.
struct NormEstimateOptions {
  double p = 2.0;
  double a = 0.0;
  int power_iters = 40;
  int probes = 50;
  double tol = 1e-5;       // relative stall tolerance for the iteration
  uint64_t seed = 20240817;
};

struct NormEstimate {
  double p = 0.0, a = 0.0, s = 0.0;  // s = 1 - a - 1/p
  double norm = 0.0;                 // max(power_value, probe_value)
  double power_value = 0.0;
  double probe_value = 0.0;
  int iterations = 0;
  long cells = 0;
};

NormEstimate weighted_norm_estimate(const StructuredKernelMatrix& K,
                                    const NormEstimateOptions& opt);

// Analytic norm bound for dilation-form kernels k(x,y) = x_n^{-n} q((y-x)/x_n)
// on L_p(x_n^{ap} dx):  integral of q(z', z_n - 1) z_n^{-a-1/p} over
// z' in R^{n-1}, z_n > 0.  Finite exactly when s = 1 - a - 1/p lies in
// (0, 1) (given an integrable, log-tailed profile); outside that range the
// profile integral diverges and the call throws std::invalid_argument.
double dilation_bound_integral(int n, const std::function<double(const Point&)>& q,
                               double p, double a);

// One row of the norm-scaling sweep (CSV columns p, a, s, statistic, bound,
// ratio): statistic = norm * s(1-s) / normalizer, bound = analytic dilation
// bound when the kernel has one (NaN otherwise), ratio = norm / bound.
struct OpNormRow {
  double p = 0.0, a = 0.0, s = 0.0;
  double statistic = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
};

std::vector<OpNormRow> operator_norm_sweep(const StructuredKernelMatrix& K,
                                           const HalfSpaceKernelSpec& spec,
                                           const std::vector<double>& p_list,
                                           const std::vector<double>& s_list,
                                           const NormEstimateOptions& base,
                                           double statistic_normalizer = 1.0);

// Direct quadrature apply of a half-space kernel to a grid function on a
// uniform interior grid (used for positivity, probe oracles, and the exact
// translation-commutation property).  Matrix-free; the reflected and
// oscillation kernels route through the SIMD row primitives.
GridFunction apply_halfspace_operator(const HalfSpaceKernelSpec& spec,
                                      const GridFunction& f);
// Oscillation commutator with a general (not necessarily vertical) symbol b
// sampled on the same grid as f.
GridFunction apply_oscillation_commutator(const GridFunction& b,
                                          const GridFunction& f);

// Diagnostic decomposition of a convolution Riesz-type kernel
// k(u) = u_1 / |u|^{n+1} over dyadic-in-x_n layers: chi_j is the indicator
// of {2^{j/2} < x_n <= 2^{1 + j/2}} (every height lies in exactly two
// layers), the near part keeps layer pairs |j - k| <= 3 with weight 1/4,
// and the far part is the complement.  The far part's kernel is dominated
// by a constant times |x - ybar|^{-n}, which is what the report measures.
struct LayerSplitReport {
  int partition_min = 0, partition_max = 0;  // layer multiplicity (exactly 2)
  double split_max_gap = 0.0;   // sup |near + far - full| / |full|
  double far_ratio_sup = 0.0;   // sup over far pairs of |k| (1-w) |x-ybar|^n
  double mixed_ratio_sup = 0.0; // same over partially-near pairs (0 < w < 1)
  long far_pairs = 0;
};

LayerSplitReport layer_split_diagnostic(long samples, Rng& rng);

}  // namespace lipkit
