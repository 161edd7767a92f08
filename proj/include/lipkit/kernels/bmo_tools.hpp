#pragma once
#include <functional>
#include <vector>

namespace lipkit {

// Quadrature over half-plane discs B((., t), r) ∩ {x_n > 0} for vertical
// profiles b = b(x_n) (the horizontal center is immaterial).  The disc
// integral reduces to a 1-D chord integral; panels are refined toward the
// wall so integrable singularities like log x_n are handled accurately.

// Mean of b over the clipped disc.
double halfplane_disc_mean(const std::function<double(double)>& b, double t,
                           double r);
// Mean of |b - c| over the clipped disc.
double halfplane_disc_abs_dev(const std::function<double(double)>& b, double t,
                              double r, double c);

// Sampled BMO seminorm of the vertical profile: sup over a log grid of
// centers t and radius ratios r/t of the mean oscillation
// mean_{B∩H} |b - mean_{B∩H} b|.  A lower bound of the true seminorm that
// stabilizes quickly under sampling refinement for log-type profiles.
struct VerticalBmoOptions {
  double t_lo = 1e-3, t_hi = 1.0;
  int t_samples = 12;
  double ratio_lo = 0.02, ratio_hi = 50.0;
  int ratio_samples = 24;
};
double vertical_profile_bmo(const std::function<double(double)>& b,
                            const VerticalBmoOptions& opt = {});

// Logarithmic mean-drift statistic: for disc means b_r(t) centered at height
// t, the drift |b_rho(t) - b_r(t)| of a BMO profile grows at most like
// log(r/rho + 1) times the seminorm.  The report returns the largest ratio
//   |b_rho - b_r| / (log(r/rho + 1) * bmo)
// over all centers and ordered radius pairs rho < r.
struct MeanDriftReport {
  double max_ratio = 0.0;
  double max_drift = 0.0;
};
MeanDriftReport vertical_mean_drift(const std::function<double(double)>& b,
                                    const std::vector<double>& centers,
                                    const std::vector<double>& radii, double bmo);

}  // namespace lipkit
