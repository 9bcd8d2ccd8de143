#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tgvlab/diagnostics.hpp"

namespace tgvlab {

/// Time series of one log ratio, (t_i, ln R^k(t_i)), strictly increasing t.
struct RatioSeries {
    int k = 0;
    std::vector<double> t;
    std::vector<double> log_ratio;
};

struct PeakEstimate {
    double tstar = 0.0;
    bool at_boundary = false;  // argmax at the first/last sample, advisory only
};

struct GammaFit {
    int k = 0;
    double gamma = 0.0;
    double intercept = 0.0;      // 0 unless the optional intercept mode is on
    double residual_norm = 0.0;  // RMS of ln R_i - gamma ln beta_i (- intercept)
    double window_begin = 0.0;   // [T* - 1, T* - beta_min]
    double window_end = 0.0;
    int samples_used = 0;
};

struct AlphaFit {
    double a = 0.0;
    double intercept = 0.0;
    std::vector<int> k_set;         // orders used (k >= 2)
    std::vector<double> residuals;  // gamma_k - k^-a per entry of k_set
};

struct ScaleReport {
    int k = 0;  // half order; the level analyzed is 2k
    double alpha = 0.0;
    double epsilon_2k = 0.0;   // 4(k+1)/k^alpha
    double log_norm_2k = 0.0;  // ln ||D^{2k} u||_inf
    double log_r = 0.0;        // log sparseness scale, -log_norm/(2k + 3/2)
    double log_rho = 0.0;      // log analyticity scale, -log_norm/((1+eps)(2k+1))
    bool dominant = false;     // log_rho > log_r
    bool reversed_regime = false;  // log_norm_2k <= 0: the dominance inequality flips
};

/// Time of the global enstrophy maximum: discrete argmax refined by a
/// three-point parabola; plain argmax with a boundary flag at endpoints.
/// Requires >= 3 samples and a non-constant series.
PeakEstimate detect_peak(const std::vector<double>& t, const std::vector<double>& enstrophy);

/// No-intercept log-log least squares of R = beta^gamma over the window
/// beta = T* - t in [beta_min, 1]:
///   gamma = sum ln(beta_i) ln(R_i) / sum (ln beta_i)^2.
/// Requires >= 10 samples in the window and beta_min > 0.
GammaFit fit_gamma(const RatioSeries& series, double tstar, double beta_min,
                   bool with_intercept = false);

/// Mirror of the gamma fit applied to the model gamma_k = k^-a:
///   a = -sum ln(k) ln(gamma_k) / sum (ln k)^2.
/// k = 1 carries zero weight and is dropped; all gamma must be positive.
AlphaFit fit_alpha(const std::vector<std::pair<int, double>>& gammas, bool with_intercept = false);

/// The analyticity-exponent gain 4(k+1)/k^alpha.
double epsilon_2k(int k, double alpha);

/// Sparseness-vs-analyticity comparison at level 2k, entirely in log space.
ScaleReport scale_comparison(double log_norm_2k, int k, double alpha);

/// Test hook: same comparison with epsilon supplied directly.
ScaleReport scale_comparison_with_epsilon(double log_norm_2k, int k, double epsilon);

struct PipelineOptions {
    double beta_min = 0.0;  // must be > 0
    double dt = 0.0;        // simulation step, for the T* +/- 2dt band
    std::optional<double> tstar_override;
    bool with_intercept = false;
};

struct PipelineResult {
    PeakEstimate peak;
    bool advisory = false;  // peak at boundary: outputs are indicative only
    std::vector<GammaFit> gammas;
    /// gamma refit under T* +/- 2dt: k -> (low, high) envelope including the center
    std::map<int, std::pair<double, double>> gamma_band;
    AlphaFit alpha;
    std::vector<ScaleReport> scales;  // at the final pre-peak record
};

/// Peak detection, per-k gamma fits over the unit window before the peak,
/// the a-fit, and the scale comparison, in one deterministic pass.
PipelineResult analysis_pipeline(const std::vector<DiagnosticsRecord>& records,
                                 const std::vector<int>& k_set, const PipelineOptions& opts);

}  // namespace tgvlab
