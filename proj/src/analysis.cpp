#include "tgvlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tgvlab/errors.hpp"

namespace tgvlab {

PeakEstimate detect_peak(const std::vector<double>& t, const std::vector<double>& enstrophy) {
    if (t.size() != enstrophy.size()) throw std::invalid_argument("series length mismatch");
    if (t.size() < 3) throw AnalysisError("peak detection needs at least 3 samples");
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (!(t[i] > t[i - 1])) throw std::invalid_argument("sample times must strictly increase");
    }
    const auto [min_it, max_it] = std::minmax_element(enstrophy.begin(), enstrophy.end());
    if (*min_it == *max_it) throw AnalysisError("constant series has no peak");

    const std::size_t p = static_cast<std::size_t>(max_it - enstrophy.begin());
    if (p == 0 || p + 1 == enstrophy.size()) {
        return PeakEstimate{t[p], true};
    }

    // vertex of the parabola through the argmax and its neighbours
    const double dl = t[p] - t[p - 1];
    const double dr = t[p + 1] - t[p];
    const double el = enstrophy[p - 1] - enstrophy[p];
    const double er = enstrophy[p + 1] - enstrophy[p];
    const double denom = el * dr + er * dl;
    double tstar = t[p];
    if (denom != 0.0) {
        tstar = t[p] + 0.5 * (el * dr * dr - er * dl * dl) / denom;
        tstar = std::clamp(tstar, t[p - 1], t[p + 1]);
    }
    return PeakEstimate{tstar, false};
}

GammaFit fit_gamma(const RatioSeries& series, double tstar, double beta_min, bool with_intercept) {
    if (!(beta_min > 0.0)) {
        throw AnalysisError("beta_min must be positive: samples at beta <= 0 are not fittable");
    }
    if (series.t.size() != series.log_ratio.size()) {
        throw std::invalid_argument("ratio series length mismatch");
    }
    GammaFit fit;
    fit.k = series.k;
    fit.window_begin = tstar - 1.0;
    fit.window_end = tstar - beta_min;

    double s_xx = 0.0, s_xy = 0.0, s_x = 0.0, s_y = 0.0;
    int used = 0;
    for (std::size_t i = 0; i < series.t.size(); ++i) {
        const double beta = tstar - series.t[i];
        if (beta < beta_min || beta > 1.0) continue;
        const double x = std::log(beta);
        const double y = series.log_ratio[i];
        s_xx += x * x;
        s_xy += x * y;
        s_x += x;
        s_y += y;
        ++used;
    }
    if (used < 10) {
        throw AnalysisError("gamma fit window [" + std::to_string(fit.window_begin) + ", " +
                            std::to_string(fit.window_end) + "] holds " + std::to_string(used) +
                            " samples; need at least 10");
    }
    fit.samples_used = used;

    if (with_intercept) {
        const double denom = used * s_xx - s_x * s_x;
        if (denom == 0.0) throw AnalysisError("degenerate gamma fit window");
        fit.gamma = (used * s_xy - s_x * s_y) / denom;
        fit.intercept = (s_y - fit.gamma * s_x) / used;
    } else {
        if (s_xx == 0.0) throw AnalysisError("degenerate gamma fit window");
        fit.gamma = s_xy / s_xx;
    }

    double rss = 0.0;
    for (std::size_t i = 0; i < series.t.size(); ++i) {
        const double beta = tstar - series.t[i];
        if (beta < beta_min || beta > 1.0) continue;
        const double r = series.log_ratio[i] - fit.gamma * std::log(beta) - fit.intercept;
        rss += r * r;
    }
    fit.residual_norm = std::sqrt(rss / used);
    return fit;
}

AlphaFit fit_alpha(const std::vector<std::pair<int, double>>& gammas, bool with_intercept) {
    AlphaFit fit;
    double s_xx = 0.0, s_xy = 0.0, s_x = 0.0, s_y = 0.0;
    for (const auto& [k, gamma] : gammas) {
        if (k < 1) throw std::invalid_argument("ratio orders must be >= 1");
        if (!(gamma > 0.0)) {
            throw AnalysisError("non-power-law ratio data: gamma_" + std::to_string(k) +
                                " = " + std::to_string(gamma) + " is not positive");
        }
        if (k == 1) continue;  // ln k = 0: zero weight
        fit.k_set.push_back(k);
        const double x = std::log(static_cast<double>(k));
        const double y = std::log(gamma);
        s_xx += x * x;
        s_xy += x * y;
        s_x += x;
        s_y += y;
    }
    if (fit.k_set.empty()) throw AnalysisError("alpha fit needs at least one order k >= 2");

    const double count = static_cast<double>(fit.k_set.size());
    if (with_intercept && fit.k_set.size() >= 2) {
        const double denom = count * s_xx - s_x * s_x;
        if (denom == 0.0) throw AnalysisError("degenerate alpha fit");
        fit.a = -(count * s_xy - s_x * s_y) / denom;
        fit.intercept = (s_y + fit.a * s_x) / count;
    } else {
        fit.a = -s_xy / s_xx;
    }

    fit.residuals.reserve(fit.k_set.size());
    for (const auto& [k, gamma] : gammas) {
        if (k == 1) continue;
        fit.residuals.push_back(gamma - std::exp(fit.intercept) * std::pow(k, -fit.a));
    }
    return fit;
}

double epsilon_2k(int k, double alpha) {
    if (k < 1) throw std::invalid_argument("epsilon_2k requires k >= 1");
    return 4.0 * (k + 1.0) / std::pow(static_cast<double>(k), alpha);
}

ScaleReport scale_comparison_with_epsilon(double log_norm_2k, int k, double epsilon) {
    if (k < 1) throw std::invalid_argument("scale comparison requires k >= 1");
    if (!std::isfinite(log_norm_2k)) throw std::invalid_argument("log norm must be finite");
    ScaleReport report;
    report.k = k;
    report.epsilon_2k = epsilon;
    report.log_norm_2k = log_norm_2k;
    report.log_r = -log_norm_2k / (2.0 * k + 1.5);
    report.log_rho = -log_norm_2k / ((1.0 + epsilon) * (2.0 * k + 1.0));
    report.dominant = report.log_rho > report.log_r;
    report.reversed_regime = log_norm_2k <= 0.0;
    return report;
}

ScaleReport scale_comparison(double log_norm_2k, int k, double alpha) {
    ScaleReport report = scale_comparison_with_epsilon(log_norm_2k, k, epsilon_2k(k, alpha));
    report.alpha = alpha;
    return report;
}

namespace {

RatioSeries extract_series(const std::vector<DiagnosticsRecord>& records, int k) {
    RatioSeries series;
    series.k = k;
    for (const auto& record : records) {
        const auto it = record.log_ratios.find(k);
        if (it == record.log_ratios.end()) {
            throw AnalysisError("records carry no ratio for k = " + std::to_string(k));
        }
        series.t.push_back(record.t);
        series.log_ratio.push_back(it->second);
    }
    return series;
}

}  // namespace

PipelineResult analysis_pipeline(const std::vector<DiagnosticsRecord>& records,
                                 const std::vector<int>& k_set, const PipelineOptions& opts) {
    if (records.size() < 3) throw AnalysisError("pipeline needs at least 3 records");
    if (k_set.empty()) throw AnalysisError("k_list empty");
    if (!(opts.beta_min > 0.0)) throw AnalysisError("beta_min must be positive");

    PipelineResult result;

    if (opts.tstar_override) {
        result.peak = PeakEstimate{*opts.tstar_override, false};
    } else {
        std::vector<double> t, enstrophy_series;
        t.reserve(records.size());
        enstrophy_series.reserve(records.size());
        for (const auto& record : records) {
            t.push_back(record.t);
            enstrophy_series.push_back(record.enstrophy);
        }
        result.peak = detect_peak(t, enstrophy_series);
    }
    result.advisory = result.peak.at_boundary;

    const double tstar = result.peak.tstar;
    std::vector<std::pair<int, double>> gamma_values;
    for (int k : k_set) {
        const RatioSeries series = extract_series(records, k);
        GammaFit fit = fit_gamma(series, tstar, opts.beta_min, opts.with_intercept);
        gamma_values.emplace_back(k, fit.gamma);

        // sensitivity of the fit to the peak estimate, surfaced as a band
        double lo = fit.gamma, hi = fit.gamma;
        if (opts.dt > 0.0) {
            for (double shift : {-2.0 * opts.dt, 2.0 * opts.dt}) {
                const GammaFit shifted =
                    fit_gamma(series, tstar + shift, opts.beta_min, opts.with_intercept);
                lo = std::min(lo, shifted.gamma);
                hi = std::max(hi, shifted.gamma);
            }
        }
        result.gamma_band[k] = {lo, hi};
        result.gammas.push_back(std::move(fit));
    }

    result.alpha = fit_alpha(gamma_values, opts.with_intercept);

    // scale comparison at the final pre-peak record
    const DiagnosticsRecord* last_before_peak = nullptr;
    for (const auto& record : records) {
        if (record.t < tstar) last_before_peak = &record;
    }
    if (!last_before_peak) throw AnalysisError("no records precede the enstrophy peak");
    for (int k : k_set) {
        const auto it = last_before_peak->log_norms.find(2 * k);
        if (it == last_before_peak->log_norms.end()) {
            throw AnalysisError("records carry no norm for order " + std::to_string(2 * k));
        }
        result.scales.push_back(scale_comparison(it->second, k, result.alpha.a));
    }
    return result;
}

}  // namespace tgvlab
