#include "tgvlab/diagnostics.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace tgvlab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double energy(const SpectralVectorField& s) { return 0.5 * spectral_energy_sum(s); }

double enstrophy(const SpectralVectorField& s) {
    const WaveGrid& grid = s.grid();
    const int n = grid.n();
    const int nl = n / 2 + 1;
    const complex_t* u1 = s.component(0);
    const complex_t* u2 = s.component(1);
    const complex_t* u3 = s.component(2);
    std::vector<double> partial(n, 0.0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        const double m1 = grid.axis_mode(i);
        double acc = 0.0;
        for (int j = 0; j < n; ++j) {
            const double m2 = grid.axis_mode(j);
            const std::size_t base = grid.coeff_index(i, j, 0);
            for (int l = 0; l < nl; ++l) {
                const double m3 = l;
                const std::size_t idx = base + l;
                // omega_hat = i 2 pi (m x u_hat); |i z| = |z|
                const complex_t c1 = m2 * u3[idx] - m3 * u2[idx];
                const complex_t c2 = m3 * u1[idx] - m1 * u3[idx];
                const complex_t c3 = m1 * u2[idx] - m2 * u1[idx];
                acc += grid.plane_weight(l) * (std::norm(c1) + std::norm(c2) + std::norm(c3));
            }
        }
        partial[i] = acc;
    }
    double total = 0.0;
    for (double v : partial) total += v;
    return 0.5 * kTwoPi * kTwoPi * total;
}

double ratio_log(const SpectralVectorField& s, int k) {
    if (k < 1) throw std::invalid_argument("ratio order must be >= 1");
    const double lk = log_sup_norm(s, k).value;
    const double l2k = log_sup_norm(s, 2 * k).value;
    return lk / (k + 1.0) - l2k / (2.0 * k + 1.0);
}

DiagnosticsRecord sample(const SpectralVectorField& s, double t, const std::vector<int>& k_list) {
    for (int k : k_list) {
        if (k < 1) throw std::invalid_argument("ratio order must be >= 1");
    }
    DiagnosticsRecord record;
    record.t = t;
    record.energy = energy(s);
    record.enstrophy = enstrophy(s);
    if (!k_list.empty()) {
        record.log_norms = log_sup_norms(s, required_orders(k_list));
        for (int k : std::set<int>(k_list.begin(), k_list.end())) {
            record.log_ratios[k] =
                record.log_norms.at(k) / (k + 1.0) - record.log_norms.at(2 * k) / (2.0 * k + 1.0);
        }
    }
    return record;
}

std::vector<int> required_orders(const std::vector<int>& k_list) {
    std::set<int> orders = {0};
    for (int k : k_list) {
        orders.insert(k);
        orders.insert(2 * k);
    }
    return {orders.begin(), orders.end()};
}

}  // namespace tgvlab
