#include "tgvlab/wave_grid.hpp"

#include <omp.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "tgvlab/field.hpp"
#include "wave_grid_impl.hpp"

namespace tgvlab {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

namespace {
void init_fftw_threads_once() {
    static const bool done = [] {
        fftw_init_threads();
        return true;
    }();
    (void)done;
}
}  // namespace

WaveGrid::Impl::~Impl() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (r2c) fftw_destroy_plan(r2c);
    if (c2r) fftw_destroy_plan(c2r);
}

WaveGrid::WaveGrid(int n_points) {
    if (n_points < 4 || n_points % 2 != 0) {
        throw std::invalid_argument("grid size must be even and >= 4, got " +
                                    std::to_string(n_points));
    }
    auto impl = std::make_shared<Impl>();
    const int n = n_points;
    impl->n = n;
    impl->dealias_bound = n / 3;  // two-thirds rule: keep |m_i| <= floor(N/3)
    impl->max_mode_magnitude = std::sqrt(3.0) * impl->dealias_bound;

    impl->axis_mode.resize(n);
    impl->axis_kept.resize(n);
    for (int i = 0; i < n; ++i) {
        const int m = (i <= n / 2) ? i : i - n;
        impl->axis_mode[i] = m;
        impl->axis_kept[i] = std::abs(m) <= impl->dealias_bound ? 1 : 0;
    }

    const int nl = n / 2 + 1;
    const std::size_t spectral = static_cast<std::size_t>(n) * n * nl;
    impl->mode_ratio.resize(spectral);
    impl->log_mode_ratio.resize(spectral);
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
        const double m1 = impl->axis_mode[i];
        for (int j = 0; j < n; ++j) {
            const double m2 = impl->axis_mode[j];
            for (int l = 0; l < nl; ++l, ++idx) {
                const double m2sum = m1 * m1 + m2 * m2 + static_cast<double>(l) * l;
                const double ratio = std::sqrt(m2sum) / impl->max_mode_magnitude;
                impl->mode_ratio[idx] = ratio;
                impl->log_mode_ratio[idx] = std::log(ratio);  // -inf at m = 0
            }
        }
    }

    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        init_fftw_threads_once();
        fftw_plan_with_nthreads(omp_get_max_threads());

        // Planning buffers are only needed while planning: all executions go
        // through the new-array interface on identically laid out storage.
        aligned_vector<double> real_buf(3 * static_cast<std::size_t>(n) * n * n);
        aligned_vector<complex_t> cplx_buf(3 * spectral);
        const int dims[3] = {n, n, n};
        // FFTW_ESTIMATE keeps plan selection deterministic run to run, which
        // the reproducibility guarantees depend on.
        impl->r2c = fftw_plan_many_dft_r2c(
            3, dims, 3, real_buf.data(), nullptr, 1, n * n * n,
            reinterpret_cast<fftw_complex*>(cplx_buf.data()), nullptr, 1,
            static_cast<int>(spectral), FFTW_ESTIMATE);
        impl->c2r = fftw_plan_many_dft_c2r(
            3, dims, 3, reinterpret_cast<fftw_complex*>(cplx_buf.data()), nullptr, 1,
            static_cast<int>(spectral), real_buf.data(), nullptr, 1, n * n * n, FFTW_ESTIMATE);
        if (!impl->r2c || !impl->c2r) {
            throw std::runtime_error("FFTW plan creation failed for N = " + std::to_string(n));
        }
    }
    impl_ = std::move(impl);
}

int WaveGrid::n() const { return impl_->n; }

std::size_t WaveGrid::spectral_size() const {
    const int n = impl_->n;
    return static_cast<std::size_t>(n) * n * (n / 2 + 1);
}

std::size_t WaveGrid::physical_size() const {
    const int n = impl_->n;
    return static_cast<std::size_t>(n) * n * n;
}

int WaveGrid::dealias_bound() const { return impl_->dealias_bound; }

double WaveGrid::max_mode_magnitude() const { return impl_->max_mode_magnitude; }

int WaveGrid::axis_mode(int index) const { return impl_->axis_mode[index]; }

bool WaveGrid::axis_kept(int index) const { return impl_->axis_kept[index] != 0; }

const std::vector<double>& WaveGrid::log_mode_ratio() const { return impl_->log_mode_ratio; }

}  // namespace tgvlab
