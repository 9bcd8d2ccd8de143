#include "tgvlab/spectral_ops.hpp"

#include <algorithm>
#include <cassert>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "wave_grid_impl.hpp"

namespace tgvlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_same_grid(const WaveGrid& a, const WaveGrid& b) {
    if (!a.valid() || !b.valid() || !a.same_layout(b)) {
        throw std::invalid_argument("grid mismatch between operands");
    }
}

// r2c leaves its input intact (out-of-place); scale to the coefficient
// convention u(x) = sum_m u_hat(m) e^{2 pi i m.x} afterwards.
void forward_into(const PhysicalVectorField& p, SpectralVectorField& s) {
    const auto& impl = p.grid().impl();
    fftw_execute_dft_r2c(impl.r2c, const_cast<double*>(p.raw().data()),
                         reinterpret_cast<fftw_complex*>(s.raw().data()));
    const double scale = 1.0 / static_cast<double>(p.grid().physical_size());
    auto& data = s.raw();
    const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(data.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < total; ++i) data[i] *= scale;
}

// Multi-dimensional c2r destroys its input, so executions run on scratch.
void inverse_destructive(const WaveGrid& grid, aligned_vector<complex_t>& coeffs,
                         PhysicalVectorField& p) {
    fftw_execute_dft_c2r(grid.impl().c2r, reinterpret_cast<fftw_complex*>(coeffs.data()),
                         p.raw().data());
}

void inverse_into(const SpectralVectorField& s, aligned_vector<complex_t>& scratch,
                  PhysicalVectorField& p) {
    scratch = s.raw();
    inverse_destructive(s.grid(), scratch, p);
}

double max_abs_physical(const PhysicalVectorField& p) {
    const auto& data = p.raw();
    const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(data.size());
    double result = 0.0;
#pragma omp parallel for schedule(static) reduction(max : result)
    for (std::ptrdiff_t i = 0; i < total; ++i) result = std::max(result, std::abs(data[i]));
    return result;
}

// base^e by binary powering; deterministic and independent of any other
// exponent being evaluated in the same batch.
double pow_uint(double base, unsigned e) {
    double result = 1.0;
    double factor = base;
    while (e != 0) {
        if (e & 1u) result *= factor;
        e >>= 1u;
        if (e != 0) factor *= factor;
    }
    return result;
}

}  // namespace

SpectralVectorField forward_transform(const PhysicalVectorField& p) {
    if (!p.grid().valid()) throw std::invalid_argument("physical field has no grid");
    SpectralVectorField s(p.grid());
    forward_into(p, s);
    return s;
}

PhysicalVectorField inverse_transform(const SpectralVectorField& s) {
    if (!s.grid().valid()) throw std::invalid_argument("spectral field has no grid");
    PhysicalVectorField p(s.grid());
    aligned_vector<complex_t> scratch;
    inverse_into(s, scratch, p);
    return p;
}

void apply_dealias_mask(SpectralVectorField& s) {
    const WaveGrid& grid = s.grid();
    const int n = grid.n();
    const int nl = n / 2 + 1;
    for (int c = 0; c < 3; ++c) {
        complex_t* field = s.component(c);
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            const bool keep_i = grid.axis_kept(i);
            for (int j = 0; j < n; ++j) {
                const bool keep_ij = keep_i && grid.axis_kept(j);
                complex_t* row = field + grid.coeff_index(i, j, 0);
                for (int l = 0; l < nl; ++l) {
                    if (!(keep_ij && grid.axis_kept(l))) row[l] = complex_t{0.0, 0.0};
                }
            }
        }
    }
}

void leray_project_in_place(SpectralVectorField& s) {
    const WaveGrid& grid = s.grid();
    const int n = grid.n();
    const int nl = n / 2 + 1;
    complex_t* u1 = s.component(0);
    complex_t* u2 = s.component(1);
    complex_t* u3 = s.component(2);
    // Modes whose divergence already sits at the reconstruction round-off
    // floor pass through unchanged; re-projection is then bitwise stable.
    const double snap = 16.0 * DBL_EPSILON;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        const double m1 = grid.axis_mode(i);
        for (int j = 0; j < n; ++j) {
            const double m2 = grid.axis_mode(j);
            const std::size_t base = grid.coeff_index(i, j, 0);
            for (int l = 0; l < nl; ++l) {
                const double m3 = l;
                const double norm2 = m1 * m1 + m2 * m2 + m3 * m3;
                if (norm2 == 0.0) continue;  // zero mode: identity
                const std::size_t idx = base + l;
                const complex_t a = u1[idx];
                const complex_t b = u2[idx];
                const complex_t c = u3[idx];
                const complex_t dot = m1 * a + m2 * b + m3 * c;
                const double l1m = std::abs(m1) + std::abs(m2) + m3;
                const double amax =
                    std::max({std::abs(a.real()), std::abs(a.imag()), std::abs(b.real()),
                              std::abs(b.imag()), std::abs(c.real()), std::abs(c.imag())});
                if (std::abs(dot.real()) + std::abs(dot.imag()) <= snap * l1m * amax) continue;
                const complex_t w = dot / norm2;
                u1[idx] = a - m1 * w;
                u2[idx] = b - m2 * w;
                u3[idx] = c - m3 * w;
            }
        }
    }
}

SpectralVectorField leray_project(const SpectralVectorField& s) {
    SpectralVectorField result = s;
    leray_project_in_place(result);
    return result;
}

double max_divergence(const SpectralVectorField& s) {
    const WaveGrid& grid = s.grid();
    const int n = grid.n();
    const int nl = n / 2 + 1;
    const complex_t* u1 = s.component(0);
    const complex_t* u2 = s.component(1);
    const complex_t* u3 = s.component(2);
    double result = 0.0;
#pragma omp parallel for schedule(static) reduction(max : result)
    for (int i = 0; i < n; ++i) {
        const double m1 = grid.axis_mode(i);
        for (int j = 0; j < n; ++j) {
            const double m2 = grid.axis_mode(j);
            const std::size_t base = grid.coeff_index(i, j, 0);
            for (int l = 0; l < nl; ++l) {
                const complex_t dot = m1 * u1[base + l] + m2 * u2[base + l] +
                                      static_cast<double>(l) * u3[base + l];
                result = std::max(result, kTwoPi * std::abs(dot));
            }
        }
    }
    return result;
}

double max_abs_coefficient(const SpectralVectorField& s) {
    const auto& data = s.raw();
    const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(data.size());
    double result = 0.0;
#pragma omp parallel for schedule(static) reduction(max : result)
    for (std::ptrdiff_t i = 0; i < total; ++i) result = std::max(result, std::abs(data[i]));
    return result;
}

NonlinearWorkspace::NonlinearWorkspace(const WaveGrid& grid)
    : grid_(grid),
      velocity_(grid),
      scratch_phys_(grid),
      accum_(grid),
      scratch_spec_(3 * grid.spectral_size()) {}

void NonlinearWorkspace::eval(const SpectralVectorField& in, SpectralVectorField& out,
                              NonlinearForm form, bool dealias) {
    require_same_grid(in.grid(), grid_);
    assert(&in != &out);
    if (!out.grid().valid() || !out.grid().same_layout(grid_)) out = SpectralVectorField(grid_);

    const int n = grid_.n();
    const int nl = n / 2 + 1;
    const std::size_t spectral = grid_.spectral_size();
    const std::size_t physical = grid_.physical_size();

    inverse_into(in, scratch_spec_, velocity_);

    if (form == NonlinearForm::convection) {
        std::fill(accum_.raw().begin(), accum_.raw().end(), 0.0);
        for (int axis = 0; axis < 3; ++axis) {
            // d u_c / d x_axis for all three components in one batch
            for (int c = 0; c < 3; ++c) {
                const complex_t* src = in.component(c);
                complex_t* dst = scratch_spec_.data() + c * spectral;
#pragma omp parallel for schedule(static)
                for (int i = 0; i < n; ++i) {
                    const double m1 = grid_.axis_mode(i);
                    for (int j = 0; j < n; ++j) {
                        const double m2 = grid_.axis_mode(j);
                        const std::size_t base = grid_.coeff_index(i, j, 0);
                        for (int l = 0; l < nl; ++l) {
                            const double m = axis == 0 ? m1 : (axis == 1 ? m2 : l);
                            const complex_t v = src[base + l];
                            // i * 2 pi m * v
                            dst[base + l] = complex_t{-kTwoPi * m * v.imag(), kTwoPi * m * v.real()};
                        }
                    }
                }
            }
            inverse_destructive(grid_, scratch_spec_, scratch_phys_);
            const double* uj = velocity_.component(axis);
            for (int c = 0; c < 3; ++c) {
                double* acc = accum_.component(c);
                const double* du = scratch_phys_.component(c);
#pragma omp parallel for schedule(static)
                for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(physical); ++p) {
                    acc[p] += uj[p] * du[p];
                }
            }
        }
        forward_into(accum_, out);
    } else {
        // divergence form: d/dx_j FT(u_i u_j) assembled from the six products
        for (int c = 0; c < 3; ++c) {
            const double* u = velocity_.component(c);
            double* dst = scratch_phys_.component(c);
#pragma omp parallel for schedule(static)
            for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(physical); ++p) {
                dst[p] = u[p] * u[p];
            }
        }
        SpectralVectorField diag(grid_);
        forward_into(scratch_phys_, diag);

        const double* u1p = velocity_.component(0);
        const double* u2p = velocity_.component(1);
        const double* u3p = velocity_.component(2);
        double* p23 = scratch_phys_.component(0);
        double* p13 = scratch_phys_.component(1);
        double* p12 = scratch_phys_.component(2);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(physical); ++p) {
            p23[p] = u2p[p] * u3p[p];
            p13[p] = u1p[p] * u3p[p];
            p12[p] = u1p[p] * u2p[p];
        }
        forward_into(scratch_phys_, out);  // out temporarily holds the off-diagonal products

        complex_t* o1 = out.component(0);
        complex_t* o2 = out.component(1);
        complex_t* o3 = out.component(2);
        const complex_t* d1 = diag.component(0);
        const complex_t* d2 = diag.component(1);
        const complex_t* d3 = diag.component(2);
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            const double m1 = grid_.axis_mode(i);
            for (int j = 0; j < n; ++j) {
                const double m2 = grid_.axis_mode(j);
                const std::size_t base = grid_.coeff_index(i, j, 0);
                for (int l = 0; l < nl; ++l) {
                    const double m3 = l;
                    const std::size_t idx = base + l;
                    const complex_t q23 = o1[idx], q13 = o2[idx], q12 = o3[idx];
                    const complex_t s1 = m1 * d1[idx] + m2 * q12 + m3 * q13;
                    const complex_t s2 = m1 * q12 + m2 * d2[idx] + m3 * q23;
                    const complex_t s3 = m1 * q13 + m2 * q23 + m3 * d3[idx];
                    o1[idx] = complex_t{-kTwoPi * s1.imag(), kTwoPi * s1.real()};
                    o2[idx] = complex_t{-kTwoPi * s2.imag(), kTwoPi * s2.real()};
                    o3[idx] = complex_t{-kTwoPi * s3.imag(), kTwoPi * s3.real()};
                }
            }
        }
    }

    if (dealias) apply_dealias_mask(out);
    leray_project_in_place(out);
}

SpectralVectorField nonlinear_term(const SpectralVectorField& s, NonlinearForm form, bool dealias) {
    NonlinearWorkspace workspace(s.grid());
    SpectralVectorField out(s.grid());
    workspace.eval(s, out, form, dealias);
    return out;
}

std::map<int, double> log_sup_norms(const SpectralVectorField& s, const std::vector<int>& orders) {
    const WaveGrid& grid = s.grid();
    if (!grid.valid()) throw std::invalid_argument("spectral field has no grid");
    std::set<int> unique_orders(orders.begin(), orders.end());
    if (!unique_orders.empty() && *unique_orders.begin() < 0) {
        throw std::invalid_argument("derivative order must be non-negative");
    }

    const int n = grid.n();
    const int nl = n / 2 + 1;
    const std::size_t spectral = grid.spectral_size();
    const auto& ratio = grid.impl().mode_ratio;
    const double log_scale = std::log(kTwoPi * grid.max_mode_magnitude());

    aligned_vector<complex_t> scratch(3 * spectral);
    PhysicalVectorField phys(grid);

    std::map<int, double> result;
    for (int order : unique_orders) {
        if (order == 0) {
            scratch = s.raw();
        } else {
#pragma omp parallel for schedule(static)
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    const bool keep_ij = grid.axis_kept(i) && grid.axis_kept(j);
                    const std::size_t base = grid.coeff_index(i, j, 0);
                    for (int l = 0; l < nl; ++l) {
                        const std::size_t idx = base + l;
                        const double w = (keep_ij && grid.axis_kept(l))
                                             ? pow_uint(ratio[idx], static_cast<unsigned>(order))
                                             : 0.0;
                        for (int c = 0; c < 3; ++c) {
                            scratch[c * spectral + idx] = w * s.raw()[c * spectral + idx];
                        }
                    }
                }
            }
        }
        inverse_destructive(grid, scratch, phys);
        const double peak = max_abs_physical(phys);
        if (peak == 0.0 || !std::isfinite(peak)) {
            throw std::domain_error("sup norm undefined in log space: field has no retained content");
        }
        result[order] = static_cast<double>(order) * log_scale + std::log(peak);
    }
    return result;
}

LogNorm log_sup_norm(const SpectralVectorField& s, int order) {
    return LogNorm{order, log_sup_norms(s, {order}).at(order)};
}

SpectralVectorField taylor_green_init(const WaveGrid& grid) {
    SpectralVectorField s(grid);
    const int n = grid.n();
    // u1 = sin cos cos, u2 = -cos sin cos, u3 = 0 decomposes over the eight
    // |m_i| = 1 modes: u1_hat = -i m1 / 8, u2_hat = i m2 / 8. The stored
    // half-spectrum keeps the four m3 = +1 modes.
    for (int s1 : {+1, -1}) {
        for (int s2 : {+1, -1}) {
            const int i = s1 == 1 ? 1 : n - 1;
            const int j = s2 == 1 ? 1 : n - 1;
            s.at(0, i, j, 1) = complex_t{0.0, -s1 / 8.0};
            s.at(1, i, j, 1) = complex_t{0.0, s2 / 8.0};
        }
    }
    return s;
}

double spectral_energy_sum(const SpectralVectorField& s) {
    const WaveGrid& grid = s.grid();
    const int n = grid.n();
    const int nl = n / 2 + 1;
    std::vector<double> partial(n, 0.0);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) {
            const std::size_t base = grid.coeff_index(i, j, 0);
            for (int l = 0; l < nl; ++l) {
                const double w = grid.plane_weight(l);
                for (int c = 0; c < 3; ++c) {
                    acc += w * std::norm(s.component(c)[base + l]);
                }
            }
        }
        partial[i] = acc;
    }
    // fixed-order reduction: the sum is independent of the thread count
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

double max_velocity_magnitude(const SpectralVectorField& s) {
    PhysicalVectorField p = inverse_transform(s);
    const std::size_t physical = s.grid().physical_size();
    const double* u1 = p.component(0);
    const double* u2 = p.component(1);
    const double* u3 = p.component(2);
    double result = 0.0;
#pragma omp parallel for schedule(static) reduction(max : result)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(physical); ++i) {
        result = std::max(result, u1[i] * u1[i] + u2[i] * u2[i] + u3[i] * u3[i]);
    }
    return std::sqrt(result);
}

}  // namespace tgvlab
