#include "tgvlab/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tgvlab/errors.hpp"

namespace tgvlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool all_finite(const SpectralVectorField& s) {
    const auto& data = s.raw();
    const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(data.size());
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (std::ptrdiff_t i = 0; i < total; ++i) {
        ok = ok && std::isfinite(data[i].real()) && std::isfinite(data[i].imag());
    }
    return ok;
}

long long total_steps(const SolverConfig& cfg) {
    return std::llround(cfg.t_end / cfg.dt);
}

}  // namespace

void SolverConfig::validate() const {
    if (n < 4 || n % 2 != 0) throw ConfigError("n must be even and >= 4");
    if (!(nu > 0.0)) throw ConfigError("nu must be positive");
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    if (t_end < 0.0) throw ConfigError("t_end must be non-negative");
    if (diag_stride < 1) throw ConfigError("diag_stride must be >= 1");
    if (checkpoint_stride < 1) throw ConfigError("checkpoint_stride must be >= 1");
    for (int k : k_list) {
        if (k < 1) throw ConfigError("k_list entries must be >= 1");
    }
    if (!(cfl_warn > 0.0) || !(viscous_warn > 0.0)) {
        throw ConfigError("warning thresholds must be positive");
    }
}

Rk4Stepper::Rk4Stepper(const WaveGrid& grid, const SolverConfig& cfg)
    : grid_(grid), cfg_(cfg), nonlinear_(grid), stage_(grid), slope_(grid), accum_(grid) {
    if (grid.n() != cfg.n) throw std::invalid_argument("state grid does not match config");
    if (cfg_.viscous_scheme == ViscousScheme::integrating_factor) {
        // exp(-nu |2 pi m|^2 dt/2) per mode, shared by all components
        const int n = grid_.n();
        const int nl = n / 2 + 1;
        half_step_decay_.resize(grid_.spectral_size());
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            const double m1 = grid_.axis_mode(i);
            for (int j = 0; j < n; ++j) {
                const double m2 = grid_.axis_mode(j);
                const std::size_t base = grid_.coeff_index(i, j, 0);
                for (int l = 0; l < nl; ++l) {
                    const double k2 = kTwoPi * kTwoPi * (m1 * m1 + m2 * m2 + l * (double)l);
                    half_step_decay_[base + l] = std::exp(-cfg_.nu * k2 * 0.5 * cfg_.dt);
                }
            }
        }
    }
}

// Right-hand side of the projected system: -P(FT(u.grad u)) - nu |k|^2 u.
// The integrating-factor scheme asks for the nonlinear part only.
void Rk4Stepper::rhs(const SpectralVectorField& in, SpectralVectorField& out) {
    const bool with_viscous = cfg_.viscous_scheme == ViscousScheme::rk4_explicit;
    if (cfg_.nonlinear_enabled) {
        nonlinear_.eval(in, out, cfg_.nonlinear_form, cfg_.dealias);
    } else {
        std::fill(out.raw().begin(), out.raw().end(), complex_t{0.0, 0.0});
    }

    const int n = grid_.n();
    const int nl = n / 2 + 1;
    const std::size_t spectral = grid_.spectral_size();
    const double nu = cfg_.nu;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        const double m1 = grid_.axis_mode(i);
        for (int j = 0; j < n; ++j) {
            const double m2 = grid_.axis_mode(j);
            const std::size_t base = grid_.coeff_index(i, j, 0);
            for (int l = 0; l < nl; ++l) {
                const std::size_t idx = base + l;
                const double k2 = kTwoPi * kTwoPi * (m1 * m1 + m2 * m2 + l * (double)l);
                for (int c = 0; c < 3; ++c) {
                    const complex_t nonlinear = out.raw()[c * spectral + idx];
                    const complex_t u = in.raw()[c * spectral + idx];
                    out.raw()[c * spectral + idx] =
                        with_viscous ? -nonlinear - nu * k2 * u : -nonlinear;
                }
            }
        }
    }
}

void Rk4Stepper::step(SolverState& state) {
    SpectralVectorField& u = state.field;
    const double dt = cfg_.dt;
    const std::ptrdiff_t total = static_cast<std::ptrdiff_t>(u.raw().size());

    auto axpy_into = [&](SpectralVectorField& dst, const SpectralVectorField& base, double scale,
                         const SpectralVectorField& delta) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t p = 0; p < total; ++p) {
            dst.raw()[p] = base.raw()[p] + scale * delta.raw()[p];
        }
    };

    if (cfg_.viscous_scheme == ViscousScheme::rk4_explicit) {
        rhs(u, slope_);  // k1
        accum_.raw() = slope_.raw();
        axpy_into(stage_, u, 0.5 * dt, slope_);

        rhs(stage_, slope_);  // k2
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t p = 0; p < total; ++p) {
            accum_.raw()[p] += 2.0 * slope_.raw()[p];
        }
        axpy_into(stage_, u, 0.5 * dt, slope_);

        rhs(stage_, slope_);  // k3
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t p = 0; p < total; ++p) {
            accum_.raw()[p] += 2.0 * slope_.raw()[p];
        }
        axpy_into(stage_, u, dt, slope_);

        rhs(stage_, slope_);  // k4
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t p = 0; p < total; ++p) {
            u.raw()[p] += dt / 6.0 * (accum_.raw()[p] + slope_.raw()[p]);
        }
    } else {
        // integrating-factor RK4: E = exp(L dt/2) applied around the
        // nonlinear stages; exact heat kernel when the nonlinearity is off.
        const std::size_t spectral = grid_.spectral_size();
        const double* decay = half_step_decay_.data();
        auto mode_factor = [&](std::ptrdiff_t p) { return decay[p % spectral]; };

        rhs(u, slope_);  // k1
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t p = 0; p < total; ++p) {
            const double e = mode_factor(p);
            stage_.raw()[p] = e * (u.raw()[p] + 0.5 * dt * slope_.raw()[p]);
            accum_.raw()[p] = e * slope_.raw()[p];
        }

        rhs(stage_, slope_);  // k2
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t p = 0; p < total; ++p) {
            const double e = mode_factor(p);
            accum_.raw()[p] += 2.0 * slope_.raw()[p];
            stage_.raw()[p] = e * u.raw()[p] + 0.5 * dt * slope_.raw()[p];
        }

        rhs(stage_, slope_);  // k3
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t p = 0; p < total; ++p) {
            const double e = mode_factor(p);
            accum_.raw()[p] += 2.0 * slope_.raw()[p];
            stage_.raw()[p] = e * (e * u.raw()[p] + dt * slope_.raw()[p]);
        }

        rhs(stage_, slope_);  // k4
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t p = 0; p < total; ++p) {
            const double e = mode_factor(p);
            u.raw()[p] = e * (e * u.raw()[p] + dt / 6.0 * accum_.raw()[p]) +
                         dt / 6.0 * slope_.raw()[p];
        }
    }

    if (cfg_.dealias) apply_dealias_mask(u);
    leray_project_in_place(u);

    state.step_index += 1;
    if (!all_finite(u)) {
        throw NumericalError(
            "non-finite coefficient after step " + std::to_string(state.step_index) +
                " (t = " + std::to_string(state.t()) + "); last good checkpoint retained",
            state.step_index);
    }
}

SolverState rk4_step(const SolverState& state, const SolverConfig& cfg) {
    SolverState next = state;
    Rk4Stepper stepper(state.field.grid(), cfg);
    stepper.step(next);
    return next;
}

StabilityAdvisory stability_monitor(const SolverState& state, const SolverConfig& cfg) {
    StabilityAdvisory advisory;
    const WaveGrid& grid = state.field.grid();
    advisory.cfl = max_velocity_magnitude(state.field) * cfg.dt * grid.n();
    const double k_axis = kTwoPi * grid.dealias_bound();
    advisory.viscous = cfg.nu * k_axis * k_axis * cfg.dt;
    advisory.cfl_warn = advisory.cfl > cfg.cfl_warn;
    advisory.viscous_warn = advisory.viscous > cfg.viscous_warn;
    return advisory;
}

SolverState run_from(SolverState state, const SolverConfig& cfg, const RunHooks& hooks) {
    cfg.validate();
    if (!state.field.grid().valid() || state.field.grid().n() != cfg.n) {
        throw std::invalid_argument("state grid does not match config");
    }
    state.dt = cfg.dt;
    const long long n_total = total_steps(cfg);
    Rk4Stepper stepper(state.field.grid(), cfg);

    while (state.step_index < n_total) {
        stepper.step(state);
        const long long step = state.step_index;
        if (hooks.on_sample && step % cfg.diag_stride == 0) {
            hooks.on_sample(state, sample(state.field, state.t(), cfg.k_list));
            if (hooks.on_advisory) {
                const StabilityAdvisory advisory = stability_monitor(state, cfg);
                if (advisory.cfl_warn || advisory.viscous_warn) hooks.on_advisory(state, advisory);
            }
        }
        if (hooks.on_checkpoint &&
            (step % cfg.checkpoint_stride == 0 || step == n_total)) {
            hooks.on_checkpoint(state);
        }
    }
    return state;
}

SolverState run(const SolverConfig& cfg, const RunHooks& hooks) {
    cfg.validate();
    WaveGrid grid(cfg.n);
    SolverState state{taylor_green_init(grid), 0, cfg.dt};
    if (hooks.on_sample) {
        hooks.on_sample(state, sample(state.field, 0.0, cfg.k_list));
        if (hooks.on_advisory) {
            const StabilityAdvisory advisory = stability_monitor(state, cfg);
            if (advisory.cfl_warn || advisory.viscous_warn) hooks.on_advisory(state, advisory);
        }
    }
    return run_from(std::move(state), cfg, hooks);
}

}  // namespace tgvlab
