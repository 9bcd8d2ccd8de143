#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tgvlab/diagnostics.hpp"
#include "tgvlab/field.hpp"
#include "tgvlab/spectral_ops.hpp"

namespace tgvlab {

enum class ViscousScheme {
    rk4_explicit,       // viscous term inside the RK4 right-hand side
    integrating_factor  // exact heat kernel between stages
};

struct SolverConfig {
    int n = 256;
    double nu = 1.0 / 1600.0;
    double dt = 0.001;
    double t_end = 20.0;
    int diag_stride = 10;
    std::vector<int> k_list = {5,  10, 15, 20, 25, 30, 35, 40, 45, 50,
                               55, 60, 65, 70, 75, 80, 85, 90, 95, 100};
    long long checkpoint_stride = 1000;
    bool dealias = true;
    NonlinearForm nonlinear_form = NonlinearForm::convection;
    ViscousScheme viscous_scheme = ViscousScheme::rk4_explicit;
    bool nonlinear_enabled = true;  // test hook for the pure heat flow
    double cfl_warn = 0.8;
    double viscous_warn = 2.5;
    // analysis defaults carried through to the diagnostics CSV metadata
    double beta_min = -1.0;  // < 0 means "default to dt"
    std::optional<double> tstar_override;
    std::string out_dir = ".";

    void validate() const;  // throws ConfigError on bad values
    double beta_min_effective() const { return beta_min > 0.0 ? beta_min : dt; }
};

struct SolverState {
    SpectralVectorField field;
    long long step_index = 0;
    double dt = 0.0;  // step size that step_index counts
    double t() const { return static_cast<double>(step_index) * dt; }
};

struct StabilityAdvisory {
    double cfl = 0.0;      // max|u| * dt * N
    double viscous = 0.0;  // nu * (2*pi*K)^2 * dt, K the dealias bound
    bool cfl_warn = false;
    bool viscous_warn = false;
};

/// One classical RK4 update of the projected Fourier-space system
/// du_hat/dt = -P(FT(u.grad u)) - nu |k_phys|^2 u_hat.
/// The nonlinear term is projected at every substage; the combined result
/// is dealiased and re-projected. Throws NumericalError when a non-finite
/// coefficient appears.
class Rk4Stepper {
public:
    Rk4Stepper(const WaveGrid& grid, const SolverConfig& cfg);

    void step(SolverState& state);

private:
    void rhs(const SpectralVectorField& in, SpectralVectorField& out);

    WaveGrid grid_;
    SolverConfig cfg_;
    NonlinearWorkspace nonlinear_;
    SpectralVectorField stage_, slope_, accum_;
    aligned_vector<double> half_step_decay_;  // exp(-nu |k|^2 dt/2), IF scheme
};

SolverState rk4_step(const SolverState& state, const SolverConfig& cfg);

/// Computes CFL max|u|*dt*N and the viscous number against the config
/// thresholds.
StabilityAdvisory stability_monitor(const SolverState& state, const SolverConfig& cfg);

using DiagnosticsSink = std::function<void(const SolverState&, const DiagnosticsRecord&)>;
using CheckpointSink = std::function<void(const SolverState&)>;
using AdvisorySink = std::function<void(const SolverState&, const StabilityAdvisory&)>;

struct RunHooks {
    DiagnosticsSink on_sample;       // every diag_stride steps
    CheckpointSink on_checkpoint;    // every checkpoint_stride steps + final
    AdvisorySink on_advisory;        // fired with each sample when warning
};

/// Taylor-Green run from t = 0 to t_end. Samples at step 0 and every
/// diag_stride steps thereafter; checkpoints every checkpoint_stride steps
/// and at the final step. Deterministic for a fixed build and thread count.
SolverState run(const SolverConfig& cfg, const RunHooks& hooks);

/// Continuation from an existing state (resume path). Does not re-sample
/// the starting step; otherwise identical to run().
SolverState run_from(SolverState state, const SolverConfig& cfg, const RunHooks& hooks);

}  // namespace tgvlab
