#pragma once

#include <map>
#include <vector>

#include "tgvlab/field.hpp"
#include "tgvlab/wave_grid.hpp"

namespace tgvlab {

/// Unnormalized-forward / exact-inverse pair with the convention
/// u(x) = sum_m u_hat(m) exp(2*pi*i m.x), x on the uniform grid.
/// Both satisfy the discrete Parseval identity and round-trip exactly
/// (to round-off) for any real field.
SpectralVectorField forward_transform(const PhysicalVectorField& p);
PhysicalVectorField inverse_transform(const SpectralVectorField& s);

/// Zeroes every mode with any |m_i| above the two-thirds bound.
void apply_dealias_mask(SpectralVectorField& s);

/// Orthogonal projection onto divergence-free fields,
/// u_hat fi u_hat - m (m.u_hat)/|m|^2 per mode; identity at the zero mode.
/// Bitwise idempotent: modes whose residual divergence is already at the
/// reconstruction round-off floor are passed through unchanged.
SpectralVectorField leray_project(const SpectralVectorField& s);
void leray_project_in_place(SpectralVectorField& s);

/// Largest |k_phys . u_hat| over all modes (divergence in spectral form).
double max_divergence(const SpectralVectorField& s);

/// Largest coefficient magnitude over components and modes.
double max_abs_coefficient(const SpectralVectorField& s);

enum class NonlinearForm {
    convection,  // FT(u . grad u), the default
    divergence,  // FT(div(u (x) u)), identical after dealiasing + projection
};

/// Projected, dealiased transform of the convective term, computed
/// pseudo-spectrally: spectral differentiation, pointwise products on the
/// grid, forward transform, dealias mask, Leray projection.
///
/// Reusable workspace form; the free function below is the convenience
/// wrapper. Input is never mutated.
class NonlinearWorkspace {
public:
    explicit NonlinearWorkspace(const WaveGrid& grid);

    void eval(const SpectralVectorField& in, SpectralVectorField& out,
              NonlinearForm form = NonlinearForm::convection, bool dealias = true);

private:
    WaveGrid grid_;
    PhysicalVectorField velocity_;
    PhysicalVectorField scratch_phys_;
    PhysicalVectorField accum_;
    aligned_vector<complex_t> scratch_spec_;
};

SpectralVectorField nonlinear_term(const SpectralVectorField& s,
                                   NonlinearForm form = NonlinearForm::convection,
                                   bool dealias = true);

/// ln ||Lambda^n u||_inf with Lambda^n the isotropic spectral multiplier
/// (2*pi*|m|)^n per velocity component, evaluated on the dealiased band.
/// Multipliers are normalized by the largest retained |m| so every
/// intermediate stays finite for n up to a few hundred; the physical scale
/// re-enters additively in log space.
/// Throws std::domain_error on a field with no retained content.
LogNorm log_sup_norm(const SpectralVectorField& s, int order);

/// Batch form sharing transforms and buffers across orders. Produces
/// exactly the same values as per-order log_sup_norm calls.
std::map<int, double> log_sup_norms(const SpectralVectorField& s, const std::vector<int>& orders);

/// Spectral coefficients of the Taylor-Green vortex initial velocity:
/// (sin cos cos, -cos sin cos, 0) in 2*pi x_i phases. Populates the eight
/// |m_i| = 1 corner modes; divergence-free by construction.
SpectralVectorField taylor_green_init(const WaveGrid& grid);

/// Parseval sum over the full implied spectrum, sum_m |u_hat(m)|^2
/// (conjugate half-planes counted by weight).
double spectral_energy_sum(const SpectralVectorField& s);

/// Largest |u(x)| (Euclidean over components) on the grid.
double max_velocity_magnitude(const SpectralVectorField& s);

}  // namespace tgvlab
