#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <vector>

namespace tgvlab {

/// Integer mode lattice of the periodic unit cube in half-spectrum layout.
///
/// Real fields of N^3 samples transform to N x N x (N/2+1) complex
/// coefficients; the stored axis-3 modes are m3 = 0..N/2 and the missing
/// half plane is implied by Hermitian symmetry u_hat(-m) = conj(u_hat(m)).
/// Axes 1 and 2 store m = {0, 1, ..., N/2, -N/2+1, ..., -1} in wrap-around
/// order. Physical wavevectors are 2*pi*m (domain [0,1]^3).
///
/// Dealiasing follows the two-thirds rule: every mode with any |m_i| > N/3
/// is masked, so the retained band is |m_i| <= floor(N/3).
///
/// WaveGrid is a cheap value handle onto immutable shared data (mode tables
/// and FFT plans); copies refer to the same lattice.
class WaveGrid {
public:
    /// Builds the lattice, multiplier tables, dealias mask and FFT plans.
    /// Throws std::invalid_argument unless N is even and >= 4.
    explicit WaveGrid(int n_points);

    WaveGrid() = default;

    bool valid() const { return impl_ != nullptr; }

    /// Grid points per axis.
    int n() const;

    /// Complex coefficients per component in half-spectrum storage,
    /// n*n*(n/2+1).
    std::size_t spectral_size() const;

    /// Real samples per component, n^3.
    std::size_t physical_size() const;

    /// Dealias bound per axis: modes with any |m_i| > this are masked.
    int dealias_bound() const;

    /// Largest |m| over retained modes, sqrt(3)*dealias_bound().
    double max_mode_magnitude() const;

    /// Signed integer mode for wrap-around index on axes 1/2.
    int axis_mode(int index) const;

    /// True when the wrap-around axis index carries a retained mode.
    bool axis_kept(int index) const;

    /// Flat coefficient index for axis indices (i, j, l), l on axis 3.
    std::size_t coeff_index(int i, int j, int l) const {
        return (static_cast<std::size_t>(i) * static_cast<std::size_t>(n()) +
                static_cast<std::size_t>(j)) *
                   static_cast<std::size_t>(n() / 2 + 1) +
               static_cast<std::size_t>(l);
    }

    /// Parseval weight of an axis-3 plane: 1 for the self-conjugate planes
    /// l = 0 and l = N/2, 2 for interior planes (their conjugate partners
    /// are not stored).
    double plane_weight(int l) const { return (l == 0 || 2 * l == n()) ? 1.0 : 2.0; }

    /// ln(|m| / max_mode_magnitude) per coefficient, -inf at the zero mode.
    /// Masked modes are not special-cased here; callers that need the
    /// dealiased band apply axis_kept.
    const std::vector<double>& log_mode_ratio() const;

    bool operator==(const WaveGrid& other) const { return impl_ == other.impl_; }
    bool operator!=(const WaveGrid& other) const { return impl_ != other.impl_; }

    /// Same lattice geometry (N), regardless of handle identity.
    bool same_layout(const WaveGrid& other) const { return n() == other.n(); }

    struct Impl;
    const Impl& impl() const { return *impl_; }

private:
    std::shared_ptr<const Impl> impl_;
};

}  // namespace tgvlab
