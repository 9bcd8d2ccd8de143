#pragma once

#include <complex>
#include <cstdlib>
#include <new>
#include <vector>

#include "tgvlab/wave_grid.hpp"

namespace tgvlab {

/// Allocator with 64-byte alignment so FFTW new-array execution sees the
/// same SIMD alignment as the buffers its plans were created with.
template <class T>
struct AlignedAllocator {
    using value_type = T;
    static constexpr std::size_t alignment = 64;

    AlignedAllocator() = default;
    template <class U>
    AlignedAllocator(const AlignedAllocator<U>&) {}

    T* allocate(std::size_t count) {
        void* p = std::aligned_alloc(alignment, round_up(count * sizeof(T)));
        if (!p) throw std::bad_alloc();
        return static_cast<T*>(p);
    }
    void deallocate(T* p, std::size_t) { std::free(p); }

    template <class U>
    bool operator==(const AlignedAllocator<U>&) const { return true; }

private:
    static std::size_t round_up(std::size_t bytes) {
        return (bytes + alignment - 1) / alignment * alignment;
    }
};

using complex_t = std::complex<double>;
template <class T>
using aligned_vector = std::vector<T, AlignedAllocator<T>>;

/// Three-component velocity in half-spectrum complex coefficients.
/// Component-major storage: coeffs()[c * grid.spectral_size() + idx].
class SpectralVectorField {
public:
    SpectralVectorField() = default;
    explicit SpectralVectorField(const WaveGrid& grid)
        : grid_(grid), data_(3 * grid.spectral_size(), complex_t{0.0, 0.0}) {}

    const WaveGrid& grid() const { return grid_; }

    complex_t* component(int c) { return data_.data() + static_cast<std::size_t>(c) * grid_.spectral_size(); }
    const complex_t* component(int c) const {
        return data_.data() + static_cast<std::size_t>(c) * grid_.spectral_size();
    }

    complex_t& at(int c, int i, int j, int l) { return component(c)[grid_.coeff_index(i, j, l)]; }
    const complex_t& at(int c, int i, int j, int l) const {
        return component(c)[grid_.coeff_index(i, j, l)];
    }

    aligned_vector<complex_t>& raw() { return data_; }
    const aligned_vector<complex_t>& raw() const { return data_; }

private:
    WaveGrid grid_;
    aligned_vector<complex_t> data_;
};

/// Three-component velocity sampled on the uniform grid x = (i1,i2,i3)/N.
/// Component-major storage, row-major (i1 slowest) within a component.
class PhysicalVectorField {
public:
    PhysicalVectorField() = default;
    explicit PhysicalVectorField(const WaveGrid& grid)
        : grid_(grid), data_(3 * grid.physical_size(), 0.0) {}

    const WaveGrid& grid() const { return grid_; }

    double* component(int c) { return data_.data() + static_cast<std::size_t>(c) * grid_.physical_size(); }
    const double* component(int c) const {
        return data_.data() + static_cast<std::size_t>(c) * grid_.physical_size();
    }

    double& at(int c, int i, int j, int l) {
        return component(c)[(static_cast<std::size_t>(i) * grid_.n() + j) * grid_.n() + l];
    }
    const double& at(int c, int i, int j, int l) const {
        return component(c)[(static_cast<std::size_t>(i) * grid_.n() + j) * grid_.n() + l];
    }

    aligned_vector<double>& raw() { return data_; }
    const aligned_vector<double>& raw() const { return data_; }

private:
    WaveGrid grid_;
    aligned_vector<double> data_;
};

/// Natural log of a derivative sup norm, ln ||D^n u||_inf, kept in log form
/// so orders up to 200 stay representable.
struct LogNorm {
    int order = 0;
    double value = 0.0;
};

}  // namespace tgvlab
