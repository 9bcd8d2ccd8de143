#pragma once

#include <fftw3.h>

#include <cstdint>
#include <mutex>
#include <vector>

#include "tgvlab/wave_grid.hpp"

namespace tgvlab {

// Shared immutable lattice data plus the FFTW plans for this grid size.
// Plans are executed through the new-array interface on 64-byte aligned
// buffers only; the planner itself is serialized by planner_mutex().
struct WaveGrid::Impl {
    int n = 0;
    int dealias_bound = 0;
    double max_mode_magnitude = 0.0;
    std::vector<int> axis_mode;
    std::vector<std::uint8_t> axis_kept;
    std::vector<double> log_mode_ratio;  // per coefficient, -inf at m = 0
    std::vector<double> mode_ratio;      // |m| / max_mode_magnitude
    fftw_plan r2c = nullptr;             // batch of 3 components
    fftw_plan c2r = nullptr;             // batch of 3, destroys its input

    ~Impl();
};

std::mutex& planner_mutex();

}  // namespace tgvlab
