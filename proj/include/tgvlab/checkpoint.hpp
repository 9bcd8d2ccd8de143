#pragma once

#include <string>

#include "tgvlab/integrator.hpp"

namespace tgvlab {

/// Binary checkpoint, magic "TGVRLAB1".
///
/// Layout (all multi-byte values little-endian):
///   bytes 0..7   magic "TGVRLAB1"
///   u32          endianness tag 0x01020304 (rejects byte-swapped files)
///   u32          format version (1)
///   u64          N
///   f64          nu, dt, t
///   u64          step_index
///   3 blocks of N*N*(N/2+1) coefficient pairs (re, im) as f64,
///   component-major, then axis-1 index, axis-2 index, axis-3 index
///   fastest (the half-spectrum storage order).
///
/// Writes are atomic: a temporary file is renamed into place, so an
/// interrupted writer never leaves a truncated checkpoint behind.
void write_checkpoint(const std::string& path, const SolverState& state, double nu);

struct CheckpointData {
    SolverState state;
    double nu = 0.0;
};

/// Throws CheckpointError on bad magic, version, endianness or truncation.
CheckpointData read_checkpoint(const std::string& path);

}  // namespace tgvlab
