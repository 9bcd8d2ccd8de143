#pragma once

#include <string>

#include "tgvlab/integrator.hpp"

namespace tgvlab {

/// Parses the flat key=value run configuration. '#' starts a comment,
/// blank lines are ignored. Unknown keys and malformed values are rejected
/// with the offending line number. Keys:
///   n, nu, dt, t_end, diag_stride, k_list (comma list), checkpoint_stride,
///   dealias (on/off), nonlinear_form (convection/divergence),
///   viscous (explicit/integrating_factor), nonlinear (on/off),
///   beta_min, tstar_override, out_dir, cfl_warn, viscous_warn
SolverConfig parse_config(const std::string& text, const std::string& source_name);

/// Loads and parses; missing file is a ConfigError naming the path.
SolverConfig load_config_file(const std::string& path);

/// Canonical key=value rendering of a config (the simulate echo; also the
/// default config a resume picks up next to its checkpoint).
std::string render_config(const SolverConfig& cfg);

}  // namespace tgvlab
