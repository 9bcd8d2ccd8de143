#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tgvlab {

// Exit codes shared by the CLI and the command implementations:
//   0 success, 1 numerical failure, 2 config error, 3 checkpoint error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCheckpoint = 3;

/// simulate <config>: run from t = 0, stream diagnostics.csv, write
/// checkpoints and the manifest into out_dir.
int cmd_simulate(const std::string& config_path);

struct AnalyzeOptions {
    std::optional<double> tstar;
    std::optional<double> beta_min;
    std::vector<int> k_set;  // empty: every k present in the CSV
    std::optional<std::string> out_dir;
};

/// analyze <csv>: peak detection, gamma/a fits, scale report, SVG plots.
int cmd_analyze(const std::string& csv_path, const AnalyzeOptions& opts);

struct ResumeOptions {
    std::optional<double> t_end;
    std::optional<std::string> config_path;  // default: config_echo.cfg next to the checkpoint
};

/// resume <checkpoint>: continue a simulation, extending its CSV in place.
int cmd_resume(const std::string& checkpoint_path, const ResumeOptions& opts);

}  // namespace tgvlab
