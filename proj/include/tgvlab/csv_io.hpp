#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "tgvlab/diagnostics.hpp"
#include "tgvlab/integrator.hpp"

namespace tgvlab {

/// Diagnostics CSV, schema v1.
///
/// Two '#' metadata lines (format version; run parameters), then the fixed
/// header  t,energy,enstrophy,logn_<order>...,lnratio_<k>...  with orders
/// sorted ascending. Values are written with 17 significant digits so a
/// parse round-trips bit-exactly. Each row is flushed as it is written.
class DiagnosticsCsvWriter {
public:
    /// Opens fresh (truncate) or for append; append skips the metadata and
    /// header, which must already be present.
    DiagnosticsCsvWriter(const std::string& path, const SolverConfig& cfg, bool append = false);

    void write(const DiagnosticsRecord& record);

private:
    std::ofstream out_;
    std::vector<int> orders_;
    std::vector<int> k_list_;
};

struct DiagnosticsCsv {
    std::vector<DiagnosticsRecord> records;
    std::vector<int> k_list;
    std::vector<int> orders;
    // metadata echoed by simulate; absent fields are left unset
    std::optional<int> n;
    std::optional<double> nu, dt, beta_min, tstar_override;
    std::optional<int> diag_stride;
};

/// Parses a diagnostics CSV; malformed rows are reported with their
/// 1-based line number. A file with no lnratio columns is rejected.
DiagnosticsCsv read_diagnostics_csv(const std::string& path);

/// The exact header line simulate emits for the given config.
std::string csv_header(const SolverConfig& cfg);

}  // namespace tgvlab
