#pragma once

#include <map>
#include <vector>

#include "tgvlab/field.hpp"
#include "tgvlab/spectral_ops.hpp"

namespace tgvlab {

/// One time sample of the scalar diagnostics. Derivative norms and ratios
/// are stored in natural-log form only; nothing here is ever exponentiated.
struct DiagnosticsRecord {
    double t = 0.0;
    double energy = 0.0;
    double enstrophy = 0.0;
    /// derivative order -> ln ||D^n u||_inf, orders {0} + k_list + 2*k_list
    std::map<int, double> log_norms;
    /// k -> ln R^k = log_norms[k]/(k+1) - log_norms[2k]/(2k+1)
    std::map<int, double> log_ratios;
};

/// Kinetic energy (1/2) <|u|^2> via the Parseval sum.
double energy(const SpectralVectorField& s);

/// Enstrophy (1/2) <|curl u|^2> from the spectral curl i k x u_hat.
double enstrophy(const SpectralVectorField& s);

/// ln R^k for one order via two log_sup_norm evaluations.
double ratio_log(const SpectralVectorField& s, int k);

/// Computes the full record for the given ratio orders in one pass,
/// evaluating each derivative order exactly once.
DiagnosticsRecord sample(const SpectralVectorField& s, double t, const std::vector<int>& k_list);

/// Orders a record stores: {0} + k_list + 2*k_list, ascending, deduplicated.
std::vector<int> required_orders(const std::vector<int>& k_list);

}  // namespace tgvlab
