#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lambshift/subspace.hpp"

namespace lambshift {

/// Degeneracy-weighted density of states over dressed energies
/// E = k*omega0 + lambda*g0, binned on the energy axis in units of omega0 and
/// broadened with a normalized Gaussian (tails cut at 8 sigma). Bin weights
/// are state counts; summed over k <= k_max they total sum_{k<=k_max} D_k.
struct DOSHistogram {
    int n_spins = 0;
    std::int64_t k_max = 0;
    PhysicalParams params;
    double broadening_sigma = 1e-3;  // units of omega0
    std::vector<double> bin_edges;   // size bins+1, ascending, units of omega0
    std::vector<double> weights;     // size bins, >= 0

    double bin_center(std::size_t i) const { return 0.5 * (bin_edges[i] + bin_edges[i + 1]); }
    double total_weight() const;
};

/// Deposits every eigenvalue of every populated (j,k) subspace with k <= k_max,
/// weighted by d_j. The bin range is chosen to cover all deposits plus an
/// 8 sigma margin so no kernel mass is lost. Throws std::domain_error for
/// sigma <= 0 or bins < 10.
DOSHistogram build_dos(int n_spins, std::int64_t k_max, const PhysicalParams& params,
                       int bins, double sigma, int threads = 1);

/// gap(k) = (k+1)*omega0 - g0*maxLambda(k+1) - (k*omega0 + g0*maxLambda(k)),
/// in units of omega0, for k = 0..k_max-1. Negative gap = cluster overlap
/// (RWA breakdown between neighboring excitation manifolds).
std::vector<std::pair<std::int64_t, double>> cluster_gaps(int n_spins, std::int64_t k_max,
                                                          const PhysicalParams& params,
                                                          int threads = 1);

/// CSV export, header `bin_center,weight`, 17 significant digits.
void write_csv(const DOSHistogram& h, std::ostream& out);

/// JSON export: {n, k_max, omega_over_g, sigma, bins:[{center,weight}]}.
void write_json(const DOSHistogram& h, std::ostream& out);

}  // namespace lambshift
