#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lambshift/degeneracy.hpp"
#include "lambshift/subspace.hpp"

namespace lambshift {

/// Even moment cap: beyond t = 12 double powers lose all precision and the
/// quantitative results only ever use t <= 2.
inline constexpr int kMaxMomentOrder = 12;

/// Tr L(j,k)^2 = 2 sum l_alpha^2, as an exact integer.
std::int64_t trace_squared_exact(const SubspaceIndex& idx);

/// t-th moment of Lambda(j,k): (1/|B|) sum lambda^t. Odd t short-circuits to
/// exactly 0; even t goes through the eigenvalue set. t in [1, 12].
double subspace_moment(const SubspaceIndex& idx, int t);

/// Var(Lambda(j,k)) from the closed quartic-in-|B| expression, evaluated with
/// integer intermediates (one final division by 6). Equals Tr L^2 / |B|.
/// Throws std::domain_error on an empty subspace.
double subspace_variance_closed_form(const SubspaceIndex& idx);

/// Perron-Frobenius row-sum sandwich plus the asymptotic case bounds on
/// max |Lambda(j,k)|. A dim-1 subspace reports all zeros.
struct BoundsReport {
    enum class Regime { general, large_kprime, large_j };

    SubspaceIndex index;
    double pf_lower = 0.0;            // min(first, last row sum)
    double pf_upper = 0.0;            // max row sum
    double asymptotic_general = 0.0;  // (2/sqrt(3)) sqrt((2j+k') j k')
    double asymptotic_large_kprime = 0.0;  // expansion for 2j << k'
    double asymptotic_large_j = 0.0;       // expansion for k' << 2j
    Regime regime = Regime::general;
};

BoundsReport pf_bounds(const SubspaceIndex& idx);

/// RWA validity at excitation k: valid iff g0 * max_j max Lambda(j,k) < threshold * omega0.
struct RwaReport {
    int n_spins = 0;
    std::int64_t k = 0;
    PhysicalParams params;
    double threshold = 0.1;
    double max_shift = 0.0;  // g0 * max Lambda, frequency units
    double ratio = 0.0;      // max_shift / omega0
    bool valid = true;
};

RwaReport rwa_check(int n_spins, std::int64_t k, const PhysicalParams& params,
                    double threshold = 0.1);

/// Largest Lamb shift across all subspaces populated at excitation k, units g0.
double max_lamb_shift(int n_spins, std::int64_t k);

/// Moment report for either one subspace or a whole excitation manifold.
struct MomentReport {
    int n_spins = 0;
    std::int64_t k = 0;
    std::map<int, double> moments;  // order -> value, orders 1..t
    BigInt state_count;             // |B_{j,k}| or D_k
};

/// Degeneracy-averaged moments: <Lambda(k)^t> = (1/D_k) sum_j d_j Tr L(j,k)^t.
/// Odd orders are exactly 0; t = 2 uses the closed trace form, higher even
/// orders the eigenvalue sets. Returns orders 1..t.
MomentReport aggregated_moment(int n_spins, std::int64_t k, int t);

/// Degeneracy-averaged variance at a single k. support_mass in (0,1) truncates
/// the ascending-j sum once that fraction of the D_k states is covered
/// (0 = full sum).
double aggregated_variance(int n_spins, std::int64_t k, double support_mass = 0.0);

/// Var(Lambda(k)) for k = 0..k_max via the O(1) closed trace form per subspace.
std::vector<std::pair<std::int64_t, double>> variance_scan(int n_spins,
                                                           std::int64_t k_max,
                                                           double support_mass = 0.0,
                                                           int threads = 1);

/// Ordinary least squares of the aggregated variance against k.
struct SlopeFit {
    int n_spins = 0;
    std::int64_t k_lo = 0;
    std::int64_t k_hi = 0;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Fit over k in [k_lo, k_hi]; requires k_lo >= n_spins (the proven linear
/// regime) and k_hi > k_lo + 10.
SlopeFit slope_fit(int n_spins, std::int64_t k_lo, std::int64_t k_hi,
                   double support_mass = 0.0, int threads = 1);

}  // namespace lambshift
