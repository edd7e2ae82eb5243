#include "lambshift/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lambshift/parallel.hpp"
#include "lambshift/tridiag.hpp"

namespace lambshift {

namespace {

// 6 * Var(Lambda(j,k)) as an exact integer in B = |B_{j,k}|, t = 2j,
// kp = k - k0. The closed quartic collapses to integer coefficients once j
// enters only through 2j; one division by 6 at the end is the only rounding.
__int128 six_times_variance(std::int64_t B, std::int64_t t, std::int64_t kp) {
    const __int128 b = B;
    return 3 * b * b * b - 2 * b * b * (2 * kp + 2 * t + 7) +
           6 * b * (static_cast<__int128>(t) * kp + 2 * kp + 2 * t) + 21 * b -
           2 * (3 * static_cast<__int128>(t) * kp + 4 * t + 4 * kp + 5);
}

void check_moment_order(int t) {
    if (t < 1 || t > kMaxMomentOrder)
        throw std::domain_error("moment order must lie in [1, " +
                                std::to_string(kMaxMomentOrder) + "], got " + std::to_string(t));
}

double pow_even(double lambda, int t) {
    const double sq = lambda * lambda;
    double r = 1.0;
    for (int i = 0; i < t / 2; ++i) r *= sq;
    return r;
}

// First populated 2j at excitation k (parity of N respected).
int first_populated_twice_j(int n_spins, std::int64_t k) {
    const std::int64_t floor_t = n_spins - 2 * k;  // k0 <= k  <=>  t >= N - 2k
    const int base = n_spins & 1;
    if (floor_t <= base) return base;
    return static_cast<int>(floor_t);
}

struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// Degeneracy weights d_j / D_k: exact doubles while every count fits a
// double (N <= 52), log-domain ratios beyond.
class ManifoldWeights {
public:
    ManifoldWeights(int n_spins, std::int64_t k) : n_(n_spins) {
        if (n_spins <= 52) {
            exact_dk_ = static_cast<double>(states_with_k_excitations(n_spins, k));
        } else {
            log_dk_ = states_with_k_excitations_log(n_spins, k);
        }
    }

    double weight(int twice_j) const {
        if (n_ <= 52) return static_cast<double>(degeneracy(n_, twice_j)) / exact_dk_;
        return std::exp(degeneracy_log(n_, twice_j) - log_dk_);
    }

private:
    int n_;
    double exact_dk_ = 0.0;
    double log_dk_ = 0.0;
};

}  // namespace

std::int64_t trace_squared_exact(const SubspaceIndex& idx) {
    const std::int64_t dim = basis_dim(idx);
    if (dim == 0) throw std::domain_error("empty subspace");
    std::int64_t acc = 0;
    for (std::int64_t alpha = 1; alpha < dim; ++alpha)
        acc += coupling_element_squared(idx, alpha);
    return 2 * acc;
}

double subspace_variance_closed_form(const SubspaceIndex& idx) {
    const std::int64_t dim = basis_dim(idx);
    if (dim == 0)
        throw std::domain_error("variance of an empty subspace (k < k0) is undefined");
    const std::int64_t kp = idx.k - k0(idx);
    return static_cast<double>(six_times_variance(dim, idx.twice_j, kp)) / 6.0;
}

double subspace_moment(const SubspaceIndex& idx, int t) {
    check_moment_order(t);
    const std::int64_t dim = basis_dim(idx);
    if (dim == 0) throw std::domain_error("moment of an empty subspace is undefined");
    if (t % 2 == 1) return 0.0;  // odd moments vanish, no computation
    const SpectrumSet s = eigenvalues(build_coupling_matrix(idx));
    KahanSum acc;
    for (double lambda : s.eigenvalues) acc.add(pow_even(lambda, t));
    return acc.sum / static_cast<double>(dim);
}

BoundsReport pf_bounds(const SubspaceIndex& idx) {
    BoundsReport r;
    r.index = idx;
    const std::int64_t dim = basis_dim(idx);
    if (dim < 2) return r;  // zero spectrum, all bounds 0

    const CouplingMatrix m = build_coupling_matrix(idx);
    r.pf_lower = std::min(m.off_diag.front(), m.off_diag.back());
    r.pf_upper = gershgorin_bound(m);

    const double j = idx.twice_j / 2.0;
    const double kp = static_cast<double>(idx.k - k0(idx));
    r.asymptotic_general = (2.0 / std::sqrt(3.0)) * std::sqrt((2.0 * j + kp) * j * kp);
    r.asymptotic_large_kprime =
        2.0 * (j * std::sqrt(kp) - 0.5 * j * j / std::sqrt(kp) +
               0.125 * j * j * j * j / std::pow(kp, 2.5));
    r.asymptotic_large_j =
        2.0 * (kp * std::sqrt(j) / std::sqrt(2.0) - kp * kp / (8.0 * std::sqrt(2.0 * j)) +
               std::pow(kp, 4.0) / (512.0 * std::pow(j, 2.5)));

    // The expansions are reported as applicable only past a 10x separation.
    if (kp >= 10.0 * idx.twice_j) r.regime = BoundsReport::Regime::large_kprime;
    else if (idx.twice_j >= 10.0 * kp) r.regime = BoundsReport::Regime::large_j;
    else r.regime = BoundsReport::Regime::general;
    return r;
}

double max_lamb_shift(int n_spins, std::int64_t k) {
    if (n_spins < 1) throw std::domain_error("n_spins must be >= 1");
    if (k < 0) throw std::domain_error("k must be >= 0");
    double best = 0.0;
    for (int t = first_populated_twice_j(n_spins, k); t <= n_spins; t += 2) {
        const SubspaceIndex idx{n_spins, t, k};
        if (basis_dim(idx) < 2) continue;
        best = std::max(best, max_eigenvalue(build_coupling_matrix(idx)));
    }
    return best;
}

RwaReport rwa_check(int n_spins, std::int64_t k, const PhysicalParams& params,
                    double threshold) {
    if (!(params.omega0 > 0.0) || !(params.g0 > 0.0))
        throw std::domain_error("physical parameters must be positive");
    RwaReport r;
    r.n_spins = n_spins;
    r.k = k;
    r.params = params;
    r.threshold = threshold;
    r.max_shift = params.g0 * max_lamb_shift(n_spins, k);
    r.ratio = r.max_shift / params.omega0;
    r.valid = r.ratio < threshold;
    return r;
}

MomentReport aggregated_moment(int n_spins, std::int64_t k, int t) {
    check_moment_order(t);
    if (k < 0) throw std::domain_error("k must be >= 0");
    MomentReport report;
    report.n_spins = n_spins;
    report.k = k;
    report.state_count = states_with_k_excitations(n_spins, k);
    for (int order = 1; order <= t; ++order) report.moments[order] = 0.0;

    const ManifoldWeights weights(n_spins, k);
    std::map<int, KahanSum> sums;  // even orders only
    for (int order = 2; order <= t; order += 2) sums[order];

    for (int tj = first_populated_twice_j(n_spins, k); tj <= n_spins; tj += 2) {
        const SubspaceIndex idx{n_spins, tj, k};
        const std::int64_t dim = basis_dim(idx);
        if (dim == 0) continue;
        const double w = weights.weight(tj);
        if (dim == 1) continue;  // lone zero eigenvalue, vanishing traces

        std::vector<double> spectrum;
        if (t > 2) spectrum = eigenvalues(build_coupling_matrix(idx)).eigenvalues;

        for (auto& [order, acc] : sums) {
            if (order == 2) {
                const std::int64_t kp = idx.k - k0(idx);
                const double trace =
                    static_cast<double>(dim * six_times_variance(dim, tj, kp)) / 6.0;
                acc.add(w * trace);
            } else {
                double trace = 0.0;
                for (double lambda : spectrum) trace += pow_even(lambda, order);
                acc.add(w * trace);
            }
        }
    }
    for (auto& [order, acc] : sums) report.moments[order] = acc.sum;
    return report;
}

double aggregated_variance(int n_spins, std::int64_t k, double support_mass) {
    if (n_spins < 1) throw std::domain_error("n_spins must be >= 1");
    if (k < 0) throw std::domain_error("k must be >= 0");
    if (support_mass < 0.0 || support_mass >= 1.0) support_mass = 0.0;

    const ManifoldWeights weights(n_spins, k);
    KahanSum acc;
    double covered = 0.0;
    for (int tj = first_populated_twice_j(n_spins, k); tj <= n_spins; tj += 2) {
        const SubspaceIndex idx{n_spins, tj, k};
        const std::int64_t dim = basis_dim(idx);
        if (dim == 0) continue;
        const double w = weights.weight(tj);
        const std::int64_t kp = idx.k - k0(idx);
        acc.add(w * static_cast<double>(dim * six_times_variance(dim, tj, kp)) / 6.0);
        if (support_mass > 0.0) {
            covered += w * static_cast<double>(dim);
            if (covered >= support_mass) break;
        }
    }
    return acc.sum;
}

std::vector<std::pair<std::int64_t, double>> variance_scan(int n_spins, std::int64_t k_max,
                                                           double support_mass, int threads) {
    if (k_max < 0) throw std::domain_error("k_max must be >= 0");
    std::vector<std::pair<std::int64_t, double>> out(static_cast<std::size_t>(k_max + 1));
    parallel_for(0, k_max + 1, threads, [&](std::int64_t k) {
        out[static_cast<std::size_t>(k)] = {k, aggregated_variance(n_spins, k, support_mass)};
    });
    return out;
}

SlopeFit slope_fit(int n_spins, std::int64_t k_lo, std::int64_t k_hi, double support_mass,
                   int threads) {
    if (k_lo < n_spins)
        throw std::domain_error("slope fit requires k_lo >= n_spins (the linear regime)");
    if (k_hi <= k_lo + 10) throw std::domain_error("slope fit range is degenerate");

    const std::int64_t count = k_hi - k_lo + 1;
    std::vector<double> var(static_cast<std::size_t>(count));
    parallel_for(0, count, threads, [&](std::int64_t i) {
        var[static_cast<std::size_t>(i)] =
            aggregated_variance(n_spins, k_lo + i, support_mass);
    });

    const double n = static_cast<double>(count);
    double mean_k = 0.0, mean_v = 0.0;
    for (std::int64_t i = 0; i < count; ++i) {
        mean_k += static_cast<double>(k_lo + i);
        mean_v += var[static_cast<std::size_t>(i)];
    }
    mean_k /= n;
    mean_v /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::int64_t i = 0; i < count; ++i) {
        const double dx = static_cast<double>(k_lo + i) - mean_k;
        const double dy = var[static_cast<std::size_t>(i)] - mean_v;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }

    SlopeFit fit;
    fit.n_spins = n_spins;
    fit.k_lo = k_lo;
    fit.k_hi = k_hi;
    fit.slope = sxy / sxx;
    fit.intercept = mean_v - fit.slope * mean_k;
    const double ss_res = syy - fit.slope * sxy;
    fit.r_squared = (syy > 0.0) ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return fit;
}

}  // namespace lambshift
