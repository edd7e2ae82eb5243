#include "lambshift/dos.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "lambshift/degeneracy.hpp"
#include "lambshift/parallel.hpp"
#include "lambshift/stats.hpp"
#include "lambshift/tridiag.hpp"

#include <nlohmann/json.hpp>

namespace lambshift {

namespace {

constexpr double kTailSigmas = 8.0;

struct Delta {
    double energy;  // units of omega0
    double weight;  // state count
};

int first_populated(int n_spins, std::int64_t k) {
    const std::int64_t floor_t = n_spins - 2 * k;
    const int base = n_spins & 1;
    return floor_t <= base ? base : static_cast<int>(floor_t);
}

// All Lamb-shifted deltas of one excitation manifold, weight d_j each.
std::vector<Delta> manifold_deltas(int n_spins, std::int64_t k, double g_over_omega) {
    std::vector<Delta> deltas;
    for (int tj = first_populated(n_spins, k); tj <= n_spins; tj += 2) {
        const SubspaceIndex idx{n_spins, tj, k};
        if (basis_dim(idx) == 0) continue;
        const double dj = (n_spins <= 52)
                              ? static_cast<double>(degeneracy(n_spins, tj))
                              : std::exp(degeneracy_log(n_spins, tj));
        if (basis_dim(idx) == 1) {
            deltas.push_back({static_cast<double>(k), dj});
            continue;
        }
        const SpectrumSet s = eigenvalues(build_coupling_matrix(idx));
        for (double lambda : s.eigenvalues)
            deltas.push_back({static_cast<double>(k) + g_over_omega * lambda, dj});
    }
    return deltas;
}

}  // namespace

double DOSHistogram::total_weight() const {
    double acc = 0.0;
    for (double w : weights) acc += w;
    return acc;
}

DOSHistogram build_dos(int n_spins, std::int64_t k_max, const PhysicalParams& params,
                       int bins, double sigma, int threads) {
    if (n_spins < 1) throw std::domain_error("n_spins must be >= 1");
    if (k_max < 0) throw std::domain_error("k_max must be >= 0");
    if (!(sigma > 0.0)) throw std::domain_error("broadening sigma must be positive");
    if (bins < 10) throw std::domain_error("at least 10 bins required");
    if (!(params.omega0 > 0.0) || !(params.g0 > 0.0))
        throw std::domain_error("physical parameters must be positive");

    const double r = params.g0 / params.omega0;

    DOSHistogram h;
    h.n_spins = n_spins;
    h.k_max = k_max;
    h.params = params;
    h.broadening_sigma = sigma;

    // Per-k clusters computed in parallel, deposited in ascending k order.
    std::vector<std::vector<Delta>> clusters(static_cast<std::size_t>(k_max + 1));
    parallel_for(0, k_max + 1, threads, [&](std::int64_t k) {
        clusters[static_cast<std::size_t>(k)] = manifold_deltas(n_spins, k, r);
    });

    double e_min = 0.0, e_max = 0.0;
    for (const auto& cluster : clusters)
        for (const Delta& d : cluster) {
            e_min = std::min(e_min, d.energy);
            e_max = std::max(e_max, d.energy);
        }
    // Cover every kernel entirely so no deposited mass leaves the range.
    const double pad = kTailSigmas * sigma + 1e-9;
    e_min -= pad;
    e_max += pad;
    if (!(e_max > e_min)) throw std::domain_error("empty energy range");

    const double width = (e_max - e_min) / bins;
    h.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i) h.bin_edges[static_cast<std::size_t>(i)] = e_min + i * width;
    h.weights.assign(static_cast<std::size_t>(bins), 0.0);

    const double inv_sqrt2sigma = 1.0 / (sigma * std::sqrt(2.0));
    for (const auto& cluster : clusters) {
        for (const Delta& d : cluster) {
            const double lo = d.energy - kTailSigmas * sigma;
            const double hi = d.energy + kTailSigmas * sigma;
            auto clampbin = [&](double e) {
                return std::clamp(static_cast<std::int64_t>((e - e_min) / width),
                                  std::int64_t{0}, static_cast<std::int64_t>(bins) - 1);
            };
            const std::int64_t b_lo = clampbin(lo);
            const std::int64_t b_hi = clampbin(hi);
            double cdf_left = 0.5 * std::erfc((d.energy - h.bin_edges[static_cast<std::size_t>(b_lo)]) *
                                              inv_sqrt2sigma);
            for (std::int64_t b = b_lo; b <= b_hi; ++b) {
                const double cdf_right =
                    0.5 * std::erfc((d.energy - h.bin_edges[static_cast<std::size_t>(b) + 1]) *
                                    inv_sqrt2sigma);
                h.weights[static_cast<std::size_t>(b)] += d.weight * (cdf_right - cdf_left);
                cdf_left = cdf_right;
            }
        }
    }
    return h;
}

std::vector<std::pair<std::int64_t, double>> cluster_gaps(int n_spins, std::int64_t k_max,
                                                          const PhysicalParams& params,
                                                          int threads) {
    if (k_max < 1) throw std::domain_error("k_max must be >= 1");
    if (!(params.omega0 > 0.0) || !(params.g0 > 0.0))
        throw std::domain_error("physical parameters must be positive");
    const double r = params.g0 / params.omega0;

    std::vector<double> top(static_cast<std::size_t>(k_max + 1));
    parallel_for(0, k_max + 1, threads, [&](std::int64_t k) {
        top[static_cast<std::size_t>(k)] = max_lamb_shift(n_spins, k);
    });

    std::vector<std::pair<std::int64_t, double>> gaps;
    gaps.reserve(static_cast<std::size_t>(k_max));
    for (std::int64_t k = 0; k < k_max; ++k) {
        const double gap = 1.0 - r * (top[static_cast<std::size_t>(k)] +
                                      top[static_cast<std::size_t>(k + 1)]);
        gaps.emplace_back(k, gap);
    }
    return gaps;
}

void write_csv(const DOSHistogram& h, std::ostream& out) {
    out << "bin_center,weight\n";
    out << std::setprecision(17);
    for (std::size_t i = 0; i < h.weights.size(); ++i)
        out << h.bin_center(i) << ',' << h.weights[i] << '\n';
}

void write_json(const DOSHistogram& h, std::ostream& out) {
    nlohmann::json j;
    j["n"] = h.n_spins;
    j["k_max"] = h.k_max;
    j["omega_over_g"] = h.params.omega0 / h.params.g0;
    j["sigma"] = h.broadening_sigma;
    nlohmann::json bins = nlohmann::json::array();
    for (std::size_t i = 0; i < h.weights.size(); ++i)
        bins.push_back({{"center", h.bin_center(i)}, {"weight", h.weights[i]}});
    j["bins"] = std::move(bins);
    out << j.dump(2) << '\n';
}

}  // namespace lambshift
