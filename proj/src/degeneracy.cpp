#include "lambshift/degeneracy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambshift {

namespace {

void check_j(int n_spins, int twice_j) {
    if (n_spins < 1) throw std::domain_error("n_spins must be >= 1");
    if (twice_j < 0 || twice_j > n_spins)
        throw std::domain_error("twice_j = " + std::to_string(twice_j) + " outside [0, " +
                                std::to_string(n_spins) + "]");
    if (((n_spins ^ twice_j) & 1) != 0)
        throw std::domain_error("twice_j parity mismatch for n_spins = " +
                                std::to_string(n_spins));
}

BigInt binomial(int n, std::int64_t m) {
    if (m < 0 || m > n) return 0;
    m = std::min<std::int64_t>(m, n - m);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= m; ++i) {
        r *= (n - m + i);
        r /= i;
    }
    return r;
}

double log_binomial(int n, std::int64_t m) {
    if (m < 0 || m > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(n + 1.0) - std::lgamma(m + 1.0) - std::lgamma(n - m + 1.0);
}

}  // namespace

BigInt degeneracy(int n_spins, int twice_j) {
    check_j(n_spins, twice_j);
    // Catalan-triangle form d_j = C(N, N/2-j) - C(N, N/2-j-1); both binomials
    // share the denominator-free evaluation above, keeping everything integral.
    const std::int64_t m = (n_spins - twice_j) / 2;
    return binomial(n_spins, m) - binomial(n_spins, m - 1);
}

double degeneracy_log(int n_spins, int twice_j) {
    check_j(n_spins, twice_j);
    const double m = (n_spins - twice_j) / 2.0;
    return std::log(twice_j + 1.0) + std::lgamma(n_spins + 1.0) - std::lgamma(m + 1.0) -
           std::lgamma(n_spins - m + 2.0);
}

BigInt states_with_k_excitations(int n_spins, std::int64_t k) {
    if (n_spins < 1) throw std::domain_error("n_spins must be >= 1");
    if (k < 0) throw std::domain_error("k must be >= 0");
    if (k >= n_spins) return BigInt(1) << n_spins;
    BigInt total = 0;
    for (std::int64_t m = 0; m <= k; ++m) total += binomial(n_spins, m);
    return total;
}

double states_with_k_excitations_log(int n_spins, std::int64_t k) {
    if (n_spins < 1) throw std::domain_error("n_spins must be >= 1");
    if (k < 0) throw std::domain_error("k must be >= 0");
    if (k >= n_spins) return n_spins * std::log(2.0);
    const std::int64_t mmax = std::min<std::int64_t>(k, n_spins);
    double peak = -std::numeric_limits<double>::infinity();
    for (std::int64_t m = 0; m <= mmax; ++m) peak = std::max(peak, log_binomial(n_spins, m));
    double acc = 0.0;
    for (std::int64_t m = 0; m <= mmax; ++m) acc += std::exp(log_binomial(n_spins, m) - peak);
    return peak + std::log(acc);
}

DegeneracyTable build_degeneracy_table(int n_spins) {
    if (n_spins < 1) throw std::domain_error("n_spins must be >= 1");
    DegeneracyTable table;
    table.n_spins = n_spins;
    table.has_exact = n_spins <= 256;
    for (int t = n_spins & 1; t <= n_spins; t += 2) {
        DegeneracyTable::Entry e;
        e.twice_j = t;
        e.log_count = degeneracy_log(n_spins, t);
        if (table.has_exact) e.exact_count = degeneracy(n_spins, t);
        table.entries.push_back(std::move(e));
    }
    return table;
}

int j_star_exact(int n_spins) {
    if (n_spins < 1) throw std::domain_error("n_spins must be >= 1");
    // d_{j+1}/d_j = (t+3)(N-t) / ((t+1)(N+t+4)) with t = 2j is strictly
    // decreasing in t, so d_j is unimodal: climb while the next value is
    // strictly larger (ties settle on the smaller j).
    int t = n_spins & 1;
    while (t + 2 <= n_spins) {
        const std::int64_t up = static_cast<std::int64_t>(t + 3) * (n_spins - t);
        const std::int64_t down = static_cast<std::int64_t>(t + 1) * (n_spins + t + 4);
        if (up <= down) break;
        t += 2;
    }
    return t;
}

double j_star_asymptotic(int n_spins) {
    if (n_spins < 1) throw std::domain_error("n_spins must be >= 1");
    const double rootn = std::sqrt(static_cast<double>(n_spins));
    return 0.5 * rootn - 0.5 + 1.0 / (6.0 * rootn);
}

double adjacent_ratio(int n_spins, int twice_j) {
    check_j(n_spins, twice_j);
    if (twice_j + 2 > n_spins)
        throw std::domain_error("twice_j + 2 not allowed for n_spins = " +
                                std::to_string(n_spins));
    return std::exp(degeneracy_log(n_spins, twice_j) - degeneracy_log(n_spins, twice_j + 2));
}

SupportWindow strong_support(int n_spins, double mass) {
    if (n_spins < 1) throw std::domain_error("n_spins must be >= 1");
    if (!(mass > 0.0) || mass > 1.0)
        throw std::domain_error("mass must lie in (0, 1], got " + std::to_string(mass));
    SupportWindow w;
    w.mass = mass;
    if (mass == 1.0) {  // full support, no cumulative resolution issues
        w.twice_j_max = n_spins;
        return w;
    }
    if (n_spins <= 256) {
        // Exact integer cumulative sum; mass enters through a fixed-point
        // threshold so the boundary comparison never rounds.
        const BigInt total = BigInt(1) << n_spins;
        const BigInt threshold = BigInt(std::llround(mass * 1e18)) * total;
        BigInt acc = 0;
        for (int t = n_spins & 1; t <= n_spins; t += 2) {
            acc += BigInt(t + 1) * degeneracy(n_spins, t);
            w.twice_j_max = t;
            if (acc * 1000000000000000000LL >= threshold) break;
        }
        return w;
    }
    // Log-domain cumulative sum for large N.
    const double log_total = n_spins * std::log(2.0);
    const double log_target = log_total + std::log(mass);
    double peak = -std::numeric_limits<double>::infinity();
    std::vector<double> logs;
    for (int t = n_spins & 1; t <= n_spins; t += 2) {
        logs.push_back(std::log(t + 1.0) + degeneracy_log(n_spins, t));
        peak = std::max(peak, logs.back());
    }
    double acc = 0.0;
    int i = 0;
    for (int t = n_spins & 1; t <= n_spins; t += 2, ++i) {
        acc += std::exp(logs[static_cast<std::size_t>(i)] - peak);
        w.twice_j_max = t;
        if (peak + std::log(acc) >= log_target) break;
    }
    return w;
}

double max_degeneracy_fraction(int n_spins) {
    const int t_star = j_star_exact(n_spins);
    return std::exp(degeneracy_log(n_spins, t_star) - n_spins * std::log(2.0));
}

}  // namespace lambshift
