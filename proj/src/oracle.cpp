#include "lambshift/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "lambshift/tridiag.hpp"

namespace lambshift {

namespace {

void check_k(std::int64_t k) {
    if (k < 0) throw std::domain_error("k must be >= 0");
}

OracleSpectrum::Entry entry(int twice_j, int multiplicity, std::vector<double> evs) {
    OracleSpectrum::Entry e;
    e.twice_j = twice_j;
    e.multiplicity = multiplicity;
    std::sort(evs.begin(), evs.end());
    e.eigenvalues = std::move(evs);
    return e;
}

}  // namespace

OracleSpectrum oracle_n1(std::int64_t k) {
    check_k(k);
    OracleSpectrum s;
    s.n_spins = 1;
    s.k = k;
    if (k == 0) {
        s.entries.push_back(entry(1, 1, {0.0}));
    } else {
        const double root = std::sqrt(static_cast<double>(k));
        s.entries.push_back(entry(1, 1, {-root, root}));
    }
    return s;
}

OracleSpectrum oracle_n2(std::int64_t k) {
    check_k(k);
    OracleSpectrum s;
    s.n_spins = 2;
    s.k = k;
    if (k == 0) {
        s.entries.push_back(entry(2, 1, {0.0}));
        return s;
    }
    if (k == 1) {
        const double root = std::sqrt(2.0);
        s.entries.push_back(entry(2, 1, {-root, root}));
    } else {
        const double root = std::sqrt(2.0) * std::sqrt(static_cast<double>(2 * k - 1));
        s.entries.push_back(entry(2, 1, {-root, 0.0, root}));
    }
    s.entries.push_back(entry(0, 1, {0.0}));  // singlet never couples
    return s;
}

OracleSpectrum oracle_n3(std::int64_t k) {
    check_k(k);
    OracleSpectrum s;
    s.n_spins = 3;
    s.k = k;
    if (k == 0) {
        s.entries.push_back(entry(3, 1, {0.0}));
        return s;
    }
    if (k == 1) {
        const double root = std::sqrt(3.0);
        s.entries.push_back(entry(3, 1, {-root, root}));
        s.entries.push_back(entry(1, 2, {0.0}));
        return s;
    }
    if (k == 2) {
        const double root = std::sqrt(10.0);
        s.entries.push_back(entry(3, 1, {-root, 0.0, root}));
        s.entries.push_back(entry(1, 2, {-1.0, 1.0}));
        return s;
    }
    const double kd = static_cast<double>(k);
    const double disc = std::sqrt(16.0 * kd * kd - 32.0 * kd + 25.0);
    const double inner = std::sqrt(5.0 * kd - 5.0 - disc);
    const double outer = std::sqrt(5.0 * kd - 5.0 + disc);
    s.entries.push_back(entry(3, 1, {-outer, -inner, inner, outer}));
    const double doublet = std::sqrt(kd - 1.0);
    s.entries.push_back(entry(1, 2, {-doublet, doublet}));
    return s;
}

std::vector<double> flatten_sorted(const OracleSpectrum& s) {
    std::vector<double> all;
    for (const auto& e : s.entries) {
        const auto copies = e.multiplicity.convert_to<std::int64_t>();
        for (std::int64_t c = 0; c < copies; ++c)
            all.insert(all.end(), e.eigenvalues.begin(), e.eigenvalues.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<double> dense_manifold_spectrum(int n_spins, std::int64_t k) {
    if (n_spins < 1) throw std::domain_error("n_spins must be >= 1");
    if (n_spins > 12)
        throw std::domain_error("dense manifold diagonalization refused for n_spins > 12");
    check_k(k);

    // Basis: spin bitmask s (bit = spin up) paired with k - popcount(s)
    // photons; every mask with popcount <= k belongs to the manifold.
    std::vector<std::uint32_t> basis;
    const std::uint32_t full = 1u << n_spins;
    for (std::uint32_t s = 0; s < full; ++s)
        if (std::popcount(s) <= k) basis.push_back(s);
    std::sort(basis.begin(), basis.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<std::int64_t> index(full, -1);
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<std::int64_t>(i);

    const auto dim = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const std::uint32_t s = basis[i];
        const int m = std::popcount(s);
        if (m >= k) continue;  // no photons left to absorb
        const double amp = std::sqrt(static_cast<double>(k - m));
        for (int spin = 0; spin < n_spins; ++spin) {
            if (s & (1u << spin)) continue;
            const std::int64_t jdx = index[s | (1u << spin)];
            h(static_cast<Eigen::Index>(i), jdx) = amp;
            h(jdx, static_cast<Eigen::Index>(i)) = amp;
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> weighted_union_spectrum(int n_spins, std::int64_t k) {
    if (n_spins < 1) throw std::domain_error("n_spins must be >= 1");
    if (n_spins > 12)
        throw std::domain_error("weighted union spectrum limited to n_spins <= 12");
    check_k(k);
    std::vector<double> all;
    for (int tj = n_spins & 1; tj <= n_spins; tj += 2) {
        const SubspaceIndex idx{n_spins, tj, k};
        if (basis_dim(idx) == 0) continue;
        const auto dj = degeneracy(n_spins, tj).convert_to<std::int64_t>();
        std::vector<double> spectrum;
        if (basis_dim(idx) == 1) spectrum = {0.0};
        else spectrum = eigenvalues(build_coupling_matrix(idx)).eigenvalues;
        for (std::int64_t c = 0; c < dj; ++c)
            all.insert(all.end(), spectrum.begin(), spectrum.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace lambshift
