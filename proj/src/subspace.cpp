#include "lambshift/subspace.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lambshift {

void validate(const SubspaceIndex& idx) {
    if (idx.n_spins < 1)
        throw std::domain_error("n_spins must be >= 1, got " + std::to_string(idx.n_spins));
    if (idx.twice_j < 0 || idx.twice_j > idx.n_spins)
        throw std::domain_error("twice_j = " + std::to_string(idx.twice_j) +
                                " outside [0, " + std::to_string(idx.n_spins) + "]");
    if (((idx.n_spins ^ idx.twice_j) & 1) != 0)
        throw std::domain_error("twice_j = " + std::to_string(idx.twice_j) +
                                " has wrong parity for n_spins = " + std::to_string(idx.n_spins));
    if (idx.k < 0) throw std::domain_error("k must be >= 0, got " + std::to_string(idx.k));
}

std::int64_t k0(const SubspaceIndex& idx) {
    validate(idx);
    return (idx.n_spins - idx.twice_j) / 2;
}

std::int64_t basis_dim(const SubspaceIndex& idx) {
    const std::int64_t kprime = idx.k - k0(idx);
    if (kprime < 0) return 0;
    return std::min<std::int64_t>(idx.twice_j + 1, kprime + 1);
}

std::int64_t coupling_element_squared(const SubspaceIndex& idx, std::int64_t alpha) {
    const std::int64_t dim = basis_dim(idx);
    if (alpha < 1 || alpha >= dim)
        throw std::out_of_range("coupling element index " + std::to_string(alpha) +
                                " outside [1, " + std::to_string(dim - 1) + "]");
    // 2*alpha*j = alpha*twice_j stays integral; both factors are positive on
    // the valid alpha range.
    const std::int64_t ladder = alpha * idx.twice_j - alpha * (alpha - 1);
    const std::int64_t photons = idx.k - k0(idx) - alpha + 1;
    return ladder * photons;
}

double coupling_element(const SubspaceIndex& idx, std::int64_t alpha) {
    return std::sqrt(static_cast<double>(coupling_element_squared(idx, alpha)));
}

CouplingMatrix build_coupling_matrix(const SubspaceIndex& idx) {
    const std::int64_t dim = basis_dim(idx);
    if (dim == 0)
        throw std::domain_error("empty subspace: k = " + std::to_string(idx.k) +
                                " < k0 = " + std::to_string(k0(idx)));
    CouplingMatrix m;
    m.index = idx;
    m.dim = dim;
    m.off_diag.reserve(static_cast<std::size_t>(dim - 1));
    for (std::int64_t alpha = 1; alpha < dim; ++alpha)
        m.off_diag.push_back(coupling_element(idx, alpha));
    return m;
}

double PhysicalParams::g_eff(int n_spins) const {
    return g0 * std::sqrt(static_cast<double>(n_spins));
}

}  // namespace lambshift
