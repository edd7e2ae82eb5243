#pragma once

#include <cstdint>
#include <vector>

namespace lambshift {

/// One (N, j, k) block of the Tavis-Cummings direct sum. j is stored as the
/// integer 2j so that index arithmetic stays exact; k counts total excitations.
struct SubspaceIndex {
    int n_spins = 1;
    int twice_j = 1;
    std::int64_t k = 0;
};

/// Smallest allowed 2j for an N-spin ensemble (0 for even N, 1 for odd).
inline int lowest_twice_j(int n_spins) { return n_spins & 1; }

/// Throws std::domain_error unless 0 <= 2j <= N with matching parity, N >= 1, k >= 0.
void validate(const SubspaceIndex& idx);

/// Excitation count of the subspace ground state, k0(j) = N/2 - j. Exact integer.
std::int64_t k0(const SubspaceIndex& idx);

/// Dimension of the (j,k) block: min(2j+1, k - k0 + 1), or 0 when k < k0.
std::int64_t basis_dim(const SubspaceIndex& idx);

/// Exact integer value of l_alpha^2 = (2*alpha*j - alpha*(alpha-1)) * (k - k0 - alpha + 1).
/// Both factors are computed as integers from 2j before the product.
std::int64_t coupling_element_squared(const SubspaceIndex& idx, std::int64_t alpha);

/// Off-diagonal entry l_alpha(j,k), alpha in [1, dim-1]. One floating square root
/// of the exact integer product. Throws std::out_of_range for bad alpha.
double coupling_element(const SubspaceIndex& idx, std::int64_t alpha);

/// Hollow symmetric tridiagonal coupling matrix of one (j,k) block, stored as
/// its off-diagonal sequence (all entries strictly positive when dim >= 2).
struct CouplingMatrix {
    SubspaceIndex index;
    std::int64_t dim = 0;
    std::vector<double> off_diag;
};

/// Builds L(j,k). Throws std::domain_error on an empty subspace (k < k0).
CouplingMatrix build_coupling_matrix(const SubspaceIndex& idx);

/// Resonant model parameters (omega_c = omega_s = omega0), coupling g0.
struct PhysicalParams {
    double omega0 = 1.0;
    double g0 = 1.0;

    /// Collectively enhanced coupling g0*sqrt(N); g_eff^2 == N*g0^2 exactly.
    double g_eff(int n_spins) const;
};

}  // namespace lambshift
