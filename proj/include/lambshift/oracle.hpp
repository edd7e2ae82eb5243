#pragma once

#include <cstdint>
#include <vector>

#include "lambshift/degeneracy.hpp"
#include "lambshift/subspace.hpp"

namespace lambshift {

/// Closed-form spectrum of one excitation manifold for N in {1,2,3}:
/// per allowed j, the subspace eigenvalues (units g0) and their multiplicity d_j.
struct OracleSpectrum {
    int n_spins = 0;
    std::int64_t k = 0;
    struct Entry {
        int twice_j = 0;
        BigInt multiplicity;
        std::vector<double> eigenvalues;  // ascending
    };
    std::vector<Entry> entries;  // descending twice_j
};

/// Jaynes-Cummings ladder: {0} at k = 0, {-sqrt(k), +sqrt(k)} for k >= 1.
OracleSpectrum oracle_n1(std::int64_t k);

/// Two spins: k=0 -> {0}; k=1 -> triplet {±sqrt(2)} plus singlet {0};
/// k>=2 -> triplet {0, ±sqrt(2)sqrt(2k-1)} plus singlet {0}.
OracleSpectrum oracle_n2(std::int64_t k);

/// Three spins: j=3/2 quartet ladder (±sqrt(5k-5 ± sqrt(16k^2-32k+25)) once
/// k >= 3) plus two j=1/2 doublets at ±sqrt(k-1).
OracleSpectrum oracle_n3(std::int64_t k);

/// All oracle eigenvalues expanded with multiplicity, sorted ascending.
std::vector<double> flatten_sorted(const OracleSpectrum& s);

/// Brute-force ground truth: the interaction matrix on the full Zeeman-basis
/// k-excitation manifold (dimension D_k), diagonalized densely. Sorted
/// eigenvalues in units of g0. Refuses n_spins > 12.
std::vector<double> dense_manifold_spectrum(int n_spins, std::int64_t k);

/// Union over j of the (j,k) subspace spectra, each repeated d_j times,
/// sorted ascending. Same multiset as dense_manifold_spectrum when the
/// direct-sum decomposition is correct.
std::vector<double> weighted_union_spectrum(int n_spins, std::int64_t k);

}  // namespace lambshift
